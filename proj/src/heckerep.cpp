#include "qkz/heckerep.hpp"

#include <algorithm>
#include <set>

#include "qkz/multipoly.hpp"

namespace qkz {

const std::vector<std::pair<int, int>>& ReprMatrices::pairs(int i) const {
  require(i >= 1 && i <= generators(), errc::index_out_of_range,
          "generator index " + std::to_string(i));
  return c_tensor[static_cast<size_t>(i - 1)];
}

namespace {

/* Matched step pairs of a two-letter word: each 2 closes the most recent
   unmatched 1. partner is 1-based; every position is matched. */
std::vector<int> match_pairs(const PathWord& p) {
  std::vector<int> partner(p.length() + 1, 0), open;
  for (int pos = 1; pos <= p.length(); ++pos) {
    if (p.step(pos) == 1) {
      open.push_back(pos);
    } else {
      partner[open.back()] = pos;
      partner[pos] = open.back();
      open.pop_back();
    }
  }
  return partner;
}

PathWord word_of_pairs(int n, const std::vector<int>& partner) {
  std::vector<int> steps(partner.size() - 1);
  for (int pos = 1; pos < static_cast<int>(partner.size()); ++pos)
    steps[pos - 1] = partner[pos] > pos ? 1 : 2;
  return PathWord(2, n, std::move(steps));
}

ReprMatrices build_one_dimensional(int k, int n, int kn_cap) {
  ReprMatrices rep;
  rep.k = k;
  rep.n = n;
  rep.basis = enumerate(k, n, kn_cap);
  rep.c_tensor.assign(static_cast<size_t>(std::max(rep.generators(), 0)), {});
  return rep;
}

/* k = 2: e_i re-pairs positions i, i+1 with each other and joins their old
   partners; a source already paired (i, i+1) is convex and stays diagonal. */
ReprMatrices build_two_letter(int n, int kn_cap) {
  ReprMatrices rep;
  rep.k = 2;
  rep.n = n;
  rep.basis = enumerate(2, n, kn_cap);
  rep.c_tensor.assign(static_cast<size_t>(rep.generators()), {});
  for (int i = 1; i <= rep.generators(); ++i) {
    auto& pairs = rep.c_tensor[static_cast<size_t>(i - 1)];
    for (int s = 0; s < rep.basis.size(); ++s) {
      const PathWord& w = rep.basis.at(s);
      if (w.classify(i) == Shape::convex) continue;
      std::vector<int> partner = match_pairs(w);
      const int a = partner[i], b = partner[i + 1];
      partner[i] = i + 1;
      partner[i + 1] = i;
      partner[a] = b;
      partner[b] = a;
      pairs.emplace_back(s, rep.basis.index_of(word_of_pairs(n, partner)));
    }
    std::sort(pairs.begin(), pairs.end());
  }
  return rep;
}

/* n = 2, k >= 3: transport the length-2k two-letter action through tableau
   transposition, swapping source and target. */
ReprMatrices build_transposed(int k, int kn_cap) {
  ReprMatrices tl = build_two_letter(k, kn_cap);
  ReprMatrices rep;
  rep.k = k;
  rep.n = 2;
  rep.basis = enumerate(k, 2, kn_cap);
  rep.c_tensor.assign(static_cast<size_t>(rep.generators()), {});
  for (int i = 1; i <= rep.generators(); ++i) {
    auto& pairs = rep.c_tensor[static_cast<size_t>(i - 1)];
    for (const auto& [s, t] : tl.pairs(i))
      pairs.emplace_back(rep.basis.index_of(tl.basis.at(t).dual()),
                         rep.basis.index_of(tl.basis.at(s).dual()));
    std::sort(pairs.begin(), pairs.end());
  }
  return rep;
}

std::string tau_label(const Rational& t) { return "tau=" + rat_to_string(t); }

using PolyQ = MultiPoly<Rational>;

template <class R>
std::vector<Matrix<R>> all_generators(const ReprMatrices& rep, const R& tau) {
  std::vector<Matrix<R>> e;
  e.reserve(static_cast<size_t>(rep.generators()));
  for (int i = 1; i <= rep.generators(); ++i)
    e.push_back(generator_matrix(rep, i, tau));
  return e;
}

template <class R>
void check_hecke_relations(Report& report, const ReprMatrices& rep,
                           const R& tau, const std::string& mode,
                           const std::string& suffix) {
  std::vector<Matrix<R>> e = all_generators(rep, tau);
  const int g = rep.generators();

  bool ok = true;
  std::string witness;
  for (int i = 0; i < g && ok; ++i)
    for (int j = i + 2; j < g && ok; ++j)
      if (!(e[i] * e[j] == e[j] * e[i])) {
        ok = false;
        witness = "e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1);
      }
  report.add_check("commutation" + suffix, mode, ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i + 1 < g && ok; ++i) {
    Matrix<R> lhs = e[i] * e[i + 1] * e[i] - e[i];
    Matrix<R> rhs = e[i + 1] * e[i] * e[i + 1] - e[i + 1];
    if (!(lhs == rhs)) {
      ok = false;
      witness = "window at e_" + std::to_string(i + 1);
    }
  }
  report.add_check("braid" + suffix, mode, ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < g && ok; ++i)
    if (!(e[i] * e[i] == e[i].scale(tau))) {
      ok = false;
      witness = "e_" + std::to_string(i + 1);
    }
  report.add_check("idempotency" + suffix, mode, ok, witness);
}

template <class R>
void check_symmetrizers(Report& report, const ReprMatrices& rep, const R& tau,
                        const std::string& mode, const std::string& suffix) {
  std::vector<Matrix<R>> e = all_generators(rep, tau);
  const int windows = rep.length() - rep.k;
  if (windows < 1) {
    report.add_recorded("symmetrizer" + suffix, mode, "no admissible windows");
    return;
  }
  bool ok = true;
  std::string witness;
  for (int i = 0; i < windows && ok; ++i) {
    auto [num, den] = young_symmetrizer(e, i, rep.k, tau);
    if (!num.is_zero()) {
      ok = false;
      witness = "Y_" + std::to_string(rep.k) + " at e_" + std::to_string(i + 1);
    }
  }
  if (ok) witness = std::to_string(windows) + " windows";
  report.add_check("symmetrizer" + suffix, mode, ok, witness);
}

/* Basis indices reachable from p by removing lozenges, p excluded. */
std::set<int> strictly_below(const Basis& basis, const PathWord& p) {
  std::set<int> seen;
  std::vector<PathWord> queue{p};
  while (!queue.empty()) {
    PathWord cur = queue.back();
    queue.pop_back();
    for (int i = 1; i <= cur.length() - 1; ++i) {
      if (!cur.lozenge_removable(i)) continue;
      PathWord down = cur.remove_lozenge(i);
      if (seen.insert(basis.index_of(down)).second) queue.push_back(down);
    }
  }
  return seen;
}

}  // namespace

ReprMatrices build(int k, int n, int kn_cap) {
  require(k >= 1 && n >= 1, errc::invalid_word, "parameters must be >= 1");
  if (k == 1 || n == 1) return build_one_dimensional(k, n, kn_cap);
  if (k == 2) return build_two_letter(n, kn_cap);
  if (n == 2) return build_transposed(k, kn_cap);
  fail(errc::unsupported_parameters,
       "representation requires min(k,n) <= 2; got k=" + std::to_string(k) +
           ", n=" + std::to_string(n));
}

Report verify_hecke(const ReprMatrices& rep,
                    const std::vector<Rational>& tau_values) {
  Report report("verify_hecke");
  report.set("k", std::to_string(rep.k));
  report.set("n", std::to_string(rep.n));
  if (rep.length() <= 8) {
    PolyQ tau = PolyQ::variable(1, 0);
    check_hecke_relations(report, rep, tau, "symbolic", "");
  }
  for (const Rational& t : tau_values)
    check_hecke_relations(report, rep, t, "exact", " @" + tau_label(t));
  return report;
}

Report verify_quotient(const ReprMatrices& rep,
                       const std::vector<Rational>& tau_values) {
  Report report("verify_quotient");
  report.set("k", std::to_string(rep.k));
  report.set("n", std::to_string(rep.n));
  for (const Rational& t : tau_values) {
    ChebyshevU<Rational> u(t);
    for (int m = 1; m <= rep.k; ++m)
      require(u.at(m) != 0, errc::bad_tau_value,
              "U_" + std::to_string(m) + "(" + rat_to_string(t) + ") = 0");
  }
  if (rep.length() <= 8) {
    PolyQ tau = PolyQ::variable(1, 0);
    check_symmetrizers(report, rep, tau, "symbolic", "");
  }
  for (const Rational& t : tau_values)
    check_symmetrizers(report, rep, t, "exact", " @" + tau_label(t));
  return report;
}

Report verify_p_properties(const ReprMatrices& rep) {
  Report report("verify_p_properties");
  report.set("k", std::to_string(rep.k));
  report.set("n", std::to_string(rep.n));

  bool src_ok = true, tgt_ok = true, entry_ok = true, order_ok = true;
  std::string src_w, tgt_w, entry_w, order_w;
  for (int i = 1; i <= rep.generators(); ++i) {
    std::set<std::pair<int, int>> seen;
    for (const auto& [s, t] : rep.pairs(i)) {
      const PathWord& src = rep.basis.at(s);
      const PathWord& tgt = rep.basis.at(t);
      if (src.classify(i) == Shape::convex && src_ok) {
        src_ok = false;
        src_w = src.to_string() + " at i=" + std::to_string(i);
      }
      if (tgt.classify(i) != Shape::convex && tgt_ok) {
        tgt_ok = false;
        tgt_w = tgt.to_string() + " at i=" + std::to_string(i);
      }
      if ((s == t || !seen.insert({s, t}).second) && entry_ok) {
        entry_ok = false;
        entry_w = "duplicate or diagonal unit entry at i=" + std::to_string(i);
      }
      if (order_ok) {
        bool lozenge_above = src.classify(i) == Shape::concave &&
                             tgt == src.add_lozenge(i);
        bool below = tgt.rank() < src.rank() &&
                     strictly_below(rep.basis, src).count(t) > 0;
        if (!lozenge_above && !below) {
          order_ok = false;
          order_w = src.to_string() + " -> " + tgt.to_string() +
                    " at i=" + std::to_string(i);
        }
      }
    }
  }
  report.add_check("non_convex_sources", "exact", src_ok, src_w);
  report.add_check("convex_targets", "exact", tgt_ok, tgt_w);
  report.add_check("unit_entries", "exact", entry_ok, entry_w);
  report.add_check("target_order", "exact", order_ok, order_w);
  return report;
}

Report verify_duality(const ReprMatrices& a, const ReprMatrices& b) {
  Report report("verify_duality");
  report.set("k", std::to_string(a.k));
  report.set("n", std::to_string(a.n));
  require(a.k == b.n && a.n == b.k, errc::shape_mismatch,
          "parameters are not transposed");

  bool ok = a.length() == b.length();
  std::string witness;
  for (int i = 1; ok && i <= a.generators(); ++i) {
    std::set<std::pair<std::string, std::string>> mapped, direct;
    for (const auto& [s, t] : a.pairs(i))
      mapped.emplace(a.basis.at(t).dual().to_string(),
                     a.basis.at(s).dual().to_string());
    for (const auto& [s, t] : b.pairs(i))
      direct.emplace(b.basis.at(s).to_string(), b.basis.at(t).to_string());
    if (mapped != direct) {
      ok = false;
      witness = "tensor mismatch at i=" + std::to_string(i);
    }
  }
  report.add_check("transposed_tensor", "exact", ok, witness);
  return report;
}

}  // namespace qkz
