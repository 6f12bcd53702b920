#include "qkz/qkzsolver.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qkz/pointgen.hpp"

namespace qkz {

LaurentQ tau_laurent() {
  LaurentQ t;
  t.set_term(1, Rational(-1));
  t.set_term(-1, Rational(-1));
  return t;
}

namespace {

LaurentQ q_plus_qinv() {
  LaurentQ t;
  t.set_term(1, Rational(1));
  t.set_term(-1, Rational(1));
  return t;
}

std::string eq_label(int i, const PathWord& p) {
  return "i=" + std::to_string(i) + " path=" + p.to_string();
}

/* Total weighted degree of every component (z weight 1, r weight 2); the
   shared degree bound for multipoint equality checks. */
int64_t weight_bound(const QkzSolution& sol) {
  return 3LL * sol.k * sol.n * (sol.n - 1) / 2;
}

int point_budget(const QkzSolution& sol, const VerifyOptions& opt) {
  if (opt.points > 0) return opt.points;
  return static_cast<int>(weight_bound(sol)) + 1;
}

std::string bound_witness(const QkzSolution& sol, int points) {
  return std::to_string(points) + " points > weight bound " +
         std::to_string(weight_bound(sol));
}

Report make_report(const char* tool, const QkzSolution& sol,
                   const VerifyOptions& opt) {
  Report rep(tool);
  rep.set("k", std::to_string(sol.k));
  rep.set("n", std::to_string(sol.n));
  rep.set("mode", opt.multipoint ? "multipoint" : "symbolic");
  if (opt.multipoint) {
    rep.set("seed", std::to_string(opt.seed));
    rep.set("points", std::to_string(point_budget(sol, opt)));
  }
  return rep;
}

std::vector<LaurentQ> lift_point(const PointGen::Point& p) {
  std::vector<LaurentQ> coords;
  coords.reserve(p.z.size() + 1);
  for (const auto& z : p.z) coords.emplace_back(z);
  coords.emplace_back(p.r);
  return coords;
}

}  // namespace

PolyL t_operator(const PolyL& f, int i) {
  require(i >= 1 && i <= f.nvars() - 2, errc::index_out_of_range,
          "exchange operator position");
  const int nv = f.nvars();
  PolyL pre(nv);
  pre.add_term(Monomial::unit(nv, i), LaurentQ::q_power(-1));
  pre.add_term(Monomial::unit(nv, i - 1), -LaurentQ::q_power(1));
  return pre * divided_difference(f, i - 1);
}

PolyL base_component(int k, int n) {
  require(k >= 1 && n >= 1, errc::unsupported_parameters,
          "side lengths must be positive");
  const int N = k * n;
  const int nv = N + 1;
  PolyL out = PolyL::constant(nv, LaurentQ(1));
  for (int m = 1; m <= k; ++m)
    for (int i = (m - 1) * n + 1; i <= m * n; ++i)
      for (int j = i + 1; j <= m * n; ++j) {
        PolyL a(nv);
        a.add_term(Monomial::unit(nv, i - 1), LaurentQ::q_power(2));
        a.add_term(Monomial::unit(nv, j - 1), LaurentQ(-1));
        PolyL b(nv);
        b.add_term(Monomial::unit(nv, nv - 1), LaurentQ::q_power(2 * m));
        b.add_term(Monomial::unit(nv, i - 1) + Monomial::unit(nv, j - 1),
                   LaurentQ(-1));
        out *= a;
        out *= b;
      }
  return out;
}

const PolyL& QkzSolution::component(int idx) const {
  require(idx >= 0 && idx < static_cast<int>(components.size()),
          errc::index_out_of_range, "component index");
  return components[idx];
}

const PolyL& QkzSolution::component(const PathWord& p) const {
  return components[rep.basis.index_of(p)];
}

QkzSolution solve(int k, int n, int kn_cap) {
  QkzSolution sol;
  sol.k = k;
  sol.n = n;
  sol.s_exponent = 2 * (k + 1);
  sol.rep = build(k, n, kn_cap);
  const Basis& basis = sol.rep.basis;
  const int dim = basis.size();
  const int N = k * n;
  const int nv = N + 1;
  sol.components.assign(dim, PolyL(nv));
  std::vector<char> known(dim, 0);
  sol.components[dim - 1] = base_component(k, n);
  known[dim - 1] = 1;

  for (int u = dim - 2; u >= 0; --u) {
    const PathWord& sigma = basis.at(u);
    /* Parents (pi, i) with remove_lozenge(pi, i) == sigma, in canonical
       order. The first is the designated derivation; every further one must
       reproduce the same polynomial. */
    std::vector<std::pair<int, int>> parents;
    for (int i = 1; i < N; ++i)
      if (sigma.classify(i) == Shape::concave)
        parents.emplace_back(basis.index_of(sigma.add_lozenge(i)), i);
    std::sort(parents.begin(), parents.end());
    require(!parents.empty(), errc::inconsistent_derivation,
            "path " + sigma.to_string() + " has no parent");
    for (const auto& [pidx, i] : parents) {
      require(known[pidx], errc::inconsistent_derivation,
              "parent solved out of order");
      PolyL rhs = t_operator(sol.components[pidx], i);
      bool found = false;
      for (const auto& [s, t] : sol.rep.pairs(i)) {
        if (t != pidx) continue;
        if (s == u) {
          found = true;
          continue;
        }
        require(known[s], errc::inconsistent_derivation,
                "sibling term not yet solved");
        rhs -= sol.components[s];
      }
      require(found, errc::inconsistent_derivation,
              "action lacks the lozenge pair at " + eq_label(i, basis.at(pidx)));
      if (!known[u]) {
        sol.components[u] = std::move(rhs);
        known[u] = 1;
      } else {
        require(rhs == sol.components[u], errc::inconsistent_derivation,
                "derivations disagree at " + eq_label(i, sigma));
      }
    }
  }

  const int32_t zdeg = 2 * (n - 1);
  const int32_t rdeg = k * n * (n - 1) / 2;
  const int64_t weight = weight_bound(sol);
  std::vector<int> weights(nv, 1);
  weights[nv - 1] = 2;
  for (int u = 0; u < dim; ++u) {
    const PolyL& c = sol.components[u];
    const std::string who = basis.at(u).to_string();
    require(!c.is_zero(), errc::inconsistent_derivation,
            "component " + who + " vanished");
    require(!c.has_negative_exponents(), errc::inconsistent_derivation,
            "negative exponent in component " + who);
    for (int v = 0; v < N; ++v)
      require(c.degree_in(v) <= zdeg, errc::inconsistent_derivation,
              "z-degree bound violated by component " + who);
    require(c.degree_in(N) <= rdeg, errc::inconsistent_derivation,
            "r-degree bound violated by component " + who);
    require(c.is_quasi_homogeneous(weights, weight),
            errc::inconsistent_derivation,
            "weight grading violated by component " + who);
    for (const auto& [mono, coeff] : c.terms()) {
      require(coeff.has_integer_coeffs(), errc::non_integer_coefficient,
              "component " + who);
      for (const auto& [e, val] : coeff.terms())
        if (val < 0) sol.coeffs_nonnegative = false;
    }
  }
  return sol;
}

Report verify_exchange(const QkzSolution& sol, const VerifyOptions& opt) {
  Report rep = make_report("verify-exchange", sol, opt);
  const int N = sol.length();
  const int nv = sol.nvars();
  const int dim = sol.basis().size();
  const LaurentQ qq = q_plus_qinv();
  const std::string mode = opt.multipoint ? "multipoint" : "symbolic";

  long n_convex = 0, n_other = 0, n_vanish = 0, n_hw = 0;
  bool eq_ok = true, lv_ok = true, hw_ok = true;
  std::string eq_first, lv_first, hw_first;

  if (!opt.multipoint) {
    for (int i = 1; i < N; ++i) {
      for (int p = 0; p < dim; ++p) {
        const PathWord& path = sol.basis().at(p);
        const PolyL lhs = t_operator(sol.components[p], i);
        PolyL rhs(nv);
        if (path.classify(i) == Shape::convex) {
          ++n_convex;
          for (const auto& [s, t] : sol.rep.pairs(i))
            if (t == p) rhs += sol.components[s];
        } else {
          ++n_other;
          rhs = sol.components[p].scale(qq);
        }
        if (eq_ok && lhs != rhs) {
          eq_ok = false;
          eq_first = eq_label(i, path);
        }
        if (path.classify(i) != Shape::convex) {
          ++n_vanish;
          const PolyL at_string = sol.components[p].substitute_monomial(
              i, LaurentQ::q_power(2), Monomial::unit(nv, i - 1));
          if (lv_ok && !at_string.is_zero()) {
            lv_ok = false;
            lv_first = eq_label(i, path);
          }
        }
      }
      if (i % sol.n != 0) {
        ++n_hw;
        const PolyL& top = sol.components[dim - 1];
        if (hw_ok && t_operator(top, i) != top.scale(qq)) {
          hw_ok = false;
          hw_first = "i=" + std::to_string(i);
        }
      }
    }
  } else {
    PointGen gen(opt.seed);
    const int points = point_budget(sol, opt);
    for (int pt = 0; pt < points; ++pt) {
      const auto point = gen.sample(N);
      const auto coords = lift_point(point);
      std::vector<LaurentQ> vals(dim);
      for (int p = 0; p < dim; ++p) vals[p] = sol.components[p].evaluate(coords);
      for (int i = 1; i < N; ++i) {
        auto swapped = coords;
        std::swap(swapped[i - 1], swapped[i]);
        Rational dinv = 1 / (point.z[i - 1] - point.z[i]);
        LaurentQ pre;
        pre.set_term(-1, point.z[i]);
        pre.set_term(1, -point.z[i - 1]);
        for (int p = 0; p < dim; ++p) {
          const PathWord& path = sol.basis().at(p);
          const LaurentQ sval = sol.components[p].evaluate(swapped);
          const LaurentQ lhs = pre * (sval - vals[p]) * LaurentQ(dinv);
          LaurentQ rhs;
          if (path.classify(i) == Shape::convex) {
            if (pt == 0) ++n_convex;
            for (const auto& [s, t] : sol.rep.pairs(i))
              if (t == p) rhs += vals[s];
          } else {
            if (pt == 0) ++n_other;
            rhs = qq * vals[p];
          }
          if (eq_ok && lhs != rhs) {
            eq_ok = false;
            eq_first = eq_label(i, path);
          }
          if (path.classify(i) != Shape::convex) {
            if (pt == 0) ++n_vanish;
            auto strung = coords;
            strung[i] = LaurentQ::q_power(2, point.z[i - 1]);
            if (lv_ok && !sol.components[p].evaluate(strung).is_zero()) {
              lv_ok = false;
              lv_first = eq_label(i, path);
            }
          }
        }
        if (i % sol.n != 0) {
          if (pt == 0) ++n_hw;
          const LaurentQ tval = pre *
                                (sol.components[dim - 1].evaluate(swapped) -
                                 vals[dim - 1]) *
                                LaurentQ(dinv);
          if (hw_ok && tval != qq * vals[dim - 1]) {
            hw_ok = false;
            hw_first = "i=" + std::to_string(i);
          }
        }
      }
    }
    rep.add_pass("point_bound", mode, bound_witness(sol, points));
  }

  rep.add_check("exchange_equations", mode, eq_ok,
                eq_ok ? std::to_string(n_convex + n_other) + " equations (" +
                            std::to_string(n_convex) + " convex, " +
                            std::to_string(n_other) + " flat or concave)"
                      : "first failure at " + eq_first);
  rep.add_check("vanishing_at_q2_string", mode, lv_ok,
                lv_ok ? std::to_string(n_vanish) + " specializations"
                      : "first failure at " + lv_first);
  rep.add_check("highest_weight", mode, hw_ok,
                hw_ok ? std::to_string(n_hw) + " positions"
                      : "first failure at " + hw_first);
  return rep;
}

Report verify_boundary(const QkzSolution& sol, const VerifyOptions& opt) {
  Report rep = make_report("verify-boundary", sol, opt);
  const int N = sol.length();
  const int nv = sol.nvars();
  const int dim = sol.basis().size();
  const int n = sol.n;
  const std::string mode = opt.multipoint ? "multipoint" : "symbolic";

  bool left_ok = true, right_ok = true;
  std::string left_first, right_first;

  if (!opt.multipoint) {
    const Monomial left_img =
        Monomial::unit(nv, nv - 1) + Monomial::unit(nv, 0, -1);
    const Monomial left_c = Monomial::unit(nv, nv - 1, n - 1) +
                            Monomial::unit(nv, 0, -2 * (n - 1));
    const Monomial right_img =
        Monomial::unit(nv, nv - 1) + Monomial::unit(nv, N - 1, -1);
    const Monomial right_c = Monomial::unit(nv, nv - 1, n - 1) +
                             Monomial::unit(nv, N - 1, -2 * (n - 1));
    for (int p = 0; p < dim; ++p) {
      const PolyL& c = sol.components[p];
      if (left_ok &&
          c.substitute_monomial(0, LaurentQ(1), left_img) !=
              c.mul_monomial(left_c, LaurentQ(1))) {
        left_ok = false;
        left_first = sol.basis().at(p).to_string();
      }
      if (right_ok &&
          c.substitute_monomial(N - 1, LaurentQ::q_power(sol.s_exponent),
                                right_img) !=
              c.mul_monomial(right_c,
                             LaurentQ::q_power(sol.s_exponent * (n - 1)))) {
        right_ok = false;
        right_first = sol.basis().at(p).to_string();
      }
    }
  } else {
    PointGen gen(opt.seed);
    const int points = point_budget(sol, opt);
    for (int pt = 0; pt < points; ++pt) {
      const auto point = gen.sample(N);
      const auto coords = lift_point(point);
      auto left = coords;
      left[0] = LaurentQ(point.r / point.z[0]);
      auto right = coords;
      right[N - 1] =
          LaurentQ::q_power(sol.s_exponent, point.r / point.z[N - 1]);
      const Rational zl = point.r / (point.z[0] * point.z[0]);
      const Rational zr = point.r / (point.z[N - 1] * point.z[N - 1]);
      const LaurentQ cl = LaurentQ(ring_pow(zl, n - 1));
      const LaurentQ cr =
          LaurentQ::q_power(sol.s_exponent * (n - 1), ring_pow(zr, n - 1));
      for (int p = 0; p < dim; ++p) {
        const PolyL& c = sol.components[p];
        const LaurentQ base = c.evaluate(coords);
        if (left_ok && c.evaluate(left) != cl * base) {
          left_ok = false;
          left_first = sol.basis().at(p).to_string();
        }
        if (right_ok && c.evaluate(right) != cr * base) {
          right_ok = false;
          right_first = sol.basis().at(p).to_string();
        }
      }
    }
    rep.add_pass("point_bound", mode, bound_witness(sol, points));
  }

  rep.add_check("left_reflection", mode, left_ok,
                left_ok ? std::to_string(dim) + " components"
                        : "first failure at " + left_first);
  rep.add_check("right_reflection", mode, right_ok,
                right_ok ? std::to_string(dim) + " components"
                         : "first failure at " + right_first);
  return rep;
}

namespace {

/* Increasing (k+1)-subsets of 1..N, lexicographic. */
bool next_subset(std::vector<int>& pos, int N) {
  const int m = static_cast<int>(pos.size());
  for (int idx = m - 1; idx >= 0; --idx) {
    if (pos[idx] < N - (m - 1 - idx)) {
      ++pos[idx];
      for (int t = idx + 1; t < m; ++t) pos[t] = pos[t - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string wheel_label(int m, const std::vector<int>& pos) {
  std::string out = "m=" + std::to_string(m) + " positions=(";
  for (size_t t = 0; t < pos.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(pos[t]);
  }
  return out + ")";
}

}  // namespace

Report verify_wheel(const QkzSolution& sol, const VerifyOptions& opt) {
  Report rep = make_report("verify-wheel", sol, opt);
  const int N = sol.length();
  const int nv = sol.nvars();
  const int dim = sol.basis().size();
  const int k = sol.k;
  const std::string mode = opt.multipoint ? "multipoint" : "symbolic";
  if (N < k + 1) {
    rep.add_recorded("wheel_vanishing", mode, "no admissible position sets");
    return rep;
  }
  PointGen gen(opt.seed);
  const int points = opt.multipoint ? point_budget(sol, opt) : 1;

  long n_sets = 0;
  bool ok = true;
  std::string first;
  for (int m = 2; m <= k + 1 && ok; ++m) {
    std::vector<int> pos(k + 1);
    for (int t = 0; t <= k; ++t) pos[t] = t + 1;
    do {
      ++n_sets;
      if (!opt.multipoint) {
        for (int p = 0; p < dim && ok; ++p) {
          PolyL g = sol.components[p];
          for (int j = 2; j <= m; ++j)
            g = g.substitute_monomial(pos[j - 1] - 1,
                                      LaurentQ::q_power(2 * (j - 1)),
                                      Monomial::unit(nv, pos[0] - 1));
          for (int j = 1; j <= k + 1 - m; ++j)
            g = g.substitute_monomial(
                pos[m + j - 1] - 1, LaurentQ::q_power(2 * j),
                Monomial::unit(nv, nv - 1) +
                    Monomial::unit(nv, pos[0] - 1, -1));
          if (!g.is_zero()) {
            ok = false;
            first = wheel_label(m, pos) + " path=" +
                    sol.basis().at(p).to_string();
          }
        }
      } else {
        for (int pt = 0; pt < points && ok; ++pt) {
          const auto point = gen.sample(N);
          auto coords = lift_point(point);
          const Rational& zbase = point.z[pos[0] - 1];
          for (int j = 2; j <= m; ++j)
            coords[pos[j - 1] - 1] = LaurentQ::q_power(2 * (j - 1), zbase);
          for (int j = 1; j <= k + 1 - m; ++j)
            coords[pos[m + j - 1] - 1] =
                LaurentQ::q_power(2 * j, point.r / zbase);
          for (int p = 0; p < dim && ok; ++p)
            if (!sol.components[p].evaluate(coords).is_zero()) {
              ok = false;
              first = wheel_label(m, pos) + " path=" +
                      sol.basis().at(p).to_string();
            }
        }
      }
    } while (ok && next_subset(pos, N));
  }
  if (opt.multipoint)
    rep.add_pass("point_bound", mode, bound_witness(sol, points));
  rep.add_check("wheel_vanishing", mode, ok,
                ok ? std::to_string(n_sets) + " specializations x " +
                         std::to_string(dim) + " components"
                   : "first failure at " + first);
  return rep;
}

Report verify_recursion(const QkzSolution& big, const QkzSolution& small,
                        const VerifyOptions& opt) {
  require(big.n >= 2 && small.k == big.k && small.n == big.n - 1,
          errc::shape_mismatch,
          "embedded solution must have side lengths (k, n-1)");
  Report rep = make_report("verify-recursion", big, opt);
  const int k = big.k;
  const int N = big.length();
  const int nv = big.nvars();
  const int dim = big.basis().size();
  const std::string mode = opt.multipoint ? "multipoint" : "symbolic";

  /* small variables z_1..z_{N-k}, r -> big variables z_{k+1}..z_N, r */
  std::vector<int> vmap(small.nvars());
  for (int v = 0; v < small.length(); ++v) vmap[v] = v + k;
  vmap[small.length()] = nv - 1;

  /* The embedding constant (-q)^{k(k-1)(n-1)/2}, the same for every
     surviving path. */
  const int cexp = k * (k - 1) * (big.n - 1) / 2;
  const LaurentQ embed_const =
      LaurentQ::q_power(cexp, Rational(cexp % 2 == 0 ? 1 : -1));
  rep.set("embedding_constant", embed_const.to_string());

  long n_vanish = 0, n_survive = 0;
  bool van_ok = true, sur_ok = true;
  std::string van_first, sur_first;

  if (!opt.multipoint) {
    PolyL pref = PolyL::constant(nv, LaurentQ(1));
    for (int j = k + 1; j <= N; ++j) {
      PolyL a(nv);
      a.add_term(Monomial::unit(nv, 0), LaurentQ::q_power(2 * k));
      a.add_term(Monomial::unit(nv, j - 1), LaurentQ(-1));
      PolyL b(nv);
      b.add_term(Monomial::unit(nv, nv - 1), LaurentQ::q_power(2));
      b.add_term(Monomial::unit(nv, 0) + Monomial::unit(nv, j - 1),
                 LaurentQ(-1));
      pref *= a;
      pref *= b;
    }
    for (int p = 0; p < dim; ++p) {
      const PathWord& path = big.basis().at(p);
      PolyL g = big.components[p];
      for (int j = 2; j <= k; ++j)
        g = g.substitute_monomial(j - 1, LaurentQ::q_power(2 * (j - 1)),
                                  Monomial::unit(nv, 0));
      bool survives = true;
      for (int j = 1; j <= k; ++j)
        if (path.step(j) != j) {
          survives = false;
          break;
        }
      if (!survives) {
        ++n_vanish;
        if (van_ok && !g.is_zero()) {
          van_ok = false;
          van_first = path.to_string();
        }
        continue;
      }
      ++n_survive;
      std::vector<int> tail(path.steps().begin() + k, path.steps().end());
      const PolyL emb =
          small.component(PathWord(k, big.n - 1, tail)).embed(nv, vmap);
      if (sur_ok && g != (pref * emb).scale(embed_const)) {
        sur_ok = false;
        sur_first = path.to_string();
      }
    }
  } else {
    PointGen gen(opt.seed);
    const int points = point_budget(big, opt);
    for (int pt = 0; pt < points; ++pt) {
      const auto point = gen.sample(N);
      auto coords = lift_point(point);
      for (int j = 2; j <= k; ++j)
        coords[j - 1] = LaurentQ::q_power(2 * (j - 1), point.z[0]);
      LaurentQ prefval(Rational(1));
      for (int j = k + 1; j <= N; ++j) {
        LaurentQ a = LaurentQ::q_power(2 * k, point.z[0]) -
                     LaurentQ(point.z[j - 1]);
        LaurentQ b = LaurentQ::q_power(2, point.r) -
                     LaurentQ(point.z[0] * point.z[j - 1]);
        prefval = prefval * a * b;
      }
      std::vector<LaurentQ> sub(small.nvars());
      for (int v = 0; v < small.length(); ++v) sub[v] = coords[v + k];
      sub[small.length()] = LaurentQ(point.r);
      for (int p = 0; p < dim; ++p) {
        const PathWord& path = big.basis().at(p);
        const LaurentQ val = big.components[p].evaluate(coords);
        bool survives = true;
        for (int j = 1; j <= k; ++j)
          if (path.step(j) != j) {
            survives = false;
            break;
          }
        if (!survives) {
          if (pt == 0) ++n_vanish;
          if (van_ok && !val.is_zero()) {
            van_ok = false;
            van_first = path.to_string();
          }
          continue;
        }
        if (pt == 0) ++n_survive;
        std::vector<int> tail(path.steps().begin() + k, path.steps().end());
        const LaurentQ sval =
            small.component(PathWord(k, big.n - 1, tail)).evaluate(sub);
        if (sur_ok && val != embed_const * prefval * sval) {
          sur_ok = false;
          sur_first = path.to_string();
        }
      }
    }
    rep.add_pass("point_bound", mode, bound_witness(big, points));
  }

  rep.add_check("non_prefixed_components_vanish", mode, van_ok,
                van_ok ? std::to_string(n_vanish) + " components"
                       : "first failure at " + van_first);
  rep.add_check("surviving_components_factor", mode, sur_ok,
                sur_ok ? std::to_string(n_survive) + " components"
                       : "first failure at " + sur_first);
  return rep;
}

PrefixReduction specialize_prefix(const QkzSolution& sol, int j) {
  require(j >= 0 && j <= sol.k - 1, errc::index_out_of_range,
          "prefix length must lie in [0, k-1]");
  PrefixReduction out;
  out.k = sol.k;
  out.n = sol.n;
  out.j = j;
  out.support = enumerate_with_prefix(sol.k, sol.n, j);

  std::vector<PolyL> comps = sol.components;
  int nv = sol.nvars();
  for (int step = 0; step < j; ++step) {
    std::vector<int> vmap(nv);
    vmap[0] = 0;
    for (int v = 1; v < nv; ++v) vmap[v] = v - 1;
    for (auto& c : comps) c = c.partial_eval(0, LaurentQ()).embed(nv - 1, vmap);
    --nv;
  }

  const Basis& basis = sol.basis();
  for (int p = 0; p < basis.size(); ++p) {
    bool in_support = true;
    for (int t = 1; t <= j; ++t)
      if (basis.at(p).step(t) != t) {
        in_support = false;
        break;
      }
    if (in_support) {
      require(!comps[p].is_zero(), errc::inconsistent_derivation,
              "prefixed component vanished at " + basis.at(p).to_string());
      out.components.push_back(std::move(comps[p]));
    } else {
      require(comps[p].is_zero(), errc::inconsistent_derivation,
              "non-prefixed component survived at " + basis.at(p).to_string());
    }
  }
  require(static_cast<int>(out.components.size()) == out.support.size(),
          errc::inconsistent_derivation, "support size mismatch");
  return out;
}

}  // namespace qkz
