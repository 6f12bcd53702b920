#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qkz/rationallimit.hpp"
#include "qkz/serialize.hpp"
#include "qkz/sumrules.hpp"

namespace {

using namespace qkz;

struct Opts {
  int k = 2;
  int n = 2;
  int cap = 14;
  std::uint64_t seed = 1;
  int points = 20;
  bool no_cache = false;
  std::string cache_dir;
  std::string output = "text";
  std::vector<std::string> checks;
};

void add_common(CLI::App* cmd, Opts& o, bool sized = true) {
  if (sized) {
    cmd->add_option("--k", o.k, "number of step values")->check(CLI::Range(1, 64));
    cmd->add_option("--n", o.n, "multiplicity of each value")->check(CLI::Range(1, 64));
    cmd->add_option("--size-cap", o.cap, "maximum word length accepted");
  }
  cmd->add_option("--output", o.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_cache(CLI::App* cmd, Opts& o) {
  cmd->add_option("--cache-dir", o.cache_dir,
                  "solution cache location (default: QKZ_CACHE_DIR or "
                  "~/.cache/qkz)");
  cmd->add_flag("--no-cache", o.no_cache, "solve fresh, do not touch the cache");
}

QkzSolution obtain(const Opts& o) {
  const std::string dir =
      o.cache_dir.empty() ? default_cache_dir() : o.cache_dir;
  return load_or_solve(o.k, o.n, dir, !o.no_cache, o.cap);
}

int emit(const Report& rep, const Opts& o) {
  std::cout << (o.output == "json" ? rep.to_json() : rep.to_text());
  return rep.exit_code();
}

bool wants(const Opts& o, const std::string& name) {
  if (o.checks.empty()) return true;
  for (const auto& c : o.checks)
    if (c == name) return true;
  return false;
}

int cmd_paths(const Opts& o) {
  Basis b = enumerate(o.k, o.n, o.cap);
  if (o.output == "json") {
    nlohmann::json j;
    j["k"] = o.k;
    j["n"] = o.n;
    j["count"] = count_paths(o.k, o.n).get_str();
    auto paths = nlohmann::json::array();
    for (const auto& p : b.paths)
      paths.push_back({{"word", p.to_string()},
                       {"rank", p.rank()},
                       {"dual", p.dual().to_string()}});
    j["paths"] = std::move(paths);
    std::cout << j.dump(1) << "\n";
    return 0;
  }
  std::cout << "paths(" << o.k << "," << o.n
            << ") = " << count_paths(o.k, o.n).get_str() << "\n";
  for (const auto& p : b.paths)
    std::cout << p.to_string() << "  rank " << p.rank() << "  dual "
              << p.dual().to_string() << "\n";
  return 0;
}

int cmd_repr(const Opts& o) {
  const ReprMatrices rep = build(o.k, o.n, o.cap);
  const std::vector<Rational> taus = {Rational(2), make_rational(5, 2),
                                      Rational(-3), make_rational(7, 5)};
  Report out("repr");
  out.set("k", std::to_string(o.k));
  out.set("n", std::to_string(o.n));
  if (wants(o, "hecke")) out.merge(verify_hecke(rep, taus));
  if (wants(o, "quotient")) out.merge(verify_quotient(rep, taus));
  if (wants(o, "p-properties")) out.merge(verify_p_properties(rep));
  if (wants(o, "duality"))
    out.merge(verify_duality(rep, build(o.n, o.k, o.cap)));
  return emit(out, o);
}

int cmd_solve(const Opts& o) {
  const QkzSolution sol = obtain(o);
  if (o.output == "json") {
    std::cout << serialize_solution(sol);
    return 0;
  }
  Report out("solve");
  out.set("k", std::to_string(o.k));
  out.set("n", std::to_string(o.n));
  out.set("dimension", std::to_string(sol.basis().size()));
  out.set("boundary_exponent", std::to_string(sol.s_exponent));
  size_t total = 0;
  for (int i = 0; i < sol.basis().size(); ++i) {
    total += sol.components[i].term_count();
    out.add_recorded("terms " + sol.basis().at(i).to_string(), "exact",
                     std::to_string(sol.components[i].term_count()));
  }
  out.set("total_terms", std::to_string(total));
  return emit(out, o);
}

int cmd_verify(const Opts& o, bool multipoint) {
  const QkzSolution sol = obtain(o);
  VerifyOptions vo;
  vo.multipoint = multipoint;
  vo.seed = o.seed;
  vo.points = multipoint ? o.points : 0;
  Report out("verify");
  out.set("k", std::to_string(o.k));
  out.set("n", std::to_string(o.n));
  out.set("mode", multipoint ? "multipoint" : "symbolic");
  if (multipoint) {
    out.set("seed", std::to_string(vo.seed));
    if (vo.points > 0) out.set("points", std::to_string(vo.points));
  }
  if (wants(o, "exchange")) out.merge(verify_exchange(sol, vo));
  if (wants(o, "boundary")) out.merge(verify_boundary(sol, vo));
  if (wants(o, "wheel")) out.merge(verify_wheel(sol, vo));
  if (wants(o, "recursion")) {
    if (o.n >= 2) {
      Opts small = o;
      small.n = o.n - 1;
      out.merge(verify_recursion(sol, obtain(small), vo));
    } else {
      out.add_recorded("recursion", "symbolic", "n = 1 has no smaller system");
    }
  }
  return emit(out, o);
}

std::string rat_pretty(const Rational& x) {
  return rat_is_integer(x) ? x.get_num().get_str() : rat_to_string(x);
}

std::string homogeneous_line(const SumRulePoly& s) {
  const auto co = homogeneous_r_coefficients(s);
  std::ostringstream os;
  os << "I(1,...,1|r) = ";
  bool first = true;
  for (size_t m = 0; m < co.size(); ++m) {
    if (co[m] == 0 && co.size() > 1) continue;
    if (!first) os << " + ";
    os << rat_pretty(co[m]);
    if (m == 1) os << " r";
    if (m >= 2) os << " r^" << m;
    first = false;
  }
  return os.str();
}

int cmd_sumrule(const Opts& o, bool homogeneous) {
  const SumRulePoly s = sum_rule(obtain(o));
  if (homogeneous) {
    if (o.output == "json") {
      nlohmann::json j;
      j["k"] = o.k;
      j["n"] = o.n;
      auto arr = nlohmann::json::array();
      for (const auto& c : homogeneous_r_coefficients(s))
        arr.push_back(rat_to_string(c));
      j["coefficients"] = std::move(arr);
      std::cout << j.dump(1) << "\n";
    } else {
      std::cout << homogeneous_line(s) << "\n";
    }
    return 0;
  }
  Report out = verify_sum_rule_values(s);
  out.merge(check_symplectic_agreement(s, o.seed, o.points));
  if (o.k == 2) out.merge(check_ik_agreement(s, o.seed, o.points));
  return emit(out, o);
}

int cmd_numbers(const Opts& o, const std::string& which, int k_max, int n_max) {
  if (o.output == "json") {
    nlohmann::json j;
    j["which"] = which;
    auto rows = nlohmann::json::array();
    for (int n = 1; n <= n_max; ++n) {
      auto row = nlohmann::json::array();
      for (int k = 1; k <= k_max; ++k)
        row.push_back(which == "asm" ? asm_number(k, n).get_str()
                                     : vsasm_number(k, n).get_str());
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(1) << "\n";
    return 0;
  }
  std::cout << "n\\k";
  for (int k = 1; k <= k_max; ++k) std::cout << "," << k;
  std::cout << "\n";
  for (int n = 1; n <= n_max; ++n) {
    std::cout << n;
    for (int k = 1; k <= k_max; ++k)
      std::cout << ","
                << (which == "asm" ? asm_number(k, n).get_str()
                                   : vsasm_number(k, n).get_str());
    std::cout << "\n";
  }
  return 0;
}

int cmd_rational_limit(const Opts& o) {
  const QkzSolution sol = obtain(o);
  if (o.output == "json") {
    nlohmann::json j;
    j["k"] = o.k;
    j["n"] = o.n;
    auto basis = nlohmann::json::array();
    for (const auto& p : sol.basis().paths) basis.push_back(p.to_string());
    j["basis"] = std::move(basis);
    for (int r_value : {1, 0}) {
      const LimitVector lv = homogeneous_limit(sol, r_value);
      nlohmann::json part;
      auto entries = nlohmann::json::array();
      Integer sum(0);
      for (const auto& e : lv.entries) {
        entries.push_back(e.get_str());
        sum += e;
      }
      part["entries"] = std::move(entries);
      part["sum"] = sum.get_str();
      part["divisor_exponent"] = lv.divisor_exponent;
      part["raw_sign"] = lv.sign_flipped ? "-" : "+";
      j[r_value ? "r1" : "r0"] = std::move(part);
    }
    if (o.k == 2) {
      j["pascal_determinant"] = brauer_degree(o.n).get_str();
      j["sum_matches_determinant"] =
          j["r1"]["sum"] == j["pascal_determinant"];
    }
    std::cout << j.dump(1) << "\n";
    const bool bad =
        o.k == 2 && !j["sum_matches_determinant"].get<bool>();
    return bad ? 1 : 0;
  }
  return emit(limit_sum_check(sol), o);
}

int cmd_stationary(const Opts& o) {
  const Stationary st = stationary_probabilities(obtain(o));
  Report out("stationary");
  out.set("k", std::to_string(o.k));
  out.set("n", std::to_string(o.n));
  out.set("all_rational", st.all_rational ? "true" : "false");
  const Basis b = enumerate(o.k, o.n, o.cap);
  for (size_t i = 0; i < st.probabilities.size(); ++i) {
    std::string val = st.probabilities[i].is_rational()
                          ? rat_to_string(st.probabilities[i].as_rational())
                          : st.decimals[i];
    out.add_recorded("P(" + b.at(int(i)).to_string() + ")", "exact", val);
  }
  return emit(out, o);
}

int cmd_conjecture(const Opts& o) {
  const ConjectureVerdict v = convex_transition_probability(o.k, o.cap);
  Report out("conjecture");
  out.set("k", std::to_string(o.k));
  out.add_check("convex_transition_closed_form", "exact", v.matches,
                v.observable_decimal + " vs " + rat_to_string(v.closed_form));
  return emit(out, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact path-model solver for the boundary quantum "
               "Knizhnik-Zamolodchikov system, with sum rules and limits"};
  app.require_subcommand(1);

  Opts o;
  std::string which = "vsasm";
  int k_max = 5, n_max = 5;
  bool homogeneous = false, multipoint = false;

  auto* paths = app.add_subcommand("paths", "enumerate the path basis");
  add_common(paths, o);

  auto* repr = app.add_subcommand("repr", "verify the generator matrices");
  add_common(repr, o);
  repr->add_option("--checks", o.checks,
                   "subset of hecke,quotient,p-properties,duality");

  auto* solve_cmd = app.add_subcommand("solve", "solve and cache the system");
  add_common(solve_cmd, o);
  add_cache(solve_cmd, o);

  auto* verify = app.add_subcommand("verify", "check the defining identities");
  add_common(verify, o);
  add_cache(verify, o);
  verify->add_option("--checks", o.checks,
                     "subset of exchange,boundary,wheel,recursion");
  verify->add_flag("--multipoint", multipoint,
                   "evaluate at random points instead of symbolically");
  verify->add_option("--seed", o.seed, "point generator seed");
  verify->add_option("--points", o.points, "points per identity");

  auto* sumrule = app.add_subcommand("sumrule", "covector-weighted sum rule");
  add_common(sumrule, o);
  add_cache(sumrule, o);
  sumrule->add_flag("--homogeneous", homogeneous,
                    "print the z = 1 specialization only");
  sumrule->add_option("--seed", o.seed, "point generator seed");
  sumrule->add_option("--points", o.points, "agreement points");

  auto* numbers = app.add_subcommand("numbers", "closed-form count tables");
  add_common(numbers, o, false);
  numbers->add_option("--which", which, "asm or vsasm")
      ->check(CLI::IsMember({"asm", "vsasm"}));
  numbers->add_option("--k-max", k_max, "columns")->check(CLI::Range(1, 16));
  numbers->add_option("--n-max", n_max, "rows")->check(CLI::Range(1, 16));

  auto* rl = app.add_subcommand("rational-limit",
                                "integer limit vectors at q = -1");
  add_common(rl, o);
  add_cache(rl, o);

  auto* stat = app.add_subcommand("stationary",
                                  "invariant path probabilities");
  add_common(stat, o);
  add_cache(stat, o);

  auto* conj = app.add_subcommand("conjecture",
                                  "convex transition probability, n = 2");
  add_common(conj, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (paths->parsed()) return cmd_paths(o);
    if (repr->parsed()) return cmd_repr(o);
    if (solve_cmd->parsed()) return cmd_solve(o);
    if (verify->parsed()) return cmd_verify(o, multipoint);
    if (sumrule->parsed()) return cmd_sumrule(o, homogeneous);
    if (numbers->parsed()) return cmd_numbers(o, which, k_max, n_max);
    if (rl->parsed()) return cmd_rational_limit(o);
    if (stat->parsed()) return cmd_stationary(o);
    if (conj->parsed()) return cmd_conjecture(o);
  } catch (const qkz::Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == qkz::errc::unsupported_parameters) return 3;
    if (e.code() == qkz::errc::usage_error) return 2;
    return 1;
  }
  return 2;
}
