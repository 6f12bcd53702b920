#include "qkz/rationallimit.hpp"

#include <string>

#include "qkz/matrix.hpp"
#include "qkz/qlimit.hpp"

namespace qkz {

LimitVector homogeneous_limit(const QkzSolution& sol, int r_value) {
  require(r_value == 0 || r_value == 1, errc::unsupported_parameters,
          "boundary parameter must be 0 or 1");
  const int k = sol.k, n = sol.n, N = k * n;
  const long d = r_value == 1 ? long(k) * n * (n - 1) : long(k) * n * (n - 1) / 2;

  LimitVector out;
  out.k = k;
  out.n = n;
  out.r_value = r_value;
  out.divisor_exponent = d;

  std::vector<LaurentQ> at(N + 1, LaurentQ(1));
  at[N] = LaurentQ(Rational(r_value));
  for (const auto& comp : sol.components) {
    const Rational val = q_limit(comp.evaluate(at), d);
    require(rat_is_integer(val), errc::non_integer,
            "limit entry " + rat_to_string(val));
    out.entries.push_back(val.get_num());
  }

  Integer& top = out.entries.back(); /* maximal path comes last */
  require(top != 0, errc::inconsistent_derivation,
          "maximal-path entry vanishes in the limit");
  if (top < 0) {
    out.sign_flipped = true;
    for (auto& e : out.entries) e = -e;
  }
  for (const auto& e : out.entries)
    if (e < 0) out.all_nonnegative = false;
  return out;
}

Integer brauer_degree(int n) {
  require(n >= 1, errc::unsupported_parameters, "size must be positive");
  Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Rational(binomial(2 * (i + j) + 1, 2 * i));
  const Rational det = determinant(m);
  require(rat_is_integer(det), errc::non_integer, "binomial determinant");
  return det.get_num();
}

namespace {

std::string int_list(const std::vector<Integer>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i].get_str();
  }
  return out;
}

}  // namespace

Report limit_sum_check(int k, int n, int kn_cap) {
  return limit_sum_check(solve(k, n, kn_cap));
}

Report limit_sum_check(const QkzSolution& sol) {
  const int k = sol.k, n = sol.n;

  Report rep("rational-limit");
  rep.set("k", std::to_string(k));
  rep.set("n", std::to_string(n));

  for (int r_value : {1, 0}) {
    const LimitVector lv = homogeneous_limit(sol, r_value);
    const std::string tag = "r" + std::to_string(r_value);
    Integer sum(0);
    for (const auto& e : lv.entries) sum += e;
    rep.add_recorded(tag + "_entries", "exact", int_list(lv.entries));
    rep.add_recorded(tag + "_raw_sign", "exact", lv.sign_flipped ? "-" : "+");
    rep.add_check(tag + "_nonnegative", "exact", lv.all_nonnegative, "");
    if (r_value == 1 && k == 2)
      rep.add_check("r1_sum_is_pascal_determinant", "exact",
                    sum == brauer_degree(n), "sum " + sum.get_str());
    else
      rep.add_recorded(tag + "_sum", "exact", sum.get_str());
  }
  return rep;
}

}  // namespace qkz
