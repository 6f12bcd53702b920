#include "doctest.h"

#include "qkz/qkzsolver.hpp"

using namespace qkz;

TEST_CASE("exchange operator on a single variable") {
  /* t_1(z_1) = -(q^-1 z_2 - q z_1) */
  PolyL f = PolyL::variable(3, 0);
  PolyL expect(3);
  expect.add_term(Monomial::unit(3, 1), -LaurentQ::q_power(-1));
  expect.add_term(Monomial::unit(3, 0), LaurentQ::q_power(1));
  CHECK(t_operator(f, 1) == expect);
  /* constants are annihilated */
  CHECK(t_operator(PolyL::constant(3, LaurentQ(5)), 1).is_zero());
  CHECK_THROWS_AS(t_operator(f, 2), Error); /* would touch r */
  CHECK(tau_laurent() == -(LaurentQ::q_power(1) + LaurentQ::q_power(-1)));
}

TEST_CASE("closed-form maximal component") {
  CHECK(base_component(2, 1) == PolyL::constant(3, LaurentQ(1)));

  /* (2,2): (q^2 z_1 - z_2)(q^2 r - z_1 z_2)(q^2 z_3 - z_4)(q^4 r - z_3 z_4) */
  const int nv = 5;
  PolyL a(nv), b(nv), c(nv), d(nv);
  a.add_term(Monomial::unit(nv, 0), LaurentQ::q_power(2));
  a.add_term(Monomial::unit(nv, 1), LaurentQ(-1));
  b.add_term(Monomial::unit(nv, 4), LaurentQ::q_power(2));
  b.add_term(Monomial::unit(nv, 0) + Monomial::unit(nv, 1), LaurentQ(-1));
  c.add_term(Monomial::unit(nv, 2), LaurentQ::q_power(2));
  c.add_term(Monomial::unit(nv, 3), LaurentQ(-1));
  d.add_term(Monomial::unit(nv, 4), LaurentQ::q_power(4));
  d.add_term(Monomial::unit(nv, 2) + Monomial::unit(nv, 3), LaurentQ(-1));
  CHECK(base_component(2, 2) == a * b * c * d);

  /* (3,2) specialized to z = 1, r = 1 */
  PolyL base = base_component(3, 2);
  LaurentQ got = base.evaluate(std::vector<LaurentQ>(7, LaurentQ(1)));
  LaurentQ f1 = LaurentQ::q_power(2) - LaurentQ(1);
  LaurentQ f2 = LaurentQ::q_power(2) + LaurentQ(1);
  LaurentQ f3 = LaurentQ::q_power(4) + LaurentQ::q_power(2) + LaurentQ(1);
  CHECK(got == ring_pow(f1, 6) * f2 * f3);
}

TEST_CASE("two-path system solves by one exchange") {
  QkzSolution s = solve(2, 2);
  CHECK(s.basis().size() == 2);
  CHECK(s.s_exponent == 6);
  CHECK(s.component(PathWord::max_rank_path(2, 2)) == base_component(2, 2));
  CHECK(s.component(PathWord::min_rank_path(2, 2)) ==
        t_operator(base_component(2, 2), 2));
  /* the expanded closed form carries negative coefficients, so the
     informational flag is off */
  CHECK(!s.coeffs_nonnegative);
  CHECK_THROWS_AS(s.component(5), Error);
}

TEST_CASE("components are quasi-homogeneous with degree bounds") {
  QkzSolution s = solve(3, 2);
  std::vector<int> weights(s.nvars(), 1);
  weights[s.length()] = 2; /* the reflection parameter counts twice */
  for (const auto& comp : s.components) {
    CHECK(comp.is_quasi_homogeneous(weights, 9));
    CHECK(!comp.has_negative_exponents());
    for (int v = 0; v < s.length(); ++v) CHECK(comp.degree_in(v) <= 2);
  }
}

TEST_CASE("full symbolic verification") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    QkzSolution s = solve(k, n);
    CHECK(verify_exchange(s).all_passed());
    CHECK(verify_boundary(s).all_passed());
    CHECK(verify_wheel(s).all_passed());
    QkzSolution small = solve(k, n - 1);
    CHECK(verify_recursion(s, small).all_passed());
  }
}

TEST_CASE("multipoint verification") {
  QkzSolution s = solve(3, 2);
  VerifyOptions mp;
  mp.multipoint = true;
  mp.seed = 7;
  CHECK(verify_exchange(s, mp).all_passed());
  CHECK(verify_boundary(s, mp).all_passed());
  CHECK(verify_wheel(s, mp).all_passed());
  CHECK(verify_recursion(s, solve(3, 1), mp).all_passed());
  /* the report announces the mode */
  Report r = verify_exchange(s, mp);
  bool saw_mode = false;
  for (const auto& c : r.checks) saw_mode = saw_mode || c.mode == "multipoint";
  CHECK(saw_mode);
}

TEST_CASE("corruption is detected") {
  QkzSolution s = solve(2, 2);
  s.components[0] = s.components[0].scale(LaurentQ::q_power(2));
  CHECK(!verify_exchange(s).all_passed());

  QkzSolution t = solve(2, 2);
  t.s_exponent += 2;
  CHECK(!verify_boundary(t).all_passed());
}

TEST_CASE("prefix specialization") {
  QkzSolution s = solve(3, 2);
  PrefixReduction r0 = specialize_prefix(s, 0);
  CHECK(r0.support.size() == 5);
  CHECK(r0.components[4] == s.components[4]);

  PrefixReduction r1 = specialize_prefix(s, 1);
  CHECK(r1.support.size() == 5); /* every word starts with 1 */
  std::vector<int> vmap(7);
  vmap[0] = 0;
  for (int v = 1; v < 7; ++v) vmap[v] = v - 1;
  PolyL direct = s.components[0].partial_eval(0, LaurentQ()).embed(6, vmap);
  CHECK(r1.components[0] == direct);

  PrefixReduction r2 = specialize_prefix(s, 2);
  CHECK(r2.support.size() == 3);
  for (const auto& p : r2.support.paths) {
    CHECK(p.step(1) == 1);
    CHECK(p.step(2) == 2);
  }
}

TEST_CASE("size cap and unsupported shapes") {
  CHECK_THROWS_AS(solve(4, 4), Error);
  try {
    solve(3, 3);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_parameters);
  }
}
