#include "doctest.h"

#include "qkz/pointgen.hpp"
#include "qkz/sumrules.hpp"

using namespace qkz;

TEST_CASE("combinatorial point") {
  CHECK(cyclotomic_order(2) == 12);
  CHECK(cyclotomic_order(3) == 8);
  CHECK(cyclotomic_order(4) == 20);
  CHECK(cyclotomic_order(5) == 12);
  CHECK(tau_value(1) == CycloElem(0));
  CHECK(tau_value(2) == CycloElem(1));
  CHECK(tau_value(3) == CycloElem::zeta(8, 1) - CycloElem::zeta(8, 3));
  for (int k = 1; k <= 5; ++k) {
    CycloElem q = q_value(k);
    CHECK(ring_pow(q, 2 * (k + 1)) == CycloElem(1));
    CHECK(ring_pow(q, k + 1) == CycloElem(k % 2 == 0 ? 1 : -1));
    CHECK(tau_value(k) == -(q + q.inverse()));
  }
}

TEST_CASE("positive eigenvector of the generators") {
  Covector v32 = covector(build(3, 2));
  REQUIRE(v32.entries.size() == 5);
  CycloElem rt2 = CycloElem::zeta(8, 1) - CycloElem::zeta(8, 3);
  CHECK(v32.entries[0] == CycloElem(1));
  CHECK(v32.entries[1] == rt2);
  CHECK(v32.entries[2] == CycloElem(1));
  CHECK(v32.entries[3] == CycloElem(1));
  CHECK(v32.entries[4] == rt2);

  Covector v23 = covector(build(2, 3));
  for (const auto& e : v23.entries) CHECK(e == CycloElem(1));

  Covector v13 = covector(build(1, 3));
  REQUIRE(v13.entries.size() == 1);
  CHECK(v13.entries[0] == CycloElem(1));

  /* eigen property against the actual matrices */
  ReprMatrices rep = build(3, 2);
  CycloElem tau = tau_value(3);
  for (int i = 1; i <= 5; ++i) {
    Matrix<CycloElem> m = generator_matrix(rep, i, tau);
    for (int col = 0; col < 5; ++col) {
      CycloElem acc;
      for (int row = 0; row < 5; ++row)
        acc = acc + v32.entries[row] * m.at(row, col);
      CHECK(acc == tau * v32.entries[col]);
    }
  }
}

TEST_CASE("schur functions") {
  using P = PolyQ;
  /* s_(2,1)(z0,z1) = z0^2 z1 + z0 z1^2; s_(1,1) = z0 z1 */
  P z0 = P::variable(2, 0), z1 = P::variable(2, 1);
  CHECK(schur_poly({2, 1}, 2) == z0 * z0 * z1 + z0 * z1 * z1);
  CHECK(schur_poly({1, 1}, 2) == z0 * z1);
  CHECK(schur_poly({}, 3) == P::constant(3, Rational(1)));

  PointGen gen(31);
  for (int rep = 0; rep < 5; ++rep) {
    auto pt = gen.sample(4);
    Rational a = schur_bialternant({3, 1, 1}, pt.z);
    Rational b = schur_jacobi_trudi({3, 1, 1}, pt.z);
    CHECK(a == b);
  }
  std::vector<Rational> eq = {Rational(2), Rational(2), Rational(3)};
  CHECK_THROWS_AS(schur_bialternant({2, 1}, eq), Error);
  /* dispatcher falls back to the determinant in complete homogeneous
     functions, which agrees with the limit */
  CHECK(schur({2, 1}, eq) == schur_jacobi_trudi({2, 1}, eq));
  CHECK(schur({2, 1}, std::vector<Rational>{Rational(2), Rational(3)}) ==
        schur_bialternant({2, 1}, std::vector<Rational>{Rational(2), Rational(3)}));

  /* staircase diagram underlying the sum rule */
  CHECK(sum_rule_diagram(3, 2) == std::vector<int>{1, 1, 1, 0, 0, 0});
  CHECK(sum_rule_diagram(2, 3) == std::vector<int>{2, 2, 1, 1, 0, 0});
}

TEST_CASE("symplectic character degenerates loudly") {
  std::vector<Rational> z = {Rational(2), Rational(3)};
  CHECK_THROWS_AS(symplectic_schur({1, 0}, z, Rational(6)), Error);
  std::vector<Rational> withzero = {Rational(0), Rational(3)};
  CHECK_THROWS_AS(symplectic_schur({1, 0}, withzero, Rational(5)), Error);
  CHECK_THROWS_AS(symplectic_schur({1, 0, 0}, z, Rational(5)), Error);
}

static QkzSolution& sol32() {
  static QkzSolution s = solve(3, 2);
  return s;
}

TEST_CASE("sum rule polynomial values") {
  SumRulePoly s32 = sum_rule(sol32());
  auto co = homogeneous_r_coefficients(s32);
  REQUIRE(co.size() == 4);
  CHECK(co[0] == 20);
  CHECK(co[1] == 84);
  CHECK(co[2] == 84);
  CHECK(co[3] == 20);
  CHECK(verify_sum_rule_values(s32).all_passed());
  CHECK(check_symplectic_agreement(s32, 12345).all_passed());

  SumRulePoly s22 = sum_rule(solve(2, 2));
  auto co22 = homogeneous_r_coefficients(s22);
  CHECK(co22 == std::vector<Rational>{Rational(6), Rational(15), Rational(6)});
  CHECK(verify_sum_rule_values(s22).all_passed());
  CHECK(check_symplectic_agreement(s22, 777).all_passed());
  CHECK(check_ik_agreement(s22, 777).all_passed());

  SumRulePoly s23 = sum_rule(solve(2, 3));
  CHECK(verify_sum_rule_values(s23).all_passed());
  CHECK(check_symplectic_agreement(s23, 999).all_passed());
  CHECK(check_ik_agreement(s23, 999).all_passed());

  /* n = 1 edge: the polynomial is the constant 1 */
  SumRulePoly s21 = sum_rule(solve(2, 1));
  CHECK(s21.poly == PolyQ::constant(3, Rational(1)));
  CHECK(ik_determinant({Rational(2), make_rational(5, 7)}, Rational(3)) == 1);
}

TEST_CASE("pfaffian identity for the determinant formula") {
  PointGen gen(4242);
  for (int sz : {4, 6, 8}) {
    auto pt = gen.sample(sz);
    CHECK(ik_pfaffian_check(pt.z, pt.r).all_passed());
  }
}

TEST_CASE("counting formulas") {
  CHECK(asm_number(2, 1) == 1);
  CHECK(asm_number(2, 2) == 2);
  CHECK(asm_number(2, 3) == 7);
  CHECK(asm_number(2, 4) == 42);
  CHECK(asm_number(2, 5) == 429);
  CHECK(asm_number(1, 4) == 1);
  CHECK(asm_number(3, 2) == 5);
  CHECK(vsasm_number(2, 3) == 26);
  CHECK(vsasm_number(2, 4) == 646);
  CHECK(vsasm_number(2, 5) == 45885);
  CHECK(vsasm_number(3, 2) == 13);
  auto n2 = n2_closed_forms(6);
  CHECK(n2.vsasm2 == 2530);
  CHECK(n2.coeffs.size() == 7);
  auto n23 = n2_closed_forms(3);
  CHECK(n23.coeffs == std::vector<Integer>{20, 84, 84, 20});
  CHECK(n23.vsasm2 == 13);
}

TEST_CASE("homogeneous specialization vector") {
  WVector w = w_vector(sol32());
  REQUIRE(w.entries.size() == 5);
  const int M = cyclotomic_order(3);
  CycloElem iu = CycloElem::zeta(M, M / 4);
  auto expect = [&](int idx, const CycloElem& c1, const CycloElem& c2) {
    const auto& e = w.entries[idx];
    return e.size() == 4 && e[0] == CycloElem(4) && e[1] == CycloElem(4) * c1 &&
           e[2] == CycloElem(4) * c2 && e[3] == CycloElem(4);
  };
  CHECK(expect(0, CycloElem(9), CycloElem(9)));
  CHECK(expect(1, CycloElem(7), CycloElem(7)));
  CHECK(expect(2, CycloElem(2) + iu, CycloElem(2) - iu));
  CHECK(expect(3, CycloElem(2) - iu, CycloElem(2) + iu));
  CHECK(expect(4, CycloElem(1), CycloElem(1)));
}

TEST_CASE("stationary measure") {
  Stationary st = stationary_probabilities(sol32());
  REQUIRE(st.probabilities.size() == 5);
  CHECK(st.all_rational);
  CHECK(st.probabilities[0] == CycloElem(make_rational(5, 13)));
  CHECK(st.probabilities[1] == CycloElem(make_rational(4, 13)));
  CHECK(st.probabilities[2] == CycloElem(make_rational(3, 26)));
  CHECK(st.probabilities[3] == CycloElem(make_rational(3, 26)));
  CHECK(st.probabilities[4] == CycloElem(make_rational(1, 13)));
  CHECK(st.decimals[0].substr(0, 8) == "0.384615");
  CycloElem total;
  for (const auto& p : st.probabilities) total = total + p;
  CHECK(total == CycloElem(1));
}

TEST_CASE("ascent observable against its closed form") {
  for (int k = 2; k <= 5; ++k) {
    ConjectureVerdict v = convex_transition_probability(k);
    Rational cf = make_rational((k - 1) * (13 * k + 4),
                                2 * (2 * k - 1) * (4 * k + 1));
    CHECK(v.closed_form == cf);
    CHECK(v.matches);
  }
  CHECK(convex_transition_probability(3).closed_form == make_rational(43, 65));
  CHECK_THROWS_AS(convex_transition_probability(1), Error);
}

TEST_CASE("fourteen-path specialization keeps positivity, loses integrality") {
  QkzSolution sol42 = solve(4, 2);
  Stationary st = stationary_probabilities(sol42);
  CHECK(st.probabilities.size() == 14);
  CHECK(!st.all_rational);

  WVector w = w_vector(sol42);
  CycloElem total;
  bool nonint = false;
  for (const auto& e : w.entries)
    for (const auto& c : e) {
      total = total + c;
      if (!(c.is_rational() && rat_is_integer(c.as_rational()))) nonint = true;
    }
  CHECK(total == CycloElem(25 * 68));
  CHECK(nonint);
}
