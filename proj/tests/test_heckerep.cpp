#include "doctest.h"

#include "qkz/heckerep.hpp"
#include "qkz/multipoly.hpp"

#include <string>
#include <vector>

using namespace qkz;

/* 0/1/T pattern, rows separated by '/'. */
static Matrix<Rational> from_pattern(const std::string& pat,
                                     const Rational& tau) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : pat) {
    if (c == '/') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) rows.push_back(cur);
  Matrix<Rational> m(static_cast<int>(rows.size()),
                     static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      char c = rows[i][j];
      m.at(i, j) = c == 'T' ? tau : Rational(c - '0');
    }
  return m;
}

/* Fixed point of every regression below: the five generators on the
   basis 123123, 121323, 112323, 121233, 112233 (rows act on targets). */
static const char* kGen32[5] = {
    "T0001/0T100/00000/000T1/00000",
    "T1000/00000/01T00/00000/0001T",
    "00000/1T000/00T01/000T1/00000",
    "T1000/00000/00000/010T0/0010T",
    "T0001/0T010/00T01/00000/00000",
};

TEST_CASE("generator matrices on the five-dimensional space") {
  ReprMatrices rep = build(3, 2);
  REQUIRE(rep.basis.size() == 5);
  for (const Rational& tau : {Rational(2), make_rational(-3, 5)})
    for (int i = 1; i <= 5; ++i)
      CHECK(generator_matrix(rep, i, tau) == from_pattern(kGen32[i - 1], tau));
  CHECK(rep.generators() == 5);
  CHECK(rep.length() == 6);
  CHECK_THROWS_AS(rep.pairs(0), Error);
  CHECK_THROWS_AS(rep.pairs(6), Error);
}

TEST_CASE("defining relations hold symbolically") {
  using P = MultiPoly<Rational>;
  ReprMatrices rep = build(3, 2);
  P tau = P::variable(1, 0);
  std::vector<Matrix<P>> e;
  for (int i = 1; i <= 5; ++i) e.push_back(generator_matrix(rep, i, tau));
  for (int i = 0; i < 5; ++i) CHECK(e[i] * e[i] == e[i].scale(tau));
  for (int i = 0; i + 1 < 5; ++i) {
    CHECK(e[i] * e[i + 1] * e[i] - e[i] ==
          e[i + 1] * e[i] * e[i + 1] - e[i + 1]);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 2; j < 5; ++j) CHECK(e[i] * e[j] == e[j] * e[i]);
}

TEST_CASE("verification sweeps") {
  const std::vector<Rational> taus = {Rational(3), make_rational(5, 2)};
  for (auto [k, n] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}, {5, 2}}) {
    ReprMatrices rep = build(k, n);
    CHECK(Integer(rep.basis.size()) == count_paths(k, n));
    CHECK(verify_hecke(rep, taus).all_passed());
    CHECK(verify_quotient(rep, taus).all_passed());
    CHECK(verify_p_properties(rep).all_passed());
    CHECK(verify_duality(rep, build(n, k)).all_passed());
  }
}

TEST_CASE("one-dimensional families") {
  ReprMatrices r1 = build(1, 4);
  CHECK(r1.basis.size() == 1);
  CHECK(verify_hecke(r1, {Rational(3)}).all_passed());
  ReprMatrices r2 = build(4, 1);
  CHECK(r2.basis.size() == 1);
  CHECK(verify_hecke(r2, {Rational(3)}).all_passed());
}

TEST_CASE("unsupported family is rejected") {
  CHECK_THROWS_AS(build(3, 3), Error);
  try {
    build(3, 3);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_parameters);
  }
}

TEST_CASE("a dropped action pair is detected") {
  ReprMatrices rep = build(3, 2);
  REQUIRE(!rep.c_tensor[0].empty());
  rep.c_tensor[0].pop_back();
  bool ok = verify_hecke(rep, {Rational(3)}).all_passed() &&
            verify_quotient(rep, {Rational(3)}).all_passed() &&
            verify_p_properties(rep).all_passed();
  CHECK(!ok);
}

TEST_CASE("chebyshev ladder and symmetrizers") {
  ChebyshevU<Rational> u(Rational(3));
  CHECK(u.at(0) == 1);
  CHECK(u.at(1) == 3);
  CHECK(u.at(2) == 8);
  CHECK(u.at(3) == 21);
  CHECK_THROWS_AS(u.at(-1), Error);

  ReprMatrices rep = build(3, 2);
  std::vector<Matrix<Rational>> e;
  for (int i = 1; i <= 5; ++i)
    e.push_back(generator_matrix(rep, i, Rational(3)));
  /* the order-2 symmetrizer does not vanish here; only order k+1 = 4 does */
  auto [num2, den2] = young_symmetrizer(e, 0, 2, Rational(3));
  CHECK(!num2.is_zero());
  CHECK(den2 == 3);
  auto [num4, den4] = young_symmetrizer(e, 0, 4, Rational(3));
  CHECK(num4.is_zero());
  CHECK_THROWS_AS(young_symmetrizer(e, 3, 4, Rational(3)), Error);
}
