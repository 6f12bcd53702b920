#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkz/cyclotomic.hpp"
#include "qkz/interval.hpp"
#include "qkz/matrix.hpp"
#include "qkz/qkzsolver.hpp"

namespace qkz {

using PolyC = MultiPoly<CycloElem>;
using PolyQ = MultiPoly<Rational>;

/* Smallest cyclotomic order containing both i and q = -exp(i pi/(k+1)),
   i.e. lcm(4, 2k+2). */
int cyclotomic_order(int k);
CycloElem q_value(int k);
/* 2 cos(pi/(k+1)) = -(q + 1/q), the loop weight at the combinatorial point. */
CycloElem tau_value(int k);

/* Left tau-eigenvector of every generator matrix: v e_i = tau v for all i,
   normalized to 1 on the minimal path and certified entrywise positive. */
struct Covector {
  int k = 0, n = 0;
  std::vector<CycloElem> entries; /* canonical basis order */
};

Covector covector(const ReprMatrices& rep);

/* Row lengths n-1 - floor((i-1)/k) for i = 1..kn: k rows each of n-1, n-2,
   ..., 1 boxes, padded with k empty rows. */
std::vector<int> sum_rule_diagram(int k, int n);

namespace detail {

/* rows validated (weakly decreasing, nonnegative) and zero-padded to nn. */
std::vector<int> padded_rows(const std::vector<int>& rows, int nn);

template <class R>
Matrix<R> power_alternant(const std::vector<int>& expo,
                          const std::vector<R>& z) {
  const int nn = static_cast<int>(z.size());
  Matrix<R> m(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) m.at(i, j) = ring_pow(z[i], expo[j]);
  return m;
}

/* h_0..h_maxdeg of the given values, by the one-variable-at-a-time
   prefix recurrence. */
template <class R>
std::vector<R> complete_homogeneous(const std::vector<R>& z, int maxdeg) {
  std::vector<R> h(maxdeg + 1);
  h[0] = ring_one(R());
  for (const R& zv : z)
    for (int m = 1; m <= maxdeg; ++m) h[m] = h[m] + zv * h[m - 1];
  return h;
}

}  // namespace detail

/* Schur value as the ratio of power alternants; requires pairwise distinct
   values. */
template <class R>
R schur_bialternant(const std::vector<int>& rows, const std::vector<R>& z) {
  const int nn = static_cast<int>(z.size());
  const std::vector<int> lam = detail::padded_rows(rows, nn);
  std::vector<int> num(nn), den(nn);
  for (int j = 0; j < nn; ++j) {
    num[j] = lam[j] + nn - 1 - j;
    den[j] = nn - 1 - j;
  }
  R d = determinant(detail::power_alternant(den, z));
  require(!ring_is_zero(d), errc::degenerate_alternant, "coinciding values");
  return ring_exact_div(determinant(detail::power_alternant(num, z)), d);
}

/* Schur value as the determinant of complete homogeneous functions; no
   distinctness requirement. */
template <class R>
R schur_jacobi_trudi(const std::vector<int>& rows, const std::vector<R>& z) {
  std::vector<int> lam =
      detail::padded_rows(rows, static_cast<int>(rows.size()));
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (lam.empty()) return ring_one(R());
  const int l = static_cast<int>(lam.size());
  auto h = detail::complete_homogeneous(z, lam[0] + l);
  Matrix<R> m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int d = lam[i] - i + j;
      if (d >= 0) m.at(i, j) = h[d];
    }
  return determinant(m);
}

template <class R>
R schur(const std::vector<int>& rows, const std::vector<R>& z) {
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j]) return schur_jacobi_trudi(rows, z);
  return schur_bialternant(rows, z);
}

/* Schur polynomial in nn symbolic variables (bialternant with the
   Vandermonde divided out factor by factor). */
PolyQ schur_poly(const std::vector<int>& rows, int nn);

/* Reflected character ratio with the extra parameter: prefactor
   (z_1...z_nn)^{rows[0]} times
   det(z_i^{l_j' + j} - (r/z_i)^{l_j' + j}) / det(z_i^j - (r/z_i)^j)
   where l_j' runs over the rows in reverse. The prefactor exponent makes the
   constant r-coefficient equal (z_1...z_nn)^{rows[0]} s_rows, matching the
   sum rule below for the staircase diagram. */
template <class R>
R symplectic_schur(const std::vector<int>& rows, const std::vector<R>& z,
                   const R& r) {
  const int nn = static_cast<int>(z.size());
  require(static_cast<int>(rows.size()) == nn, errc::shape_mismatch,
          "one row length per variable");
  const std::vector<int> lam = detail::padded_rows(rows, nn);
  Matrix<R> num(nn, nn), den(nn, nn);
  for (int i = 0; i < nn; ++i) {
    require(!ring_is_zero(z[i]), errc::degenerate_alternant, "zero value");
    const R rz = r * ring_inverse(z[i]);
    for (int j = 0; j < nn; ++j) {
      const int mj = lam[nn - 1 - j] + j + 1;
      num.at(i, j) = ring_pow(z[i], mj) - ring_pow(rz, mj);
      den.at(i, j) = ring_pow(z[i], j + 1) - ring_pow(rz, j + 1);
    }
  }
  R d = determinant(den);
  require(!ring_is_zero(d), errc::degenerate_alternant,
          "coinciding or reflected values");
  R out = ring_exact_div(determinant(num), d);
  for (int i = 0; i < nn; ++i) out = out * ring_pow(z[i], lam[0]);
  return out;
}

struct SumRulePoly {
  int k = 0, n = 0;
  PolyQ poly; /* z_1..z_N then r; nonnegative integer coefficients */
};

/* (-i/q)^{kn(n-1)/2} v.Psi at q = -exp(i pi/(k+1)). Asserts on construction:
   rational integer coefficients (NonIntegerCoefficient otherwise), all of
   them nonnegative, full symmetry in the z's, degree 2(n-1) in each z and
   kn(n-1)/2 in r, quasi-homogeneity of weight 3kn(n-1)/2, and covariance
   with factor (r/z_j^2)^{n-1} under z_j -> r/z_j for every j. */
SumRulePoly sum_rule(const QkzSolution& sol);

/* Coefficients of the r polynomial at z_1 = ... = z_N = 1, degree order. */
std::vector<Rational> homogeneous_r_coefficients(const SumRulePoly& s);

/* Product formulas for the generalized alternating-sign-matrix counts and
   their vertically symmetric counterparts. */
Integer asm_number(int k, int n);
Integer vsasm_number(int k, int n);

/* Closed form of the homogeneous n = 2 sum rule: coefficient of r^m is
   (k+1)/(2k+1) C(2k+1, m) C(2k+1, k-m), together with the resulting
   vertically symmetric count 2(4k+1)!/((3k+2)!(k+1)!). */
struct N2Values {
  std::vector<Integer> coeffs;
  Integer vsasm2;
};
N2Values n2_closed_forms(int k);

/* Determinant formula for the k = 2 sum rule at a rational point (the
   prefactor already includes the normalization, so the value matches the
   sum rule polynomial directly). */
Rational ik_determinant(const std::vector<Rational>& z, const Rational& r);

/* Squared-value identity at one point: ik_determinant^2 equals the pair
   product prefactor times the Pfaffian of the reflected-weight kernel. */
Report ik_pfaffian_check(const std::vector<Rational>& z, const Rational& r);

/* Entries w_pi = (-i/q)^{kn(n-1)/2} v_pi Psi_pi(1,...,1|r) as polynomials in
   r over the cyclotomic field. */
struct WVector {
  int k = 0, n = 0;
  std::vector<std::vector<CycloElem>> entries; /* [basis index][r power] */
};
WVector w_vector(const QkzSolution& sol);

/* Invariant measure P(pi) = v_pi Psi_pi / (v.Psi) at z = 1, r = 1. Entries
   are exact, certified positive, and sum to 1; they are rational for some
   families only, which is reported rather than required. */
struct Stationary {
  int k = 0, n = 0;
  std::vector<CycloElem> probabilities;
  std::vector<std::string> decimals; /* certified to 12 places */
  bool all_rational = false;
};
Stationary stationary_probabilities(const QkzSolution& sol);

/* Expected fraction of ascents under the stationary measure of the n = 2
   growth process, against the closed form (k-1)(13k+4)/(2(2k-1)(4k+1)).
   The closed form is conjectural, so a mismatch is a verdict, not an
   error. */
struct ConjectureVerdict {
  int k = 0;
  CycloElem observable;
  Rational closed_form;
  bool matches = false;
  std::string observable_decimal;
};
ConjectureVerdict convex_transition_probability(int k, int kn_cap = 14);

/* Homogeneous value checks: reciprocity, the r = 0 and r = 1 product-formula
   values, the top/constant r slices against the Schur polynomial, and the
   n = 2 closed form where applicable. */
Report verify_sum_rule_values(const SumRulePoly& s);

/* Multipoint agreement of the sum rule polynomial with the character ratio
   (any k) and with the determinant formula (k = 2). */
Report check_symplectic_agreement(const SumRulePoly& s, std::uint64_t seed,
                                  int points = 20);
Report check_ik_agreement(const SumRulePoly& s, std::uint64_t seed,
                          int points = 20);

}  // namespace qkz
