#pragma once

#include <vector>

#include "qkz/laurent.hpp"
#include "qkz/rational.hpp"

namespace qkz {

/* Coefficients of the M-th cyclotomic polynomial (monic, integer, dense,
   ascending). Cached per order. */
const std::vector<Integer>& cyclotomic_polynomial(int order);

/* Element of the cyclotomic field Q(zeta_M) in the power basis
   1, zeta, ..., zeta^{phi(M)-1}. Elements of different orders promote to the
   lcm order when combined; plain rationals live at order 1. */
class CycloElem {
public:
  CycloElem() : order_(1), coords_(1, Rational(0)) {}
  CycloElem(const Rational& r) : order_(1), coords_(1, r) {}
  CycloElem(long v) : order_(1), coords_(1, Rational(v)) {}

  static CycloElem zeta(int order, long power = 1);
  static CycloElem from_coords(int order, std::vector<Rational> coords);

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;

  CycloElem promoted(int order) const;  // order_ must divide order

  CycloElem operator+(const CycloElem& o) const;
  CycloElem operator-(const CycloElem& o) const;
  CycloElem operator*(const CycloElem& o) const;
  CycloElem operator-() const;
  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  CycloElem inverse() const;
  CycloElem conj() const;  // complex conjugation, zeta -> zeta^{-1}
  bool is_real() const { return *this == conj(); }

  std::string to_string() const;

private:
  int order_;
  std::vector<Rational> coords_;
};

/* Evaluate a Laurent polynomial in q at q = zeta_order^power. */
CycloElem cyclo_eval_laurent(const LaurentQ& l, int order, long power);

inline bool ring_is_zero(const CycloElem& x) { return x.is_zero(); }
inline CycloElem ring_one(const CycloElem&) { return CycloElem(1); }
inline CycloElem ring_exact_div(const CycloElem& a, const CycloElem& b) {
  return a * b.inverse();
}
inline CycloElem ring_inverse(const CycloElem& x) { return x.inverse(); }
inline std::string ring_to_string(const CycloElem& x) { return x.to_string(); }

}  // namespace qkz
