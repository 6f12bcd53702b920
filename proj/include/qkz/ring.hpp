#pragma once

#include "qkz/laurent.hpp"
#include "qkz/rational.hpp"

namespace qkz {

/* Uniform coefficient-ring interface used by the generic polynomial and
   matrix code. Additional rings (cyclotomic elements, nested polynomials)
   provide their own overloads; calls resolve through ADL. */

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const LaurentQ& x) { return x.is_zero(); }

inline Rational ring_one(const Rational&) { return Rational(1); }
inline LaurentQ ring_one(const LaurentQ&) { return LaurentQ(1); }

inline Rational ring_exact_div(const Rational& a, const Rational& b) {
  require(b != 0, errc::degenerate_input, "division by zero");
  return a / b;
}
inline LaurentQ ring_exact_div(const LaurentQ& a, const LaurentQ& b) {
  return a.divide_exact(b);
}

inline Rational ring_inverse(const Rational& x) {
  require(x != 0, errc::degenerate_input, "inverse of zero");
  return 1 / x;
}
inline LaurentQ ring_inverse(const LaurentQ& x) {
  require(!x.is_zero(), errc::degenerate_input, "inverse of zero");
  require(x.terms().size() == 1, errc::inexact_division,
          "Laurent element is not a unit: " + x.to_string());
  const auto& [e, c] = *x.terms().begin();
  return LaurentQ::q_power(-e, 1 / c);
}

inline std::string ring_to_string(const Rational& x) { return rat_to_string(x); }
inline std::string ring_to_string(const LaurentQ& x) { return x.to_string(); }

template <class R>
R ring_pow(const R& x, long e) {
  if (e < 0) return ring_pow(ring_inverse(x), -e);
  R acc = ring_one(x);
  R base = x;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace qkz
