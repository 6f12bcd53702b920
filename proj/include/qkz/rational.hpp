#pragma once

#include <gmpxx.h>

#include <string>

#include "qkz/error.hpp"

namespace qkz {

/* Exact arithmetic scalars. Rationals are kept canonical (reduced, positive
   denominator); GMP guarantees this for results of arithmetic, but raw
   two-argument construction does not reduce, hence the helper below. */
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  require(den != 0, errc::degenerate_input, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, errc::degenerate_input, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rational& r) {
  return r.get_den() == 1;
}

/* Canonical text form "p/q", denominator always present. */
inline std::string rat_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
  Rational r;
  auto slash = s.find('/');
  int rc;
  if (slash == std::string::npos) {
    rc = mpq_set_str(r.get_mpq_t(), (s + "/1").c_str(), 10);
  } else {
    rc = mpq_set_str(r.get_mpq_t(), s.c_str(), 10);
  }
  require(rc == 0 && s.find('.') == std::string::npos, errc::invalid_word,
          "unparsable rational '" + s + "'");
  require(mpz_sgn(mpq_denref(r.get_mpq_t())) != 0, errc::degenerate_input,
          "rational with zero denominator");
  r.canonicalize();
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
  return b;
}

}  // namespace qkz
