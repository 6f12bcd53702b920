#pragma once

#include <map>
#include <string>

#include "qkz/rational.hpp"

namespace qkz {

/* Univariate Laurent polynomials in the quantum parameter q, with rational
   coefficients. Zero coefficients are never stored. */
class LaurentQ {
public:
  LaurentQ() = default;
  LaurentQ(const Rational& c) { set_term(0, c); }
  LaurentQ(long c) { set_term(0, Rational(c)); }

  static LaurentQ q_power(int exp, const Rational& c = Rational(1)) {
    LaurentQ out;
    out.set_term(exp, c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Rational as_rational() const;

  int min_exp() const;
  int max_exp() const;
  Rational coeff(int exp) const;
  const std::map<int, Rational>& terms() const { return terms_; }

  /* All coefficients integral (denominator 1). */
  bool has_integer_coeffs() const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator-(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  LaurentQ& operator*=(const LaurentQ& o);
  bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentQ& o) const { return !(*this == o); }

  /* Exact division in the Laurent ring; throws InexactDivision otherwise. */
  LaurentQ divide_exact(const LaurentQ& divisor) const;

  Rational eval_at(const Rational& q_value) const;

  /* Substitute q -> q^-1 (used by symmetry diagnostics). */
  LaurentQ invert_q() const;

  std::string to_string(const std::string& var = "q") const;

  void set_term(int exp, const Rational& c) {
    if (c == 0)
      terms_.erase(exp);
    else
      terms_[exp] = c;
  }
  void add_term(int exp, const Rational& c);

private:
  std::map<int, Rational> terms_;
};

inline LaurentQ operator*(const Rational& c, const LaurentQ& l) {
  return LaurentQ(c) * l;
}

}  // namespace qkz
