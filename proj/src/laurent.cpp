#include "qkz/laurent.hpp"

#include <sstream>

namespace qkz {

Rational LaurentQ::as_rational() const {
  require(is_rational(), errc::non_integer_coefficient,
          "Laurent polynomial is not a constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int LaurentQ::min_exp() const {
  require(!terms_.empty(), errc::degenerate_input, "min_exp of zero");
  return terms_.begin()->first;
}

int LaurentQ::max_exp() const {
  require(!terms_.empty(), errc::degenerate_input, "max_exp of zero");
  return terms_.rbegin()->first;
}

Rational LaurentQ::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentQ::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!rat_is_integer(c)) return false;
  return true;
}

void LaurentQ::add_term(int exp, const Rational& c) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ out = *this;
  out += o;
  return out;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
  LaurentQ out = *this;
  out -= o;
  return out;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  *this = *this * o;
  return *this;
}

LaurentQ LaurentQ::divide_exact(const LaurentQ& divisor) const {
  require(!divisor.is_zero(), errc::degenerate_input, "division by zero");
  if (is_zero()) return LaurentQ();
  /* Monomials are units here, so shift both operands down to ordinary
     polynomials with nonzero constant term; exactness is preserved. */
  const int shift = min_exp() - divisor.min_exp();
  const int dmin = divisor.min_exp();
  const int dtop = divisor.max_exp() - dmin;
  const Rational dlead = divisor.terms().rbegin()->second;
  LaurentQ rem;
  for (const auto& [e, c] : terms_) rem.set_term(e - min_exp(), c);
  LaurentQ quot;
  while (!rem.is_zero() && rem.max_exp() >= dtop) {
    const int qexp = rem.max_exp() - dtop;
    const Rational qc = rem.terms().rbegin()->second / dlead;
    quot.add_term(qexp, qc);
    for (const auto& [e, c] : divisor.terms())
      rem.add_term(e - dmin + qexp, -qc * c);
  }
  if (!rem.is_zero())
    fail(errc::inexact_division, "remainder " + rem.to_string() + " dividing " +
                                     to_string() + " by " + divisor.to_string());
  LaurentQ out;
  for (const auto& [e, c] : quot.terms()) out.set_term(e + shift, c);
  return out;
}

Rational LaurentQ::eval_at(const Rational& q_value) const {
  if (terms_.empty()) return Rational(0);
  require(q_value != 0 || min_exp() >= 0, errc::degenerate_input,
          "negative q power at q = 0");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    const int a = e >= 0 ? e : -e;
    for (int i = 0; i < a; ++i) p *= q_value;
    if (e < 0) p = 1 / p;
    acc += c * p;
  }
  return acc;
}

LaurentQ LaurentQ::invert_q() const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.set_term(-e, c);
  return out;
}

std::string LaurentQ::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    const Rational a = (first || c > 0) ? c : Rational(-c);
    first = false;
    const bool unit_coeff = (a == 1 && e != 0);
    if (!unit_coeff) {
      os << a.get_num().get_str();
      if (a.get_den() != 1) os << "/" << a.get_den().get_str();
      if (e != 0) os << "*";
    }
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qkz
