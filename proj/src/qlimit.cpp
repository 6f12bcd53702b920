#include "qkz/qlimit.hpp"

#include "qkz/error.hpp"

namespace qkz {

Rational q_limit(const LaurentQ& l, long d) {
  require(d >= 0, errc::index_out_of_range, "q_limit: negative order");
  if (l.is_zero()) return Rational(0);

  /* Clear negative powers: L = q^m P with P a polynomial. At q = -1 the
     discarded unit contributes (-1)^m. */
  LaurentQ p = l;
  long sign = 1;
  int m = l.min_exp();
  if (m < 0) {
    p = p * LaurentQ::q_power(-m);
    if (m & 1) sign = -sign;
  }

  if (d > 0) {
    LaurentQ q_plus_1;
    q_plus_1.set_term(1, Rational(1));
    q_plus_1.set_term(0, Rational(1));
    LaurentQ divisor(Rational(1));
    for (long i = 0; i < d; ++i) divisor = divisor * q_plus_1;
    try {
      p = p.divide_exact(divisor);
    } catch (const Error& e) {
      if (e.code() == errc::inexact_division)
        fail(errc::insufficient_vanishing,
             "q_limit: numerator does not vanish to order " +
                 std::to_string(d) + " at q = -1");
      throw;
    }
  }

  Rational value = p.eval_at(Rational(-1));
  if (sign < 0) value = -value;

  /* Remaining factor (q - 1)^d evaluates to (-2)^d. */
  Rational denom(1);
  for (long i = 0; i < d; ++i) denom *= Rational(-2);
  return make_rational(value.get_num() * denom.get_den(),
                       value.get_den() * denom.get_num());
}

}  // namespace qkz
