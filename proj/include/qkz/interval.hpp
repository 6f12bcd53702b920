#pragma once

#include <string>

#include "qkz/cyclotomic.hpp"
#include "qkz/rational.hpp"

namespace qkz {

/* Closed rational interval; all enclosure arithmetic is exact, so every
   reported bound is a certificate. */
struct RatInterval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  /* +1 strictly positive, -1 strictly negative, 0 undecided. */
  int sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }
};

RatInterval ri_add(const RatInterval& a, const RatInterval& b);
RatInterval ri_sub(const RatInterval& a, const RatInterval& b);
RatInterval ri_mul(const RatInterval& a, const RatInterval& b);
RatInterval ri_scale(const Rational& c, const RatInterval& a);

struct ComplexInterval {
  RatInterval re, im;
};

/* Enclosure of pi with width below 2^-bits. */
RatInterval pi_enclosure(long bits);

/* Enclosure of the complex value of an element under zeta_M -> e^{2 pi i/M},
   with both component widths below 2^-precision_bits. Escalates internal
   working precision; throws PrecisionExhausted beyond max_bits. */
ComplexInterval embed_numeric(const CycloElem& x, long precision_bits,
                              long max_bits = 4096);

/* Sign of a provably real element: exact zero test first, then interval
   refinement. Throws PositivityUncertified if the element is not real and
   PrecisionExhausted if max_bits cannot separate it from zero. */
int certify_sign(const CycloElem& x, long max_bits = 4096);

/* Decimal rendering of a real element, certified to `digits` places
   (the true value differs from the printed one by less than 10^-digits). */
std::string certified_decimal(const CycloElem& x, int digits,
                              long max_bits = 4096);

}  // namespace qkz
