#include "qkz/interval.hpp"

#include <algorithm>
#include <sstream>

namespace qkz {

RatInterval ri_add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval ri_sub(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval ri_mul(const RatInterval& a, const RatInterval& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
                 p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval ri_scale(const Rational& c, const RatInterval& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

namespace {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpz_ui_pow_ui(r.get_num().get_mpz_t(), 2, static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(r.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-e));
  }
  return r;
}

/* Alternating series for arctan(1/x), truncated so both bounds are exact. */
RatInterval atan_inv(long x, long terms) {
  Rational lo(0), hi(0), acc(0);
  Rational xs = Rational(1) / Rational(x);
  const Rational x2 = Rational(1) / Rational(Integer(x) * Integer(x));
  Rational power = xs;
  bool add = true;
  for (long i = 0; i < terms; ++i) {
    Rational term = power / Rational(2 * i + 1);
    if (add)
      acc += term;
    else
      acc -= term;
    power *= x2;
    add = !add;
  }
  /* Next-term bound in either direction. */
  Rational next = power / Rational(2 * terms + 1);
  return {acc - next, acc + next};
}

/* Round a rational to denominator 2^bits, keeping an exact error bound. */
Rational round_dyadic(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  return Rational(n) * pow2(-bits);
}

struct TrigEnclosure {
  RatInterval cos, sin;
};

/* Taylor enclosures of cos and sin at a point interval. The remainder uses
   the derivative bound 1, the interval half-width enters through the same
   Lipschitz bound. */
TrigEnclosure trig_enclosure(const RatInterval& x, long bits) {
  const Rational mid_exact = (x.lo + x.hi) / 2;
  const Rational m = round_dyadic(mid_exact, bits + 16);
  const Rational dist =
      std::max(x.hi - m, m - x.lo);  /* >= |t - m| for all t in x */
  const Rational m2 = m * m;
  const Rational eps = pow2(-(bits + 16));

  Rational cos_sum(0), sin_sum(0);
  Rational term(1); /* m^(2i)/(2i)! */
  long i = 0;
  Rational bound;
  while (true) {
    cos_sum += (i % 2 == 0) ? term : -term;
    Rational odd_term = term * m / Rational(2 * i + 1); /* m^(2i+1)/(2i+1)! */
    sin_sum += (i % 2 == 0) ? odd_term : -odd_term;
    /* Lagrange bound for both truncations after this block. */
    bound = odd_term * m / Rational(2 * i + 2);
    if (bound < 0) bound = -bound;
    ++i;
    term = term * m2 / Rational((2 * i - 1) * (2 * i));
    if (bound < eps && i > 2) break;
    require(i < 4000, errc::precision_exhausted, "trig series stalled");
  }
  const Rational pad = bound + dist;
  return {{cos_sum - pad, cos_sum + pad}, {sin_sum - pad, sin_sum + pad}};
}

ComplexInterval embed_at_bits(const CycloElem& x, long bits) {
  const int M = x.order();
  RatInterval pi = pi_enclosure(bits + 20);
  RatInterval re{Rational(0), Rational(0)}, im = re;
  for (size_t j = 0; j < x.coords().size(); ++j) {
    const Rational& c = x.coords()[j];
    if (c == 0) continue;
    /* Angle 2 pi j' / M with j' in (-M/2, M/2] for faster convergence. */
    long jr = static_cast<long>(j);
    if (2 * jr > M) jr -= M;
    RatInterval theta = ri_scale(Rational(2 * jr, M), pi);
    theta.lo.canonicalize();
    theta.hi.canonicalize();
    TrigEnclosure t = trig_enclosure(theta, bits + 8);
    re = ri_add(re, ri_scale(c, t.cos));
    im = ri_add(im, ri_scale(c, t.sin));
  }
  return {re, im};
}

}  // namespace

RatInterval pi_enclosure(long bits) {
  /* 4*(4*atan(1/5) - atan(1/239)); term counts sized to the bit target. */
  const long t5 = bits / 4 + 8;
  const long t239 = bits / 15 + 8;
  RatInterval a5 = atan_inv(5, t5);
  RatInterval a239 = atan_inv(239, t239);
  RatInterval quarter = ri_sub(ri_scale(Rational(4), a5), a239);
  return ri_scale(Rational(4), quarter);
}

ComplexInterval embed_numeric(const CycloElem& x, long precision_bits,
                              long max_bits) {
  require(precision_bits >= 1, errc::degenerate_input, "precision");
  const Rational target = pow2(-precision_bits);
  for (long bits = precision_bits; bits <= max_bits; bits *= 2) {
    ComplexInterval out = embed_at_bits(x, bits);
    if (out.re.width() <= target && out.im.width() <= target) return out;
  }
  fail(errc::precision_exhausted,
       "embedding did not reach 2^-" + std::to_string(precision_bits) +
           " within " + std::to_string(max_bits) + " bits");
}

int certify_sign(const CycloElem& x, long max_bits) {
  if (x.is_zero()) return 0;
  require(x.is_real(), errc::positivity_uncertified,
          "sign of a non-real element");
  for (long bits = 32; bits <= max_bits; bits *= 2) {
    ComplexInterval e = embed_at_bits(x, bits);
    int s = e.re.sign();
    if (s != 0) return s;
  }
  fail(errc::precision_exhausted, "sign not separable from zero within " +
                                      std::to_string(max_bits) + " bits");
}

std::string certified_decimal(const CycloElem& x, int digits, long max_bits) {
  require(x.is_real(), errc::positivity_uncertified,
          "decimal of a non-real element");
  Rational target(1);
  for (int i = 0; i < digits + 1; ++i) target /= 10;
  for (long bits = 32; bits <= max_bits; bits *= 2) {
    ComplexInterval e = embed_at_bits(x, bits);
    if (e.re.width() > target) continue;
    /* Print the midpoint truncated to the certified precision. */
    Rational mid = (e.re.lo + e.re.hi) / 2;
    bool neg = mid < 0;
    if (neg) mid = -mid;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer units;
    mpz_fdiv_q(units.get_mpz_t(), Integer(mid.get_num() * scale).get_mpz_t(),
               mid.get_den().get_mpz_t());
    std::string s = units.get_str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
  }
  fail(errc::precision_exhausted, "decimal precision not reached");
}

}  // namespace qkz
