#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qkz/rational.hpp"

namespace qkz {

/* Deterministic rational sample points with numerators and denominators in
   [1, 1000], filtered against the degenerate loci of the checked identities
   (coinciding z's, z_i z_j = r). Reduction modulo the range is applied to the
   raw mt19937_64 stream directly so the sequence does not depend on the
   standard library's distribution internals. */
class PointGen {
public:
  explicit PointGen(uint64_t seed) : rng_(seed) {}

  Rational rational() {
    const long num = static_cast<long>(rng_() % 1000) + 1;
    const long den = static_cast<long>(rng_() % 1000) + 1;
    return make_rational(num, den);
  }

  struct Point {
    std::vector<Rational> z;
    Rational r;
  };

  /* count distinct nonzero z values and an r value with z_i z_j != r for all
     i, j (i = j included) and z_i != r. Rejection is cheap at this pool
     size. */
  Point sample(int count) {
    while (true) {
      Point p;
      p.r = rational();
      std::set<Rational> used;
      bool ok = true;
      for (int i = 0; i < count && ok; ++i) {
        Rational z = rational();
        if (z == p.r || !used.insert(z).second) {
          ok = false;
          break;
        }
        for (const auto& w : used)
          if (w * z == p.r) {
            ok = false;
            break;
          }
        if (ok) p.z.push_back(z);
      }
      if (ok) return p;
    }
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace qkz
