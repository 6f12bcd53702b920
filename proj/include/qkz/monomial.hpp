#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "qkz/error.hpp"

namespace qkz {

/* Exponent vector with cached total degree. Exponents may be negative
   (Laurent monomials). Ordering is graded lexicographic: total degree first,
   then the exponent vector itself; this is the canonical term order used for
   lead-term selection and serialization. */
struct Monomial {
  std::vector<int32_t> e;
  int64_t total = 0;

  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {
    total = std::accumulate(e.begin(), e.end(), int64_t{0});
  }

  static Monomial zero(int nvars) {
    return Monomial(std::vector<int32_t>(nvars, 0));
  }

  static Monomial unit(int nvars, int var, int32_t exp = 1) {
    require(var >= 0 && var < nvars, errc::index_out_of_range,
            "monomial variable index");
    std::vector<int32_t> v(nvars, 0);
    v[var] = exp;
    return Monomial(std::move(v));
  }

  int nvars() const { return static_cast<int>(e.size()); }

  Monomial operator+(const Monomial& o) const {
    require(e.size() == o.e.size(), errc::ring_mismatch,
            "monomial arity mismatch");
    Monomial out = *this;
    for (size_t i = 0; i < e.size(); ++i) out.e[i] += o.e[i];
    out.total = total + o.total;
    return out;
  }

  Monomial operator-(const Monomial& o) const {
    require(e.size() == o.e.size(), errc::ring_mismatch,
            "monomial arity mismatch");
    Monomial out = *this;
    for (size_t i = 0; i < e.size(); ++i) out.e[i] -= o.e[i];
    out.total = total - o.total;
    return out;
  }

  Monomial scaled(int32_t factor) const {
    Monomial out = *this;
    for (auto& x : out.e) x *= factor;
    out.total = total * factor;
    return out;
  }

  bool nonnegative() const {
    for (auto x : e)
      if (x < 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  bool operator<(const Monomial& o) const {
    if (total != o.total) return total < o.total;
    return e < o.e;
  }
};

}  // namespace qkz
