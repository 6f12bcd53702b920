#pragma once

#include "qkz/laurent.hpp"

namespace qkz {

/* Exact limit of L(q) / (q^2 - 1)^d as q -> -1. The numerator must vanish to
   order d at q = -1 (InsufficientVanishing otherwise); negative q powers are
   cleared by a unit shift, which contributes the sign (-1)^shift. */
Rational q_limit(const LaurentQ& l, long d);

}  // namespace qkz
