#pragma once

#include <vector>

#include "qkz/qkzsolver.hpp"
#include "qkz/report.hpp"

namespace qkz {

/* Integer vector obtained from the components at z = 1, r in {0, 1} by
   dividing out (q^2-1)^divisor_exponent and sending q to -1. */
struct LimitVector {
  int k = 0, n = 0;
  int r_value = 1;
  long divisor_exponent = 0; /* kn(n-1) at r = 1, kn(n-1)/2 at r = 0 */
  std::vector<Integer> entries; /* canonical basis order */
  bool sign_flipped = false; /* raw limit had a negative maximal-path entry */
  bool all_nonnegative = true;
};

/* The limit exists iff every component vanishes to the divisor order at
   q = -1 (InsufficientVanishing otherwise); entries must come out integer
   (NonInteger). The global sign is normalized so the maximal-path entry is
   positive; the raw sign is kept in sign_flipped. */
LimitVector homogeneous_limit(const QkzSolution& sol, int r_value);

/* det over 0 <= i, j < n of binomial(2i+2j+1, 2i). */
Integer brauer_degree(int n);

/* r = 1 entry sum against brauer_degree for k = 2; recorded as a regression
   value otherwise. The r = 0 sum and the raw signs are always recorded. */
Report limit_sum_check(const QkzSolution& sol);
Report limit_sum_check(int k, int n, int kn_cap = 14);

}  // namespace qkz
