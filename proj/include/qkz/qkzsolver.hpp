#pragma once

#include <cstdint>
#include <vector>

#include "qkz/heckerep.hpp"
#include "qkz/laurent.hpp"
#include "qkz/multipoly.hpp"
#include "qkz/pathword.hpp"
#include "qkz/report.hpp"

namespace qkz {

/* Components live in z_1..z_N, r over Laurent coefficients in q.
   Variable indices: z_i at i-1, r at N. */
using PolyL = MultiPoly<LaurentQ>;

/* The loop weight -(q + q^-1). */
LaurentQ tau_laurent();

/* Exchange operator t_i = (q^-1 z_{i+1} - q z_i) d_i with d_i the divided
   difference in z_i, z_{i+1}. The position i is 1-based and must leave the
   trailing r variable untouched. */
PolyL t_operator(const PolyL& f, int i);

/* The closed-form component of the maximal path, expanded. */
PolyL base_component(int k, int n);

struct QkzSolution {
  int k = 0;
  int n = 0;
  int s_exponent = 0; /* 2(k+1); the right-boundary twist is q^s_exponent */
  ReprMatrices rep;
  std::vector<PolyL> components; /* canonical basis order */
  bool coeffs_nonnegative = true; /* observed on all examples, not required */

  int length() const { return k * n; }
  int nvars() const { return k * n + 1; }
  const Basis& basis() const { return rep.basis; }
  const PolyL& component(int idx) const;
  const PolyL& component(const PathWord& p) const;
};

/* Triangular elimination from the maximal path downward. Every alternative
   derivation of a component is recomputed and compared; a mismatch raises
   InconsistentDerivation. Degree bounds, quasi-homogeneity and coefficient
   integrality are asserted before returning. */
QkzSolution solve(int k, int n, int kn_cap = 14);

struct VerifyOptions {
  /* Evaluate identities at random rational points instead of expanding
     symbolically; the report records the mode and the bound arithmetic. */
  bool multipoint = false;
  uint64_t seed = 1;
  int points = 0; /* 0 picks degree bound + 1 */
};

/* All (N-1) x dim exchange equations, plus the local vanishing property at
   z_{i+1} = q^2 z_i and the highest-weight identity for the maximal path. */
Report verify_exchange(const QkzSolution& sol, const VerifyOptions& opt = {});

/* Reflection covariance at both boundaries. */
Report verify_boundary(const QkzSolution& sol, const VerifyOptions& opt = {});

/* Vanishing on every wheel of k+1 spectral parameters. */
Report verify_wheel(const QkzSolution& sol, const VerifyOptions& opt = {});

/* Embedding of the size-k(n-1) solution when z_1..z_k form a q^2 string:
   each surviving component factors as (-q)^{k(k-1)(n-1)/2} times
   prod_{j>k} (q^{2k}z_1 - z_j)(rq^2 - z_1 z_j) times the smaller component. */
Report verify_recursion(const QkzSolution& big, const QkzSolution& small,
                        const VerifyOptions& opt = {});

/* z_1..z_j sent to zero one variable at a time, remaining variables
   reindexed. Support shrinks to the words beginning 1,2,...,j; keys stay
   full length. */
struct PrefixReduction {
  int k = 0;
  int n = 0;
  int j = 0;
  Basis support;
  std::vector<PolyL> components; /* canonical order within support */
};
PrefixReduction specialize_prefix(const QkzSolution& sol, int j);

}  // namespace qkz
