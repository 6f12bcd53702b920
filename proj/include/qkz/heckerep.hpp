#pragma once

#include <utility>
#include <vector>

#include "qkz/matrix.hpp"
#include "qkz/pathword.hpp"
#include "qkz/report.hpp"

namespace qkz {

/* Path representation data for the generators e_1..e_{N-1}. Beyond the
   tau-diagonal at convex sources (recomputed from the basis), the action is
   the 0/1 tensor stored here: (source, target) basis-index pairs meaning
   e_i applied to the source word contains the target word with coefficient 1.
   Sources are non-convex at i, targets convex at i. */
struct ReprMatrices {
  int k = 0, n = 0;
  Basis basis;
  std::vector<std::vector<std::pair<int, int>>> c_tensor; /* per i = 1..N-1 */

  int length() const { return k * n; }
  int generators() const { return k * n - 1; }
  const std::vector<std::pair<int, int>>& pairs(int i) const;
};

/* Supported families: k = 1 or n = 1 (one-dimensional), k = 2 (adjacent
   transposition action on matched step pairs), and n = 2 with k >= 3
   (transport of the length-2k case through tableau transposition). */
ReprMatrices build(int k, int n, int kn_cap = 14);

/* Dense generator matrix over any ring; rows are targets, columns sources. */
template <class R>
Matrix<R> generator_matrix(const ReprMatrices& rep, int i, const R& tau) {
  const int dim = rep.basis.size();
  const R one = ring_one(tau);
  Matrix<R> m(dim, dim);
  for (int s = 0; s < dim; ++s)
    if (rep.basis.at(s).classify(i) == Shape::convex) m.at(s, s) = tau;
  for (const auto& [s, t] : rep.pairs(i)) m.at(t, s) = one;
  return m;
}

/* U_0 = 1, U_1 = tau, U_{m+1} = tau U_m - U_{m-1}, memoized. */
template <class R>
class ChebyshevU {
 public:
  explicit ChebyshevU(const R& tau) : tau_(tau) {
    vals_.push_back(ring_one(tau));
    vals_.push_back(tau);
  }
  const R& at(int m) {
    require(m >= 0, errc::index_out_of_range, "Chebyshev index");
    while (static_cast<int>(vals_.size()) <= m)
      vals_.push_back(tau_ * vals_.back() - vals_[vals_.size() - 2]);
    return vals_[m];
  }

 private:
  R tau_;
  std::vector<R> vals_;
};

/* Y_k(e_i..e_{i+k-1}) as a pair (numerator matrix, scalar denominator):
   Y_1 = e_i and Y_{m+1} = Y_m (e_{i+m} - U_{m-1}/U_m) Y_m, cleared of the
   U_m denominators so the arithmetic stays in the base ring. */
template <class R>
std::pair<Matrix<R>, R> young_symmetrizer(const std::vector<Matrix<R>>& e,
                                          int first, int order, const R& tau) {
  require(order >= 1, errc::index_out_of_range, "symmetrizer order");
  require(first >= 0 && first + order <= static_cast<int>(e.size()),
          errc::index_out_of_range, "symmetrizer window");
  ChebyshevU<R> u(tau);
  Matrix<R> num = e[first];
  R den = ring_one(tau);
  for (int m = 1; m < order; ++m) {
    const R& um = u.at(m);
    const R& um1 = u.at(m - 1);
    Matrix<R> mid =
        e[first + m].scale(um) - Matrix<R>::identity(num.rows(), um1);
    num = num * mid * num;
    den = den * den * um;
  }
  return {std::move(num), std::move(den)};
}

Report verify_hecke(const ReprMatrices& rep,
                    const std::vector<Rational>& tau_values);
Report verify_quotient(const ReprMatrices& rep,
                       const std::vector<Rational>& tau_values);
Report verify_p_properties(const ReprMatrices& rep);
Report verify_duality(const ReprMatrices& a, const ReprMatrices& b);

}  // namespace qkz
