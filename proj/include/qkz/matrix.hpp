#pragma once

#include <utility>
#include <vector>

#include "qkz/ring.hpp"

namespace qkz {

/* Dense matrix over an exact ring. A default-constructed R must be that
   ring's zero. */
template <class R>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    require(rows >= 0 && cols >= 0, errc::degenerate_input, "matrix shape");
  }

  static Matrix identity(int n, const R& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& at(int i, int j) {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_,
            errc::index_out_of_range, "matrix index");
    return a_[size_t(i) * cols_ + j];
  }
  const R& at(int i, int j) const {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_,
            errc::index_out_of_range, "matrix index");
    return a_[size_t(i) * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    require(cols_ == o.rows_, errc::shape_mismatch, "matrix product shape");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const R& x = at(i, k);
        if (ring_is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const R& y = o.at(k, j);
          if (ring_is_zero(y)) continue;
          out.at(i, j) = out.at(i, j) + x * y;
        }
      }
    return out;
  }

  Matrix scale(const R& c) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

private:
  void check_same_shape(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, errc::shape_mismatch,
            "matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<R> a_;
};

namespace detail {

template <class R>
R det_cofactor(const Matrix<R>& m, std::vector<int> cols) {
  const int n = static_cast<int>(cols.size());
  const int row = m.rows() - n;
  if (n == 0) return ring_one(R());
  if (n == 1) return m.at(row, cols[0]);
  R acc{};
  for (int j = 0; j < n; ++j) {
    const R& pivot = m.at(row, cols[j]);
    if (ring_is_zero(pivot)) continue;
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int t = 0; t < n; ++t)
      if (t != j) rest.push_back(cols[t]);
    R sub = det_cofactor(m, std::move(rest));
    R term = pivot * sub;
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

template <class R>
R det_bareiss(Matrix<R> m) {
  const int n = m.rows();
  bool negate = false;
  R prev = ring_one(R());
  for (int k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m.at(k, k))) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!ring_is_zero(m.at(i, k))) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return R{};
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = ring_exact_div(num, prev);
      }
      m.at(i, k) = R{};
    }
    prev = m.at(k, k);
  }
  R det = (n == 0) ? ring_one(R()) : m.at(n - 1, n - 1);
  return negate ? R{} - det : det;
}

}  // namespace detail

/* Exact determinant. Small sizes use cofactor expansion; larger ones use
   fraction-free elimination, which stays in the ring via exact divisions. */
template <class R>
R determinant(const Matrix<R>& m) {
  require(m.rows() == m.cols(), errc::non_square, "determinant shape");
  if (m.rows() <= 5) {
    std::vector<int> cols(m.rows());
    for (int i = 0; i < m.rows(); ++i) cols[i] = i;
    return detail::det_cofactor(m, std::move(cols));
  }
  return detail::det_bareiss(m);
}

/* Pfaffian of a skew-symmetric matrix of even dimension, by expansion along
   the first remaining row. */
template <class R>
R pfaffian(const Matrix<R>& m) {
  require(m.rows() == m.cols(), errc::non_square, "pfaffian shape");
  require(m.rows() % 2 == 0, errc::odd_dimension, "pfaffian dimension");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      require(m.at(i, j) == R{} - m.at(j, i), errc::not_skew_symmetric,
              "pfaffian input");
  std::vector<int> idx(m.rows());
  for (int i = 0; i < m.rows(); ++i) idx[i] = i;

  struct Rec {
    const Matrix<R>& a;
    R run(std::vector<int> rows) {
      if (rows.empty()) return ring_one(R());
      if (rows.size() == 2) return a.at(rows[0], rows[1]);
      R acc{};
      for (size_t j = 1; j < rows.size(); ++j) {
        const R& x = a.at(rows[0], rows[j]);
        if (ring_is_zero(x)) continue;
        std::vector<int> rest;
        rest.reserve(rows.size() - 2);
        for (size_t t = 1; t < rows.size(); ++t)
          if (t != j) rest.push_back(rows[t]);
        R term = x * run(std::move(rest));
        if (j % 2 == 1)
          acc = acc + term;
        else
          acc = acc - term;
      }
      return acc;
    }
  } rec{m};
  return rec.run(std::move(idx));
}

/* Basis of the right nullspace over a field, via Gauss-Jordan elimination
   with deterministic pivot choice. */
template <class R>
std::vector<std::vector<R>> nullspace(Matrix<R> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!ring_is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    R inv = ring_inverse(m.at(r, c));
    for (int j = 0; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || ring_is_zero(m.at(i, c))) continue;
      R f = m.at(i, c);
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<std::vector<R>> basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<R> v(cols);
    v[free_c] = ring_one(R());
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[pivot_col_of_row[i]] = R{} - m.at(int(i), free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qkz
