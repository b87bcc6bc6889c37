#pragma once

// Dense exact linear algebra: row echelon reduction, rank, kernels and
// canonical subspaces. Vectors are rows; a Subspace stores its basis in
// reduced row echelon form so that equality is structural.
//
// rref() runs the row-elimination step as an OpenMP-parallel kernel once
// the matrix is large enough; rref_serial() is the plain reference and
// must produce bit-identical output.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "llab/errors.hpp"
#include "llab/field.hpp"

namespace llab {

template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_ints(const F& field, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(rows.size(), cols);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const value_type> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorCode::AmbientMismatch, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  /// Rows [0, n) only.
  Matrix top_rows(std::size_t n) const {
    Matrix out(n, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_), out.data_.begin());
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <ExactField F>
struct RrefResult {
  Matrix<F> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

namespace detail {

// Work (entries touched per pivot) above which the elimination step is
// dispatched to OpenMP threads.
inline constexpr std::size_t kParallelRrefThreshold = 1u << 15;

template <ExactField F>
void scale_row(const F& field, Matrix<F>& m, std::size_t r, std::size_t from_col) {
  const auto inv = field.inv(m(r, from_col));
  for (std::size_t j = from_col; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
}

template <ExactField F>
void swap_rows(Matrix<F>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

template <ExactField F>
std::ptrdiff_t find_pivot(const F& field, const Matrix<F>& m, std::size_t from_row, std::size_t col) {
  for (std::size_t i = from_row; i < m.rows(); ++i)
    if (!field.is_zero(m(i, col))) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

}  // namespace detail

/// Reference reduced row echelon form: first-nonzero pivoting, no threads.
template <ExactField F>
RrefResult<F> rref_serial(const F& field, Matrix<F> m) {
  RrefResult<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto piv = detail::find_pivot(field, m, r, c);
    if (piv < 0) continue;
    detail::swap_rows(m, r, static_cast<std::size_t>(piv));
    detail::scale_row(field, m, r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

/// Reduced row echelon form. The per-pivot elimination over all other rows
/// is independent row by row and runs under OpenMP for large matrices.
template <ExactField F>
RrefResult<F> rref(const F& field, Matrix<F> m) {
  RrefResult<F> out;
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m.rows());
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    auto piv = detail::find_pivot(field, m, r, c);
    if (piv < 0) continue;
    detail::swap_rows(m, r, static_cast<std::size_t>(piv));
    detail::scale_row(field, m, r, c);
    const bool parallel = m.rows() * (cols - c) >= detail::kParallelRrefThreshold;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r || field.is_zero(m(ui, c))) continue;
      const auto factor = m(ui, c);
      for (std::size_t j = c; j < cols; ++j) m(ui, j) = field.sub(m(ui, j), field.mul(factor, m(r, j)));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

template <ExactField F>
std::size_t rank(const F& field, const Matrix<F>& m) {
  return rref(field, m).rank;
}

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <ExactField F>
Matrix<F> multiply(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::AmbientMismatch, "matrix product shape mismatch");
  Matrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (field.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = field.add(c(i, j), field.mul(aik, b(k, j)));
    }
  return c;
}

/// Determinant by elimination: product of pivots, sign flipped per row swap.
template <ExactField F>
typename F::value_type determinant(const F& field, Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  auto det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    auto piv = detail::find_pivot(field, m, c, c);
    if (piv < 0) return field.zero();
    if (static_cast<std::size_t>(piv) != c) {
      detail::swap_rows(m, c, static_cast<std::size_t>(piv));
      det = field.neg(det);
    }
    det = field.mul(det, m(c, c));
    const auto inv = field.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(m(i, c))) continue;
      const auto factor = field.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = field.sub(m(i, j), field.mul(factor, m(c, j)));
    }
  }
  return det;
}

/// A linear subspace of k^n, held as the RREF of a basis with no zero rows.
template <ExactField F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>(0, ambient);
    return s;
  }

  static Subspace full(const F& field, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>::identity(field, ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  /// Row space of `rows`.
  static Subspace span(const F& field, Matrix<F> rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    auto red = rref(field, std::move(rows));
    s.basis_ = red.matrix.top_rows(red.rank);
    s.pivots_ = std::move(red.pivot_cols);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  /// Residue of v after reduction by the basis; zero iff v lies in the space.
  std::vector<value_type> reduce(const F& field, std::span<const value_type> v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector length mismatch");
    std::vector<value_type> w(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const auto c = pivots_[i];
      if (field.is_zero(w[c])) continue;
      const auto factor = w[c];
      for (std::size_t j = c; j < ambient_; ++j) w[j] = field.sub(w[j], field.mul(factor, basis_(i, j)));
    }
    return w;
  }

  bool contains(const F& field, std::span<const value_type> v) const {
    auto w = reduce(field, v);
    return std::all_of(w.begin(), w.end(), [&](const value_type& x) { return field.is_zero(x); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m·v = 0}, with v a column vector of length m.cols().
template <ExactField F>
Subspace<F> kernel_basis(const F& field, const Matrix<F>& m) {
  auto red = rref(field, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  Matrix<F> k(n - red.rank, n);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = field.one();
    for (std::size_t i = 0; i < red.rank; ++i) k(out, red.pivot_cols[i]) = field.neg(red.matrix(i, free));
    ++out;
  }
  return Subspace<F>::span(field, std::move(k));
}

/// Rows spanning the orthogonal complement: v ∈ s iff every row annihilates v.
template <ExactField F>
Matrix<F> annihilator(const F& field, const Subspace<F>& s) {
  if (s.dim() == 0) return Matrix<F>::identity(field, s.ambient_dim());
  return kernel_basis(field, s.basis()).basis();
}

template <ExactField F>
Subspace<F> sum(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "subspace sum");
  Matrix<F> stacked = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  if (stacked.cols() != a.ambient_dim()) stacked = Matrix<F>(0, a.ambient_dim());
  return Subspace<F>::span(field, std::move(stacked));
}

template <ExactField F>
Subspace<F> intersection(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "subspace intersection");
  Matrix<F> constraints = annihilator(field, a);
  auto bn = annihilator(field, b);
  for (std::size_t i = 0; i < bn.rows(); ++i) constraints.append_row(bn.row(i));
  if (constraints.rows() == 0) constraints = Matrix<F>(0, a.ambient_dim());
  return kernel_basis(field, constraints);
}

/// a ⊆ b
template <ExactField F>
bool is_subspace_of(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "subspace membership");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(field, a.basis().row(i))) return false;
  return true;
}

}  // namespace llab
