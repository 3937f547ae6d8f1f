#pragma once

// Exact linear algebra over a field scalar (no pivoting thresholds, no
// rounding). Everything here is written against Eigen dense types and is
// templated on the scalar; the project instantiates it with dias::Rational.

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dias {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Pivots are the
/// first nonzero entry in each column (exact scalars need no pivot search).
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  out.reduced = m;
  MatrixX<Scalar>& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

/// A linear subspace of Scalar^n held by a canonical basis: the nonzero rows
/// of an RREF matrix. Equal subspaces therefore have identical bases.
template <typename Scalar>
class Subspace {
 public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  Subspace() = default;

  explicit Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `generators` (any rank, zero rows allowed).
  static Subspace from_rows(const Matrix& generators) {
    Subspace s(generators.cols());
    auto r = rref(generators);
    s.basis_ = r.reduced.topRows(r.rank);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
  }

  static Subspace span(Index ambient_dim, const std::vector<Vector>& vectors) {
    Matrix g(static_cast<Index>(vectors.size()), ambient_dim);
    for (Index i = 0; i < g.rows(); ++i) {
      if (vectors[static_cast<std::size_t>(i)].size() != ambient_dim)
        throw std::invalid_argument("Subspace::span: vector length does not match ambient dimension");
      g.row(i) = vectors[static_cast<std::size_t>(i)].transpose();
    }
    return from_rows(g);
  }

  static Subspace full(Index ambient_dim) {
    return from_rows(Matrix::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }

  /// Canonical basis, one vector per row.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(Index i) const { return basis_.row(i).transpose(); }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// Reduce v against the basis; the residual is zero iff v is in the span.
  Vector residual(const Vector& v) const {
    check_length(v.size());
    Vector r = v;
    for (Index i = 0; i < dim(); ++i) {
      const Index c = pivots_[static_cast<std::size_t>(i)];
      if (r(c) == Scalar(0)) continue;
      const Scalar f = r(c);
      r -= f * basis_.row(i).transpose();
    }
    return r;
  }

  bool contains(const Vector& v) const { return all_zero(residual(v)); }

  bool contains(const Subspace& other) const {
    check_length(other.ambient_dim());
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    check_length(other.ambient_dim());
    Matrix stacked(dim() + other.dim(), ambient_);
    stacked << basis_, other.basis_;
    return from_rows(stacked);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           (a.basis_.rows() == 0 || a.basis_ == b.basis_);
  }

 private:
  void check_length(Index n) const {
    if (n != ambient_)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  Index ambient_ = 0;
  Matrix basis_;
  std::vector<Index> pivots_;
};

template <typename Scalar>
bool subspace_contains(const Subspace<Scalar>& s, const VectorX<Scalar>& v) {
  return s.contains(v);
}

template <typename Scalar>
bool subspace_equal(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  return a == b;
}

template <typename Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  return a + b;
}

/// {v : m v = 0}.
template <typename Derived>
Subspace<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.cols();
  const auto r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  MatrixX<Scalar> gens(n - r.rank, n);
  gens.setZero();
  Index g = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    gens(g, free) = Scalar(1);
    for (Index i = 0; i < r.rank; ++i)
      gens(g, r.pivot_cols[static_cast<std::size_t>(i)]) = -r.reduced(i, free);
    ++g;
  }
  return Subspace<Scalar>::from_rows(gens);
}

/// Solution set of A x = b: empty, or point + nullspace(A).
template <typename Scalar>
class AffineSet {
 public:
  using Vector = VectorX<Scalar>;

  AffineSet() = default;
  explicit AffineSet(Index ambient_dim) : direction_(ambient_dim) {}
  AffineSet(Vector point, Subspace<Scalar> direction)
      : point_(std::move(point)), direction_(std::move(direction)) {
    if (point_->size() != direction_.ambient_dim())
      throw std::invalid_argument("AffineSet: point length does not match direction space");
  }

  bool empty() const { return !point_.has_value(); }
  Index ambient_dim() const { return direction_.ambient_dim(); }
  const std::optional<Vector>& point() const { return point_; }
  const Subspace<Scalar>& direction() const { return direction_; }

  bool contains(const Vector& v) const {
    return point_ && direction_.contains(Vector(v - *point_));
  }

 private:
  std::optional<Vector> point_;
  Subspace<Scalar> direction_;
};

template <typename Scalar>
AffineSet<Scalar> solve_affine(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_affine: row count does not match right-hand side");
  const Index n = a.cols();
  MatrixX<Scalar> aug(a.rows(), n + 1);
  aug << a, b;
  const auto r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == n) return AffineSet<Scalar>(n);

  VectorX<Scalar> point = VectorX<Scalar>::Zero(n);
  for (Index i = 0; i < r.rank; ++i)
    point(r.pivot_cols[static_cast<std::size_t>(i)]) = r.reduced(i, n);
  return AffineSet<Scalar>(std::move(point), nullspace(a));
}

/// Determinant by exact Gaussian elimination.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  MatrixX<Scalar> a = m;
  const Index n = a.rows();
  Scalar result(1);
  for (Index col = 0; col < n; ++col) {
    Index p = col;
    while (p < n && a(p, col) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      result = -result;
    }
    result *= a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col) == Scalar(0)) continue;
      const Scalar f = a(i, col) / a(col, col);
      for (Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return result;
}

}  // namespace dias
