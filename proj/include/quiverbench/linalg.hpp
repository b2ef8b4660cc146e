#pragma once

// Exact dense linear algebra over any field type S usable as an Eigen scalar.
// Every routine is a pure function of its arguments.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "quiverbench/errors.hpp"
#include "quiverbench/field.hpp"

namespace qb {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Matrix<S> zeros(Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}

template <class S>
Matrix<S> identity(Index n) {
  Matrix<S> m = zeros<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
bool isZeroMatrix(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!isZero(m(i, j))) return false;
  return true;
}

template <class S>
bool isZeroVector(const Vector<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!isZero(v(i))) return false;
  return true;
}

/// Horizontal concatenation; row counts must agree.
template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  Matrix<S> out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix<S> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

template <class S>
Matrix<S> columnsOf(const std::vector<Vector<S>>& vs, Index rows) {
  Matrix<S> m(rows, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Index>(j)) = vs[j];
  return m;
}

template <class S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <class S>
RowEchelon<S> rref(Matrix<S> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && isZero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    if (inv != S(1))
      for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || isZero(m(i, c))) continue;
      const S f = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!isZero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref(m).rank();
}

/// Some x with a*x = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: a.rows != b.rows");
  const Index n = a.cols();
  const auto ech = rref(hstack(a, b));
  Matrix<S> x = zeros<S>(n, b.cols());
  for (Index i = 0; i < ech.rank(); ++i) {
    const Index c = ech.pivots[static_cast<std::size_t>(i)];
    if (c >= n) return std::nullopt;
    x.row(c) = ech.reduced.row(i).tail(b.cols());
  }
  return x;
}

/// Basis of {x : a*x = 0}, one column per free variable.
template <class S>
Matrix<S> nullspace(const Matrix<S>& a) {
  const Index n = a.cols();
  const auto ech = rref(a);
  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (Index c : ech.pivots) isPivot[static_cast<std::size_t>(c)] = true;
  Matrix<S> basis = zeros<S>(n, n - ech.rank());
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (isPivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = S(1);
    for (Index i = 0; i < ech.rank(); ++i) basis(ech.pivots[static_cast<std::size_t>(i)], k) = -ech.reduced(i, f);
    ++k;
  }
  return basis;
}

template <class S>
std::vector<Vector<S>> nullspaceBasis(const Matrix<S>& a) {
  const Matrix<S> ns = nullspace(a);
  std::vector<Vector<S>> out;
  out.reserve(static_cast<std::size_t>(ns.cols()));
  for (Index j = 0; j < ns.cols(); ++j) out.push_back(ns.col(j));
  return out;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const Index n = a.rows();
  const auto ech = rref(hstack(a, identity<S>(n)));
  if (ech.rank() < n || (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] >= n)) return std::nullopt;
  return Matrix<S>(ech.reduced.rightCols(n));
}

/// Linearly independent columns of `a` spanning its column space.
template <class S>
Matrix<S> columnBasis(const Matrix<S>& a) {
  const auto ech = rref(a);
  Matrix<S> out(a.rows(), ech.rank());
  for (Index i = 0; i < ech.rank(); ++i) out.col(i) = a.col(ech.pivots[static_cast<std::size_t>(i)]);
  return out;
}

/// Standard basis vectors completing the independent columns of `basis` to
/// a basis of the ambient space.
template <class S>
Matrix<S> complementBasis(const Matrix<S>& basis) {
  const Index n = basis.rows();
  const auto ech = rref(hstack(basis, identity<S>(n)));
  std::vector<Index> extra;
  for (Index c : ech.pivots)
    if (c >= basis.cols()) extra.push_back(c - basis.cols());
  Matrix<S> out = zeros<S>(n, static_cast<Index>(extra.size()));
  for (std::size_t k = 0; k < extra.size(); ++k) out(extra[k], static_cast<Index>(k)) = S(1);
  return out;
}

/// Canonical description of the column span: reduced echelon rows (rank x n).
template <class S>
Matrix<S> canonicalRowBasis(const Matrix<S>& columns) {
  const auto ech = rref(Matrix<S>(columns.transpose()));
  return ech.reduced.topRows(ech.rank());
}

/// Basis (columns) of colspan(u) ∩ colspan(w); inputs need independent columns.
template <class S>
Matrix<S> intersection(const Matrix<S>& u, const Matrix<S>& w) {
  const Matrix<S> ns = nullspace(hstack(u, Matrix<S>(-w)));
  return columnBasis(Matrix<S>(u * ns.topRows(u.cols())));
}

/// True when every column of `v` lies in the column span of `basis`.
template <class S>
bool inColumnSpan(const Matrix<S>& basis, const Matrix<S>& v) {
  return rank(hstack(basis, v)) == rank(basis);
}

/// Coordinates of vectors with respect to a fixed basis with independent
/// columns. Precomputes a row selection so each query is one product.
template <class S>
class CoordinateSolver {
 public:
  CoordinateSolver() = default;
  explicit CoordinateSolver(const Matrix<S>& basis) : basis_(basis) {
    const auto ech = rref(Matrix<S>(basis.transpose()));
    if (ech.rank() != basis.cols()) throw Error("CoordinateSolver: basis columns are dependent");
    rows_ = ech.pivots;
    Matrix<S> square(basis.cols(), basis.cols());
    for (Index i = 0; i < basis.cols(); ++i) square.row(i) = basis.row(rows_[static_cast<std::size_t>(i)]);
    auto inv = inverse(square);
    leftInverse_ = *inv;
  }

  Index dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }

  /// Coordinates of `v`, assuming it lies in the span (not verified).
  Vector<S> coordinates(const Vector<S>& v) const {
    Vector<S> picked(static_cast<Index>(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) picked(static_cast<Index>(i)) = v(rows_[i]);
    return leftInverse_ * picked;
  }

  /// Coordinates of `v`, or nullopt if `v` is outside the span.
  std::optional<Vector<S>> checkedCoordinates(const Vector<S>& v) const {
    Vector<S> c = coordinates(v);
    if (basis_.cols() == 0) {
      if (!isZeroVector<S>(v)) return std::nullopt;
      return c;
    }
    if (Vector<S>(basis_ * c) != v) return std::nullopt;
    return c;
  }

 private:
  Matrix<S> basis_;
  std::vector<Index> rows_;
  Matrix<S> leftInverse_;
};

}  // namespace qb
