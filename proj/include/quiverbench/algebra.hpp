#pragma once

// Finite-dimensional algebras A = kQ/I given by a quiver presentation.
//
// Elements are coefficient vectors over the residue path basis. The left
// regular action of basis element i is stored as the matrix left[i], so the
// product x*y is (sum_i x_i left[i]) * y.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quiverbench/linalg.hpp"
#include "quiverbench/presentation.hpp"

namespace qb {

template <class S>
struct Algebra;

template <class S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

template <class S>
struct Algebra {
  Presentation presentation;
  std::vector<Path> basis;           // trivial paths first, then by length, source, arrow names
  std::vector<std::string> labels;   // "e1", "x", "bx", ...
  std::vector<Matrix<S>> left;       // left multiplication by basis[i]
  std::vector<Vector<S>> arrowElements;
  std::vector<int> idempotents;      // basis index of e_v per vertex
  int loewyLength = 1;               // smallest m with J^m = 0

  int dim() const { return static_cast<int>(basis.size()); }
  int vertexCount() const { return presentation.quiver.vertexCount(); }
  const Quiver& quiver() const { return presentation.quiver; }

  // Opposite algebra cache; op(op(A)) returns the original object.
  mutable std::once_flag oppositeOnce;
  mutable AlgebraPtr<S> oppositeStrong;
  mutable std::weak_ptr<const Algebra<S>> oppositeWeak;
};

/// Builds kQ/(I + J^m) for the least m <= N+1 at which every path of length
/// m reduces to zero. Throws AdmissibilityError when no such m exists.
template <class S>
AlgebraPtr<S> buildAlgebra(const Presentation& p);

/// Same basis and labels, reversed arrows, reversed multiplication.
template <class S>
AlgebraPtr<S> opposite(const AlgebraPtr<S>& a);

/// Structural equality: same presentation, basis and multiplication.
template <class S>
bool sameAlgebra(const Algebra<S>& a, const Algebra<S>& b);

template <class S>
Vector<S> basisVector(const Algebra<S>& a, int i);

template <class S>
Vector<S> unitElement(const Algebra<S>& a);

template <class S>
Matrix<S> leftMultiplication(const Algebra<S>& a, const Vector<S>& x);

template <class S>
Matrix<S> rightMultiplication(const Algebra<S>& a, const Vector<S>& x);

template <class S>
Vector<S> multiply(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y);

/// Basis of J: the basis words of length >= 1.
template <class S>
std::vector<Vector<S>> radicalGenerators(const Algebra<S>& a);

/// Columns spanning J^k (k >= 0; J^0 = A).
template <class S>
Matrix<S> radicalPower(const Algebra<S>& a, int k);

/// {v : J v = 0} as an echelonized basis (columns).
template <class S>
Matrix<S> socleLeftRegular(const Algebra<S>& a);

/// {z : z g = 0 for all g in span(gens)}; verified to be a two-sided ideal.
template <class S>
Matrix<S> leftAnnihilator(const Algebra<S>& a, const std::vector<Vector<S>>& gens);

template <class S>
bool isTwoSidedIdeal(const Algebra<S>& a, const Matrix<S>& basis);

template <class S>
struct QuotientAlgebra {
  AlgebraPtr<S> algebra;
  Matrix<S> map;  // dim(A/I) x dim(A), sends basis words to residues
};

/// A/I for a two-sided ideal I inside J given by spanning columns.
template <class S>
QuotientAlgebra<S> quotientAlgebra(const AlgebraPtr<S>& a, const Matrix<S>& ideal);

/// Checks associativity, the idempotent decomposition of 1, and J^m = 0.
/// Returns an empty string on success, otherwise a description.
template <class S>
std::string checkAlgebraAxioms(const Algebra<S>& a);

/// Human-readable element, e.g. "2*x + bx".
template <class S>
std::string formatElement(const Algebra<S>& a, const Vector<S>& v);

template <class S>
bool isLocal(const Algebra<S>& a) {
  return a.vertexCount() == 1;
}

template <class S>
bool isRadicalSquareZero(const Algebra<S>& a) {
  return a.loewyLength <= 2;
}

/// Integer relation coefficients proportional to v (symmetric residues over
/// F_p, denominators cleared over Q).
template <class S>
std::vector<BigInt> integerCoefficients(const Vector<S>& v);

}  // namespace qb
