#pragma once

// Finite-dimensional left modules as quiver representations.
//
// A Rep stores one vector space per vertex and one matrix per arrow; the
// matrix of a: i -> j maps the vertex-i space to the vertex-j space. Many
// algorithms work in "global" coordinates: the direct sum of the vertex
// spaces in vertex order.

#include <optional>
#include <string>
#include <vector>

#include "quiverbench/algebra.hpp"

namespace qb {

template <class S>
struct Rep {
  AlgebraPtr<S> algebra;
  std::vector<int> dims;           // per vertex
  std::vector<Matrix<S>> arrows;   // per arrow, dims[target] x dims[source]

  int dim() const {
    int d = 0;
    for (int x : dims) d += x;
    return d;
  }
  int vertexCount() const { return static_cast<int>(dims.size()); }
  int offset(int v) const {
    int o = 0;
    for (int u = 0; u < v; ++u) o += dims[static_cast<std::size_t>(u)];
    return o;
  }
  bool isZero() const { return dim() == 0; }
};

/// A module homomorphism; blocks[v] maps the source vertex-v space to the
/// target vertex-v space. Source and target are passed alongside.
template <class S>
struct RepMap {
  std::vector<Matrix<S>> blocks;
};

template <class S>
struct Subrep {
  Rep<S> rep;
  RepMap<S> inclusion;  // rep -> ambient
  Matrix<S> basis;      // global columns in the ambient module
};

template <class S>
struct QuotientRep {
  Rep<S> rep;
  RepMap<S> projection;  // ambient -> rep
};

template <class S>
struct DirectSum {
  Rep<S> rep;
  std::vector<RepMap<S>> injections;
  std::vector<RepMap<S>> projections;
};

// ---- construction and validation -------------------------------------------

/// Validated constructor: shapes and the action of the algebra.
template <class S>
Rep<S> makeRep(const AlgebraPtr<S>& a, std::vector<int> dims, std::vector<Matrix<S>> arrows);

/// Empty string when `m` is a module over its algebra, else the first defect.
template <class S>
std::string representationDefect(const Rep<S>& m);

template <class S>
Rep<S> zeroRep(const AlgebraPtr<S>& a);

/// A as a left module; vertex v carries e_v A (basis words with target v).
template <class S>
Rep<S> regularRep(const AlgebraPtr<S>& a);

/// Basis indices of A in the global order of regularRep.
template <class S>
std::vector<int> regularOrder(const Algebra<S>& a);

/// P(i) = A e_i.
template <class S>
Rep<S> projective(const AlgebraPtr<S>& a, int vertex);

/// Basis indices of A e_i in the global order of projective(a, i).
template <class S>
std::vector<int> projectiveOrder(const Algebra<S>& a, int vertex);

template <class S>
Rep<S> simple(const AlgebraPtr<S>& a, int vertex);

// ---- global coordinates ----------------------------------------------------

template <class S>
Matrix<S> globalArrow(const Rep<S>& m, int arrow);

template <class S>
Matrix<S> vertexProjector(const Rep<S>& m, int vertex);

/// Action of each algebra basis element on the module.
template <class S>
std::vector<Matrix<S>> basisActions(const Rep<S>& m);

template <class S>
Matrix<S> elementAction(const Rep<S>& m, const Vector<S>& x);

template <class S>
Matrix<S> globalMatrix(const Rep<S>& source, const Rep<S>& target, const RepMap<S>& f);

/// Inverse of globalMatrix; throws if the matrix is not vertex-diagonal.
template <class S>
RepMap<S> mapFromGlobal(const Rep<S>& source, const Rep<S>& target, const Matrix<S>& g);

// ---- maps ------------------------------------------------------------------

template <class S>
bool isRepMap(const Rep<S>& source, const Rep<S>& target, const RepMap<S>& f);

template <class S>
RepMap<S> identityMap(const Rep<S>& m);

template <class S>
RepMap<S> zeroMap(const Rep<S>& source, const Rep<S>& target);

/// g after f.
template <class S>
RepMap<S> compose(const RepMap<S>& g, const RepMap<S>& f);

template <class S>
bool isInjective(const RepMap<S>& f);

template <class S>
bool isSurjective(const RepMap<S>& f);

template <class S>
bool isIsomorphism(const RepMap<S>& f);

/// Throws AlgebraMismatch unless both modules live over the same algebra.
template <class S>
void requireSameAlgebra(const Rep<S>& m, const Rep<S>& n);

template <class S>
std::vector<RepMap<S>> homBasis(const Rep<S>& m, const Rep<S>& n);

template <class S>
int homDim(const Rep<S>& m, const Rep<S>& n);

// ---- sub- and quotient modules ---------------------------------------------

/// Smallest submodule containing the given global vectors.
template <class S>
Subrep<S> subRepGenerated(const Rep<S>& m, const std::vector<Vector<S>>& vectors);

/// Submodule with the given spanning columns; throws if not a submodule.
template <class S>
Subrep<S> subRepFromBasis(const Rep<S>& m, const Matrix<S>& columns);

/// m / sub, where `subBasis` spans a submodule (global columns).
template <class S>
QuotientRep<S> quotientRep(const Rep<S>& m, const Matrix<S>& subBasis);

template <class S>
Subrep<S> kernel(const Rep<S>& source, const RepMap<S>& f);

template <class S>
Subrep<S> image(const Rep<S>& target, const Rep<S>& source, const RepMap<S>& f);

template <class S>
QuotientRep<S> cokernel(const Rep<S>& target, const Rep<S>& source, const RepMap<S>& f);

/// Sum of the images of all arrows.
template <class S>
Subrep<S> radicalRep(const Rep<S>& m);

/// Common kernel of all arrows.
template <class S>
Subrep<S> socleRep(const Rep<S>& m);

template <class S>
QuotientRep<S> topRep(const Rep<S>& m);

template <class S>
DirectSum<S> directSum(const std::vector<Rep<S>>& parts);

/// Same module over a quotient algebra B = A/I (the action must factor), or
/// a B-module viewed as an A-module through the quotient map.
template <class S>
Rep<S> restrictScalars(const Rep<S>& m, const AlgebraPtr<S>& other);

// ---- endomorphisms, decomposition, isomorphism -----------------------------

template <class S>
struct EndAlgebra {
  std::vector<RepMap<S>> basis;
  std::vector<Matrix<S>> global;     // global matrices of the basis maps
  std::vector<Matrix<S>> structure;  // structure[j](:, k) = coords of basis_j * basis_k; only when the regular rep was used
  Matrix<S> radical;                 // columns: coordinates of a basis of rad End

  int dim() const { return static_cast<int>(basis.size()); }
  int radicalDim() const { return static_cast<int>(radical.cols()); }
  int topDim() const { return dim() - radicalDim(); }
};

/// Radical via the trace form, using the trace on the module when the field
/// exceeds dim m, else the regular representation of End when it exceeds
/// dim End; otherwise FieldTooSmall.
template <class S>
EndAlgebra<S> endAlgebra(const Rep<S>& m);

enum class Indecomposability { Yes, No, Undetermined };

template <class S>
struct Splitting {
  Subrep<S> first;   // generalised kernel of the splitting endomorphism
  Subrep<S> second;  // generalised image
  RepMap<S> idempotent;  // projection onto `first` along `second`
};

template <class S>
struct IndecomposableResult {
  Indecomposability verdict = Indecomposability::Undetermined;
  std::optional<Splitting<S>> witness;
};

/// Fitting splitting of `m` from endomorphism g (global matrix), if g has an
/// eigenvalue in the field whose Fitting decomposition is proper.
template <class S>
std::optional<Splitting<S>> fittingSplit(const Rep<S>& m, const Matrix<S>& g);

/// `seed` selects the deterministic endomorphism search order.
template <class S>
IndecomposableResult<S> isIndecomposable(const Rep<S>& m, unsigned seed = 0);

template <class S>
struct Summand {
  Rep<S> rep;
  int multiplicity = 1;
};

template <class S>
std::vector<Summand<S>> decompose(const Rep<S>& m, unsigned seed = 0);

/// The indecomposable summands with repetition, as submodules of m.
template <class S>
std::vector<Subrep<S>> splitIntoIndecomposables(const Rep<S>& m, unsigned seed = 0);

/// Isomorphism of indecomposables: some g f with f: x -> y, g: y -> x is invertible.
template <class S>
bool isoIndecomposable(const Rep<S>& x, const Rep<S>& y);

template <class S>
bool isIso(const Rep<S>& m, const Rep<S>& n);

/// Two multisets of indecomposables agree up to isomorphism.
template <class S>
bool sameSummands(const std::vector<Summand<S>>& a, const std::vector<Summand<S>>& b);

// ---- projective covers, duality, homological data --------------------------

template <class S>
struct ProjectiveCover {
  Rep<S> projective;
  RepMap<S> map;                 // surjection onto the module
  std::vector<int> multiplicity; // copies of P(v) per vertex
};

template <class S>
ProjectiveCover<S> projectiveCover(const Rep<S>& m);

template <class S>
Subrep<S> syzygy(const Rep<S>& m);

template <class S>
bool isProjective(const Rep<S>& m);

/// Vector-space dual with transposed arrows, over the opposite algebra.
template <class S>
Rep<S> linearDual(const Rep<S>& m);

/// Transposed map D(g) -> D(f).
template <class S>
RepMap<S> linearDualMap(const RepMap<S>& f);

template <class S>
struct InjectiveEnvelope {
  Rep<S> injective;
  RepMap<S> map;  // injective map from the module
};

template <class S>
InjectiveEnvelope<S> injectiveEnvelope(const Rep<S>& m);

template <class S>
int ext1(const Rep<S>& m, const Rep<S>& n);

template <class S>
bool projDimAtMost(const Rep<S>& m, int k);

/// Per-vertex multiplicities of simples in the socle.
template <class S>
std::vector<int> socleMultiplicities(const Rep<S>& m);

/// Per-vertex multiplicities of simples in the top.
template <class S>
std::vector<int> topMultiplicities(const Rep<S>& m);

/// "(d1,d2,...)".
template <class S>
std::string dimVectorString(const Rep<S>& m) {
  std::string out = "(";
  for (std::size_t v = 0; v < m.dims.size(); ++v) out += (v ? "," : "") + std::to_string(m.dims[v]);
  return out + ")";
}

/// Entrywise map into another field: Zp values through their canonical
/// representatives 0..p-1, rationals through numerator/denominator.
template <class T, class S>
Matrix<T> liftMatrix(const Matrix<S>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if constexpr (FieldTraits<S>::finite)
        out(i, j) = FieldTraits<T>::fromInteger(static_cast<long long>(m(i, j).value()));
      else
        out(i, j) = FieldTraits<T>::fromFraction(m(i, j).numerator(), m(i, j).denominator());
    }
  return out;
}

}  // namespace qb
