#pragma once

// The A-dual M* = Hom(M, A), the canonical map M -> M**, and the predicates
// built on it. Right A-modules are left modules over opposite(A).

#include <vector>

#include "quiverbench/rep.hpp"

namespace qb {

/// M* together with the maps that span it. Vertex j of M* is Hom(M, P(j)).
template <class S>
struct DualData {
  Rep<S> source;                                 // M over A
  Rep<S> dual;                                   // M* over A^op
  std::vector<std::vector<Matrix<S>>> maps;      // maps[j][k]: global matrix M -> P(j)
  std::vector<CoordinateSolver<S>> solvers;      // per vertex, on flattened maps
};

template <class S>
struct PhiData {
  DualData<S> first;   // M -> M*
  DualData<S> second;  // M* -> M**
  RepMap<S> phi;       // M -> M**
  int kernelDim = 0;
  Rep<S> cokernel;

  const Rep<S>& dual() const { return first.dual; }
  const Rep<S>& doubleDual() const { return second.dual; }
};

template <class S>
DualData<S> dualData(const Rep<S>& m);

/// M* as a representation of the opposite algebra. For a one-dimensional
/// module the dimension is cross-checked against e(soc A).
template <class S>
Rep<S> aDual(const Rep<S>& m);

/// f: M -> N gives f*: N* -> M*, g |-> g f.
template <class S>
RepMap<S> dualMap(const DualData<S>& m, const DualData<S>& n, const RepMap<S>& f);

template <class S>
PhiData<S> phi(const Rep<S>& m);

/// phi injective; cross-checked against the common kernel of all maps M -> A.
template <class S>
bool isTorsionless(const Rep<S>& m);

template <class S>
bool isReflexive(const Rep<S>& m);

/// dim End = 1. Needs the field size of endAlgebra.
template <class S>
bool isBrick(const Rep<S>& m);

template <class S>
bool areOrthogonal(const Rep<S>& m, const Rep<S>& n);

/// The maps m -> c have zero common kernel.
template <class S>
bool cogeneratedBy(const Rep<S>& m, const Rep<S>& c);

}  // namespace qb
