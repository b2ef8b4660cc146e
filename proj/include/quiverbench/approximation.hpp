#pragma once

// Minimal left add(A)-approximations, the mho operator (their cokernels)
// and the graph obtained by iterating mho.

#include <string>
#include <vector>

#include "quiverbench/rep.hpp"

namespace qb {

template <class S>
struct Approximation {
  Rep<S> source;
  Rep<S> target;  // projective
  RepMap<S> map;
  // Dimension of {g in End(target) : g map = 0}; minimality means this
  // space lies in rad End(target). -1 when the target was too large to check.
  int annihilatorDim = 0;
  bool certifiedMinimal = false;
};

/// Starts from maps M -> P(j) lifting a basis of top(M*), then cuts away
/// summands until rad End(target) contains every g with g map = 0.
template <class S>
Approximation<S> minimalLeftApprox(const Rep<S>& m);

/// Cokernel of the minimal left approximation; zero for projective m.
template <class S>
Rep<S> mho(const Rep<S>& m);

enum class Termination { ReachedProjective, ReachedNonTorsionless, RepeatDetected, StepCap };

std::string terminationName(Termination t);

template <class S>
struct MhoNode {
  Rep<S> rep;
  std::string label;
  bool projective = false;
  bool torsionless = false;
  bool reflexive = false;
  bool indecomposable = true;
};

/// Edges point from mho(M) to M.
struct MhoEdge {
  int from = 0;
  int to = 0;
};

struct MhoBranch {
  int seed = 0;  // node index of the seed
  Termination reason = Termination::StepCap;
  int steps = 0;
};

template <class S>
struct MhoQuiver {
  std::vector<MhoNode<S>> nodes;
  std::vector<MhoEdge> edges;
  std::vector<MhoBranch> branches;

  /// Node indices per connected component, ordered by smallest member.
  std::vector<std::vector<int>> components() const;
};

/// Iterates mho from each seed until the image is projective, the current
/// module is not torsionless, a node repeats (up to isomorphism) or
/// maxSteps is reached. Only torsionless non-projective nodes are expanded.
template <class S>
MhoQuiver<S> mhoQuiver(const std::vector<Rep<S>>& seeds, const std::vector<std::string>& labels, int maxSteps = 16);

}  // namespace qb
