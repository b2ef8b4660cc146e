#pragma once

// Builders for the algebras of the shipped corpus.

#include <string>
#include <vector>

#include "quiverbench/presentation.hpp"

namespace qb {

struct CorpusEntry {
  std::string name;  // also the stem of the fact file
  Presentation presentation;
  bool selfInjective = false;  // expected by construction
};

/// Arrows c: 1->1, b: 1->2, x, y: 2->1; relations cx, by, c^2, bc, xb, yb.
CorpusEntry familyA2();

/// The n-vertex generalisation (n >= 3): x, y: n->1, c: 1->1, b: 1->2,
/// a_i: i->i+1; relations cx, by, c^2, bc, a_2 b, a_{i+1} a_i, x a_{n-1}, y a_{n-1}.
CorpusEntry familyAn(int n);

/// 1 <- 2 <- 3 with the composite 3 -> 1 zero.
CorpusEntry threeVertexExample();

/// Cyclic quiver on n vertices with all paths of length 2 (or 3) zero.
CorpusEntry nakayamaCycle(int n, bool radSquareZero);

enum class LocalKind {
  Truncated,           // k[x]/(x^k)
  TwoLoopsSquareZero,  // k<x,y>/(x^2, y^2, xy, yx)
  Commutative,         // k[x,y]/(x^2, y^2)
  TwoLoopsMixed,       // k<x,y>/(x^2, xy, yx, y^3)
};

/// One-vertex algebras; `power` is only used by LocalKind::Truncated.
CorpusEntry localTruncated(LocalKind kind, int power = 2);

/// Linearly oriented A_n: 1 -> 2 -> ... -> n, no relations.
CorpusEntry lineQuiver(int n);

/// n vertices, no arrows.
CorpusEntry semisimple(int n);

/// The shipped corpus in canonical order.
std::vector<CorpusEntry> corpus();

}  // namespace qb
