#pragma once

// Field-independent description of a bound quiver algebra kQ/I.
//
// Paths are written in functional order: the word "cx" (arrows {c, x})
// applies x first and then c, so it is composable iff source(c) == target(x).

#include <string>
#include <string_view>
#include <vector>

#include "quiverbench/errors.hpp"
#include "quiverbench/field.hpp"

namespace qb {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertexCount() const { return static_cast<int>(vertices.size()); }
  int arrowCount() const { return static_cast<int>(arrows.size()); }
  /// -1 when absent.
  int vertexIndex(std::string_view name) const;
  int arrowIndex(std::string_view name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path of the quiver. Trivial paths have no arrows and source == target.
struct Path {
  std::vector<int> arrows;  // leftmost is applied last
  int source = 0;
  int target = 0;

  int length() const { return static_cast<int>(arrows.size()); }
  bool isTrivial() const { return arrows.empty(); }

  static Path trivial(int vertex) { return Path{{}, vertex, vertex}; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds the path of the given arrow word; throws InvalidPresentation if two
/// neighbouring arrows do not compose.
Path makePath(const Quiver& q, const std::vector<int>& arrows);

/// The product left*right (right applied first), or an empty optional-like
/// flag through `ok` when the endpoints do not match.
Path concatenate(const Path& left, const Path& right, bool& ok);

/// Basis-order comparison: length, then source vertex, then arrow names.
bool pathLess(const Quiver& q, const Path& a, const Path& b);

/// "e1" for trivial paths; concatenated names ("bx") when every arrow name in
/// the quiver is a single character, otherwise names joined by '*'.
std::string pathLabel(const Quiver& q, const Path& p);

struct Term {
  BigInt coefficient;
  Path path;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Relation {
  std::vector<Term> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  std::string name;
  std::string field = "F101";
  Quiver quiver;
  std::vector<Relation> relations;
  /// Longest path length considered when building the algebra.
  int nilpotencyBound = 12;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Presentation of the opposite algebra: arrows reversed, words reversed.
Presentation oppositePresentation(const Presentation& p);

/// Names unique, endpoints declared, bound >= 1, every relation word
/// composable. With `requireAdmissibleWords`, every word must have length >= 2.
void validatePresentation(const Presentation& p, bool requireAdmissibleWords = true);

/// Splits each relation into its components e_t * r * e_s; each returned
/// relation has terms with a common source and target.
std::vector<Relation> uniformRelations(const Presentation& p);

}  // namespace qb
