#pragma once

// Text format for presentations.
//
//   # comment
//   name A2
//   field F101            (or Q; supported primes: 2 3 5 7 101)
//   vertices 1 2
//   arrow c 1 1
//   arrow x 2 1
//   relation c*x          (leftmost arrow applied last)
//   relation x*y - 2*y*x
//   nilpotency 12

#include <string>
#include <string_view>
#include <vector>

#include "quiverbench/presentation.hpp"

namespace qb {

/// Field names accepted in presentation and module files.
const std::vector<std::string>& supportedFields();

Presentation parsePresentation(std::string_view text);

/// Canonical text; parsePresentation(printPresentation(p)) == p.
std::string printPresentation(const Presentation& p);

/// Parses the right-hand side of a `relation` line against a quiver.
Relation parseRelation(const Quiver& q, std::string_view text);

std::string printRelation(const Quiver& q, const Relation& r);

}  // namespace qb
