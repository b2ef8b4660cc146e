#pragma once

// Text format for modules and the named constructions accepted on the
// command line.
//
//   # comment
//   dims 1 1
//   arrow b : 1
//   arrow c : 0
//
// Arrow matrices are dims[target] x dims[source], rows separated by ';'.
// Entries are integers or fractions a/b. Arrows that are not listed act
// as zero.

#include <string>
#include <string_view>

#include "quiverbench/rep.hpp"

namespace qb {

template <class S>
Rep<S> parseModule(const AlgebraPtr<S>& a, std::string_view text);

template <class S>
std::string printModule(const Rep<S>& m);

/// "S<v>", "P<v>", "I<v>", "rad(P<v>)", "soc(P<v>)", "A" (the regular
/// module), with v a vertex name.
template <class S>
Rep<S> namedModule(const AlgebraPtr<S>& a, const std::string& descriptor);

/// True when `descriptor` has the shape accepted by namedModule.
bool isModuleDescriptor(const std::string& descriptor);

}  // namespace qb
