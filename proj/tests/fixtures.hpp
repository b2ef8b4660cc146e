#pragma once

// Small shared helpers for the test binaries.

#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "quiverbench/algebra.hpp"
#include "quiverbench/corpus.hpp"
#include "quiverbench/rep.hpp"

namespace qbtest {

using namespace qb;

template <class S = F101>
AlgebraPtr<S> algebraA2() {
  return buildAlgebra<S>(familyA2().presentation);
}

template <class S>
AlgebraPtr<S> semisimpleAlgebra(int n) {
  return buildAlgebra<S>(semisimple(n).presentation);
}

inline int labelIndex(const Algebra<F101>& a, const std::string& label) {
  const auto it = std::find(a.labels.begin(), a.labels.end(), label);
  REQUIRE(it != a.labels.end());
  return static_cast<int>(it - a.labels.begin());
}

/// Global coordinate vector of the basis word `label` inside P(vertex).
template <class S>
Vector<S> wordInProjective(const AlgebraPtr<S>& a, int vertex, const std::string& label) {
  const auto order = projectiveOrder(*a, vertex);
  const auto it = std::find(a->labels.begin(), a->labels.end(), label);
  REQUIRE(it != a->labels.end());
  const int idx = static_cast<int>(it - a->labels.begin());
  const auto pos = std::find(order.begin(), order.end(), idx);
  REQUIRE(pos != order.end());
  Vector<S> v = Vector<S>::Constant(static_cast<Index>(order.size()), S(0));
  v(pos - order.begin()) = S(1);
  return v;
}

/// P(vertex) modulo the submodule generated by the given words.
template <class S>
Rep<S> projectiveModulo(const AlgebraPtr<S>& a, int vertex, const std::vector<std::string>& words) {
  const Rep<S> p = projective(a, vertex);
  std::vector<Vector<S>> gens;
  for (const auto& w : words) gens.push_back(wordInProjective(a, vertex, w));
  const auto sub = subRepGenerated(p, gens);
  return quotientRep(p, sub.basis).rep;
}

/// Submodule of P(vertex) generated by the given words.
template <class S>
Rep<S> projectiveSub(const AlgebraPtr<S>& a, int vertex, const std::vector<std::string>& words) {
  const Rep<S> p = projective(a, vertex);
  std::vector<Vector<S>> gens;
  for (const auto& w : words) gens.push_back(wordInProjective(a, vertex, w));
  return subRepGenerated(p, gens).rep;
}

/// The length-two modules with top S(1) over A(2): B has socle S(2), C has socle S(1).
template <class S>
Rep<S> moduleB(const AlgebraPtr<S>& a) {
  return projectiveModulo(a, 0, {"c"});
}

template <class S>
Rep<S> moduleC(const AlgebraPtr<S>& a) {
  return projectiveModulo(a, 0, {"b"});
}

}  // namespace qbtest
