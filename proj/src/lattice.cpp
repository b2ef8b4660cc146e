#include <algorithm>
#include <deque>
#include <map>

#include "quiverbench/classification.hpp"

namespace qb {

namespace {

template <class S>
std::string keyOf(const Matrix<S>& rows) {
  std::string key = std::to_string(rows.rows()) + ":";
  for (Index i = 0; i < rows.rows(); ++i)
    for (Index j = 0; j < rows.cols(); ++j) key += static_cast<char>('0' + rows(i, j).value());
  return key;
}

// Next vector in lexicographic order over F_q; false after the last one.
template <class S>
bool advance(Vector<S>& v, std::uint64_t q) {
  for (Index i = 0; i < v.size(); ++i) {
    const auto next = v(i).value() + 1;
    if (next < q) {
      v(i) = S(static_cast<long long>(next));
      return true;
    }
    v(i) = S(0);
  }
  return false;
}

}  // namespace

template <class S>
SubmoduleLattice<S> submoduleLattice(const Rep<S>& m, int cap, bool reverse) {
  if constexpr (!FieldTraits<S>::finite) {
    throw BudgetExceeded("submodule lattices need the field F2 or F3, got " + FieldTraits<S>::name());
  } else {
    constexpr std::uint64_t q = FieldTraits<S>::order;
    if (q > 3) throw BudgetExceeded("submodule lattices need the field F2 or F3, got " + FieldTraits<S>::name());
    const int n = m.dim();
    if (n > cap) throw BudgetExceeded("module of dimension " + std::to_string(n) + " exceeds the lattice cap " + std::to_string(cap));

    const auto actions = basisActions(m);
    std::map<std::string, Matrix<S>> found;  // key -> canonical rows
    auto insert = [&](const Matrix<S>& columns) -> std::pair<bool, Matrix<S>> {
      const Matrix<S> rows = canonicalRowBasis(columns);
      const std::string key = keyOf(rows);
      const bool fresh = found.emplace(key, rows).second;
      return {fresh, rows};
    };

    std::vector<Vector<S>> vectors;
    Vector<S> v = Vector<S>::Constant(n, S(0));
    while (advance(v, q)) vectors.push_back(v);
    if (reverse) std::reverse(vectors.begin(), vectors.end());

    insert(zeros<S>(n, 0));
    std::vector<Matrix<S>> cyclic;
    for (const auto& x : vectors) {
      Matrix<S> span(n, static_cast<Index>(actions.size()));
      for (std::size_t i = 0; i < actions.size(); ++i) span.col(static_cast<Index>(i)) = actions[i] * x;
      auto [fresh, rows] = insert(span);
      if (fresh) cyclic.push_back(Matrix<S>(rows.transpose()));
    }

    std::deque<Matrix<S>> queue(cyclic.begin(), cyclic.end());
    while (!queue.empty()) {
      const Matrix<S> x = std::move(queue.front());
      queue.pop_front();
      if (x.cols() == n) continue;
      for (const auto& c : cyclic) {
        if (inColumnSpan(x, c)) continue;
        auto [fresh, rows] = insert(hstack(x, c));
        if (fresh) queue.push_back(Matrix<S>(rows.transpose()));
      }
    }

    std::vector<std::pair<std::string, Matrix<S>>> sorted(found.begin(), found.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& l, const auto& r) { return l.second.rows() < r.second.rows(); });
    SubmoduleLattice<S> out;
    out.ambient = m;
    for (auto& [key, rows] : sorted) out.submodules.push_back(Matrix<S>(rows.transpose()));
    return out;
  }
}

#define QB_INSTANTIATE_LATTICE(S) template SubmoduleLattice<S> submoduleLattice<S>(const Rep<S>&, int, bool);
QB_FOR_EACH_FIELD(QB_INSTANTIATE_LATTICE)

}  // namespace qb
