#include "quiverbench/approximation.hpp"

#include <algorithm>
#include <numeric>

#include "quiverbench/duality.hpp"

namespace qb {

namespace {

template <class S>
Vector<S> flatten(const Matrix<S>& m) {
  Vector<S> v(m.size());
  for (Index j = 0; j < m.cols(); ++j) v.segment(j * m.rows(), m.rows()) = m.col(j);
  return v;
}

template <class S>
Matrix<S> power(const Matrix<S>& g, int k) {
  Matrix<S> out = identity<S>(g.rows());
  for (int i = 0; i < k; ++i) out = out * g;
  return out;
}

// M -> X = (+)_j P(j)^(dim top(M*)_j), m |-> (f(m))_f over lifts f of a basis
// of top(M*). These generate M*, so every map M -> A factors through it.
template <class S>
std::pair<Rep<S>, Matrix<S>> evaluationMap(const Rep<S>& m) {
  const DualData<S> d = dualData(m);
  const Matrix<S> rad = radicalRep(d.dual).basis;
  std::vector<Rep<S>> parts;
  Matrix<S> stacked(0, m.dim());
  for (int j = 0; j < m.vertexCount(); ++j) {
    const auto& maps = d.maps[static_cast<std::size_t>(j)];
    const Matrix<S> radJ = columnBasis(Matrix<S>(rad.middleRows(d.dual.offset(j), d.dual.dims[static_cast<std::size_t>(j)])));
    const Matrix<S> top = complementBasis(radJ);
    for (Index t = 0; t < top.cols(); ++t) {
      Matrix<S> f = zeros<S>(maps.front().rows(), m.dim());
      for (Index k = 0; k < top.rows(); ++k)
        if (!isZero(top(k, t))) f += top(k, t) * maps[static_cast<std::size_t>(k)];
      parts.push_back(projective(m.algebra, j));
      stacked = vstack(stacked, f);
    }
  }
  if (parts.empty()) return {zeroRep(m.algebra), zeros<S>(0, m.dim())};
  // directSum orders coordinates vertex by vertex; reorder the stacked rows.
  const DirectSum<S> sum = directSum(parts);
  Matrix<S> g = zeros<S>(sum.rep.dim(), m.dim());
  Index row = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Matrix<S> inj = globalMatrix(parts[k], sum.rep, sum.injections[k]);
    g += inj * stacked.middleRows(row, parts[k].dim());
    row += parts[k].dim();
  }
  return {sum.rep, g};
}

// Largest target on which minimality is rechecked through rad End(X).
constexpr int kEndCertificateLimit = 16;

}  // namespace

template <class S>
Approximation<S> minimalLeftApprox(const Rep<S>& m) {
  auto [x, f] = evaluationMap(m);
  Approximation<S> out;
  out.source = m;
  for (;;) {
    if (x.dim() == 0) {
      out.target = x;
      out.map = mapFromGlobal(m, x, f);
      out.certifiedMinimal = true;
      return out;
    }
    if (x.dim() > kEndCertificateLimit) {
      // The generators map onto a basis of top(M*), so f*: X* -> M* is a
      // projective cover and f is already minimal.
      out.target = x;
      out.map = mapFromGlobal(m, x, f);
      out.annihilatorDim = -1;
      out.certifiedMinimal = true;
      return out;
    }
    const EndAlgebra<S> end = endAlgebra(x);
    // N = {g : g f = 0}, in End-basis coordinates.
    Matrix<S> system(static_cast<Index>(x.dim()) * m.dim(), end.dim());
    for (int k = 0; k < end.dim(); ++k) system.col(k) = flatten(Matrix<S>(end.global[static_cast<std::size_t>(k)] * f));
    const Matrix<S> n = nullspace(system);
    if (inColumnSpan(end.radical, n)) {
      out.target = x;
      out.map = mapFromGlobal(m, x, f);
      out.annihilatorDim = static_cast<int>(n.cols());
      out.certifiedMinimal = true;
      return out;
    }
    // N is a left ideal outside the radical, so it is not nil; some element
    // is not nilpotent and f lands in the generalised kernel of that element.
    auto asMatrix = [&](const Vector<S>& c) {
      Matrix<S> g = zeros<S>(x.dim(), x.dim());
      for (int k = 0; k < end.dim(); ++k)
        if (!isZero(c(k))) g += c(k) * end.global[static_cast<std::size_t>(k)];
      return g;
    };
    std::vector<Vector<S>> candidates;
    for (Index j = 0; j < n.cols(); ++j) candidates.push_back(n.col(j));
    Vector<S> sum = Vector<S>::Constant(end.dim(), S(0));
    for (Index j = 0; j < n.cols(); ++j) {
      sum += n.col(j);
      candidates.push_back(sum);
    }
    std::optional<Matrix<S>> fitting;
    for (const auto& c : candidates) {
      const Matrix<S> p = power(asMatrix(c), x.dim());
      if (!isZeroMatrix(p)) {
        fitting = p;
        break;
      }
    }
    if (!fitting) throw InternalError("no non-nilpotent element in the annihilator of an approximation");
    const Subrep<S> kept = kernel(x, mapFromGlobal(x, x, *fitting));
    const auto coords = solve(kept.basis, f);
    if (!coords) throw InternalError("approximation does not factor through the kept summand");
    x = kept.rep;
    f = *coords;
  }
}

template <class S>
Rep<S> mho(const Rep<S>& m) {
  if (m.dim() == 0 || isProjective(m)) return zeroRep(m.algebra);
  const Approximation<S> a = minimalLeftApprox(m);
  return cokernel(a.target, m, a.map).rep;
}

std::string terminationName(Termination t) {
  switch (t) {
    case Termination::ReachedProjective:
      return "reached projective";
    case Termination::ReachedNonTorsionless:
      return "reached non-torsionless";
    case Termination::RepeatDetected:
      return "repeat detected";
    case Termination::StepCap:
      return "step cap";
  }
  return "unknown";
}

template <class S>
std::vector<std::vector<int>> MhoQuiver<S>::components() const {
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& e : edges) {
    const int a = find(e.from);
    const int b = find(e.to);
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(nodes.size(), -1);
  for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
    const int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  return out;
}

template <class S>
MhoQuiver<S> mhoQuiver(const std::vector<Rep<S>>& seeds, const std::vector<std::string>& labels, int maxSteps) {
  if (labels.size() != seeds.size()) throw DimensionMismatch("one label per seed expected");
  MhoQuiver<S> q;
  std::vector<bool> expanded;
  auto locate = [&](const Rep<S>& m) -> int {
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
      if (q.nodes[i].rep.dims == m.dims && isIso(q.nodes[i].rep, m)) return static_cast<int>(i);
    return -1;
  };
  auto add = [&](const Rep<S>& m, std::string label) {
    MhoNode<S> node;
    node.rep = m;
    node.label = std::move(label);
    node.projective = isProjective(m);
    node.torsionless = isTorsionless(m);
    node.reflexive = isReflexive(m);
    node.indecomposable = isIndecomposable(m).verdict != Indecomposability::No;
    q.nodes.push_back(std::move(node));
    expanded.push_back(false);
    return static_cast<int>(q.nodes.size()) - 1;
  };

  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (seeds[s].dim() == 0) throw InvalidRepresentation("seed " + labels[s] + " is zero");
    MhoBranch branch;
    int current = locate(seeds[s]);
    if (current < 0) current = add(seeds[s], labels[s]);
    branch.seed = current;
    for (;;) {
      const auto& node = q.nodes[static_cast<std::size_t>(current)];
      if (expanded[static_cast<std::size_t>(current)]) {
        branch.reason = Termination::RepeatDetected;
        break;
      }
      if (node.projective) {
        branch.reason = Termination::ReachedProjective;
        break;
      }
      if (!node.torsionless) {
        branch.reason = Termination::ReachedNonTorsionless;
        break;
      }
      if (branch.steps == maxSteps) {
        branch.reason = Termination::StepCap;
        break;
      }
      expanded[static_cast<std::size_t>(current)] = true;
      const Rep<S> next = mho(node.rep);
      const std::string label = "mho(" + node.label + ")";
      ++branch.steps;
      if (next.dim() == 0) {
        branch.reason = Termination::ReachedProjective;
        break;
      }
      int target = locate(next);
      const bool repeat = target >= 0;
      if (!repeat) target = add(next, label);
      q.edges.push_back({target, current});
      if (repeat) {
        branch.reason = Termination::RepeatDetected;
        break;
      }
      current = target;
    }
    q.branches.push_back(branch);
  }
  return q;
}

#define QB_INSTANTIATE_APPROX(S)                                                                        \
  template Approximation<S> minimalLeftApprox<S>(const Rep<S>&);                                        \
  template Rep<S> mho<S>(const Rep<S>&);                                                                \
  template struct MhoQuiver<S>;                                                                         \
  template MhoQuiver<S> mhoQuiver<S>(const std::vector<Rep<S>>&, const std::vector<std::string>&, int);
QB_FOR_EACH_FIELD(QB_INSTANTIATE_APPROX)

}  // namespace qb
