#include "quiverbench/rep.hpp"

namespace qb {

template <class S>
ProjectiveCover<S> projectiveCover(const Rep<S>& m) {
  const auto& a = m.algebra;
  ProjectiveCover<S> out;
  out.multiplicity.assign(static_cast<std::size_t>(m.vertexCount()), 0);
  const Subrep<S> rad = radicalRep(m);
  std::vector<Rep<S>> parts;
  std::vector<Vector<S>> tops;
  std::vector<int> vertexOf;
  for (int v = 0; v < m.vertexCount(); ++v) {
    const Matrix<S> comp = complementBasis(rad.inclusion.blocks[static_cast<std::size_t>(v)]);
    out.multiplicity[static_cast<std::size_t>(v)] = static_cast<int>(comp.cols());
    for (Index k = 0; k < comp.cols(); ++k) {
      Vector<S> t = Vector<S>::Constant(m.dim(), S(0));
      t.segment(m.offset(v), m.dims[static_cast<std::size_t>(v)]) = comp.col(k);
      tops.push_back(std::move(t));
      parts.push_back(projective(a, v));
      vertexOf.push_back(v);
    }
  }
  if (parts.empty()) {
    out.projective = zeroRep(a);
    out.map = zeroMap(out.projective, m);
    return out;
  }
  const DirectSum<S> sum = directSum(parts);
  const auto actions = basisActions(m);
  out.projective = sum.rep;
  out.map = zeroMap(sum.rep, m);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto order = projectiveOrder(*a, vertexOf[k]);
    Matrix<S> g(m.dim(), static_cast<Index>(order.size()));
    for (std::size_t j = 0; j < order.size(); ++j)
      g.col(static_cast<Index>(j)) = actions[static_cast<std::size_t>(order[j])] * tops[k];
    const RepMap<S> piece = compose(mapFromGlobal(parts[k], m, g), sum.projections[k]);
    for (std::size_t v = 0; v < piece.blocks.size(); ++v) out.map.blocks[v] += piece.blocks[v];
  }
  return out;
}

template <class S>
Subrep<S> syzygy(const Rep<S>& m) {
  const auto cover = projectiveCover(m);
  return kernel(cover.projective, cover.map);
}

template <class S>
bool isProjective(const Rep<S>& m) {
  return projectiveCover(m).projective.dim() == m.dim();
}

template <class S>
Rep<S> linearDual(const Rep<S>& m) {
  Rep<S> d;
  d.algebra = opposite(m.algebra);
  d.dims = m.dims;
  for (const auto& mat : m.arrows) d.arrows.push_back(mat.transpose());
  return d;
}

template <class S>
RepMap<S> linearDualMap(const RepMap<S>& f) {
  RepMap<S> out;
  for (const auto& b : f.blocks) out.blocks.push_back(b.transpose());
  return out;
}

template <class S>
InjectiveEnvelope<S> injectiveEnvelope(const Rep<S>& m) {
  const auto cover = projectiveCover(linearDual(m));
  InjectiveEnvelope<S> out;
  out.injective = linearDual(cover.projective);
  out.injective.algebra = m.algebra;
  out.map = linearDualMap(cover.map);
  return out;
}

template <class S>
int ext1(const Rep<S>& m, const Rep<S>& n) {
  requireSameAlgebra(m, n);
  const auto cover = projectiveCover(m);
  const Subrep<S> omega = kernel(cover.projective, cover.map);
  const int homOmega = homDim(omega.rep, n);
  const auto h = homBasis(cover.projective, n);
  Matrix<S> restricted(Index{n.dim()} * omega.rep.dim(), static_cast<Index>(h.size()));
  for (std::size_t k = 0; k < h.size(); ++k) {
    const Matrix<S> g = globalMatrix(omega.rep, n, compose(h[k], omega.inclusion));
    restricted.col(static_cast<Index>(k)) = Eigen::Map<const Vector<S>>(g.data(), g.size());
  }
  return homOmega - static_cast<int>(rank(restricted));
}

template <class S>
bool projDimAtMost(const Rep<S>& m, int k) {
  if (k < 0) throw Error("projective dimension bound must be non-negative");
  Rep<S> x = m;
  for (int i = 0; i < k; ++i) {
    if (isProjective(x)) return true;
    x = syzygy(x).rep;
  }
  return isProjective(x);
}

template <class S>
std::vector<int> socleMultiplicities(const Rep<S>& m) {
  return socleRep(m).rep.dims;
}

template <class S>
std::vector<int> topMultiplicities(const Rep<S>& m) {
  return topRep(m).rep.dims;
}

#define QB_INSTANTIATE_HOMOLOGICAL(S)                                    \
  template ProjectiveCover<S> projectiveCover<S>(const Rep<S>&);         \
  template Subrep<S> syzygy<S>(const Rep<S>&);                           \
  template bool isProjective<S>(const Rep<S>&);                          \
  template Rep<S> linearDual<S>(const Rep<S>&);                          \
  template RepMap<S> linearDualMap<S>(const RepMap<S>&);                 \
  template InjectiveEnvelope<S> injectiveEnvelope<S>(const Rep<S>&);     \
  template int ext1<S>(const Rep<S>&, const Rep<S>&);                    \
  template bool projDimAtMost<S>(const Rep<S>&, int);                    \
  template std::vector<int> socleMultiplicities<S>(const Rep<S>&);       \
  template std::vector<int> topMultiplicities<S>(const Rep<S>&);

QB_FOR_EACH_FIELD(QB_INSTANTIATE_HOMOLOGICAL)

}  // namespace qb
