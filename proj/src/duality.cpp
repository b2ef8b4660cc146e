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
Vector<S> coordinatesOf(const CoordinateSolver<S>& solver, const Matrix<S>& map, const char* what) {
  auto c = solver.checkedCoordinates(flatten(map));
  if (!c) throw InternalError(std::string(what) + " is not a module homomorphism");
  return *c;
}

// Stacked global matrices of a Hom basis; its nullspace is the common kernel.
template <class S>
Index commonKernelDim(const Rep<S>& m, const Rep<S>& c) {
  Matrix<S> stacked(0, m.dim());
  for (const auto& f : homBasis(m, c)) stacked = vstack(stacked, globalMatrix(m, c, f));
  return m.dim() - rank(stacked);
}

}  // namespace

template <class S>
DualData<S> dualData(const Rep<S>& m) {
  const auto& a = m.algebra;
  const int n = m.vertexCount();
  DualData<S> d;
  d.source = m;
  std::vector<int> dims;
  for (int j = 0; j < n; ++j) {
    const Rep<S> p = projective(a, j);
    std::vector<Matrix<S>> maps;
    for (const auto& f : homBasis(m, p)) maps.push_back(globalMatrix(m, p, f));
    Matrix<S> flat(static_cast<Index>(p.dim()) * m.dim(), static_cast<Index>(maps.size()));
    for (std::size_t k = 0; k < maps.size(); ++k) flat.col(static_cast<Index>(k)) = flatten(maps[k]);
    dims.push_back(static_cast<int>(maps.size()));
    d.solvers.emplace_back(flat);
    d.maps.push_back(std::move(maps));
  }
  // The arrow a: s -> t acts on the right, Hom(M, P(t)) -> Hom(M, P(s)),
  // by composing with w |-> w a.
  const Quiver& q = a->quiver();
  std::vector<Matrix<S>> arrows;
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    const Matrix<S> right = rightMultiplication(*a, a->arrowElements[static_cast<std::size_t>(ai)]);
    const auto rows = projectiveOrder(*a, arrow.source);
    const auto cols = projectiveOrder(*a, arrow.target);
    Matrix<S> rho(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) rho(static_cast<Index>(r), static_cast<Index>(c)) = right(rows[r], cols[c]);
    const auto& from = d.maps[static_cast<std::size_t>(arrow.target)];
    Matrix<S> mat(dims[static_cast<std::size_t>(arrow.source)], static_cast<Index>(from.size()));
    for (std::size_t k = 0; k < from.size(); ++k)
      mat.col(static_cast<Index>(k)) =
          coordinatesOf(d.solvers[static_cast<std::size_t>(arrow.source)], Matrix<S>(rho * from[k]), "right action");
    arrows.push_back(std::move(mat));
  }
  d.dual = makeRep(opposite(a), std::move(dims), std::move(arrows));
  return d;
}

template <class S>
Rep<S> aDual(const Rep<S>& m) {
  Rep<S> dual = dualData(m).dual;
  if (m.dim() == 1) {
    // Hom(S(v), A) is e_v soc(A).
    const auto& a = *m.algebra;
    int v = 0;
    while (m.dims[static_cast<std::size_t>(v)] == 0) ++v;
    const Matrix<S> e = leftMultiplication(a, basisVector(a, a.idempotents[static_cast<std::size_t>(v)]));
    if (rank(Matrix<S>(e * socleLeftRegular(a))) != dual.dim())
      throw InternalError("dim S* disagrees with dim e soc(A) at vertex " + std::to_string(v + 1));
  }
  return dual;
}

template <class S>
RepMap<S> dualMap(const DualData<S>& m, const DualData<S>& n, const RepMap<S>& f) {
  const Matrix<S> g = globalMatrix(m.source, n.source, f);
  RepMap<S> out;
  for (std::size_t j = 0; j < n.maps.size(); ++j) {
    Matrix<S> block(m.dual.dims[j], static_cast<Index>(n.maps[j].size()));
    for (std::size_t k = 0; k < n.maps[j].size(); ++k)
      block.col(static_cast<Index>(k)) = coordinatesOf(m.solvers[j], Matrix<S>(n.maps[j][k] * g), "dual map");
    out.blocks.push_back(std::move(block));
  }
  return out;
}

template <class S>
PhiData<S> phi(const Rep<S>& m) {
  PhiData<S> out;
  out.first = dualData(m);
  out.second = dualData(out.first.dual);
  const auto& a = *m.algebra;
  const auto& op = *out.first.dual.algebra;
  const Rep<S>& star = out.first.dual;
  const Rep<S>& bidual = out.second.dual;
  for (int i = 0; i < m.vertexCount(); ++i) {
    // phi(m)(f) = f(m), read in P^op(i) = e_i A.
    const auto target = projectiveOrder(op, i);
    std::vector<Index> position(static_cast<std::size_t>(a.dim()), -1);
    for (std::size_t r = 0; r < target.size(); ++r) position[static_cast<std::size_t>(target[r])] = static_cast<Index>(r);
    Matrix<S> block(bidual.dims[static_cast<std::size_t>(i)], m.dims[static_cast<std::size_t>(i)]);
    for (int r = 0; r < m.dims[static_cast<std::size_t>(i)]; ++r) {
      const Index col = m.offset(i) + r;
      Matrix<S> eval = zeros<S>(static_cast<Index>(target.size()), star.dim());
      for (int j = 0; j < m.vertexCount(); ++j) {
        const auto words = projectiveOrder(a, j);
        const auto& maps = out.first.maps[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < maps.size(); ++k) {
          const Vector<S> y = maps[k].col(col);
          for (Index q = 0; q < y.size(); ++q) {
            if (isZero(y(q))) continue;
            const Index row = position[static_cast<std::size_t>(words[static_cast<std::size_t>(q)])];
            if (row < 0) throw InternalError("evaluation leaves e_i A");
            eval(row, star.offset(j) + static_cast<Index>(k)) = y(q);
          }
        }
      }
      block.col(r) = coordinatesOf(out.second.solvers[static_cast<std::size_t>(i)], eval, "evaluation");
    }
    out.phi.blocks.push_back(std::move(block));
  }
  const Matrix<S> g = globalMatrix(m, bidual, out.phi);
  out.kernelDim = static_cast<int>(m.dim() - rank(g));
  out.cokernel = cokernel(bidual, m, out.phi).rep;
  return out;
}

template <class S>
bool isTorsionless(const Rep<S>& m) {
  const bool viaPhi = phi(m).kernelDim == 0;
  const bool viaKernel = commonKernelDim(m, regularRep(m.algebra)) == 0;
  if (viaPhi != viaKernel) throw InternalError("torsionless tests disagree");
  return viaPhi;
}

template <class S>
bool isReflexive(const Rep<S>& m) {
  const auto p = phi(m);
  return p.kernelDim == 0 && p.doubleDual().dim() == m.dim();
}

template <class S>
bool isBrick(const Rep<S>& m) {
  return endAlgebra(m).dim() == 1;
}

template <class S>
bool areOrthogonal(const Rep<S>& m, const Rep<S>& n) {
  return homDim(m, n) == 0 && homDim(n, m) == 0;
}

template <class S>
bool cogeneratedBy(const Rep<S>& m, const Rep<S>& c) {
  requireSameAlgebra(m, c);
  return commonKernelDim(m, c) == 0;
}

#define QB_INSTANTIATE_DUALITY(S)                                                           \
  template DualData<S> dualData<S>(const Rep<S>&);                                          \
  template Rep<S> aDual<S>(const Rep<S>&);                                                  \
  template RepMap<S> dualMap<S>(const DualData<S>&, const DualData<S>&, const RepMap<S>&); \
  template PhiData<S> phi<S>(const Rep<S>&);                                                \
  template bool isTorsionless<S>(const Rep<S>&);                                            \
  template bool isReflexive<S>(const Rep<S>&);                                              \
  template bool isBrick<S>(const Rep<S>&);                                                  \
  template bool areOrthogonal<S>(const Rep<S>&, const Rep<S>&);                             \
  template bool cogeneratedBy<S>(const Rep<S>&, const Rep<S>&);
QB_FOR_EACH_FIELD(QB_INSTANTIATE_DUALITY)

}  // namespace qb
