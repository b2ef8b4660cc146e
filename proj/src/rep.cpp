#include "quiverbench/rep.hpp"

#include <map>

namespace qb {

namespace {

template <class S>
std::vector<int> wordsBy(const Algebra<S>& a, int fixedSource) {
  // Words grouped by target vertex, basis order inside each group; when
  // fixedSource >= 0 only words starting there are kept.
  std::vector<int> order;
  for (int v = 0; v < a.vertexCount(); ++v)
    for (int i = 0; i < a.dim(); ++i) {
      const Path& w = a.basis[static_cast<std::size_t>(i)];
      if (w.target == v && (fixedSource < 0 || w.source == fixedSource)) order.push_back(i);
    }
  return order;
}

// Left ideal spanned by `order` (closed under left multiplication) as a Rep.
template <class S>
Rep<S> repOnWords(const AlgebraPtr<S>& a, const std::vector<int>& order) {
  Rep<S> m;
  m.algebra = a;
  m.dims.assign(static_cast<std::size_t>(a->vertexCount()), 0);
  std::vector<int> position(static_cast<std::size_t>(a->dim()), -1);
  std::vector<int> local(static_cast<std::size_t>(a->dim()), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int w = order[k];
    const int v = a->basis[static_cast<std::size_t>(w)].target;
    position[static_cast<std::size_t>(w)] = static_cast<int>(k);
    local[static_cast<std::size_t>(w)] = m.dims[static_cast<std::size_t>(v)]++;
  }
  const Quiver& q = a->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    Matrix<S> mat = zeros<S>(m.dims[static_cast<std::size_t>(arrow.target)], m.dims[static_cast<std::size_t>(arrow.source)]);
    const Matrix<S> act = leftMultiplication(*a, a->arrowElements[static_cast<std::size_t>(ai)]);
    for (int w : order) {
      if (a->basis[static_cast<std::size_t>(w)].target != arrow.source) continue;
      const Vector<S> img = act.col(w);
      for (int u = 0; u < a->dim(); ++u) {
        if (isZero(img(u))) continue;
        if (local[static_cast<std::size_t>(u)] < 0) throw InternalError("word span is not a left ideal");
        mat(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(w)]) = img(u);
      }
    }
    m.arrows.push_back(std::move(mat));
  }
  return m;
}

// Per-vertex column bases of a span that is stable under the vertex idempotents.
template <class S>
std::vector<Matrix<S>> vertexBases(const Rep<S>& m, const Matrix<S>& columns) {
  std::vector<Matrix<S>> out;
  for (int v = 0; v < m.vertexCount(); ++v) {
    const Matrix<S> part = columns.middleRows(m.offset(v), m.dims[static_cast<std::size_t>(v)]);
    out.push_back(columnBasis(part));
  }
  return out;
}

template <class S>
Matrix<S> embedVertexBases(const Rep<S>& m, const std::vector<Matrix<S>>& bases) {
  Index total = 0;
  for (const auto& b : bases) total += b.cols();
  Matrix<S> out = zeros<S>(m.dim(), total);
  Index col = 0;
  for (int v = 0; v < m.vertexCount(); ++v) {
    const auto& b = bases[static_cast<std::size_t>(v)];
    out.block(m.offset(v), col, b.rows(), b.cols()) = b;
    col += b.cols();
  }
  return out;
}

// Builds the submodule whose vertex-v space has basis bases[v].
template <class S>
Subrep<S> subrepFromVertexBases(const Rep<S>& m, std::vector<Matrix<S>> bases) {
  Subrep<S> s;
  s.rep.algebra = m.algebra;
  std::vector<CoordinateSolver<S>> solvers;
  for (int v = 0; v < m.vertexCount(); ++v) {
    s.rep.dims.push_back(static_cast<int>(bases[static_cast<std::size_t>(v)].cols()));
    solvers.emplace_back(bases[static_cast<std::size_t>(v)]);
  }
  const Quiver& q = m.algebra->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    const auto& src = bases[static_cast<std::size_t>(arrow.source)];
    Matrix<S> mat(s.rep.dims[static_cast<std::size_t>(arrow.target)], src.cols());
    for (Index j = 0; j < src.cols(); ++j) {
      const Vector<S> img = m.arrows[static_cast<std::size_t>(ai)] * src.col(j);
      const auto c = solvers[static_cast<std::size_t>(arrow.target)].checkedCoordinates(img);
      if (!c) throw InvalidRepresentation("subspace is not closed under arrow " + arrow.name);
      mat.col(j) = *c;
    }
    s.rep.arrows.push_back(std::move(mat));
  }
  s.basis = embedVertexBases(m, bases);
  s.inclusion.blocks = std::move(bases);
  return s;
}

}  // namespace

// ---- construction -----------------------------------------------------------

template <class S>
std::string representationDefect(const Rep<S>& m) {
  const Algebra<S>& a = *m.algebra;
  const Quiver& q = a.quiver();
  if (m.vertexCount() != q.vertexCount()) return "expected " + std::to_string(q.vertexCount()) + " vertex dimensions";
  for (int d : m.dims)
    if (d < 0) return "negative dimension";
  if (static_cast<int>(m.arrows.size()) != q.arrowCount())
    return "expected " + std::to_string(q.arrowCount()) + " arrow matrices";
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    const auto& mat = m.arrows[static_cast<std::size_t>(ai)];
    if (mat.rows() != m.dims[static_cast<std::size_t>(arrow.target)] ||
        mat.cols() != m.dims[static_cast<std::size_t>(arrow.source)])
      return "arrow " + arrow.name + " has shape " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
             ", expected " + std::to_string(m.dims[static_cast<std::size_t>(arrow.target)]) + "x" +
             std::to_string(m.dims[static_cast<std::size_t>(arrow.source)]);
  }
  // Every path w must act as its normal form; paths of length loewyLength
  // act as zero, so longer ones need no check.
  const auto actions = basisActions(m);
  std::vector<Matrix<S>> arrowsG;
  std::vector<Matrix<S>> arrowsL;
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    arrowsG.push_back(globalArrow(m, ai));
    arrowsL.push_back(leftMultiplication(a, a.arrowElements[static_cast<std::size_t>(ai)]));
  }
  struct Node {
    Matrix<S> action;
    Vector<S> normal;
    int target;
    int length;
    std::string word;
  };
  std::vector<Node> stack;
  for (int v = 0; v < q.vertexCount(); ++v)
    stack.push_back({vertexProjector(m, v), basisVector(a, a.idempotents[static_cast<std::size_t>(v)]), v, 0,
                     "e" + q.vertices[static_cast<std::size_t>(v)]});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    Matrix<S> expected = zeros<S>(m.dim(), m.dim());
    for (int i = 0; i < a.dim(); ++i)
      if (!isZero(node.normal(i))) expected += node.normal(i) * actions[static_cast<std::size_t>(i)];
    if (expected != node.action) return "the relation for path " + node.word + " fails";
    if (node.length >= a.loewyLength) continue;
    if (isZeroMatrix(node.action) && isZeroVector(node.normal)) continue;
    for (int ai = 0; ai < q.arrowCount(); ++ai) {
      const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
      if (arrow.source != node.target) continue;
      stack.push_back({arrowsG[static_cast<std::size_t>(ai)] * node.action, arrowsL[static_cast<std::size_t>(ai)] * node.normal,
                       arrow.target, node.length + 1, arrow.name + (node.length ? "*" + node.word : std::string())});
    }
  }
  return {};
}

template <class S>
Rep<S> makeRep(const AlgebraPtr<S>& a, std::vector<int> dims, std::vector<Matrix<S>> arrows) {
  Rep<S> m{a, std::move(dims), std::move(arrows)};
  const std::string defect = representationDefect(m);
  if (!defect.empty()) throw InvalidRepresentation(defect);
  return m;
}

template <class S>
Rep<S> zeroRep(const AlgebraPtr<S>& a) {
  Rep<S> m;
  m.algebra = a;
  m.dims.assign(static_cast<std::size_t>(a->vertexCount()), 0);
  for (const Arrow& arrow : a->quiver().arrows) {
    (void)arrow;
    m.arrows.push_back(Matrix<S>(0, 0));
  }
  return m;
}

template <class S>
std::vector<int> regularOrder(const Algebra<S>& a) {
  return wordsBy(a, -1);
}

template <class S>
Rep<S> regularRep(const AlgebraPtr<S>& a) {
  return repOnWords(a, regularOrder(*a));
}

template <class S>
std::vector<int> projectiveOrder(const Algebra<S>& a, int vertex) {
  if (vertex < 0 || vertex >= a.vertexCount()) throw Error("unknown vertex " + std::to_string(vertex + 1));
  return wordsBy(a, vertex);
}

template <class S>
Rep<S> projective(const AlgebraPtr<S>& a, int vertex) {
  return repOnWords(a, projectiveOrder(*a, vertex));
}

template <class S>
Rep<S> simple(const AlgebraPtr<S>& a, int vertex) {
  if (vertex < 0 || vertex >= a->vertexCount()) throw Error("unknown vertex " + std::to_string(vertex + 1));
  Rep<S> m = zeroRep(a);
  m.dims[static_cast<std::size_t>(vertex)] = 1;
  const Quiver& q = a->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    m.arrows[static_cast<std::size_t>(ai)] =
        zeros<S>(m.dims[static_cast<std::size_t>(arrow.target)], m.dims[static_cast<std::size_t>(arrow.source)]);
  }
  return m;
}

// ---- global coordinates -----------------------------------------------------

template <class S>
Matrix<S> globalArrow(const Rep<S>& m, int ai) {
  const Arrow& arrow = m.algebra->quiver().arrows[static_cast<std::size_t>(ai)];
  Matrix<S> g = zeros<S>(m.dim(), m.dim());
  g.block(m.offset(arrow.target), m.offset(arrow.source), m.dims[static_cast<std::size_t>(arrow.target)],
          m.dims[static_cast<std::size_t>(arrow.source)]) = m.arrows[static_cast<std::size_t>(ai)];
  return g;
}

template <class S>
Matrix<S> vertexProjector(const Rep<S>& m, int v) {
  Matrix<S> g = zeros<S>(m.dim(), m.dim());
  for (int i = 0; i < m.dims[static_cast<std::size_t>(v)]; ++i) g(m.offset(v) + i, m.offset(v) + i) = S(1);
  return g;
}

template <class S>
std::vector<Matrix<S>> basisActions(const Rep<S>& m) {
  const Algebra<S>& a = *m.algebra;
  std::vector<Matrix<S>> arrowsG;
  for (int ai = 0; ai < a.quiver().arrowCount(); ++ai) arrowsG.push_back(globalArrow(m, ai));
  std::vector<Matrix<S>> out;
  for (const Path& w : a.basis) {
    Matrix<S> act = vertexProjector(m, w.source);
    for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) act = arrowsG[static_cast<std::size_t>(*it)] * act;
    out.push_back(std::move(act));
  }
  return out;
}

template <class S>
Matrix<S> elementAction(const Rep<S>& m, const Vector<S>& x) {
  const auto actions = basisActions(m);
  Matrix<S> out = zeros<S>(m.dim(), m.dim());
  for (Index i = 0; i < x.size(); ++i)
    if (!isZero(x(i))) out += x(i) * actions[static_cast<std::size_t>(i)];
  return out;
}

template <class S>
Matrix<S> globalMatrix(const Rep<S>& source, const Rep<S>& target, const RepMap<S>& f) {
  Matrix<S> g = zeros<S>(target.dim(), source.dim());
  for (int v = 0; v < source.vertexCount(); ++v)
    g.block(target.offset(v), source.offset(v), target.dims[static_cast<std::size_t>(v)],
            source.dims[static_cast<std::size_t>(v)]) = f.blocks[static_cast<std::size_t>(v)];
  return g;
}

template <class S>
RepMap<S> mapFromGlobal(const Rep<S>& source, const Rep<S>& target, const Matrix<S>& g) {
  if (g.rows() != target.dim() || g.cols() != source.dim()) throw DimensionMismatch("global map has the wrong shape");
  RepMap<S> f;
  for (int v = 0; v < source.vertexCount(); ++v)
    f.blocks.push_back(g.block(target.offset(v), source.offset(v), target.dims[static_cast<std::size_t>(v)],
                               source.dims[static_cast<std::size_t>(v)]));
  if (globalMatrix(source, target, f) != g) throw InvalidRepresentation("map does not respect the vertex grading");
  return f;
}

// ---- maps -------------------------------------------------------------------

template <class S>
bool isRepMap(const Rep<S>& source, const Rep<S>& target, const RepMap<S>& f) {
  if (static_cast<int>(f.blocks.size()) != source.vertexCount()) return false;
  for (int v = 0; v < source.vertexCount(); ++v) {
    const auto& b = f.blocks[static_cast<std::size_t>(v)];
    if (b.rows() != target.dims[static_cast<std::size_t>(v)] || b.cols() != source.dims[static_cast<std::size_t>(v)])
      return false;
  }
  const Quiver& q = source.algebra->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    if (Matrix<S>(target.arrows[static_cast<std::size_t>(ai)] * f.blocks[static_cast<std::size_t>(arrow.source)]) !=
        Matrix<S>(f.blocks[static_cast<std::size_t>(arrow.target)] * source.arrows[static_cast<std::size_t>(ai)]))
      return false;
  }
  return true;
}

template <class S>
RepMap<S> identityMap(const Rep<S>& m) {
  RepMap<S> f;
  for (int d : m.dims) f.blocks.push_back(identity<S>(d));
  return f;
}

template <class S>
RepMap<S> zeroMap(const Rep<S>& source, const Rep<S>& target) {
  RepMap<S> f;
  for (int v = 0; v < source.vertexCount(); ++v)
    f.blocks.push_back(zeros<S>(target.dims[static_cast<std::size_t>(v)], source.dims[static_cast<std::size_t>(v)]));
  return f;
}

template <class S>
RepMap<S> compose(const RepMap<S>& g, const RepMap<S>& f) {
  if (g.blocks.size() != f.blocks.size()) throw DimensionMismatch("compose: vertex counts differ");
  RepMap<S> h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    if (g.blocks[v].cols() != f.blocks[v].rows()) throw DimensionMismatch("compose: inner dimensions differ");
    h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  }
  return h;
}

template <class S>
bool isInjective(const RepMap<S>& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.cols()) return false;
  return true;
}

template <class S>
bool isSurjective(const RepMap<S>& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows()) return false;
  return true;
}

template <class S>
bool isIsomorphism(const RepMap<S>& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

template <class S>
void requireSameAlgebra(const Rep<S>& m, const Rep<S>& n) {
  if (m.algebra != n.algebra && !sameAlgebra(*m.algebra, *n.algebra)) throw AlgebraMismatch();
}

template <class S>
std::vector<RepMap<S>> homBasis(const Rep<S>& m, const Rep<S>& n) {
  requireSameAlgebra(m, n);
  const int vc = m.vertexCount();
  std::vector<Index> uoff(static_cast<std::size_t>(vc) + 1, 0);
  for (int v = 0; v < vc; ++v)
    uoff[static_cast<std::size_t>(v) + 1] =
        uoff[static_cast<std::size_t>(v)] + Index{n.dims[static_cast<std::size_t>(v)]} * m.dims[static_cast<std::size_t>(v)];
  const Index unknowns = uoff.back();
  const Quiver& q = m.algebra->quiver();
  Index rows = 0;
  for (const Arrow& arrow : q.arrows)
    rows += Index{n.dims[static_cast<std::size_t>(arrow.target)]} * m.dims[static_cast<std::size_t>(arrow.source)];
  // Unknown f_v(i, j) sits at uoff[v] + i + j * dimN(v).
  Matrix<S> system = zeros<S>(rows, unknowns);
  Index r = 0;
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    const int s = arrow.source;
    const int t = arrow.target;
    const Index nt = n.dims[static_cast<std::size_t>(t)];
    const Index ns = n.dims[static_cast<std::size_t>(s)];
    const Index ms = m.dims[static_cast<std::size_t>(s)];
    const Index mt = m.dims[static_cast<std::size_t>(t)];
    const auto& na = n.arrows[static_cast<std::size_t>(ai)];
    const auto& ma = m.arrows[static_cast<std::size_t>(ai)];
    for (Index i = 0; i < nt; ++i)
      for (Index j = 0; j < ms; ++j, ++r) {
        // (N_a f_s)(i, j) - (f_t M_a)(i, j) = 0
        for (Index k = 0; k < ns; ++k)
          if (!isZero(na(i, k))) system(r, uoff[static_cast<std::size_t>(s)] + k + j * ns) += na(i, k);
        for (Index k = 0; k < mt; ++k)
          if (!isZero(ma(k, j))) system(r, uoff[static_cast<std::size_t>(t)] + i + k * nt) -= ma(k, j);
      }
  }
  const Matrix<S> ns = nullspace(system);
  std::vector<RepMap<S>> out;
  for (Index c = 0; c < ns.cols(); ++c) {
    RepMap<S> f;
    for (int v = 0; v < vc; ++v) {
      const Index rowsV = n.dims[static_cast<std::size_t>(v)];
      const Index colsV = m.dims[static_cast<std::size_t>(v)];
      Matrix<S> b(rowsV, colsV);
      for (Index j = 0; j < colsV; ++j)
        for (Index i = 0; i < rowsV; ++i) b(i, j) = ns(uoff[static_cast<std::size_t>(v)] + i + j * rowsV, c);
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <class S>
int homDim(const Rep<S>& m, const Rep<S>& n) {
  return static_cast<int>(homBasis(m, n).size());
}

// ---- sub- and quotient modules ------------------------------------------------

template <class S>
Subrep<S> subRepGenerated(const Rep<S>& m, const std::vector<Vector<S>>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != m.dim()) throw DimensionMismatch("vector does not live in the module");
  std::vector<Matrix<S>> bases;
  for (int v = 0; v < m.vertexCount(); ++v) {
    Matrix<S> part(m.dims[static_cast<std::size_t>(v)], static_cast<Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k)
      part.col(static_cast<Index>(k)) = vectors[k].segment(m.offset(v), m.dims[static_cast<std::size_t>(v)]);
    bases.push_back(columnBasis(part));
  }
  const Quiver& q = m.algebra->quiver();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int ai = 0; ai < q.arrowCount(); ++ai) {
      const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
      const Matrix<S> img = m.arrows[static_cast<std::size_t>(ai)] * bases[static_cast<std::size_t>(arrow.source)];
      auto& tb = bases[static_cast<std::size_t>(arrow.target)];
      const Matrix<S> merged = columnBasis(hstack(tb, img));
      if (merged.cols() > tb.cols()) {
        tb = merged;
        grew = true;
      }
    }
  }
  return subrepFromVertexBases(m, std::move(bases));
}

template <class S>
Subrep<S> subRepFromBasis(const Rep<S>& m, const Matrix<S>& columns) {
  if (columns.rows() != m.dim()) throw DimensionMismatch("subspace does not live in the module");
  auto bases = vertexBases(m, columns);
  if (rank(embedVertexBases(m, bases)) != rank(columns) ||
      !inColumnSpan(columns, embedVertexBases(m, bases)))
    throw InvalidRepresentation("subspace is not stable under the vertex idempotents");
  return subrepFromVertexBases(m, std::move(bases));
}

template <class S>
QuotientRep<S> quotientRep(const Rep<S>& m, const Matrix<S>& subBasis) {
  const auto sub = subRepFromBasis(m, subBasis);
  QuotientRep<S> out;
  out.rep.algebra = m.algebra;
  std::vector<Matrix<S>> complements;
  std::vector<Matrix<S>> coordinateRows;  // per vertex: maps M_v to quotient coordinates
  for (int v = 0; v < m.vertexCount(); ++v) {
    const Matrix<S>& sb = sub.inclusion.blocks[static_cast<std::size_t>(v)];
    const Matrix<S> comp = complementBasis(sb);
    const Matrix<S> full = hstack(sb, comp);
    const Matrix<S> inv = *inverse(full);
    coordinateRows.push_back(inv.bottomRows(comp.cols()));
    complements.push_back(comp);
    out.rep.dims.push_back(static_cast<int>(comp.cols()));
  }
  const Quiver& q = m.algebra->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    out.rep.arrows.push_back(coordinateRows[static_cast<std::size_t>(arrow.target)] * m.arrows[static_cast<std::size_t>(ai)] *
                             complements[static_cast<std::size_t>(arrow.source)]);
  }
  out.projection.blocks = std::move(coordinateRows);
  return out;
}

template <class S>
Subrep<S> kernel(const Rep<S>& source, const RepMap<S>& f) {
  std::vector<Matrix<S>> bases;
  for (const auto& b : f.blocks) bases.push_back(nullspace(b));
  return subrepFromVertexBases(source, std::move(bases));
}

template <class S>
Subrep<S> image(const Rep<S>& target, const Rep<S>& source, const RepMap<S>& f) {
  (void)source;
  std::vector<Matrix<S>> bases;
  for (const auto& b : f.blocks) bases.push_back(columnBasis(b));
  return subrepFromVertexBases(target, std::move(bases));
}

template <class S>
QuotientRep<S> cokernel(const Rep<S>& target, const Rep<S>& source, const RepMap<S>& f) {
  return quotientRep(target, image(target, source, f).basis);
}

template <class S>
Subrep<S> radicalRep(const Rep<S>& m) {
  std::vector<Matrix<S>> bases(static_cast<std::size_t>(m.vertexCount()));
  for (int v = 0; v < m.vertexCount(); ++v) bases[static_cast<std::size_t>(v)] = Matrix<S>(m.dims[static_cast<std::size_t>(v)], 0);
  const Quiver& q = m.algebra->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const int t = q.arrows[static_cast<std::size_t>(ai)].target;
    bases[static_cast<std::size_t>(t)] = hstack(bases[static_cast<std::size_t>(t)], m.arrows[static_cast<std::size_t>(ai)]);
  }
  for (auto& b : bases) b = columnBasis(b);
  return subrepFromVertexBases(m, std::move(bases));
}

template <class S>
Subrep<S> socleRep(const Rep<S>& m) {
  std::vector<Matrix<S>> stacks(static_cast<std::size_t>(m.vertexCount()));
  for (int v = 0; v < m.vertexCount(); ++v) stacks[static_cast<std::size_t>(v)] = Matrix<S>(0, m.dims[static_cast<std::size_t>(v)]);
  const Quiver& q = m.algebra->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const int s = q.arrows[static_cast<std::size_t>(ai)].source;
    stacks[static_cast<std::size_t>(s)] = vstack(stacks[static_cast<std::size_t>(s)], m.arrows[static_cast<std::size_t>(ai)]);
  }
  std::vector<Matrix<S>> bases;
  for (const auto& st : stacks) bases.push_back(nullspace(st));
  return subrepFromVertexBases(m, std::move(bases));
}

template <class S>
QuotientRep<S> topRep(const Rep<S>& m) {
  return quotientRep(m, radicalRep(m).basis);
}

template <class S>
DirectSum<S> directSum(const std::vector<Rep<S>>& parts) {
  if (parts.empty()) throw Error("directSum needs at least one summand");
  for (const auto& p : parts) requireSameAlgebra(parts.front(), p);
  const auto& a = parts.front().algebra;
  const int vc = a->vertexCount();
  DirectSum<S> out;
  out.rep.algebra = a;
  out.rep.dims.assign(static_cast<std::size_t>(vc), 0);
  for (const auto& p : parts)
    for (int v = 0; v < vc; ++v) out.rep.dims[static_cast<std::size_t>(v)] += p.dims[static_cast<std::size_t>(v)];
  const Quiver& q = a->quiver();
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& arrow = q.arrows[static_cast<std::size_t>(ai)];
    Matrix<S> mat = zeros<S>(out.rep.dims[static_cast<std::size_t>(arrow.target)], out.rep.dims[static_cast<std::size_t>(arrow.source)]);
    Index r = 0;
    Index c = 0;
    for (const auto& p : parts) {
      const auto& pa = p.arrows[static_cast<std::size_t>(ai)];
      mat.block(r, c, pa.rows(), pa.cols()) = pa;
      r += pa.rows();
      c += pa.cols();
    }
    out.rep.arrows.push_back(std::move(mat));
  }
  std::vector<Index> offsets(static_cast<std::size_t>(vc), 0);
  for (const auto& p : parts) {
    RepMap<S> inj;
    RepMap<S> proj;
    for (int v = 0; v < vc; ++v) {
      const Index total = out.rep.dims[static_cast<std::size_t>(v)];
      const Index d = p.dims[static_cast<std::size_t>(v)];
      Matrix<S> i = zeros<S>(total, d);
      for (Index k = 0; k < d; ++k) i(offsets[static_cast<std::size_t>(v)] + k, k) = S(1);
      proj.blocks.push_back(i.transpose());
      inj.blocks.push_back(std::move(i));
      offsets[static_cast<std::size_t>(v)] += d;
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

template <class S>
Rep<S> restrictScalars(const Rep<S>& m, const AlgebraPtr<S>& other) {
  if (other->quiver() != m.algebra->quiver()) throw AlgebraMismatch("algebras have different quivers");
  return makeRep(other, m.dims, m.arrows);
}

#define QB_INSTANTIATE_REP(S)                                                                   \
  template std::string representationDefect<S>(const Rep<S>&);                                 \
  template Rep<S> makeRep<S>(const AlgebraPtr<S>&, std::vector<int>, std::vector<Matrix<S>>);   \
  template Rep<S> zeroRep<S>(const AlgebraPtr<S>&);                                             \
  template std::vector<int> regularOrder<S>(const Algebra<S>&);                                 \
  template Rep<S> regularRep<S>(const AlgebraPtr<S>&);                                          \
  template std::vector<int> projectiveOrder<S>(const Algebra<S>&, int);                         \
  template Rep<S> projective<S>(const AlgebraPtr<S>&, int);                                     \
  template Rep<S> simple<S>(const AlgebraPtr<S>&, int);                                         \
  template Matrix<S> globalArrow<S>(const Rep<S>&, int);                                        \
  template Matrix<S> vertexProjector<S>(const Rep<S>&, int);                                    \
  template std::vector<Matrix<S>> basisActions<S>(const Rep<S>&);                               \
  template Matrix<S> elementAction<S>(const Rep<S>&, const Vector<S>&);                         \
  template Matrix<S> globalMatrix<S>(const Rep<S>&, const Rep<S>&, const RepMap<S>&);           \
  template RepMap<S> mapFromGlobal<S>(const Rep<S>&, const Rep<S>&, const Matrix<S>&);          \
  template bool isRepMap<S>(const Rep<S>&, const Rep<S>&, const RepMap<S>&);                    \
  template RepMap<S> identityMap<S>(const Rep<S>&);                                             \
  template RepMap<S> zeroMap<S>(const Rep<S>&, const Rep<S>&);                                  \
  template RepMap<S> compose<S>(const RepMap<S>&, const RepMap<S>&);                            \
  template bool isInjective<S>(const RepMap<S>&);                                               \
  template bool isSurjective<S>(const RepMap<S>&);                                              \
  template bool isIsomorphism<S>(const RepMap<S>&);                                             \
  template void requireSameAlgebra<S>(const Rep<S>&, const Rep<S>&);                            \
  template std::vector<RepMap<S>> homBasis<S>(const Rep<S>&, const Rep<S>&);                    \
  template int homDim<S>(const Rep<S>&, const Rep<S>&);                                         \
  template Subrep<S> subRepGenerated<S>(const Rep<S>&, const std::vector<Vector<S>>&);          \
  template Subrep<S> subRepFromBasis<S>(const Rep<S>&, const Matrix<S>&);                       \
  template QuotientRep<S> quotientRep<S>(const Rep<S>&, const Matrix<S>&);                      \
  template Subrep<S> kernel<S>(const Rep<S>&, const RepMap<S>&);                                \
  template Subrep<S> image<S>(const Rep<S>&, const Rep<S>&, const RepMap<S>&);                  \
  template QuotientRep<S> cokernel<S>(const Rep<S>&, const Rep<S>&, const RepMap<S>&);          \
  template Subrep<S> radicalRep<S>(const Rep<S>&);                                              \
  template Subrep<S> socleRep<S>(const Rep<S>&);                                                \
  template QuotientRep<S> topRep<S>(const Rep<S>&);                                             \
  template DirectSum<S> directSum<S>(const std::vector<Rep<S>>&);                               \
  template Rep<S> restrictScalars<S>(const Rep<S>&, const AlgebraPtr<S>&);

QB_FOR_EACH_FIELD(QB_INSTANTIATE_REP)

}  // namespace qb
