#include "quiverbench/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qb {

namespace {

// Cap on the size of the truncated relation matrix (rows * columns).
constexpr std::size_t kTruncationBudget = 40'000'000;
constexpr std::size_t kPathBudget = 20'000;

using PathKey = std::pair<int, std::vector<int>>;

PathKey keyOf(const Path& p) { return {p.isTrivial() ? p.source : -1, p.arrows}; }

std::vector<Path> extendByArrow(const Quiver& q, const std::vector<Path>& shorter) {
  std::vector<Path> out;
  for (const Path& p : shorter)
    for (int a = 0; a < q.arrowCount(); ++a) {
      const Arrow& arrow = q.arrows[static_cast<std::size_t>(a)];
      if (arrow.source != p.target) continue;
      Path w;
      w.arrows.reserve(p.arrows.size() + 1);
      w.arrows.push_back(a);
      w.arrows.insert(w.arrows.end(), p.arrows.begin(), p.arrows.end());
      w.source = p.source;
      w.target = arrow.target;
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end(), [&](const Path& x, const Path& y) { return pathLess(q, x, y); });
  return out;
}

template <class S>
S coefficientOf(const BigInt& c) {
  return FieldTraits<S>::fromBigInt(c);
}

// Attempts the construction of kQ/(I + J^m) with all length-m paths reducing
// to zero. Returns nullptr when some length-m path survives.
template <class S>
std::shared_ptr<Algebra<S>> tryTruncation(const Presentation& p, const std::vector<Relation>& rels,
                                          const std::vector<std::vector<Path>>& byLength, int m) {
  const Quiver& q = p.quiver;
  std::vector<Path> paths;
  for (int len = 0; len <= m; ++len)
    paths.insert(paths.end(), byLength[static_cast<std::size_t>(len)].begin(),
                 byLength[static_cast<std::size_t>(len)].end());
  const Index n = static_cast<Index>(paths.size());
  std::map<PathKey, Index> index;
  for (Index i = 0; i < n; ++i) index[keyOf(paths[static_cast<std::size_t>(i)])] = i;
  // Longest paths come first so that they are eliminated in favour of shorter ones.
  auto column = [n](Index pathIndex) { return n - 1 - pathIndex; };

  std::vector<Vector<S>> rows;
  for (const Relation& r : rels) {
    int shortest = m + 1;
    for (const Term& t : r.terms) shortest = std::min(shortest, t.path.length());
    if (shortest > m) continue;
    const int rs = r.terms.front().path.source;
    const int rt = r.terms.front().path.target;
    for (const Path& left : paths) {
      if (left.source != rt || left.length() > m - shortest) continue;
      for (const Path& right : paths) {
        if (right.target != rs || left.length() + right.length() > m - shortest) continue;
        Vector<S> row = Vector<S>::Constant(n, S(0));
        bool nonzero = false;
        for (const Term& t : r.terms) {
          if (left.length() + t.path.length() + right.length() > m) continue;
          bool ok = false;
          Path w = concatenate(left, t.path, ok);
          w = concatenate(w, right, ok);
          const S c = coefficientOf<S>(t.coefficient);
          if (isZero(c)) continue;
          row(column(index.at(keyOf(w)))) += c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
        if (rows.size() * static_cast<std::size_t>(n) > kTruncationBudget)
          throw AdmissibilityError("relation closure exceeds the truncation budget at path length " +
                                   std::to_string(m));
      }
    }
  }
  Matrix<S> g = zeros<S>(static_cast<Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) g.row(static_cast<Index>(i)) = rows[i].transpose();
  const RowEchelon<S> ech = rref(std::move(g));

  std::vector<Index> pivotRow(static_cast<std::size_t>(n), -1);
  for (Index r = 0; r < ech.rank(); ++r) pivotRow[static_cast<std::size_t>(ech.pivots[static_cast<std::size_t>(r)])] = r;

  for (const Path& w : byLength[static_cast<std::size_t>(m)]) {
    const Index c = column(index.at(keyOf(w)));
    const Index r = pivotRow[static_cast<std::size_t>(c)];
    if (r < 0) return nullptr;
    for (Index j = c + 1; j < n; ++j)
      if (!isZero(ech.reduced(r, j))) return nullptr;
  }

  auto a = std::make_shared<Algebra<S>>();
  a->presentation = p;
  std::vector<int> basisPos(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    if (pivotRow[static_cast<std::size_t>(column(i))] >= 0) continue;
    basisPos[static_cast<std::size_t>(i)] = static_cast<int>(a->basis.size());
    a->basis.push_back(paths[static_cast<std::size_t>(i)]);
    a->labels.push_back(pathLabel(q, paths[static_cast<std::size_t>(i)]));
  }
  const int dim = a->dim();

  auto normalForm = [&](const Path& w) {
    Vector<S> v = Vector<S>::Constant(dim, S(0));
    if (w.length() > m) return v;
    const Index i = index.at(keyOf(w));
    const Index r = pivotRow[static_cast<std::size_t>(column(i))];
    if (r < 0) {
      v(basisPos[static_cast<std::size_t>(i)]) = S(1);
      return v;
    }
    for (Index j = column(i) + 1; j < n; ++j) {
      if (isZero(ech.reduced(r, j))) continue;
      v(basisPos[static_cast<std::size_t>(n - 1 - j)]) = -ech.reduced(r, j);
    }
    return v;
  };

  a->left.assign(static_cast<std::size_t>(dim), zeros<S>(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      bool ok = false;
      const Path w = concatenate(a->basis[static_cast<std::size_t>(i)], a->basis[static_cast<std::size_t>(j)], ok);
      if (ok) a->left[static_cast<std::size_t>(i)].col(j) = normalForm(w);
    }
  for (int ai = 0; ai < q.arrowCount(); ++ai) a->arrowElements.push_back(normalForm(makePath(q, {ai})));
  for (int v = 0; v < q.vertexCount(); ++v) a->idempotents.push_back(basisPos[static_cast<std::size_t>(v)]);
  return a;
}

template <class S>
int computeLoewyLength(const Algebra<S>& a) {
  int k = 1;
  while (radicalPower(a, k).cols() > 0) ++k;
  return k;
}

}  // namespace

template <class S>
AlgebraPtr<S> buildAlgebra(const Presentation& p) {
  validatePresentation(p);
  const auto rels = uniformRelations(p);
  std::vector<std::vector<Path>> byLength;
  std::vector<Path> trivial;
  for (int v = 0; v < p.quiver.vertexCount(); ++v) trivial.push_back(Path::trivial(v));
  byLength.push_back(std::move(trivial));
  std::size_t total = byLength.front().size();
  for (int m = 1; m <= p.nilpotencyBound + 1; ++m) {
    byLength.push_back(extendByArrow(p.quiver, byLength.back()));
    total += byLength.back().size();
    if (total > kPathBudget)
      throw AdmissibilityError("path space exceeds " + std::to_string(kPathBudget) + " paths at length " +
                               std::to_string(m));
    if (auto a = tryTruncation<S>(p, rels, byLength, m)) {
      a->loewyLength = computeLoewyLength(*a);
      return a;
    }
  }
  throw AdmissibilityError("paths of length " + std::to_string(p.nilpotencyBound + 1) +
                           " do not all reduce to zero; admissibility is unproven within nilpotency bound " +
                           std::to_string(p.nilpotencyBound));
}

template <class S>
AlgebraPtr<S> opposite(const AlgebraPtr<S>& a) {
  auto make = [](const Algebra<S>& src) {
    auto op = std::make_shared<Algebra<S>>();
    op->presentation = oppositePresentation(src.presentation);
    op->labels = src.labels;
    for (Path w : src.basis) {
      std::reverse(w.arrows.begin(), w.arrows.end());
      std::swap(w.source, w.target);
      op->basis.push_back(std::move(w));
    }
    const int dim = src.dim();
    op->left.assign(static_cast<std::size_t>(dim), zeros<S>(dim, dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) op->left[static_cast<std::size_t>(i)].col(j) = src.left[static_cast<std::size_t>(j)].col(i);
    op->arrowElements = src.arrowElements;
    op->idempotents = src.idempotents;
    op->loewyLength = src.loewyLength;
    return op;
  };
  std::call_once(a->oppositeOnce, [&] {
    auto op = make(*a);
    op->oppositeWeak = a;
    std::call_once(op->oppositeOnce, [] {});
    a->oppositeStrong = op;
  });
  if (a->oppositeStrong) return a->oppositeStrong;
  if (auto back = a->oppositeWeak.lock()) return back;
  // The algebra this one was derived from has been released; rebuild.
  return make(*a);
}

template <class S>
bool sameAlgebra(const Algebra<S>& a, const Algebra<S>& b) {
  if (&a == &b) return true;
  return a.presentation == b.presentation && a.basis == b.basis && a.left == b.left;
}

template <class S>
Vector<S> basisVector(const Algebra<S>& a, int i) {
  Vector<S> v = Vector<S>::Constant(a.dim(), S(0));
  v(i) = S(1);
  return v;
}

template <class S>
Vector<S> unitElement(const Algebra<S>& a) {
  Vector<S> v = Vector<S>::Constant(a.dim(), S(0));
  for (int e : a.idempotents) v(e) = S(1);
  return v;
}

template <class S>
Matrix<S> leftMultiplication(const Algebra<S>& a, const Vector<S>& x) {
  Matrix<S> m = zeros<S>(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    if (!isZero(x(i))) m += x(i) * a.left[static_cast<std::size_t>(i)];
  return m;
}

template <class S>
Matrix<S> rightMultiplication(const Algebra<S>& a, const Vector<S>& x) {
  Matrix<S> m(a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) m.col(j) = a.left[static_cast<std::size_t>(j)] * x;
  return m;
}

template <class S>
Vector<S> multiply(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  return leftMultiplication(a, x) * y;
}

template <class S>
std::vector<Vector<S>> radicalGenerators(const Algebra<S>& a) {
  std::vector<Vector<S>> out;
  for (int i = 0; i < a.dim(); ++i)
    if (!a.basis[static_cast<std::size_t>(i)].isTrivial()) out.push_back(basisVector(a, i));
  return out;
}

template <class S>
Matrix<S> radicalPower(const Algebra<S>& a, int k) {
  if (k <= 0) return identity<S>(a.dim());
  const auto gens = radicalGenerators(a);
  Matrix<S> power = columnsOf(gens, a.dim());
  for (int step = 1; step < k && power.cols() > 0; ++step) {
    Matrix<S> next(a.dim(), 0);
    for (const auto& g : gens) next = hstack(next, Matrix<S>(leftMultiplication(a, g) * power));
    power = columnBasis(next);
  }
  return power;
}

template <class S>
Matrix<S> socleLeftRegular(const Algebra<S>& a) {
  Matrix<S> stacked(0, a.dim());
  for (const auto& x : a.arrowElements) stacked = vstack(stacked, leftMultiplication(a, x));
  return Matrix<S>(canonicalRowBasis(nullspace(stacked)).transpose());
}

template <class S>
bool isTwoSidedIdeal(const Algebra<S>& a, const Matrix<S>& basis) {
  Matrix<S> products(a.dim(), 0);
  for (int i = 0; i < a.dim(); ++i) {
    const Vector<S> b = basisVector(a, i);
    products = hstack(products, Matrix<S>(a.left[static_cast<std::size_t>(i)] * basis));
    products = hstack(products, Matrix<S>(rightMultiplication(a, b) * basis));
  }
  return inColumnSpan(basis, products);
}

template <class S>
Matrix<S> leftAnnihilator(const Algebra<S>& a, const std::vector<Vector<S>>& gens) {
  Matrix<S> stacked(0, a.dim());
  for (const auto& g : gens) stacked = vstack(stacked, rightMultiplication(a, g));
  const Matrix<S> ann = Matrix<S>(canonicalRowBasis(nullspace(stacked)).transpose());
  if (!isTwoSidedIdeal(a, ann)) throw Error("left annihilator is not a two-sided ideal; generators do not span a left ideal");
  return ann;
}

template <class S>
std::vector<BigInt> integerCoefficients(const Vector<S>& v) {
  std::vector<BigInt> out;
  if constexpr (FieldTraits<S>::finite) {
    for (Index i = 0; i < v.size(); ++i) out.push_back(FieldTraits<S>::toIntegerRepresentative(v(i)));
  } else {
    BigInt l = 1;
    for (Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, v(i).denominator());
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).numerator() * (l / v(i).denominator()));
  }
  return out;
}

template <class S>
QuotientAlgebra<S> quotientAlgebra(const AlgebraPtr<S>& a, const Matrix<S>& ideal) {
  const int dim = a->dim();
  if (ideal.rows() != dim) throw DimensionMismatch("ideal vectors have the wrong length");
  for (int e : a->idempotents)
    for (Index j = 0; j < ideal.cols(); ++j)
      if (!isZero(ideal(e, j))) throw Error("ideal is not contained in the radical");
  if (!isTwoSidedIdeal(*a, ideal)) throw Error("ideal is not two-sided");

  // Reduce with longest words first so residues are the shortest words.
  Matrix<S> reversed(ideal.cols(), dim);
  for (int i = 0; i < dim; ++i) reversed.col(dim - 1 - i) = ideal.row(i).transpose();
  const RowEchelon<S> ech = rref(std::move(reversed));
  std::vector<Index> pivotRow(static_cast<std::size_t>(dim), -1);
  for (Index r = 0; r < ech.rank(); ++r)
    pivotRow[static_cast<std::size_t>(dim - 1 - ech.pivots[static_cast<std::size_t>(r)])] = r;

  auto q = std::make_shared<Algebra<S>>();
  q->presentation = a->presentation;
  q->presentation.name = a->presentation.name.empty() ? "quotient" : a->presentation.name + "/I";
  std::vector<int> pos(static_cast<std::size_t>(dim), -1);
  for (int i = 0; i < dim; ++i) {
    if (pivotRow[static_cast<std::size_t>(i)] >= 0) continue;
    pos[static_cast<std::size_t>(i)] = q->dim();
    q->basis.push_back(a->basis[static_cast<std::size_t>(i)]);
    q->labels.push_back(a->labels[static_cast<std::size_t>(i)]);
  }
  const int qdim = q->dim();
  Matrix<S> map = zeros<S>(qdim, dim);
  Matrix<S> lift = zeros<S>(dim, qdim);
  for (int i = 0; i < dim; ++i) {
    const Index r = pivotRow[static_cast<std::size_t>(i)];
    if (r < 0) {
      map(pos[static_cast<std::size_t>(i)], i) = S(1);
      lift(i, pos[static_cast<std::size_t>(i)]) = S(1);
      continue;
    }
    for (int j = 0; j < dim; ++j) {
      const S c = ech.reduced(r, dim - 1 - j);
      if (j == i || isZero(c)) continue;
      map(pos[static_cast<std::size_t>(j)], i) = -c;
    }
  }
  for (int i = 0; i < dim; ++i)
    if (pos[static_cast<std::size_t>(i)] >= 0)
      q->left.push_back(map * a->left[static_cast<std::size_t>(i)] * lift);
  for (const auto& x : a->arrowElements) q->arrowElements.push_back(map * x);
  for (int e : a->idempotents) q->idempotents.push_back(pos[static_cast<std::size_t>(e)]);

  // Record the ideal as extra relations, one per uniform component.
  const Quiver& quiver = a->quiver();
  for (Index r = 0; r < ech.rank(); ++r) {
    Vector<S> element(dim);
    for (int i = 0; i < dim; ++i) element(i) = ech.reduced(r, dim - 1 - i);
    const auto coeffs = integerCoefficients(element);
    Relation rel;
    for (int i = 0; i < dim; ++i)
      if (coeffs[static_cast<std::size_t>(i)] != 0)
        rel.terms.push_back({coeffs[static_cast<std::size_t>(i)], a->basis[static_cast<std::size_t>(i)]});
    Presentation single;
    single.quiver = quiver;
    single.relations = {rel};
    for (auto& part : uniformRelations(single)) q->presentation.relations.push_back(std::move(part));
  }
  q->loewyLength = computeLoewyLength(*q);
  return {q, map};
}

template <class S>
std::string checkAlgebraAxioms(const Algebra<S>& a) {
  const int dim = a.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Matrix<S> lhs = leftMultiplication(a, Vector<S>(a.left[static_cast<std::size_t>(i)].col(j)));
      if (lhs != a.left[static_cast<std::size_t>(i)] * a.left[static_cast<std::size_t>(j)])
        return "associativity fails at (" + a.labels[static_cast<std::size_t>(i)] + ", " +
               a.labels[static_cast<std::size_t>(j)] + ")";
    }
  if (leftMultiplication(a, unitElement(a)) != identity<S>(dim) || rightMultiplication(a, unitElement(a)) != identity<S>(dim))
    return "idempotents do not sum to 1";
  for (int u : a.idempotents)
    for (int v : a.idempotents) {
      const Vector<S> prod = multiply(a, basisVector(a, u), basisVector(a, v));
      const Vector<S> expect = u == v ? basisVector(a, u) : Vector<S>(Vector<S>::Constant(dim, S(0)));
      if (prod != expect) return "vertex idempotents are not orthogonal";
    }
  if (radicalPower(a, a.loewyLength).cols() != 0) return "radical is not nilpotent";
  int sum = 0;
  int sumRight = 0;
  for (int e : a.idempotents) {
    sum += static_cast<int>(rank(Matrix<S>(rightMultiplication(a, basisVector(a, e)))));
    sumRight += static_cast<int>(rank(Matrix<S>(a.left[static_cast<std::size_t>(e)])));
  }
  if (sum != dim || sumRight != dim) return "projective dimensions do not add up";
  return {};
}

template <class S>
std::string formatElement(const Algebra<S>& a, const Vector<S>& v) {
  std::string out;
  for (int i = 0; i < a.dim(); ++i) {
    if (isZero(v(i))) continue;
    if (!out.empty()) out += " + ";
    if (v(i) != S(1)) out += FieldTraits<S>::format(v(i)) + "*";
    out += a.labels[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

#define QB_INSTANTIATE_ALGEBRA(S)                                                                     \
  template AlgebraPtr<S> buildAlgebra<S>(const Presentation&);                                        \
  template AlgebraPtr<S> opposite<S>(const AlgebraPtr<S>&);                                           \
  template bool sameAlgebra<S>(const Algebra<S>&, const Algebra<S>&);                                 \
  template Vector<S> basisVector<S>(const Algebra<S>&, int);                                          \
  template Vector<S> unitElement<S>(const Algebra<S>&);                                               \
  template Matrix<S> leftMultiplication<S>(const Algebra<S>&, const Vector<S>&);                      \
  template Matrix<S> rightMultiplication<S>(const Algebra<S>&, const Vector<S>&);                     \
  template Vector<S> multiply<S>(const Algebra<S>&, const Vector<S>&, const Vector<S>&);              \
  template std::vector<Vector<S>> radicalGenerators<S>(const Algebra<S>&);                            \
  template Matrix<S> radicalPower<S>(const Algebra<S>&, int);                                         \
  template Matrix<S> socleLeftRegular<S>(const Algebra<S>&);                                          \
  template Matrix<S> leftAnnihilator<S>(const Algebra<S>&, const std::vector<Vector<S>>&);            \
  template bool isTwoSidedIdeal<S>(const Algebra<S>&, const Matrix<S>&);                              \
  template QuotientAlgebra<S> quotientAlgebra<S>(const AlgebraPtr<S>&, const Matrix<S>&);             \
  template std::string checkAlgebraAxioms<S>(const Algebra<S>&);                                      \
  template std::string formatElement<S>(const Algebra<S>&, const Vector<S>&);                         \
  template std::vector<BigInt> integerCoefficients<S>(const Vector<S>&);

QB_FOR_EACH_FIELD(QB_INSTANTIATE_ALGEBRA)

}  // namespace qb
