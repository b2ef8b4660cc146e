#include <algorithm>
#include <cstdint>

#include "quiverbench/rep.hpp"

namespace qb {

namespace {

template <class S>
Vector<S> flatten(const Matrix<S>& m) {
  Vector<S> v(m.size());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(i + j * m.rows()) = m(i, j);
  return v;
}

template <class S>
S traceOfProduct(const Matrix<S>& a, const Matrix<S>& b) {
  S t(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k)
      if (!isZero(a(i, k)) && !isZero(b(k, i))) t += a(i, k) * b(k, i);
  return t;
}

// Monic minimal polynomial of g, coefficients from degree 0 upwards.
template <class S>
std::vector<S> minimalPolynomial(const Matrix<S>& g) {
  const Index d = g.rows();
  Matrix<S> power = identity<S>(d);
  Matrix<S> krylov(d * d, 0);
  for (Index k = 0;; ++k) {
    const Vector<S> v = flatten(power);
    if (k > 0) {
      if (auto c = solve(krylov, Matrix<S>(v))) {
        std::vector<S> poly;
        for (Index i = 0; i < k; ++i) poly.push_back(-(*c)(i, 0));
        poly.push_back(S(1));
        return poly;
      }
    }
    krylov = hstack(krylov, Matrix<S>(v));
    power = power * g;
  }
}

template <class S>
S evaluate(const std::vector<S>& poly, const S& x) {
  S acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<BigInt> divisorsOf(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  if (n == 0 || n > BigInt(1'000'000'000'000LL)) return out;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Roots of the polynomial lying in the field (rational roots over Q).
template <class S>
std::vector<S> rootsInField(const std::vector<S>& poly) {
  std::vector<S> roots;
  if constexpr (FieldTraits<S>::finite) {
    for (std::uint64_t x = 0; x < FieldTraits<S>::order; ++x)
      if (isZero(evaluate(poly, S(static_cast<long long>(x))))) roots.push_back(S(static_cast<long long>(x)));
  } else {
    std::vector<S> p = poly;
    if (isZero(p.front())) roots.push_back(S(0));
    while (p.size() > 1 && isZero(p.front())) p.erase(p.begin());
    if (p.size() <= 1) return roots;
    Vector<S> coeffs(static_cast<Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) coeffs(static_cast<Index>(i)) = p[i];
    const auto ints = integerCoefficients(coeffs);
    for (const BigInt& num : divisorsOf(ints.front()))
      for (const BigInt& den : divisorsOf(ints.back()))
        for (int sign : {1, -1}) {
          const S x = FieldTraits<S>::fromFraction(num * sign, den);
          if (std::find(roots.begin(), roots.end(), x) == roots.end() && isZero(evaluate(poly, x))) roots.push_back(x);
        }
  }
  return roots;
}

// Deterministic pseudo-random stream (64-bit LCG).
struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
};

template <class S>
S smallScalar(Lcg& rng) {
  if constexpr (FieldTraits<S>::finite)
    return S(static_cast<long long>(rng.next() % FieldTraits<S>::order));
  else
    return S(static_cast<long long>(rng.next() % 7) - 3);
}

constexpr int kSplitCombinations = 48;
constexpr std::uint64_t kIsoGridBudget = 20'000;
constexpr int kIsoProbes = 16;

}  // namespace

template <class S>
EndAlgebra<S> endAlgebra(const Rep<S>& m) {
  EndAlgebra<S> e;
  e.basis = homBasis(m, m);
  const int r = e.dim();
  const int d = m.dim();
  for (const auto& f : e.basis) e.global.push_back(globalMatrix(m, m, f));
  if (r == 0) {
    e.radical = Matrix<S>(0, 0);
    return e;
  }
  Matrix<S> gram(r, r);
  if (fieldExceeds<S>(static_cast<std::uint64_t>(d))) {
    // tr(XY) = vec(X) . vec(Y^T)
    Matrix<S> flat(Index{d} * d, r);
    Matrix<S> flatT(Index{d} * d, r);
    for (int j = 0; j < r; ++j) {
      flat.col(j) = flatten(e.global[static_cast<std::size_t>(j)]);
      flatT.col(j) = flatten(Matrix<S>(e.global[static_cast<std::size_t>(j)].transpose()));
    }
    gram = flat.transpose() * flatT;
  } else if (fieldExceeds<S>(static_cast<std::uint64_t>(r))) {
    Matrix<S> flat(Index{d} * d, r);
    for (int j = 0; j < r; ++j) flat.col(j) = flatten(e.global[static_cast<std::size_t>(j)]);
    const CoordinateSolver<S> solver(flat);
    for (int j = 0; j < r; ++j) {
      Matrix<S> s(r, r);
      for (int k = 0; k < r; ++k)
        s.col(k) = solver.coordinates(flatten(Matrix<S>(e.global[static_cast<std::size_t>(j)] * e.global[static_cast<std::size_t>(k)])));
      e.structure.push_back(std::move(s));
    }
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        gram(j, k) = traceOfProduct(e.structure[static_cast<std::size_t>(j)], e.structure[static_cast<std::size_t>(k)]);
  } else {
    throw FieldTooSmall("the radical of an endomorphism algebra of dimension " + std::to_string(r) + " on a module of dimension " +
                        std::to_string(d) + " needs a field with more than " + std::to_string(std::min(r, d)) +
                        " elements; " + FieldTraits<S>::name() + " is too small");
  }
  e.radical = nullspace(gram);
  return e;
}

template <class S>
std::optional<Splitting<S>> fittingSplit(const Rep<S>& m, const Matrix<S>& g) {
  const Index d = m.dim();
  for (const S& lambda : rootsInField(minimalPolynomial(g))) {
    Matrix<S> h = g - lambda * identity<S>(d);
    Index r = rank(h);
    while (true) {
      Matrix<S> next = h * (g - lambda * identity<S>(d));
      const Index rn = rank(next);
      if (rn == r) break;
      h = std::move(next);
      r = rn;
    }
    if (r == 0 || r == d) continue;
    const Matrix<S> k = nullspace(h);
    const Matrix<S> w = columnBasis(h);
    Splitting<S> s{subRepFromBasis(m, k), subRepFromBasis(m, w), {}};
    const Matrix<S> t = hstack(k, w);
    Matrix<S> diag = zeros<S>(d, d);
    for (Index i = 0; i < k.cols(); ++i) diag(i, i) = S(1);
    s.idempotent = mapFromGlobal(m, m, Matrix<S>(t * diag * *inverse(t)));
    return s;
  }
  return std::nullopt;
}

template <class S>
IndecomposableResult<S> isIndecomposable(const Rep<S>& m, unsigned seed) {
  if (m.dim() == 0) throw Error("the zero module has no indecomposability verdict");
  const EndAlgebra<S> e = endAlgebra(m);
  IndecomposableResult<S> out;
  if (e.topDim() == 1) {
    out.verdict = Indecomposability::Yes;
    return out;
  }
  std::vector<std::size_t> order(e.global.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (seed % 2 == 1) std::reverse(order.begin(), order.end());
  for (std::size_t i : order)
    if (auto s = fittingSplit(m, e.global[i])) {
      out.verdict = Indecomposability::No;
      out.witness = std::move(s);
      return out;
    }
  Lcg rng{0x9e3779b97f4a7c15ULL ^ seed};
  for (int t = 0; t < kSplitCombinations; ++t) {
    Matrix<S> g = zeros<S>(m.dim(), m.dim());
    for (const auto& b : e.global) g += smallScalar<S>(rng) * b;
    if (auto s = fittingSplit(m, g)) {
      out.verdict = Indecomposability::No;
      out.witness = std::move(s);
      return out;
    }
  }
  return out;
}

template <class S>
std::vector<Subrep<S>> splitIntoIndecomposables(const Rep<S>& m, unsigned seed) {
  std::vector<Subrep<S>> done;
  if (m.dim() == 0) return done;
  std::vector<Matrix<S>> work{identity<S>(m.dim())};
  while (!work.empty()) {
    const Matrix<S> basis = std::move(work.back());
    work.pop_back();
    Subrep<S> piece = subRepFromBasis(m, basis);
    auto verdict = isIndecomposable(piece.rep, seed);
    if (verdict.verdict == Indecomposability::Yes) {
      done.push_back(std::move(piece));
    } else if (verdict.verdict == Indecomposability::No) {
      // Push the second part first so the first is processed next.
      work.push_back(piece.basis * verdict.witness->second.basis);
      work.push_back(piece.basis * verdict.witness->first.basis);
    } else {
      throw UndeterminedSummand("could not split or certify a summand of dimension vector " + dimVectorString(piece.rep));
    }
  }
  return done;
}

template <class S>
bool isoIndecomposable(const Rep<S>& x, const Rep<S>& y) {
  requireSameAlgebra(x, y);
  if (x.dims != y.dims) return false;
  if (x.dim() == 0) return true;
  const auto f = homBasis(x, y);
  if (f.empty()) return false;
  const auto g = homBasis(y, x);
  for (const auto& gi : g) {
    const Matrix<S> gg = globalMatrix(y, x, gi);
    for (const auto& fj : f)
      if (rank(Matrix<S>(gg * globalMatrix(x, y, fj))) == x.dim()) return true;
  }
  return false;
}

template <class S>
std::vector<Summand<S>> decompose(const Rep<S>& m, unsigned seed) {
  std::vector<Summand<S>> out;
  for (auto& piece : splitIntoIndecomposables(m, seed)) {
    bool merged = false;
    for (auto& s : out)
      if (isoIndecomposable(s.rep, piece.rep)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({std::move(piece.rep), 1});
  }
  return out;
}

template <class S>
bool sameSummands(const std::vector<Summand<S>>& a, const std::vector<Summand<S>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& s : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j] || b[j].multiplicity != s.multiplicity) continue;
      if (isoIndecomposable(s.rep, b[j].rep)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

template <class S>
bool isIso(const Rep<S>& m, const Rep<S>& n) {
  requireSameAlgebra(m, n);
  if (m.dims != n.dims) return false;
  const int d = m.dim();
  if (d == 0) return true;
  if (!fieldExceeds<S>(static_cast<std::uint64_t>(d)))
    throw FieldTooSmall("isomorphism testing of " + std::to_string(d) + "-dimensional modules needs a field with more than " +
                        std::to_string(d) + " elements; " + FieldTraits<S>::name() + " is too small");
  const auto h = homBasis(m, n);
  if (h.empty()) return false;
  const int hd = static_cast<int>(h.size());
  if (homDim(n, m) != hd || homDim(m, m) != hd || homDim(n, n) != hd) return false;
  std::vector<Matrix<S>> g;
  for (const auto& f : h) g.push_back(globalMatrix(m, n, f));
  auto invertibleAt = [&](const std::vector<long long>& point) {
    Matrix<S> sum = zeros<S>(d, d);
    for (int i = 0; i < hd; ++i)
      if (point[static_cast<std::size_t>(i)] != 0) sum += S(point[static_cast<std::size_t>(i)]) * g[static_cast<std::size_t>(i)];
    return rank(sum) == d;
  };
  // The determinant of sum c_i f_i has degree <= d; a grid of side d+1
  // detects any nonzero polynomial.
  std::vector<long long> point(static_cast<std::size_t>(hd), 0);
  for (int i = 0; i < hd; ++i) {
    std::fill(point.begin(), point.end(), 0);
    point[static_cast<std::size_t>(i)] = 1;
    if (invertibleAt(point)) return true;
  }
  Lcg rng{0x2545f4914f6cdd1dULL};
  for (int t = 0; t < kIsoProbes; ++t) {
    for (auto& c : point) c = static_cast<long long>(rng.next() % static_cast<std::uint64_t>(d + 1));
    if (invertibleAt(point)) return true;
  }
  std::uint64_t gridSize = 1;
  bool small = true;
  for (int i = 0; i < hd && small; ++i) {
    gridSize *= static_cast<std::uint64_t>(d + 1);
    small = gridSize <= kIsoGridBudget;
  }
  if (small) {
    std::fill(point.begin(), point.end(), 0);
    while (true) {
      if (invertibleAt(point)) return true;
      int i = 0;
      while (i < hd && point[static_cast<std::size_t>(i)] == d) point[static_cast<std::size_t>(i++)] = 0;
      if (i == hd) return false;
      ++point[static_cast<std::size_t>(i)];
    }
  }
  // Grid too large to exhaust: compare Krull-Schmidt decompositions.
  return sameSummands(decompose(m), decompose(n));
}

#define QB_INSTANTIATE_END(S)                                                                         \
  template EndAlgebra<S> endAlgebra<S>(const Rep<S>&);                                                \
  template std::optional<Splitting<S>> fittingSplit<S>(const Rep<S>&, const Matrix<S>&);              \
  template IndecomposableResult<S> isIndecomposable<S>(const Rep<S>&, unsigned);                      \
  template std::vector<Subrep<S>> splitIntoIndecomposables<S>(const Rep<S>&, unsigned);               \
  template bool isoIndecomposable<S>(const Rep<S>&, const Rep<S>&);                                   \
  template std::vector<Summand<S>> decompose<S>(const Rep<S>&, unsigned);                             \
  template bool sameSummands<S>(const std::vector<Summand<S>>&, const std::vector<Summand<S>>&);      \
  template bool isIso<S>(const Rep<S>&, const Rep<S>&);

QB_FOR_EACH_FIELD(QB_INSTANTIATE_END)

}  // namespace qb
