#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "quiverbench/classification.hpp"
#include "quiverbench/duality.hpp"

namespace qb {

namespace {

bool connectedSupport(const Quiver& q, const std::vector<int>& dims, const std::vector<bool>& freeArrow) {
  const int n = q.vertexCount();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (dims[static_cast<std::size_t>(v)] > 0) start = v;
  if (start < 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int ai = 0; ai < q.arrowCount(); ++ai) {
      if (!freeArrow[static_cast<std::size_t>(ai)]) continue;
      const Arrow& ar = q.arrows[static_cast<std::size_t>(ai)];
      int other = -1;
      if (ar.source == v) other = ar.target;
      if (ar.target == v) other = ar.source;
      if (other < 0 || seen[static_cast<std::size_t>(other)] || dims[static_cast<std::size_t>(other)] == 0) continue;
      seen[static_cast<std::size_t>(other)] = true;
      stack.push_back(other);
    }
  }
  for (int v = 0; v < n; ++v)
    if (dims[static_cast<std::size_t>(v)] > 0 && !seen[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool nextDims(std::vector<int>& d, const std::vector<int>& cap) {
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] < cap[v]) {
      ++d[v];
      return true;
    }
    d[v] = 0;
  }
  return false;
}

int freeEntries(const Quiver& q, const std::vector<int>& d, const std::vector<bool>& freeArrow) {
  int bits = 0;
  for (int ai = 0; ai < q.arrowCount(); ++ai)
    if (freeArrow[static_cast<std::size_t>(ai)]) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(ai)];
      bits += d[static_cast<std::size_t>(ar.target)] * d[static_cast<std::size_t>(ar.source)];
    }
  return bits;
}

Matrix<F101> pathMatrix(const Path& p, const std::vector<Matrix<F101>>& arrows, const std::vector<int>& d) {
  Matrix<F101> out = identity<F101>(d[static_cast<std::size_t>(p.source)]);
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out = arrows[static_cast<std::size_t>(*it)] * out;
  return out;
}

bool satisfiesRelations(const Presentation& p, const std::vector<Matrix<F101>>& arrows, const std::vector<int>& d) {
  for (const Relation& r : p.relations) {
    if (r.terms.empty()) continue;
    const Path& first = r.terms.front().path;
    Matrix<F101> sum = zeros<F101>(d[static_cast<std::size_t>(first.target)], d[static_cast<std::size_t>(first.source)]);
    if (sum.size() == 0) continue;
    for (const Term& t : r.terms) sum += FieldTraits<F101>::fromBigInt(t.coefficient) * pathMatrix(t.path, arrows, d);
    if (!isZeroMatrix(sum)) return false;
  }
  return true;
}

std::string fingerprint(const Rep<F101>& m) {
  std::string key = dimVectorString(m);
  for (const auto& act : basisActions(m)) key += "," + std::to_string(rank(act));
  return key;
}

}  // namespace

template <class E>
std::vector<Rep<F101>> enumerateIndecomposables(const AlgebraPtr<F101>& a, const std::vector<int>& cap,
                                                const Matrix<F101>& killed, std::uint64_t budget) {
  static_assert(FieldTraits<E>::finite && FieldTraits<E>::order <= 3, "enumeration runs over F2 or F3");
  constexpr std::uint64_t q = FieldTraits<E>::order;
  const Quiver& quiver = a->quiver();
  const int n = quiver.vertexCount();
  if (static_cast<int>(cap.size()) != n) throw DimensionMismatch("dimension cap needs one entry per vertex");
  const bool haveKilled = killed.cols() > 0;
  if (haveKilled && killed.rows() != a->dim()) throw DimensionMismatch("killed ideal has the wrong ambient dimension");

  std::vector<int> effCap = cap;
  for (int v = 0; v < n; ++v) {
    const Vector<F101> e = basisVector(*a, a->idempotents[static_cast<std::size_t>(v)]);
    if (haveKilled && inColumnSpan(killed, Matrix<F101>(e))) effCap[static_cast<std::size_t>(v)] = 0;
  }
  std::vector<bool> freeArrow(static_cast<std::size_t>(quiver.arrowCount()), true);
  for (int ai = 0; ai < quiver.arrowCount(); ++ai) {
    const Vector<F101>& x = a->arrowElements[static_cast<std::size_t>(ai)];
    if (isZeroVector(x) || (haveKilled && inColumnSpan(killed, Matrix<F101>(x)))) freeArrow[static_cast<std::size_t>(ai)] = false;
  }

  // Budget check over all dimension vectors before any work.
  std::vector<std::vector<int>> dimVectors;
  std::uint64_t total = 0;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  while (nextDims(d, effCap)) {
    if (!connectedSupport(quiver, d, freeArrow)) continue;
    const int bits = freeEntries(quiver, d, freeArrow);
    std::uint64_t count = 1;
    for (int i = 0; i < bits; ++i) {
      count *= q;
      if (count > budget) break;
    }
    total += count;
    if (total > budget)
      throw BudgetExceeded("enumeration needs more than " + std::to_string(budget) + " matrix tuples");
    dimVectors.push_back(d);
  }
  std::sort(dimVectors.begin(), dimVectors.end(), [](const auto& l, const auto& r) {
    const int sl = std::accumulate(l.begin(), l.end(), 0);
    const int sr = std::accumulate(r.begin(), r.end(), 0);
    return sl != sr ? sl < sr : l < r;
  });

  const auto lift = [](int digit) {
    return FieldTraits<F101>::fromInteger(E(static_cast<long long>(digit)).signedValue());
  };

  std::vector<Rep<F101>> out;
  std::map<std::string, std::vector<Rep<F101>>> seen;  // every class met so far
  for (const auto& dims : dimVectors) {
    const int bits = freeEntries(quiver, dims, freeArrow);
    std::vector<int> digits(static_cast<std::size_t>(bits), 0);
    for (;;) {
      std::vector<Matrix<F101>> arrows;
      std::size_t pos = 0;
      for (int ai = 0; ai < quiver.arrowCount(); ++ai) {
        const Arrow& ar = quiver.arrows[static_cast<std::size_t>(ai)];
        Matrix<F101> mat = zeros<F101>(dims[static_cast<std::size_t>(ar.target)], dims[static_cast<std::size_t>(ar.source)]);
        if (freeArrow[static_cast<std::size_t>(ai)])
          for (Index j = 0; j < mat.cols(); ++j)
            for (Index i = 0; i < mat.rows(); ++i) mat(i, j) = lift(digits[pos++]);
        arrows.push_back(std::move(mat));
      }
      if (satisfiesRelations(a->presentation, arrows, dims)) {
        std::optional<Rep<F101>> rep;
        try {
          rep = makeRep(a, dims, arrows);
        } catch (const InvalidRepresentation&) {
        }
        if (rep && haveKilled) {
          const auto actions = basisActions(*rep);
          for (Index c = 0; c < killed.cols() && rep; ++c) {
            Matrix<F101> act = zeros<F101>(rep->dim(), rep->dim());
            for (Index i = 0; i < killed.rows(); ++i)
              if (!isZero(killed(i, c))) act += killed(i, c) * actions[static_cast<std::size_t>(i)];
            if (!isZeroMatrix(act)) rep.reset();
          }
        }
        if (rep) {
          auto& bucket = seen[fingerprint(*rep)];
          const bool known = std::any_of(bucket.begin(), bucket.end(), [&](const Rep<F101>& r) { return isIso(r, *rep); });
          if (!known) {
            bucket.push_back(*rep);
            const auto verdict = isIndecomposable(*rep).verdict;
            if (verdict == Indecomposability::Undetermined)
              throw UndeterminedSummand("indecomposability undetermined for a candidate of dimension " + dimVectorString(*rep));
            if (verdict == Indecomposability::Yes) out.push_back(*rep);
          }
        }
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == static_cast<int>(q)) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return out;
}

template std::vector<Rep<F101>> enumerateIndecomposables<F2>(const AlgebraPtr<F101>&, const std::vector<int>&,
                                                             const Matrix<F101>&, std::uint64_t);
template std::vector<Rep<F101>> enumerateIndecomposables<F3>(const AlgebraPtr<F101>&, const std::vector<int>&,
                                                             const Matrix<F101>&, std::uint64_t);

std::vector<int> censusCap(const AlgebraPtr<F101>& a, const Matrix<F101>& annihilator) {
  const int n = a->vertexCount();
  // words[v][i]: basis words from i to v.
  std::vector<std::vector<std::vector<int>>> words(static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int k = 0; k < a->dim(); ++k) {
    const Path& w = a->basis[static_cast<std::size_t>(k)];
    words[static_cast<std::size_t>(w.target)][static_cast<std::size_t>(w.source)].push_back(k);
  }
  const auto quotientDim = [&](int v, int i) {
    const auto& ws = words[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
    if (ws.empty()) return 0;
    Matrix<F101> span = zeros<F101>(a->dim(), static_cast<Index>(ws.size()));
    for (std::size_t k = 0; k < ws.size(); ++k) span(ws[k], static_cast<Index>(k)) = F101(1);
    if (annihilator.cols() == 0) return static_cast<int>(ws.size());
    return static_cast<int>(ws.size()) - static_cast<int>(intersection(span, annihilator).cols());
  };
  std::vector<int> cap(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (quotientDim(v, v) == 0) continue;  // e_v lies in the annihilator
    int best = 0;
    for (int i = 0; i < n; ++i) best = std::max({best, quotientDim(v, i), quotientDim(i, v)});
    cap[static_cast<std::size_t>(v)] = best + 1;
  }
  return cap;
}

CensusResult torsionlessCensus(const AlgebraPtr<F101>& a, const CensusOptions& options) {
  CensusResult out;
  const int n = a->vertexCount();
  for (int v = 0; v < n; ++v) {
    out.members.push_back(projective(a, v));
    out.labels.push_back("P" + a->quiver().vertices[static_cast<std::size_t>(v)]);
  }
  const auto gens = radicalGenerators(*a);
  const Rep<F101> reg = regularRep(a);
  const Rep<F101> rad = radicalRep(reg).rep;
  if (rad.dim() == 0) {
    out.annihilator = identity<F101>(a->dim());
    out.completeness = "proved: semisimple algebra, the projectives are all modules";
  } else {
    out.annihilator = leftAnnihilator(*a, gens);
    out.cap = censusCap(a, out.annihilator);
    const auto candidates = enumerateIndecomposables<F2>(a, out.cap, out.annihilator, options.limits.enumerationBudget);
    std::map<std::string, int> perDims;
    for (const auto& m : candidates) {
      if (!cogeneratedBy(m, rad)) continue;
      const bool known = std::any_of(out.members.begin(), out.members.end(),
                                     [&](const Rep<F101>& p) { return p.dims == m.dims && isIso(p, m); });
      if (known) continue;
      std::string label;
      if (m.dim() == 1) {
        for (int v = 0; v < n; ++v)
          if (m.dims[static_cast<std::size_t>(v)] == 1) label = "S" + a->quiver().vertices[static_cast<std::size_t>(v)];
      } else {
        label = "M" + dimVectorString(m) + "#" + std::to_string(++perDims[dimVectorString(m)]);
      }
      out.members.push_back(m);
      out.labels.push_back(label);
    }
    out.completeness = "proved within cap " + std::string("(");
    for (std::size_t v = 0; v < out.cap.size(); ++v) out.completeness += (v ? "," : "") + std::to_string(out.cap[v]);
    out.completeness += ") by the annihilator argument";
  }
  for (std::size_t k = 0; k < out.members.size(); ++k) {
    if (!isTorsionless(out.members[k])) throw InternalError("census member " + out.labels[k] + " is not torsionless");
    if (isIndecomposable(out.members[k]).verdict != Indecomposability::Yes)
      throw InternalError("census member " + out.labels[k] + " is not indecomposable");
  }

  if (options.latticeCrossCheck && a->dim() <= options.limits.latticeCap) {
    const auto a2 = buildAlgebra<F2>(a->presentation);
    const auto lattice = submoduleLattice(regularRep(a2), options.limits.latticeCap);
    out.latticeChecked = true;
    out.latticeSize = lattice.count();
    std::vector<bool> hit(out.members.size(), false);
    std::map<std::string, bool> done;
    for (const auto& sub : lattice.submodules) {
      if (sub.cols() == 0) continue;
      const Matrix<F101> lifted = liftMatrix<F101, F2>(sub);
      std::vector<Vector<F101>> gensF;
      for (Index j = 0; j < lifted.cols(); ++j) gensF.push_back(lifted.col(j));
      const Subrep<F101> s = subRepGenerated(reg, gensF);
      const Matrix<F101> rows = canonicalRowBasis(s.basis);
      std::string key;
      for (Index i = 0; i < rows.rows(); ++i)
        for (Index j = 0; j < rows.cols(); ++j) key += std::to_string(rows(i, j).value()) + ",";
      if (!done.emplace(std::to_string(rows.rows()) + ":" + key, true).second) continue;
      for (const auto& summand : decompose(s.rep)) {
        bool matched = false;
        for (std::size_t k = 0; k < out.members.size() && !matched; ++k)
          if (out.members[k].dims == summand.rep.dims && isIso(out.members[k], summand.rep)) {
            matched = true;
            hit[k] = true;
          }
        if (!matched)
          throw InternalError("lattice cross-check found a torsionless summand " + dimVectorString(summand.rep) +
                              " outside the census");
      }
    }
    out.latticeAgrees = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    out.completeness += out.latticeAgrees ? "; cross-checked against the F2 submodule lattice of A"
                                          : "; the F2 submodule lattice of A reaches only part of the census";
  } else if (rad.dim() > 0) {
    out.completeness += "; lattice cross-check skipped (dim A above the lattice cap)";
  }
  return out;
}

}  // namespace qb
