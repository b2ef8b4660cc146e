#include <doctest.h>

#include "fixtures.hpp"
#include "quiverbench/duality.hpp"

using namespace qb;
using namespace qbtest;

namespace {

// (phi_M)* after phi_{M*} must be the identity of M*.
template <class S>
bool tripleIdentityHolds(const Rep<S>& m) {
  const auto pm = phi(m);
  const auto pstar = phi(pm.dual());
  const auto dmm = dualData(pm.doubleDual());
  const RepMap<S> back = dualMap(pm.first, dmm, pm.phi);
  const RepMap<S> loop = compose(back, pstar.phi);
  for (const auto& block : loop.blocks)
    if (block != identity<S>(block.rows())) return false;
  // phi_{M*} is split mono, so M* is at most as large as M***.
  return pstar.kernelDim == 0 && pm.dual().dim() <= pstar.doubleDual().dim();
}

std::vector<Rep<F101>> sampleModules(const AlgebraPtr<F101>& a) {
  std::vector<Rep<F101>> out;
  for (int v = 0; v < a->vertexCount(); ++v) {
    out.push_back(simple(a, v));
    out.push_back(projective(a, v));
    const auto p = projective(a, v);
    const auto rad = radicalRep(p);
    if (rad.rep.dim() > 0) out.push_back(rad.rep);
    // P(v) / rad^2 P(v)
    const Matrix<F101> rad2 = rad.basis * radicalRep(rad.rep).basis;
    const auto top2 = quotientRep(p, rad2).rep;
    if (top2.dim() != p.dim() && top2.dim() > 1) out.push_back(top2);
  }
  out.push_back(regularRep(a));
  return out;
}

}  // namespace

TEST_CASE("duals of the simples over A2 have length two") {
  const auto a = algebraA2();
  for (int v = 0; v < 2; ++v) {
    const auto d = aDual(simple(a, v));
    CHECK(d.dim() == 2);
    CHECK(d.algebra == opposite(a));
    CHECK(representationDefect(d).empty());
  }
  CHECK(aDual(zeroRep(a)).dim() == 0);
}

TEST_CASE("duals of the long-chain simples over A(n) are simple") {
  for (int n = 3; n <= 5; ++n) {
    const auto a = buildAlgebra<F101>(familyAn(n).presentation);
    for (int v = 2; v < n; ++v) {
      const auto d = aDual(simple(a, v));
      CHECK(d.dim() == 1);
    }
    CHECK(aDual(simple(a, 0)).dim() == 2);
    CHECK(aDual(simple(a, 1)).dim() == 2);
  }
}

TEST_CASE("phi of the regular module and of zero is bijective") {
  const auto a = algebraA2();
  const auto p = phi(regularRep(a));
  CHECK(p.kernelDim == 0);
  CHECK(p.cokernel.dim() == 0);
  CHECK(p.doubleDual().algebra == a);
  const auto z = phi(zeroRep(a));
  CHECK(z.kernelDim == 0);
  CHECK(z.doubleDual().dim() == 0);
}

TEST_CASE("S(2) over the three-vertex example has double dual P(3)") {
  const auto a = buildAlgebra<F101>(threeVertexExample().presentation);
  const auto s2 = simple(a, 1);
  const auto p = phi(s2);
  CHECK(p.kernelDim == 0);
  CHECK(isIso(p.doubleDual(), projective(a, 2)));
  CHECK(isIso(p.cokernel, simple(a, 2)));
  CHECK(isTorsionless(s2));
  CHECK_FALSE(isReflexive(s2));
}

TEST_CASE("torsionless and reflexive modules over A2") {
  const auto a = algebraA2();
  CHECK(isTorsionless(moduleB(a)));
  CHECK(isTorsionless(moduleC(a)));
  CHECK_FALSE(isReflexive(moduleB(a)));
  CHECK_FALSE(isReflexive(moduleC(a)));
  CHECK(isReflexive(simple(a, 0)));
  CHECK(isReflexive(simple(a, 1)));
  CHECK(isReflexive(regularRep(a)));
  // P(2)/Ay is a copy of mho C: not torsionless.
  CHECK_FALSE(isTorsionless(projectiveModulo(a, 1, {"y"})));
  CHECK_FALSE(isTorsionless(projectiveModulo(a, 1, {"x"})));
}

TEST_CASE("an injective simple at a source is not torsionless") {
  const auto a = buildAlgebra<F101>(lineQuiver(2).presentation);
  CHECK_FALSE(isTorsionless(simple(a, 0)));
  CHECK(isTorsionless(simple(a, 1)));
}

TEST_CASE("bricks and orthogonality") {
  const auto a = algebraA2();
  const auto d1 = aDual(simple(a, 0));
  const auto d2 = aDual(simple(a, 1));
  CHECK(isBrick(d1));
  CHECK(isBrick(d2));
  CHECK(areOrthogonal(d1, d2));
  CHECK_FALSE(areOrthogonal(d1, d1));
  // End P(1) = e1 A e1 = span{e1, c}.
  CHECK(homDim(projective(a, 0), projective(a, 0)) == 2);
  CHECK_FALSE(isBrick(projective(a, 0)));
  const auto s = simple(a, 0);
  CHECK_FALSE(isBrick(directSum<F101>({s, s}).rep));

  for (int n = 3; n <= 4; ++n) {
    const auto an = buildAlgebra<F101>(familyAn(n).presentation);
    std::vector<Rep<F101>> duals;
    for (int v = 0; v < n; ++v) duals.push_back(aDual(simple(an, v)));
    for (std::size_t i = 0; i < duals.size(); ++i) {
      CHECK(isBrick(duals[i]));
      for (std::size_t j = i + 1; j < duals.size(); ++j) CHECK(areOrthogonal(duals[i], duals[j]));
    }
  }
}

TEST_CASE("brick test needs a large enough field") {
  const auto a = algebraA2<F2>();
  const auto p1 = projective(a, 0);
  CHECK_THROWS_AS(isBrick(directSum<F2>({p1, p1, p1}).rep), FieldTooSmall);
}

TEST_CASE("cogeneration by the radical of A2") {
  const auto a = algebraA2();
  const auto j = radicalRep(regularRep(a)).rep;
  CHECK(cogeneratedBy(moduleB(a), j));
  CHECK(cogeneratedBy(moduleC(a), j));
  CHECK(cogeneratedBy(simple(a, 0), j));
  CHECK(cogeneratedBy(projective(a, 0), j));
  CHECK_FALSE(cogeneratedBy(projective(a, 1), j));
  CHECK(cogeneratedBy(projective(a, 1), projective(a, 1)));
}

TEST_CASE("duality identities across the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto a = buildAlgebra<F101>(entry.presentation);
    for (const auto& m : sampleModules(a)) {
      CHECK(tripleIdentityHolds(m));
      const bool torsionless = isTorsionless(m);
      CHECK(torsionless == cogeneratedBy(m, regularRep(a)));
      if (isReflexive(m)) CHECK(torsionless);
    }
    for (int v = 0; v < a->vertexCount(); ++v) {
      CHECK(isReflexive(projective(a, v)));
      CHECK_NOTHROW(aDual(simple(a, v)));
    }
  }
}

TEST_CASE("M*** can be larger than M*") {
  const auto a = buildAlgebra<F101>(localTruncated(LocalKind::TwoLoopsSquareZero).presentation);
  const auto p = phi(simple(a, 0));
  CHECK(p.dual().dim() == 2);
  CHECK(phi(p.dual()).doubleDual().dim() == 8);
}

TEST_CASE("duality over the rationals") {
  const auto a = algebraA2<Rational>();
  CHECK(isReflexive(simple(a, 0)));
  CHECK(aDual(simple(a, 1)).dim() == 2);
}
