#include <doctest.h>

#include "fixtures.hpp"
#include "quiverbench/approximation.hpp"
#include "quiverbench/duality.hpp"
#include "quiverbench/report.hpp"

using namespace qb;
using namespace qbtest;

TEST_CASE("approximation of S(1) over A2 is the inclusion into P(1)") {
  const auto a = algebraA2();
  const auto ap = minimalLeftApprox(simple(a, 0));
  CHECK(ap.certifiedMinimal);
  CHECK(isIso(ap.target, projective(a, 0)));
  CHECK(isInjective(ap.map));
  // Every map S(1) -> A factors through the approximation.
  const auto reg = regularRep(a);
  CHECK(homDim(simple(a, 0), reg) <= homDim(ap.target, reg));
}

TEST_CASE("approximation of projectives and zero") {
  const auto a = algebraA2();
  const auto p = projective(a, 1);
  const auto ap = minimalLeftApprox(p);
  CHECK(ap.certifiedMinimal);
  CHECK(isIso(ap.target, p));
  CHECK(isIsomorphism(ap.map));
  CHECK(mho(p).dim() == 0);
  const auto z = minimalLeftApprox(zeroRep(a));
  CHECK(z.target.dim() == 0);
  CHECK(mho(zeroRep(a)).dim() == 0);
}

namespace {

// f: M -> X is a minimal left approximation iff f*: X* -> M* is a projective
// cover, so X has one P(j) per copy of the simple at j in the top of M*.
int approximationTargetDim(const Rep<F101>& m) {
  const auto tops = topMultiplicities(aDual(m));
  int d = 0;
  for (int j = 0; j < m.vertexCount(); ++j) d += tops[static_cast<std::size_t>(j)] * projective(m.algebra, j).dim();
  return d;
}

}  // namespace

TEST_CASE("mho data over A2") {
  const auto a = algebraA2();
  const auto b = moduleB(a);
  const auto c = moduleC(a);
  CHECK(isIso(mho(simple(a, 0)), b));
  CHECK(isIso(mho(simple(a, 1)), c));
  const auto mc = mho(c);
  const auto mb = mho(b);
  for (const auto& m : {simple(a, 0), simple(a, 1), b, c})
    CHECK(minimalLeftApprox(m).target.dim() == approximationTargetDim(m));
  // Both approximations land in P(1) + P(2): the map e1 |-> c into P(1)
  // does not factor through P(2) because yb = xb = 0.
  CHECK(approximationTargetDim(c) == 8);
  CHECK(approximationTargetDim(b) == 8);
  CHECK(mc.dim() == 6);
  CHECK(mb.dim() == 6);
  CHECK(isIso(minimalLeftApprox(c).target, regularRep(a)));
  // The three-dimensional candidates P(2)/Ay, P(2)/Ax both have Ext^1 with
  // A, so neither is a cokernel of an approximation.
  const auto reg = regularRep(a);
  CHECK(ext1(projectiveModulo(a, 1, {"y"}), reg) > 0);
  CHECK(ext1(projectiveModulo(a, 1, {"x"}), projective(a, 1)) > 0);
  CHECK_FALSE(isTorsionless(mb));
  CHECK_FALSE(isTorsionless(mc));
  for (const auto& m : {simple(a, 0), simple(a, 1), b, c}) CHECK(ext1(mho(m), reg) == 0);
}

TEST_CASE("mho quiver of A2") {
  const auto a = algebraA2();
  const auto q = mhoQuiver<F101>({simple(a, 0), simple(a, 1)}, {"S1", "S2"});
  CHECK(q.nodes.size() == 6);
  CHECK(q.edges.size() == 4);
  const auto comps = q.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);
  CHECK(q.edges.size() == q.nodes.size() - comps.size());
  REQUIRE(q.branches.size() == 2);
  for (const auto& br : q.branches) {
    CHECK(br.reason == Termination::ReachedNonTorsionless);
    CHECK(br.steps == 2);
  }
  // Chains S1 <- B <- mho B and S2 <- C <- mho C.
  CHECK(isIso(q.nodes[1].rep, moduleB(a)));
  CHECK(q.edges[0].from == 1);
  CHECK(q.edges[0].to == 0);
  CHECK(q.nodes[2].rep.dim() == 6);
  CHECK_FALSE(q.nodes[2].torsionless);
  CHECK(q.nodes[0].reflexive);
  CHECK_FALSE(q.nodes[1].reflexive);
  CHECK(q.nodes[1].torsionless);
}

TEST_CASE("mho quiver of A(n) has components A3 and A(n+1)") {
  for (int n = 3; n <= 4; ++n) {
    const auto a = buildAlgebra<F101>(familyAn(n).presentation);
    std::vector<Rep<F101>> seeds;
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
      seeds.push_back(simple(a, v));
      labels.push_back("S" + std::to_string(v + 1));
    }
    const auto q = mhoQuiver(seeds, labels);
    std::vector<std::size_t> sizes;
    for (const auto& c : q.components()) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{3, static_cast<std::size_t>(n + 1)});
    CHECK(q.edges.size() == q.nodes.size() - 2);
    for (int v = 2; v < n; ++v) CHECK(isIso(mho(simple(a, v)), simple(a, v - 1)));
  }
}

TEST_CASE("projective seed is a singleton") {
  const auto a = algebraA2();
  const auto q = mhoQuiver<F101>({projective(a, 0)}, {"P1"});
  CHECK(q.nodes.size() == 1);
  CHECK(q.edges.empty());
  CHECK(q.branches[0].reason == Termination::ReachedProjective);
}

TEST_CASE("reflexive iff torsionless with torsionless mho") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const auto a = buildAlgebra<F101>(entry.presentation);
    const auto reg = regularRep(a);
    for (int v = 0; v < a->vertexCount(); ++v) {
      for (const auto& m : {simple(a, v), radicalRep(projective(a, v)).rep}) {
        if (m.dim() == 0) continue;
        const auto om = mho(m);
        CHECK(ext1(om, reg) == 0);
        CHECK(isReflexive(m) == (isTorsionless(m) && isTorsionless(om)));
      }
    }
  }
}

TEST_CASE("approximations over a self-injective local algebra are injective envelopes") {
  // k[x,y]/(x^2, y^2): the iterates of mho on k have dimension 2n+1, and the
  // approximation of M is its injective envelope A^(dim soc M).
  const auto a = buildAlgebra<F101>(localTruncated(LocalKind::Commutative).presentation);
  Rep<F101> m = simple(a, 0);
  for (int n = 0; n < 10; ++n) {
    CAPTURE(n);
    CHECK(m.dim() == 2 * n + 1);
    const auto ap = minimalLeftApprox(m);
    CHECK(ap.certifiedMinimal);
    CHECK(ap.target.dim() == injectiveEnvelope(m).injective.dim());
    CHECK(ap.target.dim() == 4 * socleRep(m).rep.dim());
    m = cokernel(ap.target, m, ap.map).rep;
  }
  const auto q = simplesMhoQuiver(a);
  CHECK(q.nodes.size() == 17);
  CHECK(q.branches[0].reason == Termination::StepCap);
}
