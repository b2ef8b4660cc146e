#include <doctest.h>

#include "fixtures.hpp"

using namespace qb;
using namespace qbtest;

namespace {

// Words u of A with source `vertex` such that every arrow kills u; this is
// the socle of P(vertex) computed straight from the multiplication table.
int socleWordsOfProjective(const Algebra<F101>& a, int vertex) {
  Matrix<F101> cols(a.dim(), 0);
  for (int i = 0; i < a.dim(); ++i) {
    if (a.basis[static_cast<std::size_t>(i)].source != vertex) continue;
    cols.conservativeResize(Eigen::NoChange, cols.cols() + 1);
    cols.col(cols.cols() - 1) = basisVector(a, i);
  }
  Matrix<F101> conditions(0, cols.cols());
  for (const auto& arrow : a.arrowElements) {
    const Matrix<F101> img = leftMultiplication(a, arrow) * cols;
    conditions = vstack(conditions, img);
  }
  return static_cast<int>(nullspace(conditions).cols());
}

int wordsWith(const Algebra<F101>& a, int source, int target) {
  int n = 0;
  for (const auto& w : a.basis)
    if ((source < 0 || w.source == source) && (target < 0 || w.target == target)) ++n;
  return n;
}

}  // namespace

TEST_CASE("regular module and projectives over A2") {
  const auto a = algebraA2();
  const auto reg = regularRep(a);
  CHECK(reg.dims == std::vector<int>{5, 3});
  CHECK(reg.dim() == 8);
  CHECK(representationDefect(reg).empty());
  CHECK(projective(a, 0).dim() == 3);
  CHECK(projective(a, 1).dim() == 5);
  CHECK(isIso(reg, directSum<F101>({projective(a, 0), projective(a, 1)}).rep));
  for (int v = 0; v < 2; ++v) CHECK(isIso(topRep(projective(a, v)).rep, simple(a, v)));
}

TEST_CASE("A(n) regular module has dimension 2n+4") {
  for (int n = 3; n <= 5; ++n) {
    const auto a = buildAlgebra<F101>(familyAn(n).presentation);
    CHECK(regularRep(a).dim() == 2 * n + 4);
  }
}

TEST_CASE("three-vertex example projective of the source") {
  const auto a = buildAlgebra<F101>(threeVertexExample().presentation);
  CHECK(projective(a, 2).dim() == 2);
  CHECK(projective(a, 0).dim() == 1);
  // Omega S(2) = S(1) = P(1), so proj.dim S(2) = 1.
  const auto s2 = simple(a, 1);
  CHECK(isIso(syzygy(s2).rep, simple(a, 0)));
  CHECK_FALSE(projDimAtMost(s2, 0));
  CHECK(projDimAtMost(s2, 1));
}

TEST_CASE("hom dimensions") {
  const auto a = algebraA2();
  const auto reg = regularRep(a);
  CHECK(homDim(simple(a, 0), reg) == 2);
  CHECK(homDim(simple(a, 1), reg) == 2);
  CHECK(homDim(simple(a, 0), simple(a, 0)) == 1);
  CHECK(homDim(simple(a, 0), simple(a, 1)) == 0);
  for (int n = 3; n <= 5; ++n) {
    const auto an = buildAlgebra<F101>(familyAn(n).presentation);
    CHECK(homDim(simple(an, 2), regularRep(an)) == 1);
  }
  for (const auto& f : homBasis(projective(a, 1), reg)) CHECK(isRepMap(projective(a, 1), reg, f));
}

TEST_CASE("hom is additive and D reverses it") {
  const auto a = algebraA2();
  const std::vector<Rep<F101>> mods = {simple(a, 0), simple(a, 1), moduleB(a), moduleC(a), projective(a, 0),
                                       projective(a, 1)};
  const auto sum = directSum<F101>({mods[2], mods[3]}).rep;
  for (const auto& n : mods) {
    CHECK(homDim(sum, n) == homDim(mods[2], n) + homDim(mods[3], n));
    CHECK(homDim(n, sum) == homDim(n, mods[2]) + homDim(n, mods[3]));
  }
  for (const auto& m : mods)
    for (const auto& n : mods) CHECK(homDim(m, n) == homDim(linearDual(n), linearDual(m)));
}

TEST_CASE("algebra mismatch is rejected") {
  const auto a = algebraA2();
  const auto b = buildAlgebra<F101>(lineQuiver(2).presentation);
  CHECK_THROWS_AS(homBasis(simple(a, 0), simple(b, 0)), AlgebraMismatch);
}

TEST_CASE("invalid representation is rejected") {
  const auto a = algebraA2();
  // c acting non-trivially on a 1-dim vertex-1 space breaks c*c = 0.
  std::vector<Matrix<F101>> arrows = {Matrix<F101>::Constant(1, 1, F101(1)), zeros<F101>(0, 1), zeros<F101>(1, 0),
                                      zeros<F101>(1, 0)};
  CHECK_THROWS_AS(makeRep(a, {1, 0}, arrows), InvalidRepresentation);
  arrows[0] = zeros<F101>(2, 1);
  CHECK_THROWS_AS(makeRep(a, {1, 0}, arrows), InvalidRepresentation);
}

TEST_CASE("B and C are the length-two modules with top S(1)") {
  const auto a = algebraA2();
  const auto b = moduleB(a);
  const auto c = moduleC(a);
  CHECK(b.dims == std::vector<int>{1, 1});
  CHECK(c.dims == std::vector<int>{2, 0});
  CHECK(isIso(topRep(b).rep, simple(a, 0)));
  CHECK(isIso(topRep(c).rep, simple(a, 0)));
  CHECK(isIso(socleRep(b).rep, simple(a, 1)));
  CHECK(isIso(socleRep(c).rep, simple(a, 0)));
  CHECK_FALSE(isIso(b, c));
  CHECK(isIso(b, b));
  CHECK_FALSE(isIso(simple(a, 0), simple(a, 1)));
  // Ax is a copy of B and Ay a copy of C inside P(2).
  CHECK(isIso(projectiveSub(a, 1, {"x"}), b));
  CHECK(isIso(projectiveSub(a, 1, {"y"}), c));
}

TEST_CASE("sub, quotient, radical, socle, top") {
  const auto a = algebraA2();
  const auto reg = regularRep(a);
  std::vector<Vector<F101>> gens = {Vector<F101>(Vector<F101>::Zero(8))};
  const auto zeroSub = subRepGenerated(reg, gens);
  CHECK(zeroSub.rep.dim() == 0);
  CHECK(isIso(quotientRep(reg, zeroSub.basis).rep, reg));

  const auto rad = radicalRep(reg);
  CHECK(rad.rep.dim() == 6);
  const auto parts = decompose(rad.rep);
  std::vector<Summand<F101>> expected = {{simple(a, 0), 1}, {simple(a, 1), 1}, {moduleB(a), 1}, {moduleC(a), 1}};
  CHECK(sameSummands(parts, expected));

  const auto p2 = projective(a, 1);
  const auto soc = socleRep(p2);
  CHECK(soc.rep.dim() == socleWordsOfProjective(*a, 1));
  CHECK(soc.rep.dims == std::vector<int>{1, 1});
  for (int v = 0; v < 2; ++v) CHECK(socleRep(projective(a, v)).rep.dim() == socleWordsOfProjective(*a, v));
  CHECK(isIso(topRep(p2).rep, simple(a, 1)));
}

TEST_CASE("direct sums") {
  const auto a = algebraA2();
  const auto s = directSum<F101>({simple(a, 0), simple(a, 1)});
  CHECK(s.rep.dims == std::vector<int>{1, 1});
  CHECK(isIso(directSum<F101>({moduleB(a), zeroRep(a)}).rep, moduleB(a)));
  for (std::size_t k = 0; k < 2; ++k) {
    const auto id = compose(s.projections[k], s.injections[k]);
    for (const auto& block : id.blocks) CHECK(block == identity<F101>(block.rows()));
  }
}

TEST_CASE("endomorphism algebras") {
  const auto a = algebraA2();
  const auto e = endAlgebra(simple(a, 0));
  CHECK(e.dim() == 1);
  CHECK(e.radicalDim() == 0);
  const auto p1 = projective(a, 0);
  const auto e2 = endAlgebra(directSum<F101>({p1, p1}).rep);
  CHECK(e2.dim() == 4 * wordsWith(*a, 0, 0));
  CHECK(e2.topDim() == 4);
  const auto ep = endAlgebra(p1);
  CHECK(ep.dim() == 2);
  CHECK(ep.topDim() == 1);
}

TEST_CASE("field too small for the radical is reported") {
  const auto a = algebraA2<F2>();
  const auto p1 = projective(a, 0);
  CHECK_THROWS_AS(endAlgebra(directSum<F2>({p1, p1, p1}).rep), FieldTooSmall);
  CHECK_THROWS_AS(isIso(p1, p1), FieldTooSmall);
}

TEST_CASE("indecomposability verdicts") {
  const auto a = algebraA2();
  CHECK(isIndecomposable(moduleB(a)).verdict == Indecomposability::Yes);
  CHECK(isIndecomposable(projective(a, 0)).verdict == Indecomposability::Yes);
  CHECK(isIndecomposable(projective(a, 1)).verdict == Indecomposability::Yes);
  const auto split = isIndecomposable(directSum<F101>({simple(a, 0), simple(a, 1)}).rep);
  CHECK(split.verdict == Indecomposability::No);
  REQUIRE(split.witness.has_value());
  CHECK(split.witness->first.rep.dim() + split.witness->second.rep.dim() == 2);
  CHECK_THROWS(isIndecomposable(zeroRep(a)));
}

TEST_CASE("decomposition multiplicities and seeds") {
  const auto a = algebraA2();
  const auto s1 = simple(a, 0);
  const auto cube = decompose(directSum<F101>({s1, s1, s1}).rep);
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].multiplicity == 3);
  const auto reg = decompose(regularRep(a));
  CHECK(sameSummands(reg, {{projective(a, 0), 1}, {projective(a, 1), 1}}));

  const auto m = directSum<F101>({moduleB(a), moduleC(a), s1, moduleB(a)}).rep;
  const auto d0 = decompose(m, 0);
  for (unsigned seed = 1; seed < 4; ++seed) CHECK(sameSummands(d0, decompose(m, seed)));
  std::vector<int> total(2, 0);
  for (const auto& s : d0)
    for (int v = 0; v < 2; ++v) total[static_cast<std::size_t>(v)] += s.multiplicity * s.rep.dims[static_cast<std::size_t>(v)];
  CHECK(total == m.dims);
}

TEST_CASE("projective covers and syzygies") {
  const auto a = algebraA2();
  for (int v = 0; v < 2; ++v) {
    const auto cover = projectiveCover(simple(a, v));
    CHECK(isIso(cover.projective, projective(a, v)));
    CHECK(isSurjective(cover.map));
    CHECK(syzygy(projective(a, v)).rep.dim() == 0);
  }
  const auto omega = syzygy(simple(a, 0)).rep;
  CHECK(isIso(omega, directSum<F101>({simple(a, 1), simple(a, 0)}).rep));
  // Omega(M + P) = Omega(M).
  const auto withP = directSum<F101>({moduleB(a), projective(a, 1)}).rep;
  CHECK(isIso(syzygy(withP).rep, syzygy(moduleB(a)).rep));
  CHECK(isProjective(projective(a, 1)));
  CHECK_FALSE(isProjective(moduleB(a)));
}

TEST_CASE("linear duality") {
  const auto a = algebraA2();
  const auto ao = opposite(a);
  for (int v = 0; v < 2; ++v) {
    CHECK(isIso(linearDual(simple(a, v)), simple(ao, v)));
    const auto m = projective(a, v);
    const auto dd = linearDual(linearDual(m));
    CHECK(dd.algebra == a);
    CHECK(isIso(dd, m));
    CHECK(linearDual(m).dim() == m.dim());
  }
}

TEST_CASE("injective envelopes") {
  const auto a = algebraA2();
  const auto ao = opposite(a);
  for (int v = 0; v < 2; ++v) {
    const auto env = injectiveEnvelope(simple(a, v));
    CHECK(isIso(env.injective, linearDual(projective(ao, v))));
    CHECK(isInjective(env.map));
  }
  const auto reg = regularRep(a);
  CHECK(socleMultiplicities(reg) == std::vector<int>{2, 2});
  const auto env = injectiveEnvelope(reg);
  CHECK(isInjective(env.map));
  CHECK(socleMultiplicities(env.injective) == std::vector<int>{2, 2});
  // D(P^op(i)) has the dimension of e_i A, the words ending at i.
  const int expected = 2 * wordsWith(*a, -1, 0) + 2 * wordsWith(*a, -1, 1);
  CHECK(expected == 16);
  CHECK(env.injective.dim() == expected);
  const auto i1 = injectiveEnvelope(simple(a, 0)).injective;
  CHECK(isIso(injectiveEnvelope(i1).injective, i1));
}

TEST_CASE("ext1") {
  const auto a = algebraA2();
  const auto reg = regularRep(a);
  const auto p2 = projective(a, 1);
  CHECK(ext1(projectiveModulo(a, 1, {"x"}), p2) > 0);
  CHECK(ext1(projective(a, 0), reg) == 0);
  CHECK(ext1(simple(a, 0), simple(a, 1)) == 1);
  CHECK(ext1(simple(a, 1), simple(a, 0)) == 2);
}

TEST_CASE("self-injective Nakayama simples have infinite projective dimension") {
  const auto a = buildAlgebra<F101>(nakayamaCycle(3, true).presentation);
  for (int v = 0; v < 3; ++v)
    for (int k = 0; k <= 4; ++k) CHECK_FALSE(projDimAtMost(simple(a, v), k));
  CHECK(projDimAtMost(projective(a, 0), 0));
}

TEST_CASE("rational field agrees with F101 on A2") {
  const auto a = algebraA2<Rational>();
  const auto rad = radicalRep(regularRep(a)).rep;
  CHECK(decompose(rad).size() == 4);
  CHECK(homDim(simple(a, 0), regularRep(a)) == 2);
}
