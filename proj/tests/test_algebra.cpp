#include <doctest.h>

#include <set>

#include "quiverbench/algebra.hpp"
#include "quiverbench/corpus.hpp"
#include "quiverbench/presentation_io.hpp"

using namespace qb;

namespace {

std::vector<std::string> labelsOfColumns(const Algebra<F101>& a, const Matrix<F101>& cols) {
  std::vector<std::string> out;
  for (Index j = 0; j < cols.cols(); ++j) out.push_back(formatElement(a, Vector<F101>(cols.col(j))));
  return out;
}

}  // namespace

TEST_CASE("A2 has the expected eight-word basis") {
  const auto a = buildAlgebra<F101>(familyA2().presentation);
  CHECK(a->dim() == 8);
  CHECK(a->labels == std::vector<std::string>{"e1", "e2", "b", "c", "x", "y", "bx", "cy"});
  CHECK(checkAlgebraAxioms(*a).empty());
  CHECK(a->loewyLength == 3);
  CHECK(radicalGenerators(*a).size() == 6);
}

TEST_CASE("A2 socle and annihilator of the radical") {
  const auto a = buildAlgebra<F101>(familyA2().presentation);
  const auto soc = socleLeftRegular(*a);
  const auto names = labelsOfColumns(*a, soc);
  CHECK(std::set<std::string>(names.begin(), names.end()) == std::set<std::string>{"c", "b", "bx", "cy"});

  const auto ann = leftAnnihilator(*a, radicalGenerators(*a));
  const auto annNames = labelsOfColumns(*a, ann);
  CHECK(std::set<std::string>(annNames.begin(), annNames.end()) == std::set<std::string>{"x", "y", "bx", "cy"});
  CHECK(leftAnnihilator(*a, {unitElement(*a)}).cols() == 0);
  CHECK(leftAnnihilator<F101>(*a, {}).cols() == 8);

  const auto q = quotientAlgebra(a, ann);
  CHECK(q.algebra->labels == std::vector<std::string>{"e1", "e2", "b", "c"});
  CHECK(checkAlgebraAxioms(*q.algebra).empty());
  CHECK(q.map.rows() == 4);
  CHECK(quotientAlgebra(a, Matrix<F101>(8, 0)).algebra->dim() == 8);
  CHECK(quotientAlgebra(a, columnsOf(radicalGenerators(*a), 8)).algebra->dim() == 2);
  CHECK_THROWS(quotientAlgebra(a, columnsOf<F101>({basisVector(*a, 0)}, 8)));
  CHECK_THROWS(quotientAlgebra(a, columnsOf<F101>({basisVector(*a, 2)}, 8)));
}

TEST_CASE("An has dimension 2n+4") {
  for (int n = 3; n <= 6; ++n) {
    const auto a = buildAlgebra<F101>(familyAn(n).presentation);
    CHECK(a->dim() == 2 * n + 4);
    CHECK(checkAlgebraAxioms(*a).empty());
  }
}

TEST_CASE("trivial and semisimple algebras") {
  const auto a = buildAlgebra<F101>(semisimple(1).presentation);
  CHECK(a->dim() == 1);
  CHECK(a->labels == std::vector<std::string>{"e1"});
  const auto s = buildAlgebra<F101>(semisimple(3).presentation);
  CHECK(radicalGenerators(*s).empty());
  CHECK(socleLeftRegular(*s).cols() == 3);
}

TEST_CASE("truncated polynomial ring") {
  const auto a = buildAlgebra<Rational>(localTruncated(LocalKind::Truncated, 3).presentation);
  CHECK(a->labels == std::vector<std::string>{"e1", "x", "xx"});
  const auto op = opposite(a);
  CHECK(op->left == a->left);
}

TEST_CASE("commutative relation is honoured") {
  const auto a = buildAlgebra<F7>(localTruncated(LocalKind::Commutative).presentation);
  CHECK(a->dim() == 4);
  CHECK(checkAlgebraAxioms(*a).empty());
  const auto xy = multiply(*a, a->arrowElements[0], a->arrowElements[1]);
  const auto yx = multiply(*a, a->arrowElements[1], a->arrowElements[0]);
  CHECK(xy == yx);
  CHECK_FALSE(isZeroVector(xy));
}

TEST_CASE("three-vertex example socle") {
  const auto a = buildAlgebra<F101>(threeVertexExample().presentation);
  CHECK(a->dim() == 5);
  CHECK(socleLeftRegular(*a).cols() == 3);
}

TEST_CASE("opposite algebra") {
  const auto a = buildAlgebra<F101>(familyA2().presentation);
  const auto op = opposite(a);
  CHECK(op->dim() == 8);
  CHECK(op->labels == a->labels);
  CHECK(checkAlgebraAxioms(*op).empty());
  CHECK(opposite(op).get() == a.get());
  CHECK(opposite(a).get() == op.get());
  // Right projectives e_i A have dimensions 5 and 3.
  CHECK(rank(Matrix<F101>(a->left[0])) == 5);
  CHECK(rank(Matrix<F101>(a->left[1])) == 3);
  const auto rebuilt = buildAlgebra<F101>(oppositePresentation(oppositePresentation(a->presentation)));
  CHECK(sameAlgebra(*rebuilt, *a));
}

TEST_CASE("non-admissible presentations are rejected") {
  Presentation p = parsePresentation("vertices 1\narrow x 1 1\nnilpotency 4\n");
  CHECK_THROWS_AS(buildAlgebra<F101>(p), AdmissibilityError);
  Presentation free = parsePresentation("vertices 1\narrow x 1 1\narrow y 1 1\nrelation x*x\nnilpotency 5\n");
  CHECK_THROWS_AS(buildAlgebra<F101>(free), AdmissibilityError);
}

TEST_CASE("presentation text round trip") {
  for (const auto& entry : corpus()) {
    const std::string text = printPresentation(entry.presentation);
    CHECK(parsePresentation(text) == entry.presentation);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parsePresentation("vertices 1 2\narrow c 1 1\narrow x 2 1\nrelation x*x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parsePresentation("vertices\n"), ParseError);
  CHECK_THROWS_AS(parsePresentation("vertices 1\narrow x 1 1\nrelation x*z\n"), ParseError);
  CHECK_THROWS_AS(parsePresentation("vertices 1\narrow x 1 1\nrelation x\n"), ParseError);
  CHECK_THROWS_AS(parsePresentation("field F4\nvertices 1\n"), ParseError);
}

TEST_CASE("A2 presentation file parses") {
  const auto p = parsePresentation(R"(# two vertices
name A2
vertices 1 2
arrow c 1 1
arrow b 1 2
arrow x 2 1
arrow y 2 1
relation c*x
relation b*y
relation c*c
relation b*c
relation x*b
relation y*b
)");
  CHECK(p.quiver.vertexCount() == 2);
  CHECK(p.quiver.arrowCount() == 4);
  CHECK(p.relations.size() == 6);
  CHECK(p == familyA2().presentation);
}
