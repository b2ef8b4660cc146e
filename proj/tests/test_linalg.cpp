#include <doctest.h>

#include <random>

#include "quiverbench/linalg.hpp"

using namespace qb;

namespace {

template <class S>
Matrix<S> fromRows(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix<S> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = S(v);
    ++i;
  }
  return m;
}

template <class S>
Matrix<S> randomMatrix(std::mt19937& rng, Index rows, Index cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = S(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
  const auto id = rref(identity<F101>(2));
  CHECK(id.reduced == identity<F101>(2));
  CHECK(id.pivots == std::vector<Index>{0, 1});
  const auto z = rref(zeros<F101>(3, 2));
  CHECK(isZeroMatrix(z.reduced));
  CHECK(z.pivots.empty());
}

TEST_CASE("rref over F2 of the all-ones 2x2 matrix") {
  const auto e = rref(fromRows<F2>({{1, 1}, {1, 1}}));
  CHECK(e.reduced == fromRows<F2>({{1, 1}, {0, 0}}));
  CHECK(e.pivots == std::vector<Index>{0});
}

TEST_CASE("rref is idempotent") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto m = randomMatrix<F7>(rng, 4, 6, 6);
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivots == twice.pivots);
  }
}

TEST_CASE("solve") {
  const auto b = fromRows<F7>({{1, 2}, {3, 4}});
  CHECK(*solve<F7>(identity<F7>(2), b) == b);
  CHECK_FALSE(solve<F7>(zeros<F7>(2, 2), b).has_value());
  CHECK_THROWS_AS(solve<F7>(identity<F7>(3), b), DimensionMismatch);

  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = randomMatrix<F7>(rng, 4, 5, 6);
    const auto x0 = randomMatrix<F7>(rng, 5, 2, 6);
    const Matrix<F7> rhs = a * x0;
    const auto x = solve(a, rhs);
    REQUIRE(x.has_value());
    CHECK(Matrix<F7>(a * *x) == rhs);
  }
}

TEST_CASE("nullspace") {
  CHECK(nullspaceBasis<F101>(identity<F101>(3)).empty());
  CHECK(nullspaceBasis<F101>(zeros<F101>(3, 3)).size() == 3);
  const auto ns = nullspaceBasis<F2>(fromRows<F2>({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0](0) == F2(1));
  CHECK(ns[0](1) == F2(1));
}

TEST_CASE("rank-nullity on random matrices over Q and F3") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    const auto q = randomMatrix<Rational>(rng, 3 + t % 3, 2 + t % 5, 3);
    CHECK(rank(q) + static_cast<Index>(nullspaceBasis(q).size()) == q.cols());
    const auto f = randomMatrix<F3>(rng, 5, 4, 2);
    const Matrix<F3> ns = nullspace(f);
    CHECK(isZeroMatrix(Matrix<F3>(f * ns)));
    CHECK(rank(f) + ns.cols() == f.cols());
  }
}

TEST_CASE("inverse") {
  CHECK(*inverse<Rational>(identity<Rational>(3)) == identity<Rational>(3));
  CHECK_FALSE(inverse<Rational>(zeros<Rational>(2, 2)).has_value());
  CHECK_THROWS_AS(inverse<Rational>(zeros<Rational>(2, 3)), DimensionMismatch);
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 20) {
    const auto a = randomMatrix<Rational>(rng, 4, 4, 9);
    const auto inv = inverse(a);
    if (!inv) continue;
    CHECK(Matrix<Rational>(a * *inv) == identity<Rational>(4));
    CHECK(Matrix<Rational>(*inv * a) == identity<Rational>(4));
    ++checked;
  }
}

TEST_CASE("degenerate shapes behave as zero maps") {
  const Matrix<F5> empty(0, 3);
  CHECK(rank(empty) == 0);
  CHECK(nullspaceBasis(empty).size() == 3);
  const Matrix<F5> tall(3, 0);
  CHECK(nullspaceBasis(tall).empty());
  CHECK(inverse<F5>(Matrix<F5>(0, 0)).has_value());
}

TEST_CASE("intersection and coordinates") {
  const auto u = fromRows<F101>({{1, 0}, {0, 1}, {0, 0}});
  const auto w = fromRows<F101>({{0, 0}, {1, 0}, {0, 1}});
  const auto i = intersection(u, w);
  REQUIRE(i.cols() == 1);
  CHECK(isZero(i(0, 0)));
  CHECK(isZero(i(2, 0)));
  CoordinateSolver<F101> solver(w);
  Vector<F101> v(3);
  v << F101(0), F101(4), F101(9);
  const auto c = solver.checkedCoordinates(v);
  REQUIRE(c.has_value());
  CHECK((*c)(0) == F101(4));
  v(0) = F101(1);
  CHECK_FALSE(solver.checkedCoordinates(v).has_value());
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(BigInt(1), BigInt(3));
  CHECK(third + third + third == Rational(1));
  CHECK(FieldTraits<Rational>::format(Rational(BigInt(-6), BigInt(4))) == "-3/2");
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(F101(-1).value() == 100);
  CHECK(F101(5).inverse() * F101(5) == F101(1));
}
