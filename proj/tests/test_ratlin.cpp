#include "support.hpp"

#include "dias/ratlin.hpp"

#include <doctest.h>

using namespace dias;
using namespace dias::test;

namespace {

Mat mat(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = R(v);
    ++i;
  }
  return m;
}

// Laplace expansion along the first row.
R cofactor_det(const Mat& m) {
  const Index n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R out(0);
  for (Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const R term = m(0, c) * cofactor_det(minor);
    out += c % 2 == 0 ? term : R(-term);
  }
  return out;
}

}  // namespace

TEST_SUITE("ratlin") {

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == R(3));
  CHECK(parse_rational(" -4/6 ") == R(-2, 3));
  CHECK(parse_rational("+1/2") == R(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
  CHECK(height(R(-7, 3)) == R(7));
  CHECK(height(R(2, 9)) == R(9));
}

TEST_CASE("rref examples") {
  auto a = rref(mat({{1, 0}, {0, 0}}));
  CHECK(a.rank == 1);
  CHECK(a.pivot_cols == std::vector<Index>{0});

  auto b = rref(mat({{2, 4}, {1, 2}}));
  CHECK(b.rank == 1);
  CHECK(b.reduced == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("nullspace examples") {
  const auto ns = nullspace(mat({{1, 0}, {0, 0}}));
  CHECK(ns.dim() == 1);
  CHECK(ns.contains(Vec::Unit(2, 1)));
  CHECK(nullspace(Mat(Mat::Zero(3, 3))).dim() == 3);
  CHECK(subspace_equal(nullspace(mat({{0, 0}})), Subspace<R>::full(2)));
}

TEST_CASE("affine solve") {
  Vec b(2);
  b << R(1), R(2);
  const auto id = solve_affine(Mat(Mat::Identity(2, 2)), b);
  REQUIRE_FALSE(id.empty());
  CHECK(*id.point() == b);
  CHECK(id.direction().dim() == 0);

  CHECK(solve_affine(mat({{1, 0}, {1, 0}}), b).empty());

  const auto free = solve_affine(mat({{1, 0}}), Vec(Vec::Constant(1, R(3))));
  CHECK(free.direction().dim() == 1);
  Vec p(2);
  p << R(3), R(-5);
  CHECK(free.contains(p));
}

TEST_CASE("det examples") {
  CHECK(det(Mat(Mat::Identity(4, 4))) == R(1));
  CHECK(det(mat({{0, 1}, {1, 0}})) == R(-1));
  CHECK_THROWS_AS(det(Mat(Mat::Zero(2, 3))), std::invalid_argument);
}

TEST_CASE("subspace membership") {
  const auto s = Subspace<R>::span(2, {Vec::Unit(2, 0)});
  Vec v(2);
  v << R(2), R(0);
  CHECK(s.contains(v));
  CHECK_FALSE(s.contains(Vec::Unit(2, 1)));
  CHECK((s + Subspace<R>::span(2, {Vec::Unit(2, 1)})) == Subspace<R>::full(2));
  CHECK_THROWS_AS(s.contains(Vec::Unit(3, 0)), std::invalid_argument);
}

TEST_CASE("property: nullspace vectors are annihilated, rank + nullity = cols") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 6), cols = 1 + static_cast<Index>(rng() % 6);
    const Mat m = random_matrix(rng, rows, cols);
    const auto ns = nullspace(m);
    CAPTURE(trial);
    CHECK(rank(m) + ns.dim() == cols);
    for (const auto& v : ns.basis_vectors()) CHECK(all_zero(m * v));
  }
}

TEST_CASE("property: canonical bases make equality a data comparison") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat g = random_matrix(rng, 3, 4);
    // Same span, different generators: mix the rows with an invertible matrix.
    Mat mix = Mat::Identity(3, 3);
    mix(1, 0) = small_rational(rng);
    mix(2, 1) = small_rational(rng);
    mix(0, 2) = small_rational(rng);
    if (det(mix) == 0) continue;
    const auto a = Subspace<R>::from_rows(g);
    const auto b = Subspace<R>::from_rows(Mat(mix * g));
    const bool mutual = a.contains(b) && b.contains(a);
    CHECK(mutual);
    CHECK((a == b) == mutual);
  }
}

TEST_CASE("property: elimination det equals cofactor det up to 5x5") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Index n = 1 + static_cast<Index>(trial % 5);
    const Mat m = random_matrix(rng, n, n, trial % 4 == 0 ? 2 : 4);
    CAPTURE(trial);
    CHECK(det(m) == cofactor_det(m));
  }
}

}
