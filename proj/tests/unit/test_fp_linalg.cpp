#include <doctest.h>

#include <algorithm>
#include <random>

#include "fusionlab/errors.hpp"
#include "fusionlab/fp_linalg.hpp"
#include "oracles.hpp"

using namespace fusionlab;

namespace {

FpMatrix random_matrix(std::mt19937& rng, Prime p, std::size_t rows, std::size_t cols, int zero_bias) {
  std::uniform_int_distribution<int> coin(0, 9);
  std::uniform_int_distribution<std::uint32_t> val(1, p.value() - 1);
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) >= zero_bias) m.set(r, c, val(rng));
    }
  }
  m.choose_storage();
  return m;
}

oracle::Dense dense(const FpMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.at(r, c);
  }
  return d;
}

}  // namespace

TEST_CASE("rref examples") {
  const Prime p5(5);
  CHECK(rref(FpMatrix(p5, 3, 4)).rank == 0);
  CHECK(rref(FpMatrix::identity(p5, 4)).rank == 4);
  const auto r = rref(FpMatrix::from_rows(p5, 2, {{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced.row(0) == Vector{1, 2});
  CHECK(r.reduced.row(1) == Vector{0, 0});
  // leading entry gets normalized to 1
  const auto s = rref(FpMatrix::from_rows(p5, 2, {{0, 3}, {2, 1}}));
  CHECK(s.reduced.row(0) == Vector{1, 0});
  CHECK(s.reduced.row(1) == Vector{0, 1});
}

TEST_CASE("matrix storage and arithmetic") {
  const Prime p3(3);
  auto m = FpMatrix::from_triplets(p3, 2, 2, {{0, 0, 2}, {0, 0, 2}, {1, 1, -1}});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 1) == 2);
  CHECK(m.nonzeros() == 2);
  CHECK((m * m).is_identity());
  CHECK((m - m).is_zero());
  CHECK(m.apply({1, 1}) == Vector{1, 2});
  CHECK(m.transpose() == m);
  m.set(0, 1, 0);
  m.set(0, 0, 0);
  CHECK(m.nonzeros() == 1);

  std::mt19937 rng(11);
  const Prime p7(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, p7, 6, 5, trial % 10);
    auto b = random_matrix(rng, p7, 5, 4, 7);
    auto ab = a * b;
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < 5; ++k) acc += std::uint64_t{a.at(r, k)} * b.at(k, c);
        REQUIRE(ab.at(r, c) == acc % 7);
      }
    }
    // storage choice never changes the value
    FpMatrix c = a;
    c.choose_storage();
    CHECK(c == a);
  }
}

TEST_CASE("kernel, image, intersect") {
  const Prime p2(2);
  CHECK(kernel(FpMatrix::identity(p2, 3)).dim() == 0);
  const FpSubspace k = kernel(FpMatrix::from_rows(p2, 2, {{1, 1}, {0, 0}}));
  CHECK(k.dim() == 1);
  CHECK(k.basis().front() == Vector{1, 1});

  const Prime p3(3);
  const auto u = FpSubspace::span(p3, 3, {{1, 0, 0}, {0, 1, 1}});
  const auto v = FpSubspace::span(p3, 3, {{0, 1, 1}, {0, 0, 1}});
  CHECK(intersect(u, u) == u);
  CHECK(intersect(u, v).dim() == 1);
  CHECK(intersect(u, v).contains(Vector{0, 2, 2}));
  CHECK(sum(u, v) == FpSubspace::whole(p3, 3));
  CHECK(u.contains(intersect(u, v)));
  CHECK_THROWS_AS(intersect(u, FpSubspace::whole(p3, 4)), InvalidInput);
  CHECK(image(FpMatrix::from_rows(p3, 2, {{1, 2}, {2, 1}, {0, 0}})).dim() == 1);
}

TEST_CASE("quotient basis") {
  const Prime p3(3);
  const auto z = FpSubspace::span(p3, 3, {{1, 0, 0}, {0, 1, 0}});
  const auto b = FpSubspace::span(p3, 3, {{1, 1, 0}});
  const auto q = quotient_basis(z, b);
  REQUIRE(q.size() == 1);
  CHECK(z.contains(q[0]));
  CHECK_FALSE(b.contains(q[0]));
  CHECK(quotient_basis(z, z).empty());
  CHECK_THROWS_AS(quotient_basis(b, z), InvalidInput);
}

TEST_CASE("rank-nullity against schoolbook rank") {
  std::mt19937 rng(20260101);
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    const Prime p(pv);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + trial % 9, cols = 1 + (trial * 7) % 11;
      const auto a = random_matrix(rng, p, rows, cols, trial % 10);
      const auto r = rref(a);
      CAPTURE(pv);
      CAPTURE(trial);
      CHECK(r.rank == oracle::naive_rank(dense(a), pv));
      CHECK(r.rank + kernel(a).dim() == cols);
      CHECK(image(a).dim() == r.rank);
      CHECK(rref(r.reduced).reduced == r.reduced);
      const FpSubspace k = kernel(a);
      for (const auto& v : k.basis()) {
        const Vector av = a.apply(v);
        CHECK(std::all_of(av.begin(), av.end(), [](Residue x) { return x == 0; }));
      }
    }
  }
}

TEST_CASE("solve by substitution") {
  std::mt19937 rng(7);
  for (std::uint32_t pv : {2u, 3u, 5u}) {
    const Prime p(pv);
    std::uniform_int_distribution<std::uint32_t> val(0, pv - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_matrix(rng, p, 5, 4, 5);
      Vector x(4);
      for (auto& e : x) e = val(rng);
      const Vector b = a.apply(x);
      const auto sol = solve(a, b);
      REQUIRE(sol.has_value());
      CHECK(a.apply(*sol) == b);
    }
  }
  const Prime p2(2);
  CHECK_FALSE(solve(FpMatrix::from_rows(p2, 2, {{1, 1}, {1, 1}}), {1, 0}).has_value());
}

TEST_CASE("span coordinates and row echelon") {
  const Prime p5(5);
  SpanCoordinates sc(p5, 3, {{1, 0, 0}, {1, 1, 0}, {2, 1, 0}});
  CHECK(sc.rank() == 2);
  const auto x = sc.coordinates({3, 1, 0});
  REQUIRE(x.has_value());
  Vector back(3, 0);
  const std::vector<Vector> gens{{1, 0, 0}, {1, 1, 0}, {2, 1, 0}};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) back[i] = (back[i] + (*x)[j] * gens[j][i]) % 5;
  }
  CHECK(back == Vector{3, 1, 0});
  CHECK_FALSE(sc.coordinates({0, 0, 1}).has_value());

  RowEchelon re(p5, 3);
  CHECK(re.insert({0, 2, 1}));
  CHECK(re.insert({1, 0, 0}));
  CHECK_FALSE(re.insert({2, 4, 2}));
  CHECK(re.rank() == 2);
  CHECK(re.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(re.contains({3, 1, 3}));
}

TEST_CASE("random intersections are commutative and associative in dimension") {
  std::mt19937 rng(3);
  const Prime p3(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto u = image(random_matrix(rng, p3, 6, 3, 5));
    auto v = image(random_matrix(rng, p3, 6, 4, 5));
    auto w = image(random_matrix(rng, p3, 6, 3, 5));
    CHECK(intersect(u, v) == intersect(v, u));
    CHECK(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)));
    CHECK(intersect(u, v).dim() + sum(u, v).dim() == u.dim() + v.dim());
  }
}
