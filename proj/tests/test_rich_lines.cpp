#include <doctest.h>

#include <cmath>

#include "plcover/generators.hpp"
#include "plcover/rich_lines.hpp"
#include "test_util.hpp"

using namespace plcover;
using testutil::reports_equal;

namespace {

PointSet collinear(std::int64_t n) {
  std::vector<Point> pts;
  for (std::int64_t i = 0; i < n; ++i) pts.push_back({i, 2 * i + 1});
  return PointSet::unchecked(std::move(pts));
}

}  // namespace

TEST_CASE("brute oracle on the 3x3 grid") {
  auto rep = rich_lines_brute(gen_grid(3, 3), 3);
  REQUIRE(rep.lines.size() == 8);  // 3 rows, 3 columns, 2 diagonals
  for (const auto& ic : rep.lines) CHECK(ic.count == 3);
}

TEST_CASE("brute oracle trivia") {
  PointSet tri(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(rich_lines_brute(tri, 2).lines.size() == 3);
  CHECK(rich_lines_brute(tri, 4).lines.empty());
  CHECK_THROWS_AS(rich_lines_brute(tri, 1), std::invalid_argument);
}

TEST_CASE("deterministic engine equals brute on examples") {
  for (std::int64_t lambda : {2, 3, 4}) {
    auto a = rich_lines_det(gen_grid(3, 3), lambda);
    auto b = rich_lines_brute(gen_grid(3, 3), lambda);
    CHECK(reports_equal(a, b));
  }
  CHECK(rich_lines_det(collinear(10), 10).lines.size() == 1);
  CHECK(rich_lines_det(collinear(10), 10).lines[0].count == 10);
  CHECK(rich_lines_det(collinear(10), 11).lines.empty());
}

TEST_CASE("deterministic engine equals brute on fuzz corpus") {
  Rng rng(555);
  for (int iter = 0; iter < 60; ++iter) {
    PointSet S = iter % 3 == 0
                     ? gen_grid(2 + rng.below(8), 2 + rng.below(8))
                     : testutil::gen_uniform(10 + rng.below(90), 40, rng);
    std::int64_t n = static_cast<std::int64_t>(S.size());
    std::int64_t lambda = 2 + static_cast<std::int64_t>(rng.below(
                                  static_cast<std::uint64_t>(n)));
    auto det = rich_lines_det(S, lambda);
    auto brute = rich_lines_brute(S, lambda);
    REQUIRE(reports_equal(det, brute));
    CHECK(testutil::report_sound(det, S));
    CHECK(testutil::incidence_bound_holds(brute));
  }
}

TEST_CASE("compute_params regimes and sizes") {
  CHECK(compute_params(1000, 5).regime == Regime::kDeterministicSmall);

  auto p = compute_params(100, 50);
  CHECK(p.regime == Regime::kDirectFilter);
  CHECK(p.x == 185);

  // lambda = 600 >= 5*sqrt(10^4) = 500, but the direct-filter gate
  // 140 ln^{3/2} n ~ 3913 fires first, so this stays a direct filter; the
  // candidate cap is still the high-regime 5n/lambda.
  auto q = compute_params(10000, 600);
  CHECK(q.regime == Regime::kDirectFilter);
  CHECK(q.z == doctest::Approx(83.3333).epsilon(1e-4));

  auto hi = compute_params(10000, 5000);
  CHECK(hi.regime == Regime::kSubsampleHigh);
  CHECK(hi.z == doctest::Approx(10.0));
  CHECK(hi.m == 2579);  // ceil(140 * 10^4 * ln(10^4) / 5000)
  CHECK(hi.y == doctest::Approx(98.0 * std::log(10000.0)));

  CHECK_THROWS_AS(compute_params(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(compute_params(100, 1), std::invalid_argument);
  CHECK_THROWS_AS(compute_params(100, 101), std::invalid_argument);
}

TEST_CASE("randomized finds a planted rich line") {
  Rng gen_rng(4242);
  PointSet S = gen_planted_rich(1000, 300, 1000000, gen_rng);
  auto truth = rich_lines_brute(S, 300);
  REQUIRE(truth.lines.size() == 1);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Rng rng(seed);
    auto rep = rich_lines_rand(S, 300, rng);
    REQUIRE(rep.lines.size() == 1);
    CHECK(rep.lines[0].line == truth.lines[0].line);
    CHECK(rep.lines[0].count >= 300);
  }
}

TEST_CASE("randomized equals brute on the grid across seeds") {
  PointSet grid = gen_grid(3, 3);
  auto want = rich_lines_brute(grid, 3);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    auto rep = rich_lines_rand(grid, 3, rng);
    CHECK(testutil::report_sound(rep, grid));
    if (reports_equal(rep, want)) ++ok;
  }
  CHECK(ok >= 99);
}

TEST_CASE("randomized on all-collinear input") {
  PointSet line = collinear(64);
  Rng rng(12);
  auto rep = rich_lines_rand(line, 64, rng);
  REQUIRE(rep.lines.size() == 1);
  CHECK(rep.lines[0].count == 64);
  CHECK_FALSE(rep.aborted);
}

TEST_CASE("randomized subsample path at n=4000") {
  // The smallest band where lambda can clear the direct-filter gate
  // 140 ln^{3/2} n (~3344 at n=4000); lambda >= 5 sqrt(n) puts the candidate
  // cap at 5n/lambda.
  Rng grng(29);
  PointSet S = gen_planted_rich(4000, 3600, 1000000000, grng);
  CHECK(compute_params(4000, 3600).regime == Regime::kSubsampleHigh);
  auto want = rich_lines_det(S, 3600);
  REQUIRE(want.lines.size() == 1);
  for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
    Rng rng(seed);
    auto rep = rich_lines_rand(S, 3600, rng);
    CHECK_FALSE(rep.aborted);
    CHECK(reports_equal(rep, want));
  }
}

TEST_CASE("randomized validates preconditions") {
  PointSet tiny(std::vector<Point>{{0, 0}, {1, 1}});
  Rng rng(1);
  CHECK_THROWS_AS(rich_lines_rand(tiny, 2, rng), std::invalid_argument);
  PointSet tri(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(rich_lines_rand(tri, 4, rng), std::invalid_argument);
}

TEST_CASE("rich-line count bounds on brute outputs") {
  Rng rng(77);
  for (int iter = 0; iter < 30; ++iter) {
    PointSet S = iter % 2 == 0 ? gen_grid(3 + rng.below(10), 3 + rng.below(10))
                               : testutil::gen_uniform(30 + rng.below(120), 25, rng);
    std::int64_t n = static_cast<std::int64_t>(S.size());
    for (std::int64_t lambda = 2; lambda <= n; lambda += 1 + n / 7) {
      auto rep = rich_lines_brute(S, lambda);
      double m = static_cast<double>(rep.lines.size());
      double nd = static_cast<double>(n);
      double ld = static_cast<double>(lambda);
      if (ld >= 2.0 * std::sqrt(nd)) CHECK(m <= 2.0 * nd / ld);
      double c = std::max(1.0, ld / std::sqrt(nd));
      CHECK(m < std::max(40.0 * nd * nd / (ld * ld * ld),
                         40.0 * c * c * nd * nd / (ld * ld * ld)));
    }
  }
}
