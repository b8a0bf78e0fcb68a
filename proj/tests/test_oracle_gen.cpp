#include <doctest.h>

#include "plcover/generators.hpp"
#include "plcover/oracle.hpp"
#include "plcover/rich_lines.hpp"
#include "test_util.hpp"

using namespace plcover;

TEST_CASE("solve_cover examples") {
  PointSet grid = gen_grid(3, 3);
  auto yes = solve_cover(grid, 3);
  CHECK(yes.yes);
  CHECK(yes.witness.size() <= 3);
  auto [cov, unc] = covered_subset(yes.witness, grid);
  CHECK(unc.empty());

  CHECK_FALSE(solve_cover(grid, 2).yes);

  Rng rng(5);
  PointSet gp = gen_general_position(7, 1000, rng).points;
  CHECK_FALSE(solve_cover(gp, 3).yes);
  CHECK(solve_cover(gp, 4).yes);  // ceil(7/2) = 4 pair lines suffice

  CHECK_THROWS_AS(solve_cover(grid, 6), std::invalid_argument);
}

TEST_CASE("solve_cover agrees with exhaustive subset search") {
  Rng rng(71);
  for (int iter = 0; iter < 80; ++iter) {
    std::int64_t n = 4 + static_cast<std::int64_t>(rng.below(9));
    PointSet S = iter % 3 == 0 ? gen_grid(2 + rng.below(3), 2 + rng.below(4))
                               : testutil::gen_uniform(n, 6, rng);
    if (S.size() > 12) continue;
    for (std::int64_t k = 1; k <= 3; ++k) {
      auto got = solve_cover(S, k);
      bool want = testutil::cover_exhaustive(S, k);
      CHECK(got.yes == want);
      if (got.yes) {
        CHECK(static_cast<std::int64_t>(got.witness.size()) <= k);
        auto [cov, unc] = covered_subset(got.witness, S);
        CHECK(unc.empty());
      }
    }
  }
}

TEST_CASE("gen_grid shapes") {
  CHECK(gen_grid(3, 3).size() == 9);
  PointSet row = gen_grid(1, 5);
  CHECK(row.size() == 5);
  CHECK(rich_lines_brute(row, 5).lines.size() == 1);
  // 2x2 grid: 4 points, six 2-rich pair lines.
  CHECK(rich_lines_brute(gen_grid(2, 2), 2).lines.size() == 6);
  CHECK_THROWS_AS(gen_grid(0, 3), std::invalid_argument);
}

TEST_CASE("gen_planted_cover is self-certifying") {
  Rng rng(123);
  CoverInstance inst = gen_planted_cover(16, 200, 100000000, rng);
  CHECK(inst.truth == TruthKind::kYes);
  CHECK(inst.witness.size() == 16);
  CHECK(inst.points.size() == 16 * 200);
  auto [cov, unc] = covered_subset(inst.witness, inst.points);
  CHECK(unc.empty());
  // No point sits on two planted lines.
  for (const Point& p : inst.points) {
    int on = 0;
    for (const auto& l : inst.witness)
      if (contains(l, p)) ++on;
    CHECK(on == 1);
  }

  Rng rng2(9);
  CoverInstance one = gen_planted_cover(1, 10, 100000, rng2);
  CHECK(one.points.size() == 10);
  CHECK(rich_lines_brute(one.points, 10).lines.size() == 1);
}

TEST_CASE("gen_general_position has no 3 collinear") {
  Rng rng(321);
  CoverInstance inst = gen_general_position(512, 100000000, rng);
  CHECK(inst.points.size() == 512);
  CHECK(rich_lines_brute(inst.points, 3).lines.empty());
  CHECK(inst.truth == TruthKind::kNo);

  Rng rng2(1);
  CHECK(gen_general_position(1, 10, rng2).points.size() == 1);
}

TEST_CASE("gen_planted_rich plants exactly one rich line") {
  Rng rng(777);
  PointSet S = gen_planted_rich(1000, 300, 1000000, rng);
  CHECK(S.size() == 1000);
  auto rep = rich_lines_brute(S, 300);
  REQUIRE(rep.lines.size() == 1);
  CHECK(rep.lines[0].count == 300);

  Rng rng2(3);
  PointSet all = gen_planted_rich(40, 40, 100000, rng2);
  CHECK(rich_lines_brute(all, 40).lines.size() == 1);

  Rng rng3(4);
  PointSet pairs = gen_planted_rich(10, 2, 100000, rng3);
  // lambda = 2: every induced pair line is 2-rich.
  CHECK(rich_lines_brute(pairs, 2).lines.size() >= 10);

  Rng rng4(5);
  CHECK_THROWS_AS(gen_planted_rich(10, 11, 100000, rng4), std::invalid_argument);
}

TEST_CASE("generators are reproducible under a fixed seed") {
  Rng a(42), b(42);
  PointSet s1 = gen_planted_rich(200, 50, 100000, a);
  PointSet s2 = gen_planted_rich(200, 50, 100000, b);
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == s2[i]);
}
