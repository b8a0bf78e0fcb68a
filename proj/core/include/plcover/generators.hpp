#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plcover/geom.hpp"
#include "plcover/rng.hpp"

namespace plcover {

enum class TruthKind { kUnknown, kYes, kNo };

// A Line Cover instance with optional self-certifying ground truth. A YES
// truth carries witness lines that cover every point with |witness| <= k; the
// generators re-verify this after construction.
struct CoverInstance {
  PointSet points;
  std::int64_t k = -1;
  TruthKind truth = TruthKind::kUnknown;
  std::vector<CanonicalLine> witness;
  std::string note;
};

// The grid {0..cols-1} x {0..rows-1} in row-major order. rows, cols >= 1.
PointSet gen_grid(std::int64_t rows, std::int64_t cols);

// k distinct random lines with per_line integer points placed on each, all
// coordinates within [-coord_bound, coord_bound], no point on two planted
// lines, output order shuffled. ground truth: YES with the planted lines.
// Requires k >= 1, per_line >= 2. Redraws degenerate choices up to a budget
// of 1000 tries per point and throws std::runtime_error past it.
CoverInstance gen_planted_cover(std::int64_t k, std::int64_t per_line,
                                std::int64_t coord_bound, Rng& rng);

// Same construction with an individual point count per planted line
// (each >= 2); k = |sizes|.
CoverInstance gen_planted_cover(const std::vector<std::int64_t>& sizes,
                                std::int64_t coord_bound, Rng& rng);

// n points in general position (no 3 collinear), rejection-sampled with exact
// collinearity checks. Any k lines with 2k < n leave a point uncovered, so
// the instance is a no-instance for every such k. Same retry budget.
CoverInstance gen_general_position(std::int64_t n, std::int64_t coord_bound,
                                   Rng& rng);

// One planted line carrying exactly lambda collinear points plus n - lambda
// filler points that are pairwise in general position and avoid the planted
// line; for lambda >= 4 the planted line is the unique lambda-rich line.
// Requires 2 <= lambda <= n. Same retry budget.
PointSet gen_planted_rich(std::int64_t n, std::int64_t lambda,
                          std::int64_t coord_bound, Rng& rng);

}  // namespace plcover
