#pragma once

#include <cstdint>
#include <vector>

#include "plcover/geom.hpp"
#include "plcover/rng.hpp"

namespace plcover {

// All lambda-rich lines of a queried set, with exact point counts. `aborted`
// is set only by the randomized algorithm when it declares failure (candidate
// set overflow); the reported lines are then empty. Lines are sorted by
// (a, b, c), so equal reports compare equal field-for-field.
struct RichLineReport {
  std::vector<IncidenceCount> lines;
  std::int64_t lambda = 0;
  std::int64_t n = 0;
  bool aborted = false;
};

enum class Regime {
  kDeterministicSmall,  // lambda < ln n: fall back to the deterministic engine
  kDirectFilter,        // lambda <= 140 ln^{3/2} n: exact-filter sampled pair lines
  kSubsampleLow,        // above the direct gate, lambda < 5 sqrt(n)
  kSubsampleHigh,       // above the direct gate, lambda >= 5 sqrt(n)
};

const char* regime_name(Regime r);

// Sampling parameters for one randomized run. x is the pair-sample size; in
// the subsample regimes m is the point-sample size and y the sample richness
// threshold; z caps the candidate count (kept as a real and compared as one).
// m, y, z are filled for every non-deterministic regime but only consulted on
// the subsample path.
struct RandomizedParams {
  Regime regime = Regime::kDeterministicSmall;
  std::int64_t x = 0;
  std::int64_t m = 0;
  double y = 0.0;
  double z = 0.0;
};

// Requires n >= 3 and 2 <= lambda <= n.
RandomizedParams compute_params(std::int64_t n, std::int64_t lambda);

// Ground-truth oracle: enumerates all point pairs, groups by canonical line
// and derives the distinct-point count per line from the pair multiplicity.
// Requires lambda >= 2.
RichLineReport rich_lines_brute(const PointSet& S, std::int64_t lambda);

// Deterministic engine with output identical to rich_lines_brute: for each
// anchor point, later points are grouped by primitive direction; a group of
// size t seen at a line's first anchor yields its exact count t + 1.
// Requires lambda >= 2.
RichLineReport rich_lines_det(const PointSet& S, std::int64_t lambda);

// Monte Carlo one-sided: reported lines are always truly lambda-rich (the
// final filter is exact); with probability >= 1 - 3/n^2 the report equals the
// full rich set. May return an empty report flagged aborted=true when the
// candidate set overflows the cap. Requires |S| >= 3 and 2 <= lambda <= |S|.
RichLineReport rich_lines_rand(const PointSet& S, std::int64_t lambda, Rng& rng);

}  // namespace plcover
