#pragma once

#include <cstdint>

#include "plcover/geom.hpp"
#include "plcover/rich_lines.hpp"
#include "plcover/rng.hpp"

namespace plcover {

struct FitResult {
  CanonicalLine line;
  std::int64_t count = 0;  // exact incidence count of `line` against S
};

enum class FitMode { kRandomized, kDeterministic };

// A line covering the maximum number of points of S, found by binary search
// over lambda on top of the rich-lines engines. Deterministic mode is exact;
// randomized mode is Monte Carlo one-sided (the returned count is always
// exact for the returned line, and with high probability it is the global
// maximum). An aborted randomized probe is retried once deterministically.
// Ties are broken by lexicographic (a, b, c) order. Requires |S| >= 2.
FitResult exact_fit(const PointSet& S, FitMode mode, Rng& rng);

}  // namespace plcover
