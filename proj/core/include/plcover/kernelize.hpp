#pragma once

#include <cstdint>
#include <vector>

#include "plcover/geom.hpp"
#include "plcover/rich_lines.hpp"
#include "plcover/rng.hpp"

namespace plcover {

enum class KernelVariant { kRandomized, kDeterministic };

// The ladder of saturation levels for one kernelization run at parameter k.
// eps = lnlnln k / ln k. Randomized: y_i = 1 - lnln k/ln k - lnlnln k/ln k
// + i*eps, r minimal with k^{y_r} >= k/(lnln k)^2. Deterministic: y_i =
// 2 lnln k/ln k - 1 + i*eps, r minimal with k^{y_r} >= k/(lnln k)^5.
// k^{y_i} is evaluated as exp(y_i ln k) in double precision. Requires k >= 16
// (so lnlnln k > 0 and the y ladder strictly increases).
struct SaturationSchedule {
  std::int64_t k = 0;
  double epsilon = 0.0;
  std::vector<double> y;  // y_0 .. y_r
  int r = 0;
  KernelVariant variant = KernelVariant::kRandomized;

  // Richness threshold of level i: ceil(sigma * k^{-(1+y_i)/2}) for i <= r
  // with sigma = 2k^2, and k + 1 at the final level r + 1.
  std::int64_t level_threshold(int i) const;
  // k^{(1+y_i)/2}, used by the level stop rules.
  double k_pow_half(int i) const;
};

SaturationSchedule build_schedule(std::int64_t k, KernelVariant variant);

enum class SatStop {
  kCoverage,    // level 0 lines cover >= k^2/3 batch points
  kLevelCount,  // level i in [1, r] produced >= k^{(1+y_{i-1})/2}/(12r) lines
  kFinalCount,  // level r+1 produced >= k^{(1+y_r)/2}/12 lines
  kExhausted,   // no stop fired; remaining = batch, lines empty
};

const char* sat_stop_name(SatStop s);

struct SaturatedLinesResult {
  PointSet remaining;                // batch points not covered by `lines`
  std::vector<CanonicalLine> lines;  // saturated w.r.t. the batch
  SatStop stop = SatStop::kExhausted;
  int level = -1;  // level index at which the stop fired
};

// One pass of the level ladder over a full batch. Level thresholds decrease
// from level_threshold(0) down to k + 1; each level recomputes the rich lines
// of the whole batch with the engine selected by the schedule's variant
// (randomized levels draw child generators from rng). Requires
// |batch| == 2k^2 exactly and sched.k == k >= 16.
SaturatedLinesResult saturated_lines(const PointSet& batch, std::int64_t k,
                                     const SaturationSchedule& sched, Rng& rng);

enum class KernelVerdict { kReduced, kNoInstance };

// Result of kernelization. REDUCED guarantees |kernel| <= k^2 and
// k_prime = k - |forced_lines| >= 0; NO_INSTANCE verdicts are exactly
// correct (never emitted for a coverable input) and carry the canonical
// no-instance kernel {(0,0)} with k' = 0. Each forced line was
// (threshold)-rich for the then-uncovered input points, verifiable by replay.
struct KernelResult {
  PointSet kernel;
  std::int64_t k_prime = 0;
  std::vector<CanonicalLine> forced_lines;
  KernelVerdict verdict = KernelVerdict::kReduced;
  // Replay metadata: forced_lines is the concatenation of per-pass groups of
  // these sizes; all lines of one pass were rich w.r.t. the same uncovered
  // set, before any of them stripped points.
  std::vector<std::int64_t> pass_sizes;
};

KernelResult make_no_instance(std::vector<CanonicalLine> forced,
                              std::vector<std::int64_t> passes = {});

// Batched kernelization: consumes input points in stored order, keeps a
// buffer of uncovered points, and forces the saturated lines found per full
// batch of 2k^2. Delegates to kernelize_small for k <= 15. A would-be
// NO_INSTANCE triggered by a randomized miss is double-checked with one
// deterministic rich-lines pass first, so NO_INSTANCE stays exact.
// Requires k >= 1 and S nonempty.
KernelResult kernelize(const PointSet& S, std::int64_t k, KernelVariant variant,
                       Rng& rng);

// Streaming special case for 1 <= k <= 15: fills batches of (current k)^2 + 1
// uncovered points and forces all (current k + 1)-rich lines of each batch,
// computed deterministically. Exact.
KernelResult kernelize_small(const PointSet& S, std::int64_t k);

}  // namespace plcover
