#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plcover/geom.hpp"

namespace plcover {

// Deterministic xoshiro256** generator, state seeded through splitmix64.
// The same seed yields a bit-identical draw sequence on every platform; no
// standard-library distributions are involved, so outputs are stable across
// compilers. Single-owner mutable state, not shareable across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();

  // Unbiased draw from [0, n), n >= 1, via rejection.
  std::uint64_t below(std::uint64_t n);

  // Child generator derived from this generator's construction seed and a
  // tag. Independent of how much of the parent sequence was consumed, so
  // nested algorithms stay reproducible no matter the call pattern.
  Rng split(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
};

// x unordered point pairs drawn u.a.r. from the 2-subsets of S, independent
// across draws (repeats across draws allowed). Requires |S| >= 2, x >= 1.
std::vector<std::pair<Point, Point>> sample_pairs(const PointSet& S,
                                                  std::int64_t x, Rng& rng);

// m distinct points of S, every m-subset equally likely (partial
// Fisher-Yates). Requires 1 <= m <= |S|.
PointSet sample_without_replacement(const PointSet& S, std::int64_t m, Rng& rng);

}  // namespace plcover
