#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plcover/geom.hpp"

namespace plcover {

struct CoverDecision {
  bool yes = false;
  std::vector<CanonicalLine> witness;  // covers S with <= k lines when yes
};

// Exact Line Cover decision by bounded branching: if |S| <= k each point gets
// its own line; otherwise branch over the distinct lines through the first
// remaining point and one other (restricting to two-point lines is complete,
// since a line covering a single point can be rotated onto a second one).
// Desk-scale bounds |S| <= 60, k <= 5 are enforced.
CoverDecision solve_cover(const PointSet& S, std::int64_t k);

}  // namespace plcover
