#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_set>
#include <vector>

#include "plcover/geom.hpp"
#include "plcover/kernelize.hpp"
#include "plcover/rich_lines.hpp"
#include "plcover/rng.hpp"

namespace plcover::testutil {

// n distinct uniform points in [-bound, bound]^2 (collinear triples allowed).
inline PointSet gen_uniform(std::int64_t n, std::int64_t bound, Rng& rng) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Point> pts;
  while (static_cast<std::int64_t>(pts.size()) < n) {
    std::int64_t x = -bound + static_cast<std::int64_t>(
                                  rng.below(static_cast<std::uint64_t>(2 * bound + 1)));
    std::int64_t y = -bound + static_cast<std::int64_t>(
                                  rng.below(static_cast<std::uint64_t>(2 * bound + 1)));
    if (seen.emplace(x, y).second) pts.push_back(Point{x, y});
  }
  return PointSet::unchecked(std::move(pts));
}

inline bool reports_equal(const RichLineReport& a, const RichLineReport& b) {
  if (a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i)
    if (!(a.lines[i].line == b.lines[i].line) || a.lines[i].count != b.lines[i].count)
      return false;
  return true;
}

// Every reported line re-verified as lambda-rich with the plain scan.
inline bool report_sound(const RichLineReport& rep, const PointSet& S) {
  for (const IncidenceCount& ic : rep.lines) {
    std::int64_t cnt = 0;
    for (const Point& p : S)
      if (contains(ic.line, p)) ++cnt;
    if (cnt != ic.count || cnt < rep.lambda) return false;
  }
  return true;
}

// Szemeredi-Trotter shape: sum of counts <= 2.5 (mn)^{2/3} + m + n.
inline bool incidence_bound_holds(const RichLineReport& rep) {
  double total = 0;
  for (const IncidenceCount& ic : rep.lines) total += static_cast<double>(ic.count);
  double m = static_cast<double>(rep.lines.size());
  double n = static_cast<double>(rep.n);
  return total <= 2.5 * std::pow(m * n, 2.0 / 3.0) + m + n + 1e-9;
}

// Replays a kernelization's forced lines pass by pass: every line of a pass
// must be (threshold)-rich for the input points left uncovered by all earlier
// passes. The threshold is k+1 for k >= 16 and (residual k)+1 on the small-k
// path, where the residual shrinks by the pass size.
inline bool forcing_sound(const PointSet& input, std::int64_t k,
                          const KernelResult& res) {
  std::vector<Point> rest(input.begin(), input.end());
  std::int64_t total = 0;
  for (std::int64_t sz : res.pass_sizes) total += sz;
  if (total != static_cast<std::int64_t>(res.forced_lines.size())) return false;
  std::int64_t cur = k;
  std::size_t at = 0;
  for (std::int64_t sz : res.pass_sizes) {
    std::int64_t threshold = (k >= 16 ? k : cur) + 1;
    std::vector<CanonicalLine> pass(res.forced_lines.begin() + at,
                                    res.forced_lines.begin() + at + sz);
    at += static_cast<std::size_t>(sz);
    for (const CanonicalLine& l : pass) {
      std::int64_t cnt = 0;
      for (const Point& p : rest)
        if (contains(l, p)) ++cnt;
      if (cnt < threshold) return false;
    }
    std::vector<Point> next;
    for (const Point& p : rest)
      if (!any_line_contains(pass, p)) next.push_back(p);
    rest = std::move(next);
    cur -= sz;
  }
  return true;
}

// Exhaustive Line Cover reference: try all subsets of induced pair-lines of
// size <= k, letting leftover points consume one line each. Exact for small
// instances; used to cross-check solve_cover.
inline bool cover_exhaustive(const PointSet& S, std::int64_t k) {
  if (static_cast<std::int64_t>(S.size()) <= k) return true;
  std::vector<CanonicalLine> lines;
  {
    std::unordered_set<CanonicalLine, LineHash> seen;
    for (std::size_t i = 0; i + 1 < S.size(); ++i)
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        CanonicalLine l = line_through(S[i], S[j]);
        if (seen.insert(l).second) lines.push_back(l);
      }
  }
  std::vector<std::size_t> pick;
  auto leftover_fits = [&](std::size_t used) {
    std::int64_t uncovered = 0;
    for (const Point& p : S) {
      bool cov = false;
      for (std::size_t li : pick)
        if (contains(lines[li], p)) {
          cov = true;
          break;
        }
      if (!cov) ++uncovered;
    }
    return uncovered + static_cast<std::int64_t>(used) <= k;
  };
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t used) -> bool {
    if (leftover_fits(used)) return true;
    if (static_cast<std::int64_t>(used) == k) return false;
    for (std::size_t i = start; i < lines.size(); ++i) {
      pick.push_back(i);
      if (rec(i + 1, used + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace plcover::testutil
