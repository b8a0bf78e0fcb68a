#include "plcover/oracle.hpp"

#include <stdexcept>
#include <unordered_set>

namespace plcover {

namespace {

bool solve_rec(const std::vector<Point>& pts, std::int64_t k,
               std::vector<CanonicalLine>& witness) {
  if (pts.empty()) return true;
  if (static_cast<std::int64_t>(pts.size()) <= k) {
    for (const Point& p : pts)
      witness.push_back(CanonicalLine{1, 0, -static_cast<int128>(p.x)});
    return true;
  }
  if (k == 0) return false;
  const Point& p = pts[0];
  std::unordered_set<CanonicalLine, LineHash> tried;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    CanonicalLine l = line_through(p, pts[j]);
    if (!tried.insert(l).second) continue;
    std::vector<Point> rest;
    rest.reserve(pts.size());
    for (const Point& q : pts)
      if (!contains(l, q)) rest.push_back(q);
    witness.push_back(l);
    if (solve_rec(rest, k - 1, witness)) return true;
    witness.pop_back();
  }
  return false;
}

}  // namespace

CoverDecision solve_cover(const PointSet& S, std::int64_t k) {
  if (S.size() > 60 || k > 5)
    throw std::invalid_argument("solve_cover: desk-scale bound |S| <= 60, k <= 5");
  if (k < 0) throw std::invalid_argument("solve_cover: k must be >= 0");
  CoverDecision out;
  out.yes = solve_rec(S.points(), k, out.witness);
  if (!out.yes) out.witness.clear();
  return out;
}

}  // namespace plcover
