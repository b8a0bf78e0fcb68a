#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plcover {

using int128 = __int128;

std::string to_string_i128(int128 v);
// Throws std::invalid_argument on malformed input or overflow.
int128 parse_i128(const std::string& s);

// A point with exact integer coordinates. Coordinates are limited to
// |x|, |y| <= 2^31 - 1 so that line coefficients and incidence predicates
// fit in 128-bit signed intermediates with no overflow.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline constexpr std::int64_t kCoordBound = 2147483647;  // 2^31 - 1

bool coord_in_bounds(const Point& p);

// The unique integer representation of the line a*x + b*y + c = 0:
//   (a, b) != (0, 0), gcd(|a|, |b|, |c|) = 1, and a > 0 or (a = 0 and b > 0).
// Two point pairs spanning the same geometric line always produce the same
// triple, so lines can be compared, hashed and deduplicated field-for-field.
struct CanonicalLine {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int128 c = 0;

  friend bool operator==(const CanonicalLine&, const CanonicalLine&) = default;

  friend bool operator<(const CanonicalLine& l, const CanonicalLine& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
};

struct LineHash {
  std::size_t operator()(const CanonicalLine& l) const;
};

// An ordered, duplicate-free list of points. Iteration order is stable and
// equals insertion order; duplicates are rejected at construction.
class PointSet {
 public:
  PointSet() = default;

  // Throws std::invalid_argument on duplicate points or out-of-bound
  // coordinates.
  explicit PointSet(std::vector<Point> points);

  // Caller guarantees distinctness and bounds (points produced by operations
  // that preserve them). Checked in debug builds only.
  static PointSet unchecked(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

struct IncidenceCount {
  CanonicalLine line;
  std::int64_t count = 0;
};

// The canonical line through two distinct points.
// Throws std::invalid_argument when p == q.
CanonicalLine line_through(const Point& p, const Point& q);

// Exact membership test: a*x + b*y + c == 0 evaluated in 128-bit arithmetic.
bool contains(const CanonicalLine& l, const Point& p);

// Exact per-line membership scan, O(|L| * |S|). Output order matches L.
std::vector<IncidenceCount> incidences(const std::vector<CanonicalLine>& L,
                                       const PointSet& S);

// Partitions S into (covered, uncovered) w.r.t. L; both halves preserve S's
// relative order.
std::pair<PointSet, PointSet> covered_subset(const std::vector<CanonicalLine>& L,
                                             const PointSet& S);

bool any_line_contains(const std::vector<CanonicalLine>& L, const Point& p);


// Exact point-on-line counting against a fixed point set. Builds a sorted
// index once; count_on_line then either scans the points or walks the line's
// lattice points inside the bounding box, whichever is cheaper. Both routes
// are exact; the lattice walk makes filtering very large candidate sets
// feasible (a random pair-line has few lattice points in the box).
class PointIndex {
 public:
  explicit PointIndex(const PointSet& S);

  std::int64_t count_on_line(const CanonicalLine& l) const;
  bool contains_point(const Point& p) const;
  std::size_t size() const { return sorted_.size(); }

 private:
  std::int64_t count_by_scan(const CanonicalLine& l) const;
  std::int64_t count_by_lattice(const CanonicalLine& l) const;

  std::vector<Point> sorted_;
  std::int64_t xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
};

}  // namespace plcover
