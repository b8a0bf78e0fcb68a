#include "plcover/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>

namespace plcover {

namespace {

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int128 abs_i128(int128 v) { return v < 0 ? -v : v; }

// gcd of a positive int64 and an int128; the result fits in int64.
std::int64_t gcd_mixed(std::int64_t a, int128 b) {
  assert(a > 0);
  b = abs_i128(b);
  std::int64_t r = static_cast<std::int64_t>(b % a);
  return gcd_i64(a, r);
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Floor division for int128.
int128 floor_div(int128 num, int128 den) {
  assert(den != 0);
  int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

int128 ceil_div(int128 num, int128 den) {
  assert(den != 0);
  int128 q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

// Extended Euclid: returns g = gcd(a, b) >= 0 and u, v with a*u + b*v = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u,
                     std::int64_t& v) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_u = 1, cu = 0;
  std::int64_t old_v = 0, cv = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * cu;
    old_u = cu;
    cu = t;
    t = old_v - q * cv;
    old_v = cv;
    cv = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  u = old_u;
  v = old_v;
  return old_r;
}

}  // namespace

std::string to_string_i128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Two's-complement minimum negates fine into unsigned __int128.
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string out;
  if (neg) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

int128 parse_i128(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  unsigned __int128 acc = 0;
  const unsigned __int128 limit =
      neg ? (static_cast<unsigned __int128>(1) << 127)
          : (static_cast<unsigned __int128>(1) << 127) - 1;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("non-digit in integer: " + s);
    unsigned d = static_cast<unsigned>(ch - '0');
    if (acc > (limit - d) / 10) throw std::invalid_argument("integer overflow: " + s);
    acc = acc * 10 + d;
  }
  if (neg) return -static_cast<int128>(acc - 1) - 1;
  return static_cast<int128>(acc);
}

bool coord_in_bounds(const Point& p) {
  return p.x >= -kCoordBound && p.x <= kCoordBound && p.y >= -kCoordBound &&
         p.y <= kCoordBound;
}

std::size_t LineHash::operator()(const CanonicalLine& l) const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(l.a));
  h = mix64(h ^ static_cast<std::uint64_t>(l.b));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned __int128>(l.c)));
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned __int128>(l.c) >> 64));
  return static_cast<std::size_t>(h);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) {
    if (!coord_in_bounds(p))
      throw std::invalid_argument("point coordinate out of bounds");
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw std::invalid_argument("duplicate point (" + std::to_string(dup->x) +
                                ", " + std::to_string(dup->y) + ")");
}

PointSet PointSet::unchecked(std::vector<Point> points) {
#ifndef NDEBUG
  return PointSet(std::move(points));
#else
  PointSet s;
  s.points_ = std::move(points);
  return s;
#endif
}

CanonicalLine line_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line_through: identical points");
  std::int64_t a = q.y - p.y;
  std::int64_t b = p.x - q.x;
  int128 c = -(static_cast<int128>(a) * p.x + static_cast<int128>(b) * p.y);
  std::int64_t g = gcd_i64(a, b);
  if (c != 0) g = gcd_mixed(g, c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return CanonicalLine{a, b, c};
}

bool contains(const CanonicalLine& l, const Point& p) {
  int128 v = static_cast<int128>(l.a) * p.x + static_cast<int128>(l.b) * p.y + l.c;
  return v == 0;
}

std::vector<IncidenceCount> incidences(const std::vector<CanonicalLine>& L,
                                       const PointSet& S) {
  std::vector<IncidenceCount> out;
  out.reserve(L.size());
  for (const CanonicalLine& l : L) {
    std::int64_t cnt = 0;
    for (const Point& p : S)
      if (contains(l, p)) ++cnt;
    out.push_back({l, cnt});
  }
  return out;
}

bool any_line_contains(const std::vector<CanonicalLine>& L, const Point& p) {
  for (const CanonicalLine& l : L)
    if (contains(l, p)) return true;
  return false;
}


std::pair<PointSet, PointSet> covered_subset(const std::vector<CanonicalLine>& L,
                                             const PointSet& S) {
  std::vector<Point> cov, unc;
  for (const Point& p : S) {
    if (any_line_contains(L, p))
      cov.push_back(p);
    else
      unc.push_back(p);
  }
  return {PointSet::unchecked(std::move(cov)), PointSet::unchecked(std::move(unc))};
}

PointIndex::PointIndex(const PointSet& S) : sorted_(S.points()) {
  std::sort(sorted_.begin(), sorted_.end());
  if (!sorted_.empty()) {
    xmin_ = ymin_ = std::numeric_limits<std::int64_t>::max();
    xmax_ = ymax_ = std::numeric_limits<std::int64_t>::min();
    for (const Point& p : sorted_) {
      xmin_ = std::min(xmin_, p.x);
      xmax_ = std::max(xmax_, p.x);
      ymin_ = std::min(ymin_, p.y);
      ymax_ = std::max(ymax_, p.y);
    }
  }
}

bool PointIndex::contains_point(const Point& p) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), p);
}

std::int64_t PointIndex::count_by_scan(const CanonicalLine& l) const {
  std::int64_t cnt = 0;
  for (const Point& p : sorted_)
    if (contains(l, p)) ++cnt;
  return cnt;
}

std::int64_t PointIndex::count_by_lattice(const CanonicalLine& l) const {
  // Integer solutions of a*x + b*y = -c exist only when gcd(a, b) divides c
  // (canonical lines have gcd(a, b) = 1 or no lattice points at all).
  std::int64_t u, v;
  std::int64_t g = ext_gcd(l.a, l.b, u, v);
  std::int64_t a = l.a, b = l.b;
  int128 c = l.c;
  if (g != 1) {
    if (c % g != 0) return 0;
    a /= g;
    b /= g;
    c /= g;
    ext_gcd(a, b, u, v);
  }
  // Base solution, stepping direction (b, -a).
  int128 x0 = static_cast<int128>(u) * -c;
  int128 y0 = static_cast<int128>(v) * -c;
  // t ranges keeping x(t) = x0 + b*t in [xmin, xmax] and y(t) = y0 - a*t in
  // [ymin, ymax].
  int128 tlo = std::numeric_limits<std::int64_t>::min();
  int128 thi = std::numeric_limits<std::int64_t>::max();
  auto clamp_range = [&](int128 base, int128 step, int128 lo, int128 hi) {
    // lo <= base + step*t <= hi
    if (step == 0) return base >= lo && base <= hi;
    int128 t1, t2;
    if (step > 0) {
      t1 = ceil_div(lo - base, step);
      t2 = floor_div(hi - base, step);
    } else {
      t1 = ceil_div(hi - base, step);
      t2 = floor_div(lo - base, step);
    }
    tlo = std::max(tlo, t1);
    thi = std::min(thi, t2);
    return true;
  };
  if (!clamp_range(x0, b, xmin_, xmax_)) return 0;
  if (!clamp_range(y0, -static_cast<int128>(a), ymin_, ymax_)) return 0;
  // Reduction can widen the t range past the caller's estimate; the scan is
  // the cheaper exact route then.
  if (thi - tlo > 4 * static_cast<int128>(sorted_.size()))
    return count_by_scan(l);
  std::int64_t cnt = 0;
  for (int128 t = tlo; t <= thi; ++t) {
    Point p{static_cast<std::int64_t>(x0 + static_cast<int128>(b) * t),
            static_cast<std::int64_t>(y0 - static_cast<int128>(a) * t)};
    if (contains_point(p)) ++cnt;
  }
  return cnt;
}

std::int64_t PointIndex::count_on_line(const CanonicalLine& l) const {
  if (sorted_.empty()) return 0;
  const std::int64_t n = static_cast<std::int64_t>(sorted_.size());
  // Estimated lattice points of l in the bounding box: the t range is capped
  // by box_width/|b| and box_height/|a|.
  int128 est = std::numeric_limits<std::int64_t>::max();
  if (l.b != 0) {
    int128 w = static_cast<int128>(xmax_) - xmin_;
    est = std::min(est, w / (l.b < 0 ? -l.b : l.b) + 1);
  }
  if (l.a != 0) {
    int128 h = static_cast<int128>(ymax_) - ymin_;
    est = std::min(est, h / (l.a < 0 ? -l.a : l.a) + 1);
  }
  if (est < n) return count_by_lattice(l);
  return count_by_scan(l);
}

}  // namespace plcover
