#include "plcover/generators.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace plcover {

namespace {

constexpr int kRetryBudget = 1000;

std::uint64_t pack_point(const Point& p) {
  std::uint64_t ux = static_cast<std::uint64_t>(p.x + (1LL << 31));
  std::uint64_t uy = static_cast<std::uint64_t>(p.y + (1LL << 31));
  return (ux << 32) | uy;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Open-addressed set of directions cleared by epoch stamping, sized once.
// Buckets come from the rounded double slope (parallel directions always
// share it); membership within a chain is settled by the exact cross
// product.
class SlopeSet {
 public:
  explicit SlopeSet(std::size_t capacity) {
    std::size_t want = 16;
    while (want < 2 * capacity + 2) want <<= 1;
    slots_.resize(want);
    mask_ = want - 1;
  }

  void clear() { ++epoch_; }

  // Returns true when a direction parallel to (dx, dy) is already present;
  // inserts otherwise.
  bool test_and_insert(std::int64_t dx, std::int64_t dy) {
    if (dx < 0 || (dx == 0 && dy < 0)) {
      dx = -dx;
      dy = -dy;
    }
    double s = dx == 0 ? std::numeric_limits<double>::infinity()
                       : static_cast<double>(dy) / static_cast<double>(dx);
    std::uint64_t bits;
    std::memcpy(&bits, &s, sizeof(bits));
    std::size_t i = static_cast<std::size_t>(mix64(bits)) & mask_;
    for (;;) {
      Slot& slot = slots_[i];
      if (slot.epoch != epoch_) {
        slot = Slot{dx, dy, epoch_};
        return false;
      }
      if (static_cast<int128>(slot.dx) * dy == static_cast<int128>(slot.dy) * dx)
        return true;
      i = (i + 1) & mask_;
    }
  }

 private:
  struct Slot {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    std::uint32_t epoch = 0;
  };
  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::uint32_t epoch_ = 1;
};

std::int64_t uniform_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

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

struct PlantedLine {
  CanonicalLine line;
  Point anchor;
  std::int64_t dx = 0, dy = 0;
};

// A random line with a small primitive direction, so it carries plenty of
// in-bounds lattice points.
PlantedLine draw_line(std::int64_t bound, Rng& rng,
                      const std::unordered_set<CanonicalLine, LineHash>& used) {
  for (int tries = 0; tries < kRetryBudget; ++tries) {
    Point anchor{uniform_in(rng, -bound / 2, bound / 2),
                 uniform_in(rng, -bound / 2, bound / 2)};
    std::int64_t dx = uniform_in(rng, -9, 9);
    std::int64_t dy = uniform_in(rng, -9, 9);
    if (dx == 0 && dy == 0) continue;
    std::int64_t g = gcd_i64(dx, dy);
    dx /= g;
    dy /= g;
    CanonicalLine l = line_through(anchor, Point{anchor.x + dx, anchor.y + dy});
    if (used.contains(l)) continue;
    return PlantedLine{l, anchor, dx, dy};
  }
  throw std::runtime_error("generator: could not draw a fresh line");
}

void shuffle_points(std::vector<Point>& pts, Rng& rng) {
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(pts[i - 1], pts[j]);
  }
}

}  // namespace

PointSet gen_grid(std::int64_t rows, std::int64_t cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("gen_grid: rows and cols must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(rows * cols));
  for (std::int64_t y = 0; y < rows; ++y)
    for (std::int64_t x = 0; x < cols; ++x) pts.push_back(Point{x, y});
  return PointSet::unchecked(std::move(pts));
}

CoverInstance gen_planted_cover(std::int64_t k, std::int64_t per_line,
                                std::int64_t coord_bound, Rng& rng) {
  if (k < 1) throw std::invalid_argument("gen_planted_cover: k must be >= 1");
  return gen_planted_cover(std::vector<std::int64_t>(static_cast<std::size_t>(k),
                                                     per_line),
                           coord_bound, rng);
}

CoverInstance gen_planted_cover(const std::vector<std::int64_t>& sizes,
                                std::int64_t coord_bound, Rng& rng) {
  const std::int64_t k = static_cast<std::int64_t>(sizes.size());
  if (k < 1) throw std::invalid_argument("gen_planted_cover: k must be >= 1");
  std::int64_t max_size = 0;
  for (std::int64_t s : sizes) {
    if (s < 2) throw std::invalid_argument("gen_planted_cover: per_line must be >= 2");
    max_size = std::max(max_size, s);
  }
  const std::int64_t t_max = coord_bound / 2 / 9;
  if (t_max < 2 * max_size)
    throw std::invalid_argument("gen_planted_cover: coord_bound too small for per_line");

  std::unordered_set<CanonicalLine, LineHash> used_lines;
  std::vector<PlantedLine> planted;
  for (std::int64_t i = 0; i < k; ++i) {
    PlantedLine pl = draw_line(coord_bound, rng, used_lines);
    used_lines.insert(pl.line);
    planted.push_back(pl);
  }

  std::vector<Point> pts;
  std::unordered_set<std::uint64_t> seen;
  for (std::int64_t li = 0; li < k; ++li) {
    const PlantedLine& pl = planted[static_cast<std::size_t>(li)];
    std::unordered_set<std::int64_t> used_t;
    for (std::int64_t c = 0; c < sizes[static_cast<std::size_t>(li)]; ++c) {
      bool placed = false;
      for (int tries = 0; tries < kRetryBudget; ++tries) {
        std::int64_t t = uniform_in(rng, -t_max, t_max);
        if (!used_t.insert(t).second) continue;
        Point p{pl.anchor.x + t * pl.dx, pl.anchor.y + t * pl.dy};
        if (!coord_in_bounds(p)) continue;
        if (seen.contains(pack_point(p))) continue;
        bool crosses = false;
        for (std::int64_t lj = 0; lj < k && !crosses; ++lj)
          if (lj != li && contains(planted[static_cast<std::size_t>(lj)].line, p))
            crosses = true;
        if (crosses) continue;
        seen.insert(pack_point(p));
        pts.push_back(p);
        placed = true;
        break;
      }
      if (!placed)
        throw std::runtime_error("gen_planted_cover: retry budget exhausted");
    }
  }
  shuffle_points(pts, rng);

  CoverInstance inst;
  inst.points = PointSet(std::move(pts));
  inst.k = k;
  inst.truth = TruthKind::kYes;
  for (const PlantedLine& pl : planted) inst.witness.push_back(pl.line);
  auto [covered, uncovered] = covered_subset(inst.witness, inst.points);
  if (!uncovered.empty())
    throw std::logic_error("gen_planted_cover: witness fails to cover");
  inst.note = "planted cover";
  return inst;
}

CoverInstance gen_general_position(std::int64_t n, std::int64_t coord_bound,
                                   Rng& rng) {
  if (n < 1) throw std::invalid_argument("gen_general_position: n must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  std::unordered_set<std::uint64_t> seen;
  SlopeSet dirs(static_cast<std::size_t>(n));
  while (static_cast<std::int64_t>(pts.size()) < n) {
    bool placed = false;
    for (int tries = 0; tries < kRetryBudget; ++tries) {
      Point p{uniform_in(rng, -coord_bound, coord_bound),
              uniform_in(rng, -coord_bound, coord_bound)};
      if (seen.contains(pack_point(p))) continue;
      // p joins a collinear triple iff two existing points subtend the same
      // slope from p.
      dirs.clear();
      bool bad = false;
      for (const Point& q : pts) {
        if (dirs.test_and_insert(q.x - p.x, q.y - p.y)) {
          bad = true;
          break;
        }
      }
      if (bad) continue;
      seen.insert(pack_point(p));
      pts.push_back(p);
      placed = true;
      break;
    }
    if (!placed)
      throw std::runtime_error("gen_general_position: retry budget exhausted");
  }
  shuffle_points(pts, rng);
  CoverInstance inst;
  inst.points = PointSet(std::move(pts));
  inst.truth = TruthKind::kNo;
  inst.note = "general position: no-instance for any k with 2k < n";
  return inst;
}

PointSet gen_planted_rich(std::int64_t n, std::int64_t lambda,
                          std::int64_t coord_bound, Rng& rng) {
  if (lambda < 2 || lambda > n)
    throw std::invalid_argument("gen_planted_rich: need 2 <= lambda <= n");
  const std::int64_t t_max = coord_bound / 2 / 9;
  if (t_max < 2 * lambda)
    throw std::invalid_argument("gen_planted_rich: coord_bound too small for lambda");

  std::unordered_set<CanonicalLine, LineHash> no_lines;
  PlantedLine pl = draw_line(coord_bound, rng, no_lines);
  std::vector<Point> pts;
  std::unordered_set<std::uint64_t> seen;
  std::unordered_set<std::int64_t> used_t;
  for (std::int64_t c = 0; c < lambda; ++c) {
    bool placed = false;
    for (int tries = 0; tries < kRetryBudget; ++tries) {
      std::int64_t t = uniform_in(rng, -t_max, t_max);
      if (!used_t.insert(t).second) continue;
      Point p{pl.anchor.x + t * pl.dx, pl.anchor.y + t * pl.dy};
      if (!coord_in_bounds(p)) continue;
      seen.insert(pack_point(p));
      pts.push_back(p);
      placed = true;
      break;
    }
    if (!placed) throw std::runtime_error("gen_planted_rich: retry budget exhausted");
  }

  // Fillers: pairwise general position, off the planted line.
  std::vector<Point> fillers;
  fillers.reserve(static_cast<std::size_t>(n - lambda));
  SlopeSet dirs(static_cast<std::size_t>(n));
  while (static_cast<std::int64_t>(fillers.size()) < n - lambda) {
    bool placed = false;
    for (int tries = 0; tries < kRetryBudget; ++tries) {
      Point p{uniform_in(rng, -coord_bound, coord_bound),
              uniform_in(rng, -coord_bound, coord_bound)};
      if (seen.contains(pack_point(p))) continue;
      if (contains(pl.line, p)) continue;
      dirs.clear();
      bool bad = false;
      for (const Point& q : fillers) {
        if (dirs.test_and_insert(q.x - p.x, q.y - p.y)) {
          bad = true;
          break;
        }
      }
      if (bad) continue;
      seen.insert(pack_point(p));
      fillers.push_back(p);
      placed = true;
      break;
    }
    if (!placed) throw std::runtime_error("gen_planted_rich: retry budget exhausted");
  }
  pts.insert(pts.end(), fillers.begin(), fillers.end());
  shuffle_points(pts, rng);
  return PointSet(std::move(pts));
}

}  // namespace plcover
