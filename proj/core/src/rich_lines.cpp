#include "plcover/rich_lines.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace plcover {

namespace {

std::int64_t isqrt_i64(std::int64_t v) {
  if (v < 0) return -1;
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

void sort_report(std::vector<IncidenceCount>& lines) {
  std::sort(lines.begin(), lines.end(),
            [](const IncidenceCount& l, const IncidenceCount& r) {
              return l.line < r.line;
            });
}

// Open-addressed direction table reused across anchors via epoch stamping.
// Buckets are addressed by the rounded double slope dy/dx: parallel integer
// directions describe the same real slope, so they round to identical bits
// and land in the same bucket chain. Equality within a chain is settled by
// the exact 128-bit cross product, so grouping matches grouping by primitive
// direction vector exactly.
struct DirTable {
  struct Slot {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    std::uint32_t epoch = 0;
    std::uint32_t count = 0;
    std::uint32_t witness = 0;
  };

  explicit DirTable(std::size_t n) {
    std::size_t want = 2;
    while (want < 2 * n + 2) want <<= 1;
    slots.resize(want);
    mask = want - 1;
  }

  void new_epoch() { ++epoch; }

  static std::uint64_t slope_bits(std::int64_t dx, std::int64_t dy) {
    if (dx < 0 || (dx == 0 && dy < 0)) {
      dx = -dx;
      dy = -dy;
    }
    double s = dx == 0 ? std::numeric_limits<double>::infinity()
                       : static_cast<double>(dy) / static_cast<double>(dx);
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(s));
    std::memcpy(&bits, &s, sizeof(bits));
    return bits;
  }

  static bool parallel(std::int64_t ax, std::int64_t ay, std::int64_t bx,
                       std::int64_t by) {
    return static_cast<int128>(ax) * by == static_cast<int128>(ay) * bx;
  }

  // Returns the slot after incrementing its count; inserts on first sight.
  Slot& upsert(std::int64_t dx, std::int64_t dy, std::uint32_t witness) {
    std::size_t i = static_cast<std::size_t>(mix64(slope_bits(dx, dy))) & mask;
    for (;;) {
      Slot& s = slots[i];
      if (s.epoch != epoch) {
        s.dx = dx;
        s.dy = dy;
        s.epoch = epoch;
        s.count = 1;
        s.witness = witness;
        return s;
      }
      if (parallel(s.dx, s.dy, dx, dy)) {
        ++s.count;
        return s;
      }
      i = (i + 1) & mask;
    }
  }

  std::vector<Slot> slots;
  std::size_t mask = 0;
  std::uint32_t epoch = 0;
};

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kDeterministicSmall: return "DETERMINISTIC_SMALL";
    case Regime::kDirectFilter: return "DIRECT_FILTER";
    case Regime::kSubsampleLow: return "SUBSAMPLE_LOW";
    case Regime::kSubsampleHigh: return "SUBSAMPLE_HIGH";
  }
  return "?";
}

RandomizedParams compute_params(std::int64_t n, std::int64_t lambda) {
  if (n < 3) throw std::invalid_argument("compute_params: n must be >= 3");
  if (lambda < 2 || lambda > n)
    throw std::invalid_argument("compute_params: lambda must be in [2, n]");
  const double nd = static_cast<double>(n);
  const double ld = static_cast<double>(lambda);
  const double ln_n = std::log(nd);
  RandomizedParams p;
  if (ld < ln_n) {
    p.regime = Regime::kDeterministicSmall;
    return p;
  }
  p.x = static_cast<std::int64_t>(std::ceil(10.0 * nd * nd * ln_n / (ld * ld)));
  p.m = static_cast<std::int64_t>(std::ceil(140.0 * nd * ln_n / ld));
  p.y = 98.0 * ln_n;
  p.z = ld < 5.0 * std::sqrt(nd) ? 2500.0 * nd * nd / (ld * ld * ld)
                                 : 5.0 * nd / ld;
  if (ld <= 140.0 * std::pow(ln_n, 1.5)) {
    p.regime = Regime::kDirectFilter;
  } else {
    p.regime = ld < 5.0 * std::sqrt(nd) ? Regime::kSubsampleLow
                                        : Regime::kSubsampleHigh;
  }
  return p;
}

RichLineReport rich_lines_brute(const PointSet& S, std::int64_t lambda) {
  if (lambda < 2) throw std::invalid_argument("rich_lines: lambda must be >= 2");
  RichLineReport rep;
  rep.lambda = lambda;
  rep.n = static_cast<std::int64_t>(S.size());
  const std::size_t n = S.size();
  if (n < 2) return rep;
  std::vector<CanonicalLine> all;
  all.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.push_back(line_through(S[i], S[j]));
  std::sort(all.begin(), all.end());
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    // A line covering t points contributes C(t, 2) pairs.
    std::int64_t pairs = static_cast<std::int64_t>(j - i);
    std::int64_t t = (1 + isqrt_i64(1 + 8 * pairs)) / 2;
    assert(t * (t - 1) / 2 == pairs);
    if (t >= lambda) rep.lines.push_back({all[i], t});
    i = j;
  }
  return rep;
}

RichLineReport rich_lines_det(const PointSet& S, std::int64_t lambda) {
  if (lambda < 2) throw std::invalid_argument("rich_lines: lambda must be >= 2");
  RichLineReport rep;
  rep.lambda = lambda;
  rep.n = static_cast<std::int64_t>(S.size());
  const std::size_t n = S.size();
  if (n < 2 || lambda > static_cast<std::int64_t>(n)) return rep;
  DirTable table(n);
  std::vector<std::size_t> candidates;
  const std::uint32_t need = static_cast<std::uint32_t>(lambda - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    table.new_epoch();
    candidates.clear();
    const Point& anchor = S[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      DirTable::Slot& s = table.upsert(S[j].x - anchor.x, S[j].y - anchor.y,
                                       static_cast<std::uint32_t>(j));
      if (s.count == need)
        candidates.push_back(static_cast<std::size_t>(&s - table.slots.data()));
    }
    for (std::size_t si : candidates) {
      const DirTable::Slot& s = table.slots[si];
      // A line's first anchor sees all of its other points, so count + 1 is
      // the exact incidence count there; later anchors of the same line see
      // fewer and lose the keep-max dedup below.
      rep.lines.push_back({line_through(anchor, S[s.witness]),
                           static_cast<std::int64_t>(s.count) + 1});
    }
  }
  sort_report(rep.lines);
  // Keep the first (largest-count) occurrence of each line.
  std::vector<IncidenceCount> dedup;
  for (const IncidenceCount& ic : rep.lines) {
    if (!dedup.empty() && dedup.back().line == ic.line) {
      if (ic.count > dedup.back().count) dedup.back().count = ic.count;
    } else {
      dedup.push_back(ic);
    }
  }
  rep.lines = std::move(dedup);
  return rep;
}

RichLineReport rich_lines_rand(const PointSet& S, std::int64_t lambda, Rng& rng) {
  const std::int64_t n = static_cast<std::int64_t>(S.size());
  if (n < 3) throw std::invalid_argument("rich_lines_rand: need |S| >= 3");
  RandomizedParams params = compute_params(n, lambda);  // validates lambda
  if (params.regime == Regime::kDeterministicSmall) return rich_lines_det(S, lambda);

  auto pairs = sample_pairs(S, params.x, rng);
  std::vector<CanonicalLine> q2;
  q2.reserve(pairs.size());
  for (const auto& [p, q] : pairs) q2.push_back(line_through(p, q));
  std::sort(q2.begin(), q2.end());
  q2.erase(std::unique(q2.begin(), q2.end()), q2.end());

  RichLineReport rep;
  rep.lambda = lambda;
  rep.n = n;

  if (params.regime == Regime::kDirectFilter) {
    PointIndex idx(S);
    for (const CanonicalLine& l : q2) {
      std::int64_t cnt = idx.count_on_line(l);
      if (cnt >= lambda) rep.lines.push_back({l, cnt});
    }
    return rep;
  }

  PointSet sample = sample_without_replacement(S, params.m, rng);
  PointIndex sample_idx(sample);
  std::vector<CanonicalLine> survivors;
  for (const CanonicalLine& l : q2) {
    if (static_cast<double>(sample_idx.count_on_line(l)) >= params.y)
      survivors.push_back(l);
  }
  if (static_cast<double>(survivors.size()) > params.z) {
    rep.aborted = true;  // declared failure, a value rather than an error
    return rep;
  }
  PointIndex idx(S);
  for (const CanonicalLine& l : survivors) {
    std::int64_t cnt = idx.count_on_line(l);
    if (cnt >= lambda) rep.lines.push_back({l, cnt});
  }
  return rep;
}

}  // namespace plcover
