#include "plcover/kernelize.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace plcover {

namespace {

std::vector<CanonicalLine> report_lines(const RichLineReport& rep) {
  std::vector<CanonicalLine> out;
  out.reserve(rep.lines.size());
  for (const IncidenceCount& ic : rep.lines) out.push_back(ic.line);
  return out;
}

std::vector<Point> strip_covered(const std::vector<Point>& pts,
                                 const std::vector<CanonicalLine>& lines) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts)
    if (!any_line_contains(lines, p)) out.push_back(p);
  return out;
}

}  // namespace

std::int64_t SaturationSchedule::level_threshold(int i) const {
  if (i > r) return k + 1;
  const double sigma = 2.0 * static_cast<double>(k) * static_cast<double>(k);
  double thr = sigma * std::exp(-(1.0 + y[static_cast<std::size_t>(i)]) / 2.0 *
                                std::log(static_cast<double>(k)));
  return static_cast<std::int64_t>(std::ceil(thr));
}

double SaturationSchedule::k_pow_half(int i) const {
  return std::exp((1.0 + y[static_cast<std::size_t>(i)]) / 2.0 *
                  std::log(static_cast<double>(k)));
}

SaturationSchedule build_schedule(std::int64_t k, KernelVariant variant) {
  if (k < 16) throw std::invalid_argument("build_schedule: k must be >= 16");
  const double kd = static_cast<double>(k);
  const double ln_k = std::log(kd);
  const double lnln_k = std::log(ln_k);
  const double lnlnln_k = std::log(lnln_k);
  SaturationSchedule sched;
  sched.k = k;
  sched.variant = variant;
  sched.epsilon = lnlnln_k / ln_k;
  const double y0 = variant == KernelVariant::kRandomized
                        ? 1.0 - lnln_k / ln_k - lnlnln_k / ln_k
                        : 2.0 * lnln_k / ln_k - 1.0;
  const double target = variant == KernelVariant::kRandomized
                            ? kd / (lnln_k * lnln_k)
                            : kd / std::pow(lnln_k, 5.0);
  int r = 0;
  while (std::exp((y0 + r * sched.epsilon) * ln_k) < target) {
    ++r;
    if (r > 1000000) throw std::runtime_error("build_schedule: r did not converge");
  }
  sched.r = r;
  sched.y.resize(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i)
    sched.y[static_cast<std::size_t>(i)] = y0 + i * sched.epsilon;
  return sched;
}

const char* sat_stop_name(SatStop s) {
  switch (s) {
    case SatStop::kCoverage: return "COVERAGE";
    case SatStop::kLevelCount: return "LEVEL_COUNT";
    case SatStop::kFinalCount: return "FINAL_COUNT";
    case SatStop::kExhausted: return "EXHAUSTED";
  }
  return "?";
}

SaturatedLinesResult saturated_lines(const PointSet& batch, std::int64_t k,
                                     const SaturationSchedule& sched, Rng& rng) {
  if (k < 16) throw std::invalid_argument("saturated_lines: k must be >= 16");
  if (sched.k != k) throw std::invalid_argument("saturated_lines: schedule built for different k");
  const std::int64_t sigma = 2 * k * k;
  if (static_cast<std::int64_t>(batch.size()) != sigma)
    throw std::invalid_argument("saturated_lines: batch size must be exactly 2k^2");

  for (int i = 0; i <= sched.r + 1; ++i) {
    const std::int64_t lambda = sched.level_threshold(i);
    assert(lambda > k);  // every level stays above saturation, so forcing is sound
    RichLineReport rep;
    if (sched.variant == KernelVariant::kRandomized) {
      Rng child = rng.split(static_cast<std::uint64_t>(i));
      rep = rich_lines_rand(batch, lambda, child);
      if (rep.aborted) rep.lines.clear();  // an aborted level counts as empty
    } else {
      rep = rich_lines_det(batch, lambda);
    }
    std::vector<CanonicalLine> lines = report_lines(rep);
    auto [covered, remaining] = covered_subset(lines, batch);
    const std::int64_t covered_count = static_cast<std::int64_t>(covered.size());
    bool stop = false;
    SatStop reason = SatStop::kExhausted;
    if (i == 0) {
      if (3 * covered_count >= k * k) {
        stop = true;
        reason = SatStop::kCoverage;
      }
    } else if (i <= sched.r) {
      double bar = sched.k_pow_half(i - 1) / (12.0 * sched.r);
      if (static_cast<double>(lines.size()) >= bar) {
        stop = true;
        reason = SatStop::kLevelCount;
      }
    } else {
      double bar = sched.k_pow_half(sched.r) / 12.0;
      if (static_cast<double>(lines.size()) >= bar) {
        stop = true;
        reason = SatStop::kFinalCount;
      }
    }
    if (stop)
      return SaturatedLinesResult{std::move(remaining), std::move(lines), reason, i};
  }
  return SaturatedLinesResult{batch, {}, SatStop::kExhausted, -1};
}

KernelResult make_no_instance(std::vector<CanonicalLine> forced,
                              std::vector<std::int64_t> passes) {
  KernelResult res;
  res.kernel = PointSet::unchecked({Point{0, 0}});
  res.k_prime = 0;
  res.forced_lines = std::move(forced);
  res.verdict = KernelVerdict::kNoInstance;
  res.pass_sizes = std::move(passes);
  return res;
}

KernelResult kernelize(const PointSet& S, std::int64_t k, KernelVariant variant,
                       Rng& rng) {
  if (S.empty()) throw std::invalid_argument("kernelize: empty point set");
  if (k < 1) throw std::invalid_argument("kernelize: k must be >= 1");
  if (k <= 15) return kernelize_small(S, k);

  const SaturationSchedule sched = build_schedule(k, variant);
  const std::int64_t sigma = 2 * k * k;
  const std::size_t n = S.size();
  std::vector<CanonicalLine> H;
  std::vector<std::int64_t> passes;
  std::vector<Point> buf;
  std::size_t idx = 0;
  std::uint64_t call_no = 0;
  auto force = [&H, &passes](std::vector<CanonicalLine>& lines) {
    if (lines.empty()) return;
    passes.push_back(static_cast<std::int64_t>(lines.size()));
    for (CanonicalLine& l : lines) H.push_back(std::move(l));
  };

  while (static_cast<std::int64_t>(H.size()) <= k) {
    while (static_cast<std::int64_t>(buf.size()) < sigma && idx < n) {
      const Point& p = S[idx++];
      if (!any_line_contains(H, p)) buf.push_back(p);
    }
    if (static_cast<std::int64_t>(buf.size()) == sigma) {
      Rng child = rng.split(call_no++);
      SaturatedLinesResult res =
          saturated_lines(PointSet::unchecked(buf), k, sched, child);
      if (res.lines.empty()) {
        // The randomized ladder can miss; re-check deterministically before
        // declaring a no-instance. A full batch with no (k+1)-rich line
        // cannot be covered by k lines, so the verdict below is exact.
        std::vector<CanonicalLine> det =
            report_lines(rich_lines_det(PointSet::unchecked(buf), k + 1));
        if (det.empty()) return make_no_instance(std::move(H), std::move(passes));
        buf = strip_covered(buf, det);
        force(det);
      } else {
        buf = res.remaining.points();
        force(res.lines);
      }
      continue;
    }
    // Input exhausted with a partial buffer.
    if (static_cast<std::int64_t>(buf.size()) > k * k) {
      std::vector<CanonicalLine> tail;
      if (variant == KernelVariant::kRandomized) {
        Rng child = rng.split(call_no++);
        RichLineReport rep =
            rich_lines_rand(PointSet::unchecked(buf), k + 1, child);
        if (rep.aborted) rep.lines.clear();
        tail = report_lines(rep);
      } else {
        tail = report_lines(rich_lines_det(PointSet::unchecked(buf), k + 1));
      }
      buf = strip_covered(buf, tail);
      force(tail);
      if (static_cast<std::int64_t>(H.size()) > k ||
          static_cast<std::int64_t>(buf.size()) > k * k) {
        if (static_cast<std::int64_t>(H.size()) > k)
          return make_no_instance(std::move(H), std::move(passes));
        if (variant == KernelVariant::kRandomized) {
          // Same exactness repair as above: only an exhaustive pass may
          // justify "more than k^2 points yet no saturated line".
          std::vector<CanonicalLine> det =
              report_lines(rich_lines_det(PointSet::unchecked(buf), k + 1));
          buf = strip_covered(buf, det);
          force(det);
        }
        if (static_cast<std::int64_t>(H.size()) > k ||
            static_cast<std::int64_t>(buf.size()) > k * k)
          return make_no_instance(std::move(H), std::move(passes));
      }
    }
    KernelResult out;
    out.kernel = PointSet::unchecked(std::move(buf));
    out.k_prime = k - static_cast<std::int64_t>(H.size());
    out.forced_lines = std::move(H);
    out.verdict = KernelVerdict::kReduced;
    out.pass_sizes = std::move(passes);
    return out;
  }
  return make_no_instance(std::move(H), std::move(passes));
}

KernelResult kernelize_small(const PointSet& S, std::int64_t k) {
  if (S.empty()) throw std::invalid_argument("kernelize_small: empty point set");
  if (k < 1 || k > 15)
    throw std::invalid_argument("kernelize_small: k must be in [1, 15]");
  if (static_cast<std::int64_t>(S.size()) <= k * k) {
    KernelResult out;
    out.kernel = S;
    out.k_prime = k;
    out.verdict = KernelVerdict::kReduced;
    return out;
  }
  std::vector<CanonicalLine> H;
  std::vector<std::int64_t> passes;
  std::vector<Point> buf;
  std::int64_t cur = k;
  std::size_t idx = 0;
  const std::size_t n = S.size();
  for (;;) {
    while (static_cast<std::int64_t>(buf.size()) < cur * cur + 1 && idx < n) {
      const Point& p = S[idx++];
      if (!any_line_contains(H, p)) buf.push_back(p);
    }
    if (static_cast<std::int64_t>(buf.size()) <= cur * cur && idx == n) {
      KernelResult out;
      out.kernel = PointSet::unchecked(std::move(buf));
      out.k_prime = cur;
      out.forced_lines = std::move(H);
      out.verdict = KernelVerdict::kReduced;
      out.pass_sizes = std::move(passes);
      return out;
    }
    // |buf| > cur^2: a cover by cur lines would put > cur points on one line.
    if (cur == 0) return make_no_instance(std::move(H), std::move(passes));
    std::vector<CanonicalLine> forced =
        report_lines(rich_lines_det(PointSet::unchecked(buf), cur + 1));
    if (forced.empty() ||
        static_cast<std::int64_t>(H.size() + forced.size()) > k)
      return make_no_instance(std::move(H), std::move(passes));
    cur -= static_cast<std::int64_t>(forced.size());
    buf = strip_covered(buf, forced);
    passes.push_back(static_cast<std::int64_t>(forced.size()));
    for (CanonicalLine& l : forced) H.push_back(std::move(l));
  }
}

}  // namespace plcover
