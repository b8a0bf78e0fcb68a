#include "plcover/exact_fit.hpp"

#include <optional>
#include <stdexcept>

namespace plcover {

FitResult exact_fit(const PointSet& S, FitMode mode, Rng& rng) {
  const std::int64_t n = static_cast<std::int64_t>(S.size());
  if (n < 2) throw std::invalid_argument("exact_fit: need at least 2 points");
  if (n == 2) return FitResult{line_through(S[0], S[1]), 2};

  std::uint64_t probe_no = 0;
  auto probe = [&](std::int64_t lambda) -> RichLineReport {
    if (mode == FitMode::kDeterministic) return rich_lines_det(S, lambda);
    Rng child = rng.split(probe_no++);
    RichLineReport rep = rich_lines_rand(S, lambda, child);
    if (rep.aborted) return rich_lines_det(S, lambda);
    return rep;
  };

  // Nonempty(lambda) is monotone decreasing in lambda; keep the largest
  // nonempty probe.
  std::optional<RichLineReport> best;
  std::int64_t lo = 2, hi = n;
  while (lo <= hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    RichLineReport rep = probe(mid);
    if (!rep.lines.empty()) {
      best = std::move(rep);
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  if (!best) best = rich_lines_det(S, 2);  // lambda = 2 is never empty for n >= 2

  const IncidenceCount* pick = nullptr;
  for (const IncidenceCount& ic : best->lines) {
    if (pick == nullptr || ic.count > pick->count ||
        (ic.count == pick->count && ic.line < pick->line)) {
      pick = &ic;
    }
  }
  return FitResult{pick->line, pick->count};
}

}  // namespace plcover
