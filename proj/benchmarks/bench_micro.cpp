#include <benchmark/benchmark.h>

#include "plcover/generators.hpp"
#include "plcover/kernelize.hpp"
#include "plcover/rich_lines.hpp"
#include "plcover/rng.hpp"

using namespace plcover;

namespace {

PointSet planted(std::int64_t n, std::int64_t lambda) {
  Rng rng(1);
  return gen_planted_rich(n, lambda, 1000000000, rng);
}

void BM_line_through(benchmark::State& state) {
  Rng rng(2);
  PointSet S = planted(1000, 100);
  std::size_t i = 0;
  for (auto _ : state) {
    auto l = line_through(S[i % S.size()], S[(i + 77) % S.size()]);
    benchmark::DoNotOptimize(l);
    ++i;
  }
}
BENCHMARK(BM_line_through);

void BM_incidence_scan(benchmark::State& state) {
  PointSet S = planted(static_cast<std::int64_t>(state.range(0)), 64);
  std::vector<CanonicalLine> probes;
  for (std::size_t i = 0; i + 1 < 64; i += 2) probes.push_back(line_through(S[i], S[i + 1]));
  for (auto _ : state) {
    auto rep = incidences(probes, S);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_incidence_scan)->Arg(1000)->Arg(10000);

void BM_point_index_count(benchmark::State& state) {
  PointSet S = planted(static_cast<std::int64_t>(state.range(0)), 64);
  PointIndex idx(S);
  std::vector<CanonicalLine> probes;
  for (std::size_t i = 0; i + 1 < 64; i += 2) probes.push_back(line_through(S[i], S[i + 1]));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& l : probes) total += idx.count_on_line(l);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_point_index_count)->Arg(1000)->Arg(10000);

void BM_rich_lines(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t lambda = state.range(1);
  PointSet S = planted(n, lambda);
  const int algo = static_cast<int>(state.range(2));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RichLineReport rep;
    if (algo == 0) {
      Rng rng(seed++);
      rep = rich_lines_rand(S, lambda, rng);
    } else if (algo == 1) {
      rep = rich_lines_det(S, lambda);
    } else {
      rep = rich_lines_brute(S, lambda);
    }
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_rich_lines)
    ->ArgsProduct({{2000, 10000}, {200}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_kernelize_k16(benchmark::State& state) {
  Rng grng(3);
  CoverInstance inst = gen_planted_cover(16, 200, 100000000, grng);
  const bool det = state.range(0) == 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    auto res = kernelize(inst.points, 16,
                         det ? KernelVariant::kDeterministic : KernelVariant::kRandomized,
                         rng);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_kernelize_k16)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
