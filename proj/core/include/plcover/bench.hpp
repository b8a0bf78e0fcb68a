#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace plcover {

// One timed run of an algorithm on one generated instance. `correct` is
// "true"/"false" when an oracle was configured and feasible, else empty.
struct BenchRecord {
  std::string algo;
  std::int64_t n = 0;
  std::int64_t param = 0;  // lambda for rich tasks, k for kernel tasks
  std::uint64_t seed = 0;
  std::int64_t wall_ns = 0;
  std::int64_t out_size = 0;
  std::string correct;
};

// Flat key=value suite description (comma-separated lists, '#' comments):
//   task   = rich | kernel
//   gen    = planted-rich | genpos | grid | planted-cover
//   n      = list (rich tasks; grid uses n = rows*cols of a near-square grid)
//   lambda = list or `auto` (= ceil(sqrt(n ln n)))
//   k      = list (kernel tasks; also planted-cover's line count)
//   per_line = int (planted-cover, default 200)
//   algo   = list from rand, det, brute (kernel: rand, det)
//   seed   = list of u64
//   bound  = coordinate bound for generators (default 10^9)
//   oracle = none | brute | det | solve
//   parallel = true | false (run instances concurrently, default false)
struct BenchConfig {
  std::string task;
  std::string gen;
  std::vector<std::int64_t> n;
  std::vector<std::int64_t> lambda;
  bool lambda_auto = false;
  std::vector<std::int64_t> k;
  std::int64_t per_line = 200;
  std::vector<std::string> algo;
  std::vector<std::uint64_t> seed;
  std::int64_t bound = 1000000000;
  std::string oracle = "none";
  bool parallel = false;
};

BenchConfig parse_bench_config(std::istream& in);
BenchConfig parse_bench_config_file(const std::string& path);

// Runs every (instance, algo, seed) combination. Generation and I/O are
// excluded from wall_ns; only the algorithm body is timed. Instances are
// cached per (gen, n, param, bound), so several algorithms and seeds time the
// same point set.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

// CSV columns exactly: algo,n,param,seed,wall_ns,out_size,correct
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace plcover
