#include "plcover/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "plcover/io.hpp"

#include "plcover/generators.hpp"
#include "plcover/kernelize.hpp"
#include "plcover/oracle.hpp"
#include "plcover/rich_lines.hpp"
#include "plcover/rng.hpp"

namespace plcover {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::int64_t to_i64(const std::string& s) {
  std::size_t pos = 0;
  std::int64_t v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

struct Instance {
  PointSet points;
  std::vector<CanonicalLine> truth_lines;  // planted lines when known
  bool has_truth = false;
};

// The whole instance cache is built up front so timing never includes
// generation.
using InstanceKey = std::tuple<std::string, std::int64_t, std::int64_t>;

Instance build_instance(const BenchConfig& cfg, const std::string& gen,
                        std::int64_t n, std::int64_t param) {
  Rng grng(0x9e3779b9u ^ static_cast<std::uint64_t>(n * 1315423911 + param));
  Instance inst;
  if (gen == "planted-rich") {
    inst.points = gen_planted_rich(n, param, cfg.bound, grng);
  } else if (gen == "genpos") {
    inst.points = gen_general_position(n, cfg.bound, grng).points;
  } else if (gen == "grid") {
    std::int64_t rows = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))));
    std::int64_t cols = (n + rows - 1) / rows;
    inst.points = gen_grid(rows, cols);
  } else if (gen == "planted-cover") {
    CoverInstance ci = gen_planted_cover(param, cfg.per_line, cfg.bound, grng);
    inst.points = std::move(ci.points);
    inst.truth_lines = std::move(ci.witness);
    inst.has_truth = true;
  } else {
    throw std::invalid_argument("bench: unknown gen '" + gen + "'");
  }
  return inst;
}

bool reports_equal(const RichLineReport& a, const RichLineReport& b) {
  if (a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    if (!(a.lines[i].line == b.lines[i].line) ||
        a.lines[i].count != b.lines[i].count)
      return false;
  }
  return true;
}

BenchRecord run_rich_case(const BenchConfig& cfg, const Instance& inst,
                          std::int64_t n, std::int64_t lambda,
                          const std::string& algo, std::uint64_t seed) {
  BenchRecord rec{algo, n, lambda, seed, 0, 0, ""};
  Rng rng(seed);
  RichLineReport rep;
  auto t0 = std::chrono::steady_clock::now();
  if (algo == "rand") {
    rep = rich_lines_rand(inst.points, lambda, rng);
  } else if (algo == "det") {
    rep = rich_lines_det(inst.points, lambda);
  } else if (algo == "brute") {
    rep = rich_lines_brute(inst.points, lambda);
  } else {
    throw std::invalid_argument("bench: unknown algo '" + algo + "'");
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.wall_ns = std::max<std::int64_t>(
      1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  rec.out_size = static_cast<std::int64_t>(rep.lines.size());
  if (cfg.oracle == "brute" || cfg.oracle == "det") {
    RichLineReport want = cfg.oracle == "brute"
                              ? rich_lines_brute(inst.points, lambda)
                              : rich_lines_det(inst.points, lambda);
    rec.correct = reports_equal(rep, want) ? "true" : "false";
  }
  return rec;
}

BenchRecord run_kernel_case(const BenchConfig& cfg, const Instance& inst,
                            std::int64_t k, const std::string& algo,
                            std::uint64_t seed) {
  BenchRecord rec{algo, static_cast<std::int64_t>(inst.points.size()), k, seed,
                  0, 0, ""};
  KernelVariant variant;
  if (algo == "rand") {
    variant = KernelVariant::kRandomized;
  } else if (algo == "det") {
    variant = KernelVariant::kDeterministic;
  } else {
    throw std::invalid_argument("bench: unknown kernel algo '" + algo + "'");
  }
  Rng rng(seed);
  auto t0 = std::chrono::steady_clock::now();
  KernelResult res = kernelize(inst.points, k, variant, rng);
  auto t1 = std::chrono::steady_clock::now();
  rec.wall_ns = std::max<std::int64_t>(
      1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  rec.out_size = static_cast<std::int64_t>(res.kernel.size());
  if (cfg.oracle == "solve" && inst.points.size() <= 60 && k <= 5) {
    // Kernel-level equivalence against the exact solver.
    bool input_yes = solve_cover(inst.points, k).yes;
    bool kernel_yes = res.verdict == KernelVerdict::kReduced &&
                      solve_cover(res.kernel, res.k_prime).yes;
    rec.correct = input_yes == kernel_yes ? "true" : "false";
  }
  return rec;
}

}  // namespace

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped;
    for (char ch : line) {
      if (ch == '#') break;
      stripped.push_back(ch);
    }
    // Trim whitespace-only lines.
    if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw parse_error(line_no, "expected key=value");
    std::string key = stripped.substr(0, eq);
    std::string val = stripped.substr(eq + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    };
    trim(key);
    trim(val);
    try {
      if (key == "task") {
        cfg.task = val;
      } else if (key == "gen") {
        cfg.gen = val;
      } else if (key == "n") {
        for (const auto& t : split_list(val)) cfg.n.push_back(to_i64(t));
      } else if (key == "lambda") {
        if (val == "auto") {
          cfg.lambda_auto = true;
        } else {
          for (const auto& t : split_list(val)) cfg.lambda.push_back(to_i64(t));
        }
      } else if (key == "k") {
        for (const auto& t : split_list(val)) cfg.k.push_back(to_i64(t));
      } else if (key == "per_line") {
        cfg.per_line = to_i64(val);
      } else if (key == "algo") {
        cfg.algo = split_list(val);
      } else if (key == "seed") {
        for (const auto& t : split_list(val))
          cfg.seed.push_back(static_cast<std::uint64_t>(std::stoull(t)));
      } else if (key == "bound") {
        cfg.bound = to_i64(val);
      } else if (key == "oracle") {
        cfg.oracle = val;
      } else if (key == "parallel") {
        cfg.parallel = val == "true" || val == "1";
      } else {
        throw parse_error(line_no, "unknown key '" + key + "'");
      }
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception& e) {
      throw parse_error(line_no, e.what());
    }
  }
  return cfg;
}

BenchConfig parse_bench_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_bench_config(in);
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> records;
  if (cfg.task.empty()) return records;
  if (cfg.task != "rich" && cfg.task != "kernel")
    throw std::invalid_argument("bench: unknown task '" + cfg.task + "'");

  struct Case {
    std::int64_t n;
    std::int64_t param;
    std::string algo;
    std::uint64_t seed;
  };
  std::vector<Case> cases;
  std::map<InstanceKey, Instance> instances;

  if (cfg.task == "rich") {
    for (std::int64_t n : cfg.n) {
      std::vector<std::int64_t> lambdas = cfg.lambda;
      if (cfg.lambda_auto)
        lambdas.push_back(static_cast<std::int64_t>(
            std::ceil(std::sqrt(static_cast<double>(n) *
                                std::log(static_cast<double>(n))))));
      for (std::int64_t lambda : lambdas) {
        InstanceKey key{cfg.gen, n, lambda};
        if (!instances.contains(key))
          instances.emplace(key, build_instance(cfg, cfg.gen, n, lambda));
        for (const auto& algo : cfg.algo)
          for (std::uint64_t seed : cfg.seed) cases.push_back({n, lambda, algo, seed});
      }
    }
  } else {
    for (std::int64_t k : cfg.k) {
      // genpos kernel instances default to the canonical 2k^2 no-instance size.
      std::int64_t inst_n = cfg.gen == "genpos" ? 2 * k * k : 0;
      InstanceKey key{cfg.gen, inst_n, k};
      if (!instances.contains(key))
        instances.emplace(key, build_instance(cfg, cfg.gen, inst_n, k));
      for (const auto& algo : cfg.algo)
        for (std::uint64_t seed : cfg.seed) cases.push_back({inst_n, k, algo, seed});
    }
  }

  auto run_case = [&](const Case& c) -> BenchRecord {
    const Instance& inst = instances.at(InstanceKey{cfg.gen, c.n, c.param});
    if (cfg.task == "rich")
      return run_rich_case(cfg, inst, c.n, c.param, c.algo, c.seed);
    return run_kernel_case(cfg, inst, c.param, c.algo, c.seed);
  };

  records.resize(cases.size());
  if (cfg.parallel) {
    std::vector<std::future<BenchRecord>> futs;
    futs.reserve(cases.size());
    for (const Case& c : cases)
      futs.push_back(std::async(std::launch::async, run_case, c));
    for (std::size_t i = 0; i < futs.size(); ++i) records[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i) records[i] = run_case(cases[i]);
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algo,n,param,seed,wall_ns,out_size,correct\n";
  for (const BenchRecord& r : records) {
    out << r.algo << ',' << r.n << ',' << r.param << ',' << r.seed << ','
        << r.wall_ns << ',' << r.out_size << ',' << r.correct << '\n';
  }
}

}  // namespace plcover
