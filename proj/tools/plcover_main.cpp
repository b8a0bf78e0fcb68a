// plcover: rich-line detection, exact line fitting, and Line Cover
// kernelization over exact integer points.
//
// Exit codes: 0 success, 1 usage/parse error, 2 precondition violation.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "plcover/bench.hpp"
#include "plcover/exact_fit.hpp"
#include "plcover/generators.hpp"
#include "plcover/io.hpp"
#include "plcover/kernelize.hpp"
#include "plcover/oracle.hpp"
#include "plcover/rich_lines.hpp"
#include "plcover/rng.hpp"

namespace {

using namespace plcover;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

void emit_rich_report(std::ostream& out, const RichLineReport& rep) {
  for (const IncidenceCount& ic : rep.lines)
    out << ic.line.a << ' ' << ic.line.b << ' ' << to_string_i128(ic.line.c)
        << ' ' << ic.count << '\n';
  out << "# n=" << rep.n << " lambda=" << rep.lambda << " found="
      << rep.lines.size() << " aborted=" << (rep.aborted ? "true" : "false")
      << '\n';
}

void write_cover_truth(const std::string& path, const CoverInstance& inst) {
  auto out = open_out(path);
  switch (inst.truth) {
    case TruthKind::kYes:
      out << "# YES k=" << inst.k << " witness follows\n";
      write_lines(out, inst.witness);
      break;
    case TruthKind::kNo:
      out << "# NO " << inst.note << '\n';
      break;
    case TruthKind::kUnknown:
      out << "# UNKNOWN\n";
      break;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"point-line covering toolkit"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate instance files");
  gen->require_subcommand(1);
  std::uint64_t seed = 0;
  std::string output;
  std::int64_t bound = 1000000000;

  auto* gen_grid_cmd = gen->add_subcommand("grid", "rows x cols integer grid");
  std::int64_t rows = 3, cols = 3;
  gen_grid_cmd->add_option("--rows", rows)->required();
  gen_grid_cmd->add_option("--cols", cols)->required();
  gen_grid_cmd->add_option("--output", output)->required();

  auto* gen_cover_cmd =
      gen->add_subcommand("cover", "planted line cover (with .truth sidecar)");
  std::int64_t gk = 16, per_line = 200;
  gen_cover_cmd->add_option("--k", gk)->required();
  gen_cover_cmd->add_option("--per-line", per_line);
  gen_cover_cmd->add_option("--bound", bound);
  gen_cover_cmd->add_option("--seed", seed);
  gen_cover_cmd->add_option("--output", output)->required();

  auto* gen_genpos_cmd = gen->add_subcommand(
      "genpos", "points in general position (with .truth sidecar)");
  std::int64_t gn = 100;
  gen_genpos_cmd->add_option("--n", gn)->required();
  gen_genpos_cmd->add_option("--bound", bound);
  gen_genpos_cmd->add_option("--seed", seed);
  gen_genpos_cmd->add_option("--output", output)->required();

  auto* gen_rich_cmd =
      gen->add_subcommand("rich", "one planted lambda-rich line plus fillers");
  std::int64_t glambda = 10;
  gen_rich_cmd->add_option("--n", gn)->required();
  gen_rich_cmd->add_option("--lambda", glambda)->required();
  gen_rich_cmd->add_option("--bound", bound);
  gen_rich_cmd->add_option("--seed", seed);
  gen_rich_cmd->add_option("--output", output)->required();

  // ---- rich-lines ---------------------------------------------------------
  auto* rich = app.add_subcommand("rich-lines", "compute all lambda-rich lines");
  std::int64_t lambda = 2;
  std::string algo = "rand", input;
  rich->add_option("--lambda", lambda)->required();
  rich->add_option("--algo", algo)->check(CLI::IsMember({"rand", "det", "brute"}));
  rich->add_option("--seed", seed);
  rich->add_option("--input", input)->required();
  rich->add_option("--output", output);

  // ---- exact-fit ----------------------------------------------------------
  auto* fit = app.add_subcommand("exact-fit",
                                 "a line covering the maximum number of points");
  fit->add_option("--algo", algo)->check(CLI::IsMember({"rand", "det"}));
  fit->add_option("--seed", seed);
  fit->add_option("--input", input)->required();

  // ---- kernelize ----------------------------------------------------------
  auto* kern = app.add_subcommand("kernelize", "Line Cover kernelization");
  std::int64_t k = 1;
  std::string out_kernel, out_lines;
  kern->add_option("--k", k)->required();
  kern->add_option("--algo", algo)->check(CLI::IsMember({"rand", "det"}));
  kern->add_option("--seed", seed);
  kern->add_option("--input", input)->required();
  kern->add_option("--out-kernel", out_kernel)->required();
  kern->add_option("--out-lines", out_lines)->required();

  // ---- solve --------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "exact Line Cover decision (desk scale)");
  solve->add_option("--k", k)->required();
  solve->add_option("--input", input)->required();

  // ---- bench --------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "run a benchmark suite, emit CSV");
  std::string config;
  bool parallel = false;
  bench->add_option("--config", config)->required();
  bench->add_option("--output", output);
  bench->add_flag("--parallel", parallel,
                  "run independent instances concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors map to exit code 1
  }

  if (gen_grid_cmd->parsed()) {
    write_points_file(output, gen_grid(rows, cols));
    return 0;
  }
  if (gen_cover_cmd->parsed()) {
    Rng rng(seed);
    CoverInstance inst = gen_planted_cover(gk, per_line, bound, rng);
    write_points_file(output, inst.points);
    write_cover_truth(output + ".truth", inst);
    return 0;
  }
  if (gen_genpos_cmd->parsed()) {
    Rng rng(seed);
    CoverInstance inst = gen_general_position(gn, bound, rng);
    write_points_file(output, inst.points);
    write_cover_truth(output + ".truth", inst);
    return 0;
  }
  if (gen_rich_cmd->parsed()) {
    Rng rng(seed);
    write_points_file(output, gen_planted_rich(gn, glambda, bound, rng));
    return 0;
  }
  if (rich->parsed()) {
    PointSet S = parse_points_file(input);
    Rng rng(seed);
    RichLineReport rep;
    if (algo == "rand")
      rep = rich_lines_rand(S, lambda, rng);
    else if (algo == "det")
      rep = rich_lines_det(S, lambda);
    else
      rep = rich_lines_brute(S, lambda);
    if (output.empty()) {
      emit_rich_report(std::cout, rep);
    } else {
      auto out = open_out(output);
      emit_rich_report(out, rep);
    }
    return 0;
  }
  if (fit->parsed()) {
    PointSet S = parse_points_file(input);
    Rng rng(seed);
    FitResult res = exact_fit(
        S, algo == "det" ? FitMode::kDeterministic : FitMode::kRandomized, rng);
    std::cout << res.line.a << ' ' << res.line.b << ' '
              << to_string_i128(res.line.c) << ' ' << res.count << '\n';
    return 0;
  }
  if (kern->parsed()) {
    PointSet S = parse_points_file(input);
    Rng rng(seed);
    KernelResult res = kernelize(
        S, k,
        algo == "det" ? KernelVariant::kDeterministic : KernelVariant::kRandomized,
        rng);
    write_points_file(out_kernel, res.kernel);
    write_lines_file(out_lines, res.forced_lines);
    std::cout << "# verdict="
              << (res.verdict == KernelVerdict::kReduced ? "REDUCED" : "NO_INSTANCE")
              << " kernel_size=" << res.kernel.size() << " k_prime=" << res.k_prime
              << " forced=" << res.forced_lines.size() << '\n';
    return 0;
  }
  if (solve->parsed()) {
    PointSet S = parse_points_file(input);
    CoverDecision dec = solve_cover(S, k);
    if (dec.yes) {
      std::cout << "YES\n";
      write_lines(std::cout, dec.witness);
    } else {
      std::cout << "NO\n";
    }
    return 0;
  }
  if (bench->parsed()) {
    BenchConfig cfg = parse_bench_config_file(config);
    if (parallel) cfg.parallel = true;
    auto records = run_bench(cfg);
    if (output.empty()) {
      write_bench_csv(std::cout, records);
    } else {
      auto out = open_out(output);
      write_bench_csv(out, records);
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const plcover::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
