#include <doctest.h>

#include <sstream>

#include "plcover/bench.hpp"
#include "plcover/generators.hpp"
#include "plcover/io.hpp"
#include "test_util.hpp"

using namespace plcover;

TEST_CASE("point round trip is identity") {
  Rng rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    PointSet S = testutil::gen_uniform(1 + rng.below(200), 2000000000, rng);
    std::ostringstream out;
    write_points(out, S);
    std::istringstream in(out.str());
    PointSet back = parse_points(in);
    REQUIRE(back.size() == S.size());
    for (std::size_t i = 0; i < S.size(); ++i) CHECK(back[i] == S[i]);
    std::ostringstream again;
    write_points(again, back);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("point parser diagnostics") {
  {
    std::istringstream in("1 2\n1 2\n");
    CHECK_THROWS_WITH_AS(parse_points(in), doctest::Contains("line 2"), parse_error);
  }
  {
    std::istringstream in("2147483648 0\n");
    CHECK_THROWS_WITH_AS(parse_points(in), doctest::Contains("out of bounds"),
                         parse_error);
  }
  {
    std::istringstream in("# comment\n\n2147483647 -2147483647\n");
    PointSet s = parse_points(in);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Point{2147483647, -2147483647});
  }
  {
    std::istringstream in("1 two\n");
    CHECK_THROWS_AS(parse_points(in), parse_error);
  }
  {
    std::istringstream in("3 4\r\n5 6\r\n");  // CRLF input parses cleanly
    CHECK(parse_points(in).size() == 2);
  }
  {
    std::istringstream in("1 2 3\n");
    CHECK_THROWS_AS(parse_points(in), parse_error);
  }
}

TEST_CASE("line round trip and canonical validation") {
  Rng rng(29);
  PointSet S = testutil::gen_uniform(60, 1000000, rng);
  std::vector<CanonicalLine> lines;
  for (std::size_t i = 0; i + 1 < S.size(); i += 2)
    lines.push_back(line_through(S[i], S[i + 1]));
  std::ostringstream out;
  write_lines(out, lines);
  std::istringstream in(out.str());
  auto back = parse_lines(in);
  CHECK(back == lines);

  std::istringstream bad1("2 -2 0\n");  // gcd 2
  CHECK_THROWS_AS(parse_lines(bad1), parse_error);
  std::istringstream bad2("-1 1 0\n");  // a < 0
  CHECK_THROWS_AS(parse_lines(bad2), parse_error);
  std::istringstream bad3("0 0 5\n");
  CHECK_THROWS_AS(parse_lines(bad3), parse_error);
}

TEST_CASE("bench: empty suite emits header only") {
  std::istringstream cfg("");
  auto records = run_bench(parse_bench_config(cfg));
  CHECK(records.empty());
  std::ostringstream out;
  write_bench_csv(out, records);
  CHECK(out.str() == "algo,n,param,seed,wall_ns,out_size,correct\n");
}

TEST_CASE("bench: oracle-verified rich suite") {
  std::istringstream cfg(
      "task = rich\n"
      "gen = planted-rich\n"
      "n = 200\n"
      "lambda = 40\n"
      "algo = rand,det\n"
      "seed = 1,2\n"
      "bound = 1000000\n"
      "oracle = brute\n");
  auto records = run_bench(parse_bench_config(cfg));
  REQUIRE(records.size() == 4);
  for (const auto& r : records) {
    CHECK(r.correct == "true");
    CHECK(r.wall_ns > 0);
    CHECK(r.n == 200);
    CHECK(r.param == 40);
    CHECK(r.out_size >= 1);
  }
}

TEST_CASE("bench: lambda=auto resolves to ceil(sqrt(n ln n))") {
  std::istringstream cfg(
      "task = rich\n"
      "gen = planted-rich\n"
      "n = 200\n"
      "lambda = auto\n"
      "algo = det\n"
      "seed = 1\n"
      "bound = 1000000\n");
  auto records = run_bench(parse_bench_config(cfg));
  REQUIRE(records.size() == 1);
  CHECK(records[0].param == 33);  // ceil(sqrt(200 ln 200))
}

TEST_CASE("bench: config diagnostics") {
  std::istringstream bad("task rich\n");
  CHECK_THROWS_AS(parse_bench_config(bad), parse_error);
  std::istringstream unknown("frobnicate = 7\n");
  CHECK_THROWS_AS(parse_bench_config(unknown), parse_error);
}

TEST_CASE("bench: kernel suite with solver oracle") {
  std::istringstream cfg(
      "task = kernel\n"
      "gen = planted-cover\n"
      "k = 2\n"
      "per_line = 12\n"
      "algo = rand,det\n"
      "seed = 7\n"
      "bound = 100000\n"
      "oracle = solve\n");
  auto records = run_bench(parse_bench_config(cfg));
  REQUIRE(records.size() == 2);
  for (const auto& r : records) CHECK(r.correct == "true");
}

TEST_CASE("bench: parallel flag leaves the record set unchanged") {
  const char* text =
      "task = rich\n"
      "gen = grid\n"
      "n = 100\n"
      "lambda = 5\n"
      "algo = det,brute\n"
      "seed = 1,2,3\n"
      "oracle = brute\n";
  std::istringstream c1(text), c2(text);
  auto serial_cfg = parse_bench_config(c1);
  auto par_cfg = parse_bench_config(c2);
  par_cfg.parallel = true;
  auto serial = run_bench(serial_cfg);
  auto par = run_bench(par_cfg);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].algo == par[i].algo);
    CHECK(serial[i].n == par[i].n);
    CHECK(serial[i].param == par[i].param);
    CHECK(serial[i].seed == par[i].seed);
    CHECK(serial[i].out_size == par[i].out_size);
    CHECK(serial[i].correct == par[i].correct);
  }
}
