#include "plcover/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace plcover {

namespace {

std::uint64_t pack_point(const Point& p) {
  std::uint64_t ux = static_cast<std::uint64_t>(p.x + (1LL << 31));
  std::uint64_t uy = static_cast<std::uint64_t>(p.y + (1LL << 31));
  return (ux << 32) | uy;
}

std::vector<std::string> tokenize(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (ch != ' ' && ch != '\t' && ch != '\r') return false;
  }
  return true;
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

std::int64_t parse_coord(const std::string& tok, std::size_t line_no) {
  int128 v;
  try {
    v = parse_i128(tok);
  } catch (const std::invalid_argument& e) {
    throw parse_error(line_no, e.what());
  }
  if (v < -static_cast<int128>(kCoordBound) || v > static_cast<int128>(kCoordBound))
    throw parse_error(line_no, "coordinate out of bounds: " + tok);
  return static_cast<std::int64_t>(v);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

PointSet parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    auto toks = tokenize(line);
    if (toks.size() != 2)
      throw parse_error(line_no, "expected two integers, got " +
                                     std::to_string(toks.size()) + " token(s)");
    Point p{parse_coord(toks[0], line_no), parse_coord(toks[1], line_no)};
    if (!seen.insert(pack_point(p)).second)
      throw parse_error(line_no, "duplicate point " + std::to_string(p.x) + " " +
                                     std::to_string(p.y));
    pts.push_back(p);
  }
  return PointSet::unchecked(std::move(pts));
}

PointSet parse_points_file(const std::string& path) {
  auto in = open_input(path);
  return parse_points(in);
}

void write_points(std::ostream& out, const PointSet& S) {
  for (const Point& p : S) out << p.x << ' ' << p.y << '\n';
}

void write_points_file(const std::string& path, const PointSet& S) {
  auto out = open_output(path);
  write_points(out, S);
}

std::vector<CanonicalLine> parse_lines(std::istream& in) {
  std::vector<CanonicalLine> out;
  std::unordered_set<CanonicalLine, LineHash> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    auto toks = tokenize(line);
    if (toks.size() != 3)
      throw parse_error(line_no, "expected three integers, got " +
                                     std::to_string(toks.size()) + " token(s)");
    CanonicalLine l;
    try {
      int128 a = parse_i128(toks[0]);
      int128 b = parse_i128(toks[1]);
      int128 c = parse_i128(toks[2]);
      const int128 coef_bound = static_cast<int128>(1) << 32;
      if (a < -coef_bound || a > coef_bound || b < -coef_bound || b > coef_bound)
        throw std::invalid_argument("line coefficient out of range");
      l = CanonicalLine{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), c};
    } catch (const std::invalid_argument& e) {
      throw parse_error(line_no, e.what());
    }
    if (l.a == 0 && l.b == 0) throw parse_error(line_no, "(a, b) must not be (0, 0)");
    if (l.a < 0 || (l.a == 0 && l.b < 0))
      throw parse_error(line_no, "line not sign-normalized");
    std::int64_t g = gcd_i64(l.a, l.b);
    if (l.c != 0) {
      int128 c = l.c < 0 ? -l.c : l.c;
      g = gcd_i64(g, static_cast<std::int64_t>(c % g));
    }
    if (g != 1) throw parse_error(line_no, "line coefficients not coprime");
    if (!seen.insert(l).second) throw parse_error(line_no, "duplicate line");
    out.push_back(l);
  }
  return out;
}

std::vector<CanonicalLine> parse_lines_file(const std::string& path) {
  auto in = open_input(path);
  return parse_lines(in);
}

void write_lines(std::ostream& out, const std::vector<CanonicalLine>& L) {
  for (const CanonicalLine& l : L)
    out << l.a << ' ' << l.b << ' ' << to_string_i128(l.c) << '\n';
}

void write_lines_file(const std::string& path, const std::vector<CanonicalLine>& L) {
  auto out = open_output(path);
  write_lines(out, L);
}

}  // namespace plcover
