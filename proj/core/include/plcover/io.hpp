#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "plcover/geom.hpp"

namespace plcover {

// Parse failure with a 1-based line number of the offending input line.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

// Point text format: one point per line as two base-10 integers separated by
// one space; lines beginning with '#' (and blank lines) are ignored.
// Duplicate points and coordinates beyond |2^31 - 1| are parse errors.
PointSet parse_points(std::istream& in);
PointSet parse_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& S);
void write_points_file(const std::string& path, const PointSet& S);

// Line text format: three integers "a b c" per line, required to be in
// canonical form ((a,b) != (0,0), gcd 1, a > 0 or a = 0 < b).
std::vector<CanonicalLine> parse_lines(std::istream& in);
std::vector<CanonicalLine> parse_lines_file(const std::string& path);
void write_lines(std::ostream& out, const std::vector<CanonicalLine>& L);
void write_lines_file(const std::string& path, const std::vector<CanonicalLine>& L);

}  // namespace plcover
