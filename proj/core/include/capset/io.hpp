#pragma once

// Text formats.
//
// Point-set file:
//   n=<dimension>
//   <point>          one per line, n digits from {0,1,2}, leftmost = x_1
// '#' starts a comment anywhere on a line; blank lines are ignored. Writers
// emit points in ascending index order, so files are canonical.
//
// Trace file:
//   n=<dimension> policy=<description>
//   <point> <count> <ties>     one line per removal
//   RESULT
//   <point-set file of the final capset>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "capset/greedy.hpp"
#include "capset/point_set.hpp"

namespace capset {

void write_point_set(std::ostream& out, const PointSet& s);
std::string format_point_set(const PointSet& s);
// Throws ParseError on malformed input or duplicate points.
PointSet read_point_set(std::istream& in);
PointSet parse_point_set(std::string_view text);

void write_trace(std::ostream& out, const GreedyTrace& trace);
std::string format_trace(const GreedyTrace& trace);
// Throws ParseError on malformed or truncated input.
GreedyTrace read_trace(std::istream& in);
GreedyTrace parse_trace(std::string_view text);

// 64-bit FNV-1a, printed as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace capset
