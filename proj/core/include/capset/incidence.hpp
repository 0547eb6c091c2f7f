#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "capset/f3_space.hpp"
#include "capset/point_set.hpp"

namespace capset {

struct PointCount {
  Point point;
  std::uint32_t count = 0;

  friend bool operator==(const PointCount&, const PointCount&) = default;
};

struct MaxCount {
  std::uint32_t max = 0;
  std::vector<Point> candidates;  // ascending
};

// Per-point count of lines fully contained in a shrinking point set.
//
// Invariant: for every alive P, count(P) is the number of lines through P
// whose three points are alive. Counts of removed points are stale.
class IncidenceState {
 public:
  // Starts from the whole space: every count is (3^n - 1) / 2.
  explicit IncidenceState(Dimension n);

  Dimension dimension() const { return n_; }
  const PointSet& alive() const { return alive_; }
  std::uint32_t count(Point p) const { return count_[p.index]; }
  std::span<const Point> removed_order() const { return removed_; }
  // Number of lines with all three points alive.
  std::uint64_t alive_lines() const { return alive_lines_; }

  // Removes an alive point and decrements the two other points of every
  // alive line through it. Throws std::logic_error if p is not alive.
  void remove(Point p);

  MaxCount max_count_points() const;
  // Same as max_count_points, reusing the caller's buffer.
  std::uint32_t max_count_points(std::vector<Point>& candidates) const;

  // From-scratch count over alive points, for verification.
  std::vector<PointCount> recount() const;

 private:
  Dimension n_;
  PointSet alive_;
  std::vector<std::uint32_t> count_;
  std::vector<Point> removed_;
  std::uint64_t alive_lines_;
};

// Number of lines through each member of s lying entirely in s, ascending.
std::vector<PointCount> recount_lines(const PointSet& s);

}  // namespace capset
