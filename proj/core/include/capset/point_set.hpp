#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "capset/f3_space.hpp"

namespace capset {

// Dense membership over all 3^n points with a cached cardinality.
class PointSet {
 public:
  explicit PointSet(Dimension n);
  PointSet(Dimension n, std::span<const Point> points);
  PointSet(Dimension n, std::initializer_list<Point> points);

  static PointSet full(Dimension n);

  Dimension dimension() const { return n_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Point p) const {
    return p.index < member_.size() && member_[p.index] != 0;
  }
  // Return whether the set changed. Out-of-range points throw.
  bool insert(Point p);
  bool erase(Point p);

  // Ascending index order.
  std::vector<Point> members() const;
  std::span<const std::uint8_t> membership() const { return member_; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.member_ == b.member_;
  }

 private:
  Dimension n_;
  std::vector<std::uint8_t> member_;
  std::size_t size_ = 0;
};

PointSet points_of(const Hyperplane& h);

// True iff third_point(p, q) is in s for all distinct p, q in s.
bool is_line_closed(const PointSet& s);

// Smallest affine subspace containing s. Throws std::invalid_argument on an
// empty set.
PointSet affine_span(const PointSet& s);

}  // namespace capset
