#include "capset/point_set.hpp"

#include <stdexcept>

namespace capset {

PointSet::PointSet(Dimension n) : n_(n), member_(n.num_points(), 0) {}

PointSet::PointSet(Dimension n, std::span<const Point> points) : PointSet(n) {
  for (Point p : points) insert(p);
}

PointSet::PointSet(Dimension n, std::initializer_list<Point> points)
    : PointSet(n, std::span<const Point>(points.begin(), points.size())) {}

PointSet PointSet::full(Dimension n) {
  PointSet s(n);
  std::fill(s.member_.begin(), s.member_.end(), 1);
  s.size_ = s.member_.size();
  return s;
}

bool PointSet::insert(Point p) {
  if (!in_range(n_, p)) throw std::out_of_range("point outside F_3^n");
  if (member_[p.index]) return false;
  member_[p.index] = 1;
  ++size_;
  return true;
}

bool PointSet::erase(Point p) {
  if (!in_range(n_, p)) throw std::out_of_range("point outside F_3^n");
  if (!member_[p.index]) return false;
  member_[p.index] = 0;
  --size_;
  return true;
}

std::vector<Point> PointSet::members() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (std::uint32_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(Point{i});
  }
  return out;
}

PointSet points_of(const Hyperplane& h) {
  const auto pts = h.points();
  return PointSet(h.dimension(), pts);
}

bool is_line_closed(const PointSet& s) {
  const auto pts = s.members();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!s.contains(negated_sum(pts[i], pts[j]))) return false;
    }
  }
  return true;
}

PointSet affine_span(const PointSet& s) {
  if (s.empty()) {
    throw std::invalid_argument("affine_span: the empty set spans nothing");
  }
  const Dimension n = s.dimension();
  const auto pts = s.members();
  const Point origin = pts.front();

  // Translate so that origin sits at 0; the line closure is then a subgroup.
  PointSet closed(n);
  std::vector<Point> queue;
  queue.reserve(pts.size());
  for (Point p : pts) {
    const Point t = subtract(p, origin);
    if (closed.insert(t)) queue.push_back(t);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Point r = negated_sum(queue[i], queue[j]);
      if (closed.insert(r)) queue.push_back(r);
    }
  }

  PointSet out(n);
  for (Point t : queue) out.insert(add(t, origin));
  return out;
}

}  // namespace capset
