#include "capset/incidence.hpp"

#include <stdexcept>

namespace capset {

IncidenceState::IncidenceState(Dimension n)
    : n_(n),
      alive_(PointSet::full(n)),
      count_(n.num_points(), n.lines_per_point()),
      alive_lines_(n.num_lines()) {
  removed_.reserve(n.num_points());
}

void IncidenceState::remove(Point p) {
  if (!alive_.contains(p)) {
    throw std::logic_error("IncidenceState::remove: point " +
                           to_base3(n_, p) + " is not alive");
  }
  const std::uint8_t* live = alive_.membership().data();
  std::uint32_t* count = count_.data();
  std::uint64_t killed = 0;
  for_each_partner(n_, p, [&](Point q, Point r) {
    if (q.index < r.index && live[q.index] && live[r.index]) {
      --count[q.index];
      --count[r.index];
      ++killed;
    }
  });
  alive_lines_ -= killed;
  alive_.erase(p);
  removed_.push_back(p);
}

std::uint32_t IncidenceState::max_count_points(
    std::vector<Point>& candidates) const {
  candidates.clear();
  const std::uint8_t* live = alive_.membership().data();
  std::uint32_t best = 0;
  for (std::uint32_t i = 0; i < n_.num_points(); ++i) {
    if (!live[i]) continue;
    const std::uint32_t c = count_[i];
    if (c > best) {
      best = c;
      candidates.clear();
    }
    if (c == best) candidates.push_back(Point{i});
  }
  return best;
}

MaxCount IncidenceState::max_count_points() const {
  MaxCount out;
  out.max = max_count_points(out.candidates);
  return out;
}

std::vector<PointCount> IncidenceState::recount() const {
  return recount_lines(alive_);
}

std::vector<PointCount> recount_lines(const PointSet& s) {
  const Dimension n = s.dimension();
  std::vector<PointCount> out;
  out.reserve(s.size());
  for (Point p : s.members()) {
    std::uint32_t c = 0;
    for_each_partner(n, p, [&](Point q, Point r) {
      if (q < r && s.contains(q) && s.contains(r)) ++c;
    });
    out.push_back({p, c});
  }
  return out;
}

}  // namespace capset
