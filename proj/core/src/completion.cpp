#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "capset/analysis.hpp"
#include "capset/errors.hpp"

namespace capset {

namespace {

// Fixed-width bitset over point indices, sized at runtime.
class Bits {
 public:
  explicit Bits(std::uint32_t size) : words_((size + 63) / 64, 0) {}

  bool test(std::uint32_t i) const { return words_[i >> 6] >> (i & 63) & 1; }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }
  std::uint32_t count_and(const Bits& mask) const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::uint32_t>(std::popcount(words_[i] & mask.words_[i]));
    }
    return c;
  }
  // Index of the lowest set bit, or -1.
  std::int64_t lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) {
        return static_cast<std::int64_t>(i * 64 +
                                         static_cast<std::size_t>(
                                             std::countr_zero(words_[i])));
      }
    }
    return -1;
  }

 private:
  std::vector<std::uint64_t> words_;
};

void require_capset(const PointSet& c) {
  if (!is_capset(c)) throw std::invalid_argument("input is not a capset");
}

// Depth-first include/exclude search over available points in ascending
// order. Include-first order reaches sets in lexicographic order, so the
// first maximum found is the lexicographically smallest one.
class MaxSearch {
 public:
  MaxSearch(Dimension n, std::uint32_t slice_cap)
      : n_(n), slice_cap_(slice_cap) {
    // Every parallel class of hyperplanes, three consecutive masks each.
    for (const Hyperplane& h : enumerate_hyperplanes(n)) {
      Bits mask(n.num_points());
      for (Point x : h.points()) mask.set(x.index);
      slices_.push_back(std::move(mask));
    }
  }

  std::vector<Point> run(const std::vector<Point>& start, const Bits& avail) {
    Bits cur(n_.num_points());
    for (Point p : start) cur.set(p.index);
    best_size_ = 0;
    best_.clear();
    std::vector<Point> chosen = start;
    dfs(cur, chosen, avail);
    return best_;
  }

 private:
  std::uint32_t bound(const Bits& cur, std::uint32_t size,
                      const Bits& avail) const {
    std::uint32_t b = size + avail.count();
    for (std::size_t dir = 0; dir + 2 < slices_.size(); dir += 3) {
      std::uint32_t s = 0;
      for (std::size_t v = 0; v < 3; ++v) {
        const Bits& mask = slices_[dir + v];
        s += std::min(slice_cap_, cur.count_and(mask) + avail.count_and(mask));
      }
      b = std::min(b, s);
    }
    return b;
  }

  void dfs(Bits& cur, std::vector<Point>& chosen, Bits avail) {
    const auto size = static_cast<std::uint32_t>(chosen.size());
    if (bound(cur, size, avail) <= best_size_ && !best_.empty()) return;
    const std::int64_t low = avail.lowest();
    if (low < 0) {
      if (size > best_size_ || best_.empty()) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    const Point p{static_cast<std::uint32_t>(low)};
    avail.reset(p.index);

    Bits with = avail;
    for (Point q : chosen) with.reset(negated_sum(p, q).index);
    cur.set(p.index);
    chosen.push_back(p);
    dfs(cur, chosen, with);
    chosen.pop_back();
    cur.reset(p.index);

    dfs(cur, chosen, std::move(avail));
  }

  Dimension n_;
  std::uint32_t slice_cap_;
  std::vector<Bits> slices_;
  std::uint32_t best_size_ = 0;
  std::vector<Point> best_;
};

// Enumerates inclusion-maximal capsets containing a start set.
class MaximalEnumerator {
 public:
  MaximalEnumerator(Dimension n, std::size_t limit) : n_(n), limit_(limit) {}

  CompletionResult run(const std::vector<Point>& start, const Bits& avail) {
    CompletionResult out;
    Bits cur(n_.num_points());
    for (Point p : start) cur.set(p.index);
    std::vector<Point> chosen = start, excluded;
    dfs(cur, chosen, excluded, avail, out);
    return out;
  }

 private:
  bool blocked(Point x, const Bits& cur, const std::vector<Point>& chosen) const {
    for (Point q : chosen) {
      if (cur.test(negated_sum(x, q).index)) return true;
    }
    return false;
  }

  void dfs(Bits& cur, std::vector<Point>& chosen, std::vector<Point>& excluded,
           Bits avail, CompletionResult& out) {
    if (out.truncated) return;
    const std::int64_t low = avail.lowest();
    if (low < 0) {
      for (Point x : excluded) {
        if (!blocked(x, cur, chosen)) return;
      }
      if (out.completions.size() >= limit_) {
        out.truncated = true;
        return;
      }
      out.completions.emplace_back(n_, chosen);
      return;
    }
    const Point p{static_cast<std::uint32_t>(low)};
    avail.reset(p.index);

    Bits with = avail;
    for (Point q : chosen) with.reset(negated_sum(p, q).index);
    cur.set(p.index);
    chosen.push_back(p);
    dfs(cur, chosen, excluded, with, out);
    chosen.pop_back();
    cur.reset(p.index);

    excluded.push_back(p);
    dfs(cur, chosen, excluded, std::move(avail), out);
    excluded.pop_back();
  }

  Dimension n_;
  std::size_t limit_;
};

Bits extendable_bits(Dimension n, const std::vector<Point>& points) {
  Bits bits(n.num_points());
  for (Point p : points) bits.set(p.index);
  return bits;
}

// Known a(d) from this module's own exhaustive search, where affordable.
std::uint32_t slice_cap_for(Dimension n) {
  if (n.value() == 1) return 1;
  if (n.value() - 1 <= kExhaustiveDimensionCap) {
    return static_cast<std::uint32_t>(
        max_capset_exhaustive(Dimension(n.value() - 1)).size);
  }
  return n.num_points() / 3;
}

}  // namespace

CompletionResult complete_capset(const PointSet& c, CompletionMode mode,
                                 const CompletionOptions& options) {
  require_capset(c);
  const Dimension n = c.dimension();
  if (mode != CompletionMode::kGreedyAdd && n.value() > options.max_dimension) {
    throw CapExceeded("exhaustive completion limited to n <= " +
                      std::to_string(options.max_dimension) + ", got n = " +
                      std::to_string(n.value()));
  }

  CompletionResult out;
  switch (mode) {
    case CompletionMode::kGreedyAdd: {
      // Blocked points stay blocked, so one ascending sweep suffices.
      std::vector<std::uint8_t> blocked(n.num_points(), 0);
      std::vector<Point> members = c.members();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          blocked[negated_sum(members[i], members[j]).index] = 1;
        }
      }
      PointSet result = c;
      for (std::uint32_t x = 0; x < n.num_points(); ++x) {
        if (result.contains(Point{x}) || blocked[x]) continue;
        for (Point q : members) blocked[negated_sum(Point{x}, q).index] = 1;
        members.push_back(Point{x});
        result.insert(Point{x});
      }
      out.completions.push_back(std::move(result));
      break;
    }
    case CompletionMode::kExhaustiveMax: {
      if (c.empty() && n.value() <= kExhaustiveDimensionCap) {
        out.completions.push_back(max_capset_exhaustive(n).witness);
        break;
      }
      const auto ext = is_complete(c).extendable;
      MaxSearch search(n, slice_cap_for(n));
      const auto best = search.run(c.members(), extendable_bits(n, ext));
      out.completions.emplace_back(n, best);
      break;
    }
    case CompletionMode::kAllMaximal: {
      const auto ext = is_complete(c).extendable;
      MaximalEnumerator search(n, options.max_results);
      out = search.run(c.members(), extendable_bits(n, ext));
      break;
    }
  }
  return out;
}

MaxCapsetResult max_capset_exhaustive(Dimension n) {
  if (n.value() > kExhaustiveDimensionCap) {
    throw CapExceeded("max_capset_exhaustive limited to n <= " +
                      std::to_string(kExhaustiveDimensionCap));
  }
  static std::mutex mu;
  static std::array<std::optional<MaxCapsetResult>, kExhaustiveDimensionCap + 1>
      cache;
  {
    std::lock_guard lock(mu);
    if (cache[n.value()]) return *cache[n.value()];
  }

  // Affine symmetry: any three non-collinear points map to 0, e_1, e_2, so
  // some maximum capset starts with {0, 1, 3}, and then the lexicographically
  // smallest one does too.
  std::vector<Point> start{Point{0}};
  if (n.value() >= 2) start = {Point{0}, Point{1}, Point{3}};
  Bits avail(n.num_points());
  for (std::uint32_t x = 1; x < n.num_points(); ++x) avail.set(x);
  for (Point p : start) avail.reset(p.index);
  for (std::size_t i = 0; i < start.size(); ++i) {
    for (std::size_t j = i + 1; j < start.size(); ++j) {
      const Point r = negated_sum(start[i], start[j]);
      if (r.index < n.num_points()) avail.reset(r.index);
    }
  }
  MaxSearch search(n, slice_cap_for(n));
  const auto best = search.run(start, avail);
  MaxCapsetResult result{best.size(), PointSet(n, best)};

  std::lock_guard lock(mu);
  cache[n.value()] = result;
  return result;
}

}  // namespace capset
