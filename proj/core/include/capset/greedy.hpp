#pragma once

// Greedy point removal: starting from the whole space, repeatedly delete a
// point lying on the largest positive number of lines still contained in the
// remaining set, until no line is left.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capset/f3_space.hpp"
#include "capset/point_set.hpp"

namespace capset {

struct Candidate {
  std::uint32_t count = 0;
  Point point;
};

// Chooses among points of maximal line count.
//
//   lexmin   smallest index
//   lexmax   largest index
//   first    first candidate at or after the successor of the previously
//            removed point, wrapping around (starts at index 0)
//   random   uniform draw via Xorshift64Star::uniform, one draw per step that
//            has two or more candidates
//   custom   user preference over (count, point)
class TieBreakPolicy {
 public:
  enum class Kind { kLexMin, kLexMax, kFirst, kRandom, kCustom };

  // prefer(a, b) == true means a should be removed before b. It must be a
  // strict total order that ranks a higher count first.
  using Preference = std::function<bool(const Candidate&, const Candidate&)>;

  static TieBreakPolicy lex_min() { return TieBreakPolicy(Kind::kLexMin); }
  static TieBreakPolicy lex_max() { return TieBreakPolicy(Kind::kLexMax); }
  static TieBreakPolicy first() { return TieBreakPolicy(Kind::kFirst); }
  static TieBreakPolicy random(std::uint64_t seed);
  // Throws std::invalid_argument if prefer ranks a lower count above a
  // higher one on any probe pair.
  static TieBreakPolicy custom(std::string name, Preference prefer);

  // "lexmin", "lexmax", "first", "random:<seed>". Throws
  // std::invalid_argument otherwise.
  static TieBreakPolicy parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const Preference& preference() const { return prefer_; }
  std::string describe() const;

 private:
  explicit TieBreakPolicy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::uint64_t seed_ = 0;
  std::string name_;
  Preference prefer_;
};

struct GreedyStep {
  Point removed;
  std::uint32_t count = 0;     // lines through `removed` at removal time
  std::uint32_t num_tied = 0;  // candidates sharing that maximal count

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyTrace {
  explicit GreedyTrace(Dimension dim) : n(dim), result(dim) {}

  Dimension n;
  std::string policy;
  std::vector<GreedyStep> steps;
  PointSet result;

  std::vector<Point> removals() const;

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

GreedyTrace run_greedy(Dimension n,
                       const TieBreakPolicy& policy = TieBreakPolicy::lex_min());

// Independent runs, results in input order. threads == 0 picks
// std::thread::hardware_concurrency().
std::vector<GreedyTrace> run_batch(Dimension n,
                                   std::span<const TieBreakPolicy> policies,
                                   unsigned threads = 0);

struct TraceCheck {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // == steps.size() for result errors
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Replays the steps on a fresh incidence state and checks that each removed
// point was alive with a maximal positive count equal to the recorded one,
// that the tie counts match, and that the final set is the recorded capset.
TraceCheck verify_trace(const GreedyTrace& trace);

// The hyperplane formed by the first 3^{n-1} removals, if they form one.
std::optional<Hyperplane> first_phase_hyperplane(Dimension n,
                                                 std::span<const Point> removals);
std::optional<Hyperplane> hyperplane_phase_of(const GreedyTrace& trace);

// Checks the phase structure at every level: the first 3^{n-1} removals form a
// hyperplane H_0, and the later removals restricted to each parallel
// hyperplane (in chart coordinates) again have this structure in dimension
// n - 1. Dimension-1 blocks must remove exactly one point.
bool has_recursive_phases(Dimension n, std::span<const Point> removals);

}  // namespace capset
