#include "capset/greedy.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "capset/analysis.hpp"
#include "capset/incidence.hpp"
#include "capset/rng.hpp"

namespace capset {

TieBreakPolicy TieBreakPolicy::random(std::uint64_t seed) {
  TieBreakPolicy p(Kind::kRandom);
  p.seed_ = seed;
  return p;
}

TieBreakPolicy TieBreakPolicy::custom(std::string name, Preference prefer) {
  if (!prefer) throw std::invalid_argument("custom policy needs a preference");
  const std::uint32_t probe_points[] = {0, 1, 2, 5, 13, 40, 121, 364, 1093};
  for (std::uint32_t c = 0; c < 8; ++c) {
    for (auto a : probe_points) {
      for (auto b : probe_points) {
        const Candidate high{c + 1, Point{a}}, low{c, Point{b}};
        if (!prefer(high, low) || prefer(low, high)) {
          throw std::invalid_argument(
              "custom policy '" + name +
              "' prefers a lower line count over a higher one");
        }
      }
    }
  }
  TieBreakPolicy p(Kind::kCustom);
  p.name_ = std::move(name);
  p.prefer_ = std::move(prefer);
  return p;
}

TieBreakPolicy TieBreakPolicy::parse(std::string_view text) {
  if (text == "lexmin") return lex_min();
  if (text == "lexmax") return lex_max();
  if (text == "first") return first();
  constexpr std::string_view prefix = "random:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string digits(text.substr(prefix.size()));
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
      try {
        return random(std::stoull(digits));
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw std::invalid_argument("unknown tie-break policy '" + std::string(text) +
                              "'");
}

std::string TieBreakPolicy::describe() const {
  switch (kind_) {
    case Kind::kLexMin:
      return "lexmin";
    case Kind::kLexMax:
      return "lexmax";
    case Kind::kFirst:
      return "first";
    case Kind::kRandom:
      return "random:" + std::to_string(seed_);
    case Kind::kCustom:
      return "custom:" + name_;
  }
  return "unknown";
}

std::vector<Point> GreedyTrace::removals() const {
  std::vector<Point> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.removed);
  return out;
}

namespace {

// Per-run selection state for a policy.
class Chooser {
 public:
  explicit Chooser(const TieBreakPolicy& policy)
      : policy_(policy), rng_(policy.seed()) {}

  Point pick(const std::vector<Point>& candidates, std::uint32_t count) {
    Point chosen = candidates.front();
    switch (policy_.kind()) {
      case TieBreakPolicy::Kind::kLexMin:
        break;
      case TieBreakPolicy::Kind::kLexMax:
        chosen = candidates.back();
        break;
      case TieBreakPolicy::Kind::kFirst: {
        auto it = std::lower_bound(candidates.begin(), candidates.end(),
                                   Point{cursor_});
        chosen = it == candidates.end() ? candidates.front() : *it;
        cursor_ = chosen.index + 1;
        break;
      }
      case TieBreakPolicy::Kind::kRandom:
        if (candidates.size() > 1) {
          chosen = candidates[rng_.uniform(candidates.size())];
        }
        break;
      case TieBreakPolicy::Kind::kCustom: {
        const auto& prefer = policy_.preference();
        for (Point p : candidates) {
          if (prefer(Candidate{count, p}, Candidate{count, chosen})) chosen = p;
        }
        break;
      }
    }
    return chosen;
  }

 private:
  const TieBreakPolicy& policy_;
  Xorshift64Star rng_;
  std::uint32_t cursor_ = 0;
};

}  // namespace

GreedyTrace run_greedy(Dimension n, const TieBreakPolicy& policy) {
  GreedyTrace trace(n);
  trace.policy = policy.describe();
  IncidenceState state(n);
  Chooser chooser(policy);
  std::vector<Point> candidates;
  candidates.reserve(n.num_points());
  for (;;) {
    const std::uint32_t best = state.max_count_points(candidates);
    if (best == 0) break;
    const Point p = chooser.pick(candidates, best);
    trace.steps.push_back(
        {p, best, static_cast<std::uint32_t>(candidates.size())});
    state.remove(p);
  }
  trace.result = state.alive();
  return trace;
}

std::vector<GreedyTrace> run_batch(Dimension n,
                                   std::span<const TieBreakPolicy> policies,
                                   unsigned threads) {
  if (policies.empty()) {
    throw std::invalid_argument("run_batch: no policies given");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(policies.size()));

  std::vector<std::optional<GreedyTrace>> slots(policies.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < policies.size(); i = next++) {
      slots[i].emplace(run_greedy(n, policies[i]));
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<GreedyTrace> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

TraceCheck verify_trace(const GreedyTrace& trace) {
  const Dimension n = trace.n;
  auto fail = [&](std::size_t step, std::string why) {
    return TraceCheck{false, step, "step " + std::to_string(step) + ": " + why};
  };

  IncidenceState state(n);
  std::vector<Point> candidates;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const GreedyStep& step = trace.steps[i];
    if (!in_range(n, step.removed)) return fail(i, "point out of range");
    const std::string name = to_base3(n, step.removed);
    if (!state.alive().contains(step.removed)) {
      return fail(i, name + " was already removed");
    }
    const std::uint32_t best = state.max_count_points(candidates);
    if (best == 0) return fail(i, "the remaining set was already a capset");
    const std::uint32_t actual = state.count(step.removed);
    if (actual != step.count) {
      return fail(i, name + " lies on " + std::to_string(actual) +
                         " lines, trace records " + std::to_string(step.count));
    }
    if (actual != best) {
      return fail(i, name + " has count " + std::to_string(actual) +
                         " but the maximum is " + std::to_string(best));
    }
    if (candidates.size() != step.num_tied) {
      return fail(i, std::to_string(candidates.size()) +
                         " points tie at the maximum, trace records " +
                         std::to_string(step.num_tied));
    }
    state.remove(step.removed);
  }
  const std::size_t end = trace.steps.size();
  if (!is_capset(state.alive())) {
    return fail(end, "the final set still contains a line");
  }
  if (!(state.alive() == trace.result)) {
    return fail(end, "recorded result differs from the replayed set");
  }
  return TraceCheck{true, std::nullopt, "ok"};
}

std::optional<Hyperplane> first_phase_hyperplane(
    Dimension n, std::span<const Point> removals) {
  const std::size_t k = n.num_points() / 3;
  if (removals.size() < k) return std::nullopt;
  const auto phase = removals.first(k);
  for (Point p : phase) {
    if (!in_range(n, p)) return std::nullopt;
  }
  if (PointSet(n, phase).size() != k) return std::nullopt;

  const auto hyperplanes = enumerate_hyperplanes(n);
  for (std::size_t i = 0; i < hyperplanes.size(); i += 3) {
    const Hyperplane& h = hyperplanes[i];
    const std::uint8_t value = h.evaluate(phase.front());
    const bool flat = std::all_of(phase.begin(), phase.end(), [&](Point p) {
      return h.evaluate(p) == value;
    });
    if (flat) return h.shifted(3 - value);
  }
  return std::nullopt;
}

std::optional<Hyperplane> hyperplane_phase_of(const GreedyTrace& trace) {
  const auto removals = trace.removals();
  return first_phase_hyperplane(trace.n, removals);
}

bool has_recursive_phases(Dimension n, std::span<const Point> removals) {
  if (n.value() == 1) return removals.size() == 1 && in_range(n, removals[0]);
  const auto h0 = first_phase_hyperplane(n, removals);
  if (!h0) return false;
  const auto cls = parallel_class(*h0);
  const Dimension sub(n.value() - 1);
  const auto rest = removals.subspan(n.num_points() / 3);
  if (std::any_of(rest.begin(), rest.end(),
                  [&](Point p) { return h0->contains(p); })) {
    return false;
  }
  for (int side = 1; side <= 2; ++side) {
    const Hyperplane& h = cls[side];
    std::vector<Point> inner;
    for (Point p : rest) {
      if (h.contains(p)) inner.push_back(to_chart(h, p));
    }
    if (!has_recursive_phases(sub, inner)) return false;
  }
  return true;
}

}  // namespace capset
