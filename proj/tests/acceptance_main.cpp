// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "capset/analysis.hpp"
#include "capset/greedy.hpp"
#include "capset/incidence.hpp"
#include "capset/io.hpp"
#include "capset_cli.hpp"
#include "oracles.hpp"

namespace {

using namespace capset;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

std::vector<TieBreakPolicy> configurations() {
  std::vector<TieBreakPolicy> out{TieBreakPolicy::lex_min(),
                                  TieBreakPolicy::lex_max(),
                                  TieBreakPolicy::first()};
  for (std::uint64_t seed = 1; seed <= 17; ++seed) {
    out.push_back(TieBreakPolicy::random(seed));
  }
  return out;
}

// Traces for criteria 1, 2 and 4, computed once.
const std::vector<GreedyTrace>& main_traces() {
  static const std::vector<GreedyTrace> traces = [] {
    std::vector<GreedyTrace> all;
    const auto policies = configurations();
    for (int n = 1; n <= 8; ++n) {
      auto batch = run_batch(Dimension(n), policies);
      for (auto& t : batch) all.push_back(std::move(t));
    }
    return all;
  }();
  return traces;
}

std::string label(const GreedyTrace& t) {
  return "n=" + std::to_string(t.n.value()) + " " + t.policy;
}

Outcome size_law() {
  Outcome o;
  for (const auto& t : main_traces()) {
    if (t.result.size() != (std::size_t{1} << t.n.value())) {
      o.fail(label(t) + ": size " + std::to_string(t.result.size()));
    }
    if (const auto check = verify_trace(t); !check) {
      o.fail(label(t) + ": " + check.diagnostic);
    }
  }
  if (o.pass) o.detail = std::to_string(main_traces().size()) + " runs, |C| = 2^n";
  return o;
}

Outcome forward_structure() {
  Outcome o;
  for (const auto& t : main_traces()) {
    const auto r = verify_greedy_structure(t.result);
    if (!r) {
      o.fail(label(t) + ": " + r.diagnostic);
    } else if (!check_certificate(t.result, *r.certificate)) {
      o.fail(label(t) + ": certificate does not check");
    }
  }
  if (o.pass) o.detail = "every result certified";
  return o;
}

Outcome backward_structure() {
  Outcome o;
  Xorshift64Star rng(splitmix64(2024));
  for (int n = 1; n <= 4; ++n) {
    const Dimension dim(n);
    for (int k = 0; k < 100; ++k) {
      const auto cert = random_certificate(dim, rng);
      const PointSet c = materialize(dim, cert);
      const GreedyTrace t = greedy_trace_for(dim, cert);
      const auto check = verify_trace(t);
      if (!check) o.fail("n=" + std::to_string(n) + ": " + check.diagnostic);
      if (!(t.result == c)) o.fail("n=" + std::to_string(n) + ": result differs");
    }
  }
  if (o.pass) o.detail = "400 certificates realized by valid traces";
  return o;
}

Outcome phase_invariant() {
  Outcome o;
  for (const auto& t : main_traces()) {
    if (!hyperplane_phase_of(t)) o.fail(label(t) + ": no hyperplane phase");
  }
  if (o.pass) o.detail = "first 3^(n-1) removals form a hyperplane";
  return o;
}

Outcome line_count() {
  Outcome o;
  std::mt19937_64 gen(5);
  for (int n = 1; n <= 6; ++n) {
    const Dimension dim(n);
    const std::uint32_t expected = (pow3(n) - 1) / 2;
    for (int k = 0; k < 50; ++k) {
      const auto p = static_cast<std::uint32_t>(gen() % pow3(n));
      const auto brute = oracle::lines_through(n, p);
      std::set<std::array<std::uint32_t, 3>> fast;
      for (const Line& l : lines_through(dim, Point{p})) {
        std::array<std::uint32_t, 3> key{l.points[0].index, l.points[1].index,
                                         l.points[2].index};
        std::sort(key.begin(), key.end());
        fast.insert(key);
      }
      if (brute.size() != expected || fast != brute) {
        o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
               std::to_string(brute.size()) + " brute, " +
               std::to_string(fast.size()) + " library");
      }
    }
  }
  if (o.pass) o.detail = "50 points per n <= 6, (3^n-1)/2 lines each";
  return o;
}

// Random seed points closed under third points, using decoded vectors.
std::vector<std::uint32_t> grow_closed(int n, std::mt19937_64& gen) {
  const auto v = oracle::all_vectors(n);
  std::set<std::uint32_t> s;
  const int seeds = 1 + static_cast<int>(gen() % static_cast<unsigned>(n + 1));
  for (int i = 0; i < seeds; ++i) s.insert(static_cast<std::uint32_t>(gen() % v.size()));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::uint32_t r = 0;
        for (int c = n - 1; c >= 0; --c) {
          const auto cc = static_cast<std::size_t>(c);
          r = r * 3 + static_cast<std::uint32_t>((6 - v[cur[i]][cc] - v[cur[j]][cc]) % 3);
        }
        grew |= s.insert(r).second;
      }
    }
  }
  return {s.begin(), s.end()};
}

Outcome closed_sets() {
  Outcome o;
  std::mt19937_64 gen(11);
  for (int n = 1; n <= 3; ++n) {
    const Dimension dim(n);
    for (int k = 0; k < 200; ++k) {
      const auto pts = grow_closed(n, gen);
      std::vector<Point> as_points;
      for (auto x : pts) as_points.push_back(Point{x});
      const PointSet s(dim, as_points);
      std::size_t size = 1;
      while (size < s.size()) size *= 3;
      if (size != s.size()) o.fail("closure size " + std::to_string(s.size()));
      if (!is_line_closed(s)) o.fail("grown set not line-closed");
      if (!(affine_span(s) == s)) o.fail("affine_span(S) != S");
    }
  }
  if (o.pass) o.detail = "600 line-closed sets equal their span";
  return o;
}

Outcome examples() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const PointSet cube = make_cube(Dimension(n));
    const std::string tag = "cube n=" + std::to_string(n);
    if (!is_capset(cube)) o.fail(tag + " not a capset");
    if (!verify_greedy_structure(cube)) o.fail(tag + " not greedy");
    if (!is_complete(cube).complete) o.fail(tag + " not complete");
  }
  const PointSet q = make_quadric();
  if (!is_capset(q) || q.size() != 9) o.fail("quadric");
  const PointSet qm = make_quadric_minus_origin();
  if (!verify_greedy_structure(qm)) o.fail("quadric minus origin not greedy");
  const auto report = is_complete(qm);
  const auto& ext = report.extendable;
  if (report.complete || std::find(ext.begin(), ext.end(), Point{0}) == ext.end()) {
    o.fail("quadric minus origin should extend by 000");
  }
  if (o.pass) o.detail = "cubes, quadric, quadric minus origin";
  return o;
}

Outcome decremental_counts() {
  Outcome o;
  std::mt19937_64 gen(3);
  for (int n = 1; n <= 4; ++n) {
    const Dimension dim(n);
    const auto lines = oracle::lines(n);
    for (int k = 0; k < 1000 && o.pass; ++k) {
      std::vector<std::uint32_t> order(pow3(n));
      for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), gen);
      IncidenceState state(dim);
      std::vector<std::uint8_t> alive(order.size(), 1);
      for (auto x : order) {
        state.remove(Point{x});
        alive[x] = 0;
        const auto want = oracle::counts(lines, alive);
        for (std::uint32_t p = 0; p < alive.size(); ++p) {
          if (alive[p] && state.count(Point{p}) != want[p]) {
            o.fail("n=" + std::to_string(n) + " sequence " + std::to_string(k) +
                   ": count mismatch at " + std::to_string(p));
            break;
          }
        }
        if (!o.pass) break;
      }
    }
  }
  if (o.pass) o.detail = "1000 full removal sequences per n <= 4";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 gen(17);
  for (int n = 1; n <= 4; ++n) {
    const Dimension dim(n);
    int positives = 0;
    for (int k = 0; k < 500; ++k) {
      // Mix sparse and dense sets so both answers occur.
      const std::size_t size = gen() % (2 * n + 3);
      std::set<std::uint32_t> pts;
      while (pts.size() < std::min<std::size_t>(size, pow3(n))) {
        pts.insert(static_cast<std::uint32_t>(gen() % pow3(n)));
      }
      const std::vector<std::uint32_t> v(pts.begin(), pts.end());
      std::vector<Point> as_points;
      for (auto x : v) as_points.push_back(Point{x});
      const bool want = oracle::is_capset(n, v);
      positives += want;
      if (is_capset(PointSet(dim, as_points)) != want) {
        o.fail("n=" + std::to_string(n) + " disagreement");
      }
    }
    if (positives == 0 || positives == 500) o.fail("degenerate sample");
  }
  if (o.pass) o.detail = "500 random sets per n <= 4";
  return o;
}

Outcome exhaustive_maxima() {
  Outcome o;
  const std::size_t expected[] = {2, 4, 9};
  for (int n = 1; n <= 3; ++n) {
    const auto r = max_capset_exhaustive(Dimension(n));
    if (r.size != expected[n - 1] || r.witness.size() != r.size ||
        !is_capset(r.witness)) {
      o.fail("a(" + std::to_string(n) + ") = " + std::to_string(r.size));
    }
  }
  if (o.pass) o.detail = "a(1..3) = 2, 4, 9";
  return o;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "capset_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::vector<std::pair<int, std::string>> cases = {
      {6, "lexmin"}, {6, "lexmax"}, {7, "first"}, {7, "random"}, {8, "random"}};
  for (const auto& [n, policy] : cases) {
    std::string trace[2], set[2];
    for (int run = 0; run < 2; ++run) {
      const auto t = dir / ("t" + std::to_string(run) + ".txt");
      const auto s = dir / ("s" + std::to_string(run) + ".txt");
      std::ostringstream out, err;
      const int code = cli::run({"capset", "greedy", "--n", std::to_string(n),
                                 "--policy", policy, "--seed", "7",
                                 "--trace-out", t.string(), "--set-out",
                                 s.string()},
                                out, err);
      if (code != cli::kOk) o.fail("exit " + std::to_string(code) + ": " + err.str());
      trace[run] = slurp(t);
      set[run] = slurp(s);
    }
    if (trace[0].empty() || trace[0] != trace[1] || set[0] != set[1]) {
      o.fail("n=" + std::to_string(n) + " " + policy + " differs between runs");
    }
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "trace and set files byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"size law |C| = 2^n, n = 1..8, 20 configurations", size_law},
      {"greedy capsets pass verify_greedy_structure", forward_structure},
      {"random certificates give valid greedy traces", backward_structure},
      {"first phase removes one hyperplane", phase_invariant},
      {"lines through a point", line_count},
      {"line-closed sets equal their affine span", closed_sets},
      {"example sets", examples},
      {"decremental counts match recount", decremental_counts},
      {"is_capset matches triple oracle", oracle_equivalence},
      {"exhaustive maxima", exhaustive_maxima},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    failures += !o.pass;
    std::printf("[%s] criterion %zu: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
