#include "capset_cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "capset/analysis.hpp"
#include "capset/errors.hpp"
#include "capset/greedy.hpp"
#include "capset/io.hpp"

#ifndef CAPSET_VERSION
#define CAPSET_VERSION "0.0.0"
#endif

namespace capset::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << bytes;
  if (!out) throw InputError("write to '" + path + "' failed");
}

// "<dir>/<stem>-<tag><ext>"
std::string tagged_path(const std::string& path, const std::string& tag) {
  const fs::path p(path);
  fs::path out = p.parent_path() / (p.stem().string() + "-" + tag);
  out += p.extension();
  return out.string();
}

std::string join_points(Dimension n, const std::vector<Point>& pts) {
  std::string s;
  for (Point p : pts) {
    if (!s.empty()) s += ' ';
    s += to_base3(n, p);
  }
  return s;
}

json point_list(Dimension n, const std::vector<Point>& pts) {
  json arr = json::array();
  for (Point p : pts) arr.push_back(to_base3(n, p));
  return arr;
}

// Shared state for one invocation: reporting and the run manifest.
struct Session {
  std::vector<std::string> args;
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  json report = json::object();
  std::vector<std::string> text;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json inputs = json::array();

  void line(std::string s) { text.push_back(std::move(s)); }

  std::string load(const std::string& path) {
    std::string bytes = read_file(path);
    inputs.push_back({{"path", path}, {"fnv1a64", fnv1a_hex(bytes)}});
    return bytes;
  }

  void emit(const std::string& path, const std::string& bytes,
            const std::string& command, int dimension,
            const std::string& policy, std::optional<std::uint64_t> seed) {
    write_file(path, bytes);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    json manifest = {
        {"command", command},
        {"args", args},
        {"dimension", dimension},
        {"policy", policy},
        {"seed", seed ? json(*seed) : json(nullptr)},
        {"tool_version", CAPSET_VERSION},
        {"inputs", inputs},
        {"output", {{"path", path}, {"fnv1a64", fnv1a_hex(bytes)}}},
        {"wall_time_ms", elapsed.count()},
    };
    write_file(path + ".manifest.json", manifest.dump(2) + "\n");
  }

  void flush() {
    if (as_json) {
      out << report.dump(2) << '\n';
    } else {
      for (const auto& l : text) out << l << '\n';
    }
  }
};

PointSet load_point_set(Session& s, const std::string& path) {
  try {
    return parse_point_set(s.load(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::optional<Line> find_line(const PointSet& set) {
  const auto pts = set.members();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point r = negated_sum(pts[i], pts[j]);
      if (set.contains(r)) return Line::through(pts[i], pts[j]);
    }
  }
  return std::nullopt;
}

// greedy ---------------------------------------------------------------

struct GreedyArgs {
  int n = 0;
  std::string policy = "lexmin";
  std::uint64_t seed = 0;
  std::string seeds;
  std::string trace_out;
  std::string set_out;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("--seeds expects A..B");
  try {
    std::size_t used = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const auto lo = std::stoull(a, &used);
    if (used != a.size()) throw InputError("bad --seeds");
    const auto hi = std::stoull(b, &used);
    if (used != b.size() || hi < lo) throw InputError("bad --seeds");
    if (hi - lo >= 100000) throw InputError("--seeds range too large");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("--seeds expects A..B with A <= B");
  }
}

int cmd_greedy(Session& s, const GreedyArgs& a) {
  const Dimension n(a.n);
  std::vector<TieBreakPolicy> policies;
  std::vector<std::optional<std::uint64_t>> seeds;
  if (!a.seeds.empty()) {
    const auto [lo, hi] = parse_seed_range(a.seeds);
    for (auto k = lo; k <= hi; ++k) {
      policies.push_back(TieBreakPolicy::random(k));
      seeds.emplace_back(k);
    }
  } else if (a.policy == "random") {
    policies.push_back(TieBreakPolicy::random(a.seed));
    seeds.emplace_back(a.seed);
  } else {
    policies.push_back(TieBreakPolicy::parse(a.policy));
    seeds.emplace_back(std::nullopt);
  }

  const auto traces = run_batch(n, policies);
  const bool many = traces.size() > 1;
  json runs = json::array();
  int code = kOk;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const GreedyTrace& t = traces[i];
    const TraceCheck check = verify_trace(t);
    const bool size_ok = t.result.size() == (std::size_t{1} << n.value());
    if (!check || !size_ok) {
      s.err << "internal invariant failure (" << t.policy
            << "): " << (check ? "size is not 2^n" : check.diagnostic) << '\n';
      code = kInternalError;
    }
    const std::string tag = seeds[i] ? std::to_string(*seeds[i]) : "";
    if (!a.trace_out.empty()) {
      const auto path = many ? tagged_path(a.trace_out, tag) : a.trace_out;
      s.emit(path, format_trace(t), "greedy", n.value(), t.policy, seeds[i]);
    }
    if (!a.set_out.empty()) {
      const auto path = many ? tagged_path(a.set_out, tag) : a.set_out;
      s.emit(path, format_point_set(t.result), "greedy", n.value(), t.policy,
             seeds[i]);
    }
    s.line(many ? "seed=" + tag + " size=" + std::to_string(t.result.size())
                : "size=" + std::to_string(t.result.size()));
    runs.push_back({{"policy", t.policy},
                    {"seed", seeds[i] ? json(*seeds[i]) : json(nullptr)},
                    {"size", t.result.size()},
                    {"steps", t.steps.size()},
                    {"verified", static_cast<bool>(check)}});
  }
  s.report = {{"command", "greedy"}, {"n", n.value()}, {"runs", runs}};
  return code;
}

// verify ---------------------------------------------------------------

int cmd_verify(Session& s, const std::string& set_path, const std::string& check,
               const std::string& certificate_path) {
  const PointSet set = load_point_set(s, set_path);
  const Dimension n = set.dimension();
  s.report = {{"command", "verify"},
              {"check", check},
              {"n", n.value()},
              {"size", set.size()}};

  if (check == "capset") {
    const auto line = find_line(set);
    s.report["pass"] = !line.has_value();
    if (line) {
      const std::vector<Point> pts(line->points.begin(), line->points.end());
      s.report["line"] = point_list(n, pts);
      s.line("capset: fail, line " + join_points(n, pts));
      return kVerificationFailed;
    }
    s.line("capset: pass (" + std::to_string(set.size()) + " points)");
    return kOk;
  }

  if (check == "greedy-structure") {
    if (!certificate_path.empty()) {
      StructureCertificate cert;
      try {
        cert = parse_certificate(n, s.load(certificate_path));
      } catch (const ParseError& e) {
        throw InputError(certificate_path + ": " + e.what());
      }
      const bool ok = check_certificate(set, cert);
      s.report["pass"] = ok;
      s.report["certificate"] = serialize(cert);
      s.line(std::string("greedy-structure: ") +
             (ok ? "pass, certificate accepted" : "fail, certificate rejected"));
      return ok ? kOk : kVerificationFailed;
    }
    const StructureResult result = verify_greedy_structure(set);
    s.report["pass"] = static_cast<bool>(result);
    if (!result) {
      s.report["failed_level"] = result.failed_level;
      s.report["diagnostic"] = result.diagnostic;
      s.line("greedy-structure: fail");
      s.line(result.diagnostic);
      return kVerificationFailed;
    }
    const auto& cert = *result.certificate;
    s.report["top_h0"] = cert.avoided->equation();
    s.report["certificate"] = serialize(cert);
    s.line("greedy-structure: pass");
    s.line("top H0: " + cert.avoided->equation());
    s.line("certificate: " + serialize(cert));
    return kOk;
  }

  if (check == "complete") {
    if (!is_capset(set)) {
      s.report["pass"] = false;
      s.report["diagnostic"] = "not a capset";
      s.line("complete: fail, input is not a capset");
      return kVerificationFailed;
    }
    const auto report = is_complete(set);
    s.report["pass"] = report.complete;
    s.report["extendable"] = point_list(n, report.extendable);
    if (!report.complete) {
      s.line("complete: fail, extendable " + join_points(n, report.extendable));
      return kVerificationFailed;
    }
    s.line("complete: pass");
    return kOk;
  }
  throw InputError("unknown check '" + check + "'");
}

// extend ---------------------------------------------------------------

int cmd_extend(Session& s, const std::string& set_path, const std::string& mode,
               const std::string& out_path, int max_dim, std::size_t limit) {
  const PointSet set = load_point_set(s, set_path);
  const Dimension n = set.dimension();
  if (!is_capset(set)) throw InputError(set_path + ": input is not a capset");

  CompletionMode m = CompletionMode::kGreedyAdd;
  if (mode == "exhaustive") m = CompletionMode::kExhaustiveMax;
  if (mode == "all") m = CompletionMode::kAllMaximal;

  const bool already = is_complete(set).complete;
  const CompletionResult result =
      complete_capset(set, m, CompletionOptions{max_dim, limit});

  json sizes = json::array();
  for (const auto& c : result.completions) sizes.push_back(c.size());
  s.report = {{"command", "extend"},   {"mode", mode},
              {"n", n.value()},        {"input_size", set.size()},
              {"already_complete", already},
              {"completions", result.completions.size()},
              {"sizes", sizes},        {"truncated", result.truncated}};

  if (already) s.line("already complete");
  if (m == CompletionMode::kAllMaximal) {
    s.line("completions=" + std::to_string(result.completions.size()) +
           (result.truncated ? " (truncated)" : ""));
  }
  for (std::size_t i = 0; i < result.completions.size(); ++i) {
    const auto& c = result.completions[i];
    s.line("size=" + std::to_string(c.size()));
    const std::string bytes = format_point_set(c);
    if (out_path.empty()) {
      s.line(bytes.substr(0, bytes.size() - 1));
    } else {
      const bool many = m == CompletionMode::kAllMaximal;
      const auto path = many ? tagged_path(out_path, std::to_string(i)) : out_path;
      s.emit(path, bytes, "extend", n.value(), mode, std::nullopt);
    }
  }
  return kOk;
}

// gen ------------------------------------------------------------------

int cmd_gen(Session& s, const std::string& example, std::optional<int> dim,
            const std::string& out_path) {
  std::optional<PointSet> set;
  if (example == "cube") {
    set = make_cube(Dimension(dim.value_or(3)));
  } else if (example == "quadric" || example == "quadric-minus-origin") {
    if (dim && *dim != 3) throw InputError(example + " lives in n = 3 only");
    set = example == "quadric" ? make_quadric() : make_quadric_minus_origin();
  } else {
    throw InputError("unknown example '" + example + "'");
  }
  const std::string bytes = format_point_set(*set);
  s.report = {{"command", "gen"},
              {"example", example},
              {"n", set->dimension().value()},
              {"size", set->size()},
              {"points", point_list(set->dimension(), set->members())}};
  if (out_path.empty()) {
    s.line(bytes.substr(0, bytes.size() - 1));
  } else {
    s.emit(out_path, bytes, "gen", set->dimension().value(), example,
           std::nullopt);
    s.line("size=" + std::to_string(set->size()));
  }
  return kOk;
}

// replay ---------------------------------------------------------------

int cmd_replay(Session& s, const std::string& trace_path) {
  GreedyTrace trace(Dimension(1));
  try {
    trace = parse_trace(s.load(trace_path));
  } catch (const ParseError& e) {
    throw InputError(trace_path + ": " + e.what());
  }
  const TraceCheck check = verify_trace(trace);
  s.report = {{"command", "replay"},
              {"n", trace.n.value()},
              {"policy", trace.policy},
              {"steps", trace.steps.size()},
              {"pass", static_cast<bool>(check)}};
  if (!check) {
    s.report["first_bad_step"] = *check.failed_step;
    s.report["diagnostic"] = check.diagnostic;
    s.line("replay: fail at " + check.diagnostic);
    return kVerificationFailed;
  }
  s.line("replay: pass (" + std::to_string(trace.steps.size()) +
         " steps, size=" + std::to_string(trace.result.size()) + ")");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Greedy capset construction and capset analysis in F_3^n",
               "capset"};
  app.set_version_flag("--version", CAPSET_VERSION);
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the report as JSON");

  GreedyArgs g;
  auto* greedy = app.add_subcommand("greedy", "Run the greedy removal procedure");
  greedy->add_option("--n", g.n, "Dimension")
      ->required()
      ->check(CLI::Range(1, kMaxDimension));
  greedy->add_option("--policy", g.policy, "Tie-break policy")
      ->check(CLI::IsMember({"lexmin", "lexmax", "first", "random"}));
  greedy->add_option("--seed", g.seed, "Seed for --policy random");
  greedy->add_option("--seeds", g.seeds, "Run random seeds A..B concurrently");
  greedy->add_option("--trace-out", g.trace_out, "Trace file");
  greedy->add_option("--set-out", g.set_out, "Capset file");

  std::string set_path, check, certificate_path;
  auto* verify = app.add_subcommand("verify", "Check a point-set file");
  verify->add_option("--set", set_path, "Point-set file")->required();
  verify->add_option("--check", check, "Property to check")
      ->required()
      ->check(CLI::IsMember({"capset", "greedy-structure", "complete"}));
  verify->add_option("--certificate", certificate_path,
                     "Check this structure certificate instead of searching");

  std::string mode = "greedy", out_path;
  int max_dim = 4;
  std::size_t limit = 100000;
  auto* extend = app.add_subcommand("extend", "Complete a capset");
  extend->add_option("--set", set_path, "Point-set file")->required();
  extend->add_option("--mode", mode, "Completion mode")
      ->check(CLI::IsMember({"greedy", "exhaustive", "all"}));
  extend->add_option("--out", out_path, "Output file");
  extend->add_option("--max-dim", max_dim, "Dimension cap for exhaustive modes");
  extend->add_option("--limit", limit, "Maximum completions in --mode all");

  std::string example;
  std::optional<int> gen_n;
  auto* gen = app.add_subcommand("gen", "Write a named example set");
  gen->add_option("--example", example, "cube | quadric | quadric-minus-origin")
      ->required();
  gen->add_option("--n", gen_n, "Dimension (cube only)")
      ->check(CLI::Range(1, kMaxDimension));
  gen->add_option("--out", out_path, "Output file");

  std::string trace_path;
  auto* replay = app.add_subcommand("replay", "Validate a greedy trace file");
  replay->add_option("--trace", trace_path, "Trace file")->required();

  for (auto* sub : {greedy, verify, extend, gen, replay}) {
    sub->add_flag("--json", as_json, "Print the report as JSON");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Session session{args, out, err};
  session.as_json = as_json;
  int code = kInternalError;
  try {
    if (*greedy) code = cmd_greedy(session, g);
    if (*verify) code = cmd_verify(session, set_path, check, certificate_path);
    if (*extend) code = cmd_extend(session, set_path, mode, out_path, max_dim, limit);
    if (*gen) code = cmd_gen(session, example, gen_n, out_path);
    if (*replay) code = cmd_replay(session, trace_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  session.flush();
  return code;
}

}  // namespace capset::cli
