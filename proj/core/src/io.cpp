#include "capset/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "capset/errors.hpp"

namespace capset {

namespace {

std::string_view trim(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Dimension parse_dimension(std::string_view s, std::size_t line) {
  int n = 0;
  if (!parse_number(s, n) || n < 1 || n > kMaxDimension) {
    throw ParseError("line " + std::to_string(line) + ": bad dimension '" +
                     std::string(s) + "'");
  }
  return Dimension(n);
}

// Line-oriented reader that tracks line numbers and skips comments/blanks.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string_view& out) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      out = trim(buffer_);
      if (!out.empty()) return true;
    }
    return false;
  }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

Dimension read_header(LineReader& reader, std::string_view body) {
  constexpr std::string_view prefix = "n=";
  if (body.substr(0, prefix.size()) != prefix) {
    throw ParseError("line " + std::to_string(reader.line()) +
                     ": expected header 'n=<dimension>'");
  }
  return parse_dimension(body.substr(prefix.size()), reader.line());
}

PointSet read_points(LineReader& reader, Dimension n) {
  PointSet s(n);
  std::string_view body;
  while (reader.next(body)) {
    Point p;
    try {
      p = parse_base3(n, body);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(reader.line()) + ": " + e.what());
    }
    if (!s.insert(p)) {
      throw ParseError("line " + std::to_string(reader.line()) +
                       ": duplicate point " + std::string(body));
    }
  }
  return s;
}

}  // namespace

void write_point_set(std::ostream& out, const PointSet& s) {
  out << "n=" << s.dimension().value() << '\n';
  for (Point p : s.members()) out << to_base3(s.dimension(), p) << '\n';
}

std::string format_point_set(const PointSet& s) {
  std::ostringstream out;
  write_point_set(out, s);
  return out.str();
}

PointSet read_point_set(std::istream& in) {
  LineReader reader(in);
  std::string_view body;
  if (!reader.next(body)) throw ParseError("empty point-set file");
  const Dimension n = read_header(reader, body);
  return read_points(reader, n);
}

PointSet parse_point_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_point_set(in);
}

void write_trace(std::ostream& out, const GreedyTrace& trace) {
  out << "n=" << trace.n.value() << " policy=" << trace.policy << '\n';
  for (const auto& step : trace.steps) {
    out << to_base3(trace.n, step.removed) << ' ' << step.count << ' '
        << step.num_tied << '\n';
  }
  out << "RESULT\n";
  write_point_set(out, trace.result);
}

std::string format_trace(const GreedyTrace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

GreedyTrace read_trace(std::istream& in) {
  LineReader reader(in);
  std::string_view body;
  if (!reader.next(body)) throw ParseError("empty trace file");

  const auto space = body.find(' ');
  const std::string_view head = body.substr(0, space);
  if (head.substr(0, 2) != "n=") {
    throw ParseError("line 1: expected 'n=<dimension> policy=<desc>'");
  }
  GreedyTrace trace(parse_dimension(head.substr(2), reader.line()));
  if (space != std::string_view::npos) {
    std::string_view rest = body.substr(space + 1);
    if (rest.substr(0, 7) != "policy=") {
      throw ParseError("line 1: expected 'policy=<desc>'");
    }
    trace.policy = std::string(rest.substr(7));
  } else {
    throw ParseError("line 1: missing 'policy=<desc>'");
  }

  bool saw_result = false;
  while (reader.next(body)) {
    if (body == "RESULT") {
      saw_result = true;
      break;
    }
    const std::string where = "line " + std::to_string(reader.line()) + ": ";
    const auto a = body.find(' ');
    const auto b = a == std::string_view::npos ? a : body.find(' ', a + 1);
    if (b == std::string_view::npos) {
      throw ParseError(where + "expected '<point> <count> <ties>'");
    }
    GreedyStep step;
    try {
      step.removed = parse_base3(trace.n, body.substr(0, a));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    if (!parse_number(body.substr(a + 1, b - a - 1), step.count) ||
        !parse_number(body.substr(b + 1), step.num_tied)) {
      throw ParseError(where + "bad count or tie field");
    }
    trace.steps.push_back(step);
  }
  if (!saw_result) throw ParseError("trace is truncated: no RESULT section");

  if (!reader.next(body)) throw ParseError("trace is truncated: empty RESULT");
  const Dimension n = read_header(reader, body);
  if (!(n == trace.n)) {
    throw ParseError("RESULT dimension differs from the trace header");
  }
  trace.result = read_points(reader, n);
  return trace;
}

GreedyTrace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_trace(in);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace capset
