#include "capset/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "capset/errors.hpp"
#include "capset/incidence.hpp"

namespace capset {

bool is_capset(const PointSet& s) {
  const auto pts = s.members();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (s.contains(negated_sum(pts[i], pts[j]))) return false;
    }
  }
  return true;
}

int StructureCertificate::dimension() const {
  return is_leaf() ? 0 : avoided->dimension().value();
}

std::size_t StructureCertificate::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& c : children) total += c.leaf_count();
  return total;
}

namespace {

// The two hyperplanes parallel to h0, ascending by constant term.
std::array<Hyperplane, 2> other_sides(const Hyperplane& h0) {
  Hyperplane a = h0.shifted(1), b = h0.shifted(2);
  if (b.constant() < a.constant()) std::swap(a, b);
  return {a, b};
}

std::vector<Point> restrict_to(const Hyperplane& h, std::span<const Point> pts) {
  std::vector<Point> out;
  for (Point p : pts) {
    if (h.contains(p)) out.push_back(to_chart(h, p));
  }
  return out;
}

// `pts` are distinct indices in dimension d (d == 0 means the single point 0).
bool certify(int d, std::span<const Point> pts, int depth,
             StructureCertificate& out, StructureResult& result) {
  if (d == 0) {
    if (pts.size() == 1) return true;
    result.failed_level = depth;
    result.diagnostic = "level " + std::to_string(depth) +
                        ": a 0-dimensional box holds " +
                        std::to_string(pts.size()) + " points instead of 1";
    return false;
  }
  const std::size_t expected = std::size_t{1} << d;
  if (pts.size() != expected) {
    result.failed_level = depth;
    result.diagnostic = "level " + std::to_string(depth) + ": box of dimension " +
                        std::to_string(d) + " holds " +
                        std::to_string(pts.size()) + " points, a greedy capset has " +
                        std::to_string(expected);
    return false;
  }

  const Dimension dim(d);
  const auto hyperplanes = enumerate_hyperplanes(dim);
  for (std::size_t i = 0; i < hyperplanes.size(); i += 3) {
    const Hyperplane& h = hyperplanes[i];
    unsigned seen = 0;
    for (Point p : pts) {
      seen |= 1u << h.evaluate(p);
      if (seen == 7u) break;
    }
    if (seen == 7u) continue;
    for (int b = 0; b < 3; ++b) {
      // a.x + b = 0 is avoided iff the value -b never occurs.
      if (seen & (1u << ((3 - b) % 3))) continue;
      const Hyperplane h0 = h.shifted(b);
      const auto sides = other_sides(h0);
      StructureCertificate node;
      node.avoided = h0;
      node.children.resize(2);
      StructureResult scratch;
      bool ok = true;
      for (int side = 0; side < 2 && ok; ++side) {
        const auto inner = restrict_to(sides[side], pts);
        ok = certify(d - 1, inner, depth + 1, node.children[side], scratch);
      }
      if (ok) {
        out = std::move(node);
        return true;
      }
      if (scratch.failed_level > result.failed_level) {
        result.failed_level = scratch.failed_level;
        result.diagnostic = scratch.diagnostic;
      }
    }
  }
  if (result.failed_level < depth) {
    result.failed_level = depth;
    result.diagnostic = "level " + std::to_string(depth) +
                        ": no avoided hyperplane in the box of dimension " +
                        std::to_string(d);
  }
  return false;
}

bool check_node(int d, std::span<const Point> pts,
                const StructureCertificate& cert) {
  if (cert.is_leaf()) return d == 0 && pts.size() == 1;
  if (d == 0 || cert.dimension() != d || cert.children.size() != 2) {
    return false;
  }
  const Hyperplane& h0 = *cert.avoided;
  if (std::any_of(pts.begin(), pts.end(),
                  [&](Point p) { return h0.contains(p); })) {
    return false;
  }
  const auto sides = other_sides(h0);
  for (int side = 0; side < 2; ++side) {
    if (!check_node(d - 1, restrict_to(sides[side], pts), cert.children[side])) {
      return false;
    }
  }
  return true;
}

std::vector<Point> materialize_node(const StructureCertificate& cert) {
  if (cert.is_leaf()) return {Point{0}};
  const auto sides = other_sides(*cert.avoided);
  std::vector<Point> out;
  for (int side = 0; side < 2; ++side) {
    for (Point y : materialize_node(cert.children.at(side))) {
      out.push_back(from_chart(sides[side], y));
    }
  }
  return out;
}

StructureCertificate random_node(int d, Xorshift64Star& rng) {
  StructureCertificate node;
  if (d == 0) return node;
  const Dimension dim(d);
  const auto hyperplanes = enumerate_hyperplanes(dim);
  node.avoided = hyperplanes[rng.uniform(hyperplanes.size())];
  node.children.push_back(random_node(d - 1, rng));
  node.children.push_back(random_node(d - 1, rng));
  return node;
}

}  // namespace

StructureResult verify_greedy_structure(const PointSet& c) {
  StructureResult result;
  StructureCertificate cert;
  const auto pts = c.members();
  if (certify(c.dimension().value(), pts, 0, cert, result)) {
    result.certificate = std::move(cert);
    result.failed_level = -1;
    result.diagnostic = "ok";
  }
  return result;
}

bool check_certificate(const PointSet& c, const StructureCertificate& cert) {
  const auto pts = c.members();
  return check_node(c.dimension().value(), pts, cert);
}

PointSet materialize(Dimension n, const StructureCertificate& cert) {
  if (cert.dimension() != n.value()) {
    throw std::invalid_argument("certificate dimension does not match");
  }
  const auto pts = materialize_node(cert);
  return PointSet(n, pts);
}

StructureCertificate random_certificate(Dimension n, Xorshift64Star& rng) {
  return random_node(n.value(), rng);
}

GreedyTrace greedy_trace_for(Dimension n, const StructureCertificate& cert) {
  if (cert.dimension() != n.value()) {
    throw std::invalid_argument("certificate dimension does not match");
  }
  // Flatten the certificate: each inner node becomes a box with a removal
  // quota of 3^{d-1} (its avoided hyperplane).
  struct Box {
    int parent;
    std::uint32_t quota;
    std::uint32_t removed = 0;
  };
  std::vector<Box> boxes;
  std::vector<const StructureCertificate*> nodes;
  auto flatten = [&](auto&& self, const StructureCertificate& node,
                     int parent) -> void {
    if (node.is_leaf()) return;
    const int id = static_cast<int>(boxes.size());
    boxes.push_back({parent, pow3(node.dimension() - 1)});
    nodes.push_back(&node);
    for (const auto& child : node.children) self(self, child, id);
  };
  flatten(flatten, cert, -1);

  // Owning box of each point outside the capset, -1 for capset points.
  std::vector<int> owner(n.num_points(), -1);
  std::vector<int> child_index(boxes.size() * 2, -1);
  for (std::size_t id = 0; id < boxes.size(); ++id) {
    if (boxes[id].parent < 0) continue;
    const auto* parent = nodes[boxes[id].parent];
    const int side = &parent->children[0] == nodes[id] ? 0 : 1;
    child_index[boxes[id].parent * 2 + side] = static_cast<int>(id);
  }
  for (std::uint32_t x = 0; x < n.num_points(); ++x) {
    int id = 0;
    Point y{x};
    while (id >= 0) {
      const Hyperplane& h0 = *nodes[id]->avoided;
      if (h0.contains(y)) {
        owner[x] = id;
        break;
      }
      const auto sides = other_sides(h0);
      const int side = sides[0].contains(y) ? 0 : 1;
      y = to_chart(sides[side], y);
      id = child_index[id * 2 + side];
    }
  }

  auto ready = [&](int id) {
    for (int a = boxes[id].parent; a >= 0; a = boxes[a].parent) {
      if (boxes[a].removed < boxes[a].quota) return false;
    }
    return true;
  };

  GreedyTrace trace(n);
  trace.policy = "certificate";
  IncidenceState state(n);
  std::vector<Point> candidates;
  for (;;) {
    const std::uint32_t best = state.max_count_points(candidates);
    if (best == 0) break;
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](Point p) {
      return owner[p.index] >= 0 && ready(owner[p.index]);
    });
    if (it == candidates.end()) {
      throw std::logic_error(
          "greedy_trace_for: no maximal candidate inside an active hyperplane");
    }
    const Point p = *it;
    trace.steps.push_back(
        {p, best, static_cast<std::uint32_t>(candidates.size())});
    state.remove(p);
    ++boxes[owner[p.index]].removed;
  }
  trace.result = state.alive();
  return trace;
}

std::string serialize(const StructureCertificate& cert) {
  if (cert.is_leaf()) return "*";
  const Hyperplane& h = *cert.avoided;
  std::string s = "H0=" + trits_to_string(h.normal()) + ":" +
                  std::to_string(h.constant()) + " [ ";
  s += serialize(cert.children.at(0));
  s += " | ";
  s += serialize(cert.children.at(1));
  s += " ]";
  return s;
}

namespace {

class CertificateParser {
 public:
  explicit CertificateParser(std::string_view text) : text_(text) {}

  StructureCertificate parse(int d) {
    StructureCertificate node = parse_node(d);
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("certificate, offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  StructureCertificate parse_node(int d) {
    skip_space();
    StructureCertificate node;
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      if (d != 0) fail("leaf at dimension " + std::to_string(d));
      return node;
    }
    if (d == 0) fail("expected leaf '*'");
    if (text_.substr(pos_, 3) != "H0=") fail("expected 'H0='");
    pos_ += 3;
    Trits normal;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '2') {
      normal.push_back(static_cast<std::uint8_t>(text_[pos_++] - '0'));
    }
    if (normal.size() != static_cast<std::size_t>(d)) {
      fail("normal must have " + std::to_string(d) + " digits");
    }
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':'");
    ++pos_;
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '2') {
      fail("expected constant in {0,1,2}");
    }
    const int b = text_[pos_++] - '0';
    if (std::all_of(normal.begin(), normal.end(), [](auto a) { return a == 0; })) {
      fail("zero normal");
    }
    Hyperplane h(Dimension(d), normal, b);
    if (h.normal() != normal) fail("normal is not in canonical scaling");
    node.avoided = h;
    expect('[');
    node.children.push_back(parse_node(d - 1));
    expect('|');
    node.children.push_back(parse_node(d - 1));
    expect(']');
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StructureCertificate parse_certificate(Dimension n, std::string_view text) {
  return CertificateParser(text).parse(n.value());
}

CompletenessReport is_complete(const PointSet& c) {
  if (!is_capset(c)) {
    throw std::invalid_argument("is_complete: input is not a capset");
  }
  const Dimension n = c.dimension();
  std::vector<std::uint8_t> blocked(n.num_points(), 0);
  const auto pts = c.members();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      blocked[negated_sum(pts[i], pts[j]).index] = 1;
    }
  }
  CompletenessReport report;
  for (std::uint32_t x = 0; x < n.num_points(); ++x) {
    if (!c.contains(Point{x}) && !blocked[x]) {
      report.extendable.push_back(Point{x});
    }
  }
  report.complete = report.extendable.empty();
  return report;
}

PointSet make_cube(Dimension n) {
  PointSet s(n);
  for (std::uint32_t x = 0; x < n.num_points(); ++x) {
    const Trits t = decode(n, Point{x});
    if (std::none_of(t.begin(), t.end(), [](auto v) { return v == 2; })) {
      s.insert(Point{x});
    }
  }
  return s;
}

PointSet make_quadric() {
  const Dimension n(3);
  PointSet s(n);
  for (std::uint8_t x = 0; x < 3; ++x) {
    for (std::uint8_t y = 0; y < 3; ++y) {
      const std::uint8_t z = static_cast<std::uint8_t>((x * x + y * y) % 3);
      const std::uint8_t coords[] = {x, y, z};
      s.insert(encode(n, coords));
    }
  }
  return s;
}

PointSet make_quadric_minus_origin() {
  PointSet s = make_quadric();
  s.erase(Point{0});
  return s;
}

std::pair<Point, Point> blocking_pair(Dimension n, Point r) {
  if (!in_range(n, r)) throw std::out_of_range("point outside F_3^n");
  Trits p = decode(n, r), q = p;
  bool has_two = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 2) {
      p[i] = 0;
      q[i] = 1;
      has_two = true;
    }
  }
  if (!has_two) {
    throw std::invalid_argument("blocking_pair: point lies in {0,1}^n");
  }
  return {encode(n, p), encode(n, q)};
}

}  // namespace capset
