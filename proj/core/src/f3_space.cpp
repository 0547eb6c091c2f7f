#include "capset/f3_space.hpp"

#include <memory>
#include <stdexcept>

#include "capset/errors.hpp"

namespace capset {

namespace {

std::unique_ptr<std::uint16_t[]> build_neg_sum_table() {
  constexpr std::uint32_t B = detail::kBlockSize;
  auto table = std::make_unique<std::uint16_t[]>(B * B);
  for (std::uint32_t a = 0; a < B; ++a) {
    for (std::uint32_t b = 0; b < B; ++b) {
      std::uint32_t x = a, y = b, out = 0, place = 1;
      for (std::uint32_t i = 0; i < detail::kBlockTrits; ++i) {
        const std::uint32_t s = (x % 3 + y % 3) % 3;
        out += ((3 - s) % 3) * place;
        x /= 3;
        y /= 3;
        place *= 3;
      }
      table[a * B + b] = static_cast<std::uint16_t>(out);
    }
  }
  return table;
}

}  // namespace

namespace detail {

const std::uint16_t* neg_sum_table() {
  static const std::unique_ptr<std::uint16_t[]> table = build_neg_sum_table();
  return table.get();
}

}  // namespace detail

std::uint32_t pow3(int k) {
  std::uint32_t r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

Dimension::Dimension(int n) : n_(n), num_points_(0) {
  if (n < 1 || n > kMaxDimension) {
    throw std::out_of_range("dimension " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxDimension) +
                            "]");
  }
  num_points_ = pow3(n);
}

std::uint64_t Dimension::num_lines() const {
  const std::uint64_t q = num_points_;
  return q * (q - 1) / 6;
}

std::uint64_t Dimension::num_hyperplanes() const {
  return 3ull * (num_points_ - 1) / 2;
}

Point encode(Dimension n, std::span<const std::uint8_t> coords) {
  if (coords.size() != static_cast<std::size_t>(n.value())) {
    throw std::invalid_argument("expected " + std::to_string(n.value()) +
                                " coordinates, got " +
                                std::to_string(coords.size()));
  }
  std::uint32_t index = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] > 2) {
      throw std::invalid_argument("coordinate " + std::to_string(i) +
                                  " is not in {0,1,2}");
    }
    index = index * 3 + coords[i];
  }
  return Point{index};
}

Trits decode(Dimension n, Point p) {
  Trits t(static_cast<std::size_t>(n.value()));
  std::uint32_t x = p.index;
  for (auto& d : t) {
    d = static_cast<std::uint8_t>(x % 3);
    x /= 3;
  }
  return t;
}

std::uint8_t coordinate(Point p, int i) {
  return static_cast<std::uint8_t>(p.index / pow3(i) % 3);
}

bool in_range(Dimension n, Point p) { return p.index < n.num_points(); }

Point third_point(Point p, Point q) {
  if (p == q) {
    throw std::invalid_argument("third_point: points must be distinct");
  }
  return negated_sum(p, q);
}

Point negate(Point p) { return negated_sum(p, Point{0}); }
Point add(Point p, Point q) { return negate(negated_sum(p, q)); }
Point subtract(Point p, Point q) { return add(p, negate(q)); }

Line Line::through(Point p, Point q) {
  Line l{{p, q, third_point(p, q)}};
  std::sort(l.points.begin(), l.points.end());
  return l;
}

bool Line::contains(Point p) const {
  return points[0] == p || points[1] == p || points[2] == p;
}

std::vector<Line> lines_through(Dimension n, Point p) {
  if (!in_range(n, p)) throw std::out_of_range("point outside F_3^n");
  std::vector<Line> out;
  out.reserve(n.lines_per_point());
  for_each_partner(n, p, [&](Point q, Point r) {
    if (q < r) {
      Line l{{p, q, r}};
      std::sort(l.points.begin(), l.points.end());
      out.push_back(l);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_line(Dimension n, const std::function<void(const Line&)>& f) {
  // A line {p < q < r} is emitted from its smallest point p.
  for (std::uint32_t p = 0; p < n.num_points(); ++p) {
    for (std::uint32_t q = p + 1; q < n.num_points(); ++q) {
      const Point r = negated_sum(Point{p}, Point{q});
      if (r.index > q) f(Line{{Point{p}, Point{q}, r}});
    }
  }
}

std::vector<Line> all_lines(Dimension n, std::size_t max_lines) {
  if (n.num_lines() > max_lines) {
    throw CapExceeded("all_lines: " + std::to_string(n.num_lines()) +
                      " lines exceed cap " + std::to_string(max_lines) +
                      "; use for_each_line");
  }
  std::vector<Line> out;
  out.reserve(n.num_lines());
  for_each_line(n, [&](const Line& l) { out.push_back(l); });
  return out;
}

Hyperplane::Hyperplane(Dimension n, Trits normal, int constant)
    : n_(n), normal_(std::move(normal)), constant_(0) {
  if (normal_.size() != static_cast<std::size_t>(n.value())) {
    throw std::invalid_argument("hyperplane normal has wrong length");
  }
  int scale = 0;
  for (auto a : normal_) {
    if (a > 2) throw std::invalid_argument("normal coordinate not in F_3");
    if (scale == 0 && a != 0) scale = a;  // a^{-1} = a in F_3
  }
  if (scale == 0) throw std::invalid_argument("hyperplane normal is zero");
  for (auto& a : normal_) a = static_cast<std::uint8_t>(a * scale % 3);
  constant_ = static_cast<std::uint8_t>(((constant % 3 + 3) % 3) * scale % 3);
}

int Hyperplane::pivot() const {
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (normal_[i] != 0) return static_cast<int>(i);
  }
  return -1;  // unreachable for a constructed hyperplane
}

std::uint8_t Hyperplane::evaluate(Point p) const {
  std::uint32_t x = p.index, s = 0;
  for (auto a : normal_) {
    s += a * (x % 3);
    x /= 3;
  }
  return static_cast<std::uint8_t>(s % 3);
}

std::vector<Point> Hyperplane::points() const {
  std::vector<Point> out;
  out.reserve(n_.num_points() / 3);
  for (std::uint32_t i = 0; i < n_.num_points(); ++i) {
    if (contains(Point{i})) out.push_back(Point{i});
  }
  return out;
}

Hyperplane Hyperplane::shifted(int shift) const {
  return Hyperplane(n_, normal_, constant_ + shift);
}

std::string Hyperplane::equation() const {
  std::string s;
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (normal_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (normal_[i] == 2) s += '2';
    s += "x_" + std::to_string(i + 1);
  }
  s += " = " + std::to_string((3 - constant_) % 3);
  return s;
}

std::vector<Hyperplane> enumerate_hyperplanes(Dimension n) {
  const int d = n.value();
  std::vector<Hyperplane> out;
  out.reserve(n.num_hyperplanes());
  // Walking the big-endian string order: trit d-1-k of the counter is x_{k+1}.
  for (std::uint32_t v = 1; v < n.num_points(); ++v) {
    Trits normal(static_cast<std::size_t>(d));
    std::uint32_t x = v;
    for (int k = d - 1; k >= 0; --k) {
      normal[k] = static_cast<std::uint8_t>(x % 3);
      x /= 3;
    }
    const int pivot = static_cast<int>(
        std::find_if(normal.begin(), normal.end(), [](auto a) { return a; }) -
        normal.begin());
    if (normal[pivot] != 1) continue;
    for (int b = 0; b < 3; ++b) out.emplace_back(n, normal, b);
  }
  return out;
}

std::array<Hyperplane, 3> parallel_class(const Hyperplane& h) {
  return {h, h.shifted(1), h.shifted(2)};
}

std::string to_base3(Dimension n, Point p) {
  std::string s(static_cast<std::size_t>(n.value()), '0');
  std::uint32_t x = p.index;
  for (auto& c : s) {
    c = static_cast<char>('0' + x % 3);
    x /= 3;
  }
  return s;
}

Point parse_base3(Dimension n, std::string_view text) {
  if (text.size() != static_cast<std::size_t>(n.value())) {
    throw ParseError("point '" + std::string(text) + "' must have " +
                     std::to_string(n.value()) + " digits");
  }
  std::uint32_t index = 0;
  for (std::size_t i = text.size(); i-- > 0;) {
    const char c = text[i];
    if (c < '0' || c > '2') {
      throw ParseError("point '" + std::string(text) +
                       "' has a digit outside {0,1,2}");
    }
    index = index * 3 + static_cast<std::uint32_t>(c - '0');
  }
  return Point{index};
}

std::string trits_to_string(const Trits& t) {
  std::string s;
  s.reserve(t.size());
  for (auto d : t) s += static_cast<char>('0' + d);
  return s;
}

}  // namespace capset

namespace capset {

Point to_chart(const Hyperplane& h, Point x) {
  const std::uint32_t place = pow3(h.pivot());
  const std::uint32_t low = x.index % place;
  const std::uint32_t high = x.index / (place * 3);
  return Point{low + high * place};
}

Point from_chart(const Hyperplane& h, Point y) {
  const std::uint32_t place = pow3(h.pivot());
  const std::uint32_t low = y.index % place;
  const std::uint32_t high = y.index / place;
  const Point base{low + high * place * 3};
  // The pivot coefficient is 1, so x_pivot = -(b + rest).
  const std::uint32_t v = (3 - (h.evaluate(base) + h.constant()) % 3) % 3;
  return Point{base.index + v * place};
}

}  // namespace capset
