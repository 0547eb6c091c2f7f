#pragma once

// Points, lines and hyperplanes of the affine space F_3^n.
//
// A point is stored as its little-endian base-3 index: coordinate x_i is the
// i-th trit (least significant first). All arithmetic is done on indices
// through a shared 6-trit lookup table, so the hot path never decodes.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capset {

inline constexpr int kMaxDimension = 12;

using Trits = std::vector<std::uint8_t>;

// Ambient dimension n, 1 <= n <= kMaxDimension.
class Dimension {
 public:
  Dimension() : Dimension(1) {}
  explicit Dimension(int n);

  int value() const { return n_; }
  std::uint32_t num_points() const { return num_points_; }
  // (3^n - 1) / 2
  std::uint32_t lines_per_point() const { return (num_points_ - 1) / 2; }
  // 3^n (3^n - 1) / 6
  std::uint64_t num_lines() const;
  // 3 (3^n - 1) / 2
  std::uint64_t num_hyperplanes() const;

  friend bool operator==(Dimension a, Dimension b) { return a.n_ == b.n_; }

 private:
  int n_;
  std::uint32_t num_points_;
};

std::uint32_t pow3(int k);

struct Point {
  std::uint32_t index = 0;

  friend auto operator<=>(Point, Point) = default;
};

Point encode(Dimension n, std::span<const std::uint8_t> coords);
Trits decode(Dimension n, Point p);
// Coordinate x_{i+1} (zero-based i).
std::uint8_t coordinate(Point p, int i);
bool in_range(Dimension n, Point p);

namespace detail {

inline constexpr std::uint32_t kBlockTrits = 6;
inline constexpr std::uint32_t kBlockSize = 729;  // 3^6

// neg_sum_table()[a * 729 + b] = -(a + b) digit-wise for 6-trit blocks.
const std::uint16_t* neg_sum_table();

}  // namespace detail

// -(p + q) coordinate-wise. Total: for p == q this is p itself.
inline Point negated_sum(Point p, Point q) {
  const std::uint16_t* t = detail::neg_sum_table();
  constexpr std::uint32_t B = detail::kBlockSize;
  const std::uint32_t lo = t[(p.index % B) * B + q.index % B];
  const std::uint32_t hi = t[(p.index / B) * B + q.index / B];
  return Point{lo + B * hi};
}

// The third point of the line through p and q. Throws std::invalid_argument
// when p == q.
Point third_point(Point p, Point q);

Point add(Point p, Point q);
Point negate(Point p);
Point subtract(Point p, Point q);

// Calls f(q, r) for every q != p in [0, 3^n), where r = third_point(p, q).
// Each line through p is therefore visited twice, once per ordering.
template <class F>
void for_each_partner(Dimension n, Point p, F&& f) {
  const std::uint16_t* t = detail::neg_sum_table();
  constexpr std::uint32_t B = detail::kBlockSize;
  const std::uint32_t total = n.num_points();
  const std::uint16_t* row_lo = t + (p.index % B) * B;
  const std::uint16_t* row_hi = t + (p.index / B) * B;
  for (std::uint32_t hq = 0; hq * B < total; ++hq) {
    const std::uint32_t base = B * row_hi[hq];
    const std::uint32_t offset = hq * B;
    const std::uint32_t width = std::min(B, total - offset);
    for (std::uint32_t lq = 0; lq < width; ++lq) {
      const std::uint32_t q = offset + lq;
      if (q == p.index) continue;
      f(Point{q}, Point{base + row_lo[lq]});
    }
  }
}

// Canonical line: the three points sorted by index.
struct Line {
  std::array<Point, 3> points;

  static Line through(Point p, Point q);
  bool contains(Point p) const;

  friend auto operator<=>(const Line&, const Line&) = default;
};

inline constexpr std::size_t kDefaultLineCap = 10'000'000;

std::vector<Line> lines_through(Dimension n, Point p);
// Streams every canonical line once, in ascending order.
void for_each_line(Dimension n, const std::function<void(const Line&)>& f);
// Materialized version; throws CapExceeded when the count exceeds max_lines.
std::vector<Line> all_lines(Dimension n,
                            std::size_t max_lines = kDefaultLineCap);

// {x : sum a_i x_i + b = 0}, stored with the first nonzero a_i equal to 1.
class Hyperplane {
 public:
  // Scales (normal, constant) into canonical form. Throws
  // std::invalid_argument on a zero normal or a length mismatch.
  Hyperplane(Dimension n, Trits normal, int constant);

  Dimension dimension() const { return n_; }
  const Trits& normal() const { return normal_; }
  std::uint8_t constant() const { return constant_; }
  // Zero-based index of the first nonzero normal coordinate.
  int pivot() const;

  // sum a_i x_i mod 3
  std::uint8_t evaluate(Point p) const;
  bool contains(Point p) const { return (evaluate(p) + constant_) % 3 == 0; }
  std::vector<Point> points() const;

  // Same normal, constant + shift.
  Hyperplane shifted(int shift) const;

  // "x_1 + 2x_3 = 1"
  std::string equation() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  Dimension n_;
  Trits normal_;
  std::uint8_t constant_;
};

// Hyperplanes in canonical order: normals ascending by their base-3 string
// (x_1 written first, most significant), then constant 0, 1, 2.
std::vector<Hyperplane> enumerate_hyperplanes(Dimension n);

// {H, H+1, H+2}: the parallel class of H, H first.
std::array<Hyperplane, 3> parallel_class(const Hyperplane& h);

// Affine chart of a hyperplane onto F_3^{n-1}: delete the pivot coordinate.
// The chart index is a bare base-3 index in dimension n - 1 (which may be 0).
Point to_chart(const Hyperplane& h, Point x);
// Inverse of to_chart: the unique point of h with the given other coordinates.
Point from_chart(const Hyperplane& h, Point y);

// Point strings: n characters from {0,1,2}, leftmost = x_1.
std::string to_base3(Dimension n, Point p);
// Throws ParseError.
Point parse_base3(Dimension n, std::string_view text);
std::string trits_to_string(const Trits& t);

}  // namespace capset

template <>
struct std::hash<capset::Point> {
  std::size_t operator()(capset::Point p) const noexcept { return p.index; }
};
