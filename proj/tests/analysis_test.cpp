#include <gtest/gtest.h>

#include <random>

#include "capset/analysis.hpp"
#include "capset/errors.hpp"
#include "oracles.hpp"

namespace capset {
namespace {

Point pt(Dimension n, std::initializer_list<std::uint8_t> coords) {
  return encode(n, Trits(coords));
}

std::vector<std::uint32_t> indices(const PointSet& s) {
  std::vector<std::uint32_t> out;
  for (Point p : s.members()) out.push_back(p.index);
  return out;
}

TEST(IsCapset, Examples) {
  EXPECT_TRUE(is_capset(make_quadric()));
  EXPECT_FALSE(is_capset(PointSet::full(Dimension(1))));
  EXPECT_TRUE(is_capset(PointSet(Dimension(2))));
  EXPECT_TRUE(is_capset(PointSet(Dimension(2), {Point{4}})));
}

TEST(IsCapset, AgreesWithTripleOracle) {
  std::mt19937 rng(8);
  for (int d = 1; d <= 4; ++d) {
    const Dimension n(d);
    std::uniform_int_distribution<std::uint32_t> pick(0, n.num_points() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      PointSet s(n);
      const int k = static_cast<int>(pick(rng) % (2 * d + 4));
      for (int i = 0; i < k; ++i) s.insert(Point{pick(rng)});
      EXPECT_EQ(is_capset(s), oracle::is_capset(d, indices(s)));
    }
  }
}

TEST(Examples, Cube) {
  EXPECT_EQ(make_cube(Dimension(1)), PointSet(Dimension(1), {Point{0}, Point{1}}));
  const Dimension n(2);
  EXPECT_EQ(make_cube(n), PointSet(n, {pt(n, {0, 0}), pt(n, {1, 0}),
                                       pt(n, {0, 1}), pt(n, {1, 1})}));
  EXPECT_EQ(make_cube(Dimension(3)).size(), 8u);
  EXPECT_TRUE(verify_greedy_structure(make_cube(Dimension(3))));
}

TEST(Examples, Quadric) {
  const PointSet q = make_quadric();
  EXPECT_EQ(q.size(), 9u);
  EXPECT_TRUE(q.contains(Point{0}));
  EXPECT_TRUE(q.contains(pt(Dimension(3), {1, 1, 2})));
  EXPECT_FALSE(make_quadric_minus_origin().contains(Point{0}));
  EXPECT_EQ(make_quadric_minus_origin().size(), 8u);
}

TEST(Structure, CubeAvoidsLastCoordinateEqualsTwo) {
  for (int d = 1; d <= 5; ++d) {
    const auto r = verify_greedy_structure(make_cube(Dimension(d)));
    ASSERT_TRUE(r) << r.diagnostic;
    EXPECT_EQ(r.certificate->avoided->equation(),
              "x_" + std::to_string(d) + " = 2");
    EXPECT_EQ(r.certificate->leaf_count(), std::size_t{1} << d);
    EXPECT_EQ(r.certificate->dimension(), d);
  }
}

TEST(Structure, QuadricMinusOriginAvoidsZEqualsZero) {
  const auto r = verify_greedy_structure(make_quadric_minus_origin());
  ASSERT_TRUE(r);
  EXPECT_EQ(r.certificate->avoided->equation(), "x_3 = 0");
}

TEST(Structure, FullQuadricFails) {
  const auto r = verify_greedy_structure(make_quadric());
  EXPECT_FALSE(r);
  EXPECT_EQ(r.failed_level, 0);
  EXPECT_NE(r.diagnostic.find("9 points"), std::string::npos);
}

TEST(Structure, NonGreedyCapsetOfRightSizeFails) {
  // A 16-point capset in F_3^4 that meets every hyperplane.
  const Dimension n(4);
  const std::vector<std::string> text = {
      "0000",
      "0002",
      "0012",
      "0020",
      "0111",
      "0122",
      "0200",
      "0201",
      "1011",
      "1112",
      "1211",
      "2012",
      "2100",
      "2101",
      "2112",
      "2210"};
  PointSet s(n);
  for (const auto& t : text) s.insert(parse_base3(n, t));
  ASSERT_EQ(s.size(), 16u);
  ASSERT_TRUE(oracle::is_capset(4, indices(s)));
  for (const auto& h : oracle::hyperplane_sets(4)) {
    bool meets = false;
    for (auto x : h) meets |= s.contains(Point{x});
    ASSERT_TRUE(meets);
  }
  const auto r = verify_greedy_structure(s);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.failed_level, 0);
}

TEST(Structure, CertificateRoundTrip) {
  const auto r = verify_greedy_structure(make_cube(Dimension(3)));
  ASSERT_TRUE(r);
  const std::string text = serialize(*r.certificate);
  EXPECT_EQ(text,
            "H0=001:1 [ H0=01:1 [ H0=1:1 [ * | * ] | H0=1:1 [ * | * ] ] | "
            "H0=01:1 [ H0=1:1 [ * | * ] | H0=1:1 [ * | * ] ] ]");
  EXPECT_EQ(parse_certificate(Dimension(3), text), *r.certificate);
  EXPECT_TRUE(check_certificate(make_cube(Dimension(3)), *r.certificate));
  EXPECT_FALSE(check_certificate(make_quadric_minus_origin(), *r.certificate));
  EXPECT_EQ(materialize(Dimension(3), *r.certificate), make_cube(Dimension(3)));
}

TEST(Structure, CertificateParseErrors) {
  const Dimension n(1);
  EXPECT_THROW(parse_certificate(n, "H0=1:1 [ * | * "), ParseError);
  EXPECT_THROW(parse_certificate(n, "H0=2:1 [ * | * ]"), ParseError);
  EXPECT_THROW(parse_certificate(n, "H0=0:1 [ * | * ]"), ParseError);
  EXPECT_THROW(parse_certificate(n, "H0=11:1 [ * | * ]"), ParseError);
  EXPECT_THROW(parse_certificate(n, "*"), ParseError);
  EXPECT_THROW(parse_certificate(n, "H0=1:1 [ * | * ] x"), ParseError);
  EXPECT_NO_THROW(parse_certificate(n, "  H0=1:1[*|*]  "));
}

TEST(Structure, RandomCertificatesGiveGreedyCapsets) {
  Xorshift64Star rng(77);
  for (int d = 1; d <= 5; ++d) {
    const Dimension n(d);
    for (int trial = 0; trial < 20; ++trial) {
      const auto cert = random_certificate(n, rng);
      EXPECT_EQ(cert.leaf_count(), std::size_t{1} << d);
      const PointSet c = materialize(n, cert);
      EXPECT_EQ(c.size(), std::size_t{1} << d);
      EXPECT_TRUE(is_capset(c));
      EXPECT_TRUE(check_certificate(c, cert));
      EXPECT_TRUE(verify_greedy_structure(c));

      const GreedyTrace t = greedy_trace_for(n, cert);
      EXPECT_EQ(t.result, c);
      const auto check = verify_trace(t);
      EXPECT_TRUE(check) << check.diagnostic;
    }
  }
}

TEST(Completeness, Cube) {
  for (int d = 1; d <= 5; ++d) {
    const auto r = is_complete(make_cube(Dimension(d)));
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(r.extendable.empty());
  }
}

TEST(Completeness, QuadricMinusOrigin) {
  const auto r = is_complete(make_quadric_minus_origin());
  EXPECT_FALSE(r.complete);
  EXPECT_NE(std::find(r.extendable.begin(), r.extendable.end(), Point{0}),
            r.extendable.end());
}

TEST(Completeness, SinglePointOnLine) {
  const auto r = is_complete(PointSet(Dimension(1), {Point{0}}));
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.extendable, (std::vector<Point>{Point{1}, Point{2}}));
}

TEST(Completeness, RejectsNonCapset) {
  EXPECT_THROW(is_complete(PointSet::full(Dimension(1))), std::invalid_argument);
}

TEST(BlockingPair, Examples) {
  EXPECT_EQ(blocking_pair(Dimension(1), Point{2}),
            (std::pair{Point{0}, Point{1}}));
  const Dimension n2(2);
  EXPECT_EQ(blocking_pair(n2, pt(n2, {2, 1})),
            (std::pair{pt(n2, {0, 1}), pt(n2, {1, 1})}));
  const Dimension n3(3);
  EXPECT_EQ(blocking_pair(n3, pt(n3, {2, 2, 0})),
            (std::pair{pt(n3, {0, 0, 0}), pt(n3, {1, 1, 0})}));
  EXPECT_THROW(blocking_pair(n3, pt(n3, {1, 0, 1})), std::invalid_argument);
}

TEST(BlockingPair, BlocksEveryOutsidePoint) {
  const Dimension n(4);
  const PointSet cube = make_cube(n);
  for (std::uint32_t x = 0; x < n.num_points(); ++x) {
    if (cube.contains(Point{x})) continue;
    const auto [p, q] = blocking_pair(n, Point{x});
    EXPECT_NE(p, q);
    EXPECT_TRUE(cube.contains(p));
    EXPECT_TRUE(cube.contains(q));
    EXPECT_EQ(third_point(p, q), Point{x});
  }
}

}  // namespace
}  // namespace capset
