#pragma once

// Capset verification and exploration: the capset property, the recursive
// hyperplane-avoidance structure of greedy capsets, completeness, completion
// search, exhaustive maxima and the standard example sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capset/f3_space.hpp"
#include "capset/greedy.hpp"
#include "capset/point_set.hpp"
#include "capset/rng.hpp"

namespace capset {

// No three members of s are collinear. O(|s|^2) pair scan.
bool is_capset(const PointSet& s);

// Recursive witness that C is a greedy capset.
//
// An inner node in dimension d >= 1 names a hyperplane H_0 avoided by C and
// holds two children for C ∩ H_1 and C ∩ H_2 (the parallel hyperplanes in
// ascending constant order). Each child lives in dimension d - 1 through the
// chart that deletes H_0's pivot coordinate. Leaves (dimension 0) carry no
// hyperplane and stand for a single point.
struct StructureCertificate {
  std::optional<Hyperplane> avoided;
  std::vector<StructureCertificate> children;

  bool is_leaf() const { return !avoided.has_value(); }
  int dimension() const;
  std::size_t leaf_count() const;

  friend bool operator==(const StructureCertificate&,
                         const StructureCertificate&) = default;
};

struct StructureResult {
  std::optional<StructureCertificate> certificate;
  int failed_level = -1;  // depth of the first sub-box with no avoided hyperplane
  std::string diagnostic;

  explicit operator bool() const { return certificate.has_value(); }
};

// Decides whether C is a greedy capset by searching for an avoided hyperplane
// at every level. Hyperplanes are tried in canonical order and the search
// backtracks when a choice fails lower down.
StructureResult verify_greedy_structure(const PointSet& c);

// True iff cert is a valid certificate for exactly c.
bool check_certificate(const PointSet& c, const StructureCertificate& cert);

// The set described by a certificate of dimension n.
PointSet materialize(Dimension n, const StructureCertificate& cert);

// Uniformly random avoided hyperplane at every node.
StructureCertificate random_certificate(Dimension n, Xorshift64Star& rng);

// Builds a greedy trace whose result is materialize(n, cert): at each step the
// smallest maximal candidate lying in the avoided hyperplane of a box whose
// ancestors are fully removed. Throws std::logic_error if no such candidate
// exists.
GreedyTrace greedy_trace_for(Dimension n, const StructureCertificate& cert);

// "H0=<normal>:<b> [ <child1> | <child2> ]", leaves written as "*".
std::string serialize(const StructureCertificate& cert);
// Throws ParseError.
StructureCertificate parse_certificate(Dimension n, std::string_view text);

struct CompletenessReport {
  bool complete = false;
  std::vector<Point> extendable;  // points R with C ∪ {R} still a capset
};

// Throws std::invalid_argument if c is not a capset.
CompletenessReport is_complete(const PointSet& c);

enum class CompletionMode { kGreedyAdd, kExhaustiveMax, kAllMaximal };

struct CompletionOptions {
  int max_dimension = 4;            // for the exhaustive modes
  std::size_t max_results = 100000;  // for kAllMaximal
};

struct CompletionResult {
  std::vector<PointSet> completions;
  bool truncated = false;  // kAllMaximal hit max_results
};

// Every returned set is a complete capset containing c. Throws
// std::invalid_argument if c is not a capset and CapExceeded when an
// exhaustive mode is asked for n > options.max_dimension.
CompletionResult complete_capset(const PointSet& c, CompletionMode mode,
                                 const CompletionOptions& options = {});

struct MaxCapsetResult {
  std::size_t size = 0;
  PointSet witness;  // lexicographically smallest among maximum capsets
};

inline constexpr int kExhaustiveDimensionCap = 4;

// Exact a(n) by branch and bound. Throws CapExceeded for n > 4.
MaxCapsetResult max_capset_exhaustive(Dimension n);

// {0,1}^n
PointSet make_cube(Dimension n);
// The 9 solutions of z = x^2 + y^2 in F_3^3.
PointSet make_quadric();
PointSet make_quadric_minus_origin();

// For R outside {0,1}^n: P takes 0 and Q takes 1 where R has a 2, both copy
// R elsewhere. Then P, Q are distinct cube points collinear with R. Throws
// std::invalid_argument if R is in the cube.
std::pair<Point, Point> blocking_pair(Dimension n, Point r);

}  // namespace capset
