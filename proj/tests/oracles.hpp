#pragma once

// Brute-force reference implementations. They work on decoded coordinate
// vectors and never touch the library's lookup tables or incidence code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "capset/f3_space.hpp"

namespace capset::oracle {

inline std::vector<std::vector<int>> all_vectors(int n) {
  std::vector<std::vector<int>> out;
  const std::uint32_t total = pow3(n);
  for (std::uint32_t i = 0; i < total; ++i) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::uint32_t x = i;
    for (auto& d : v) {
      d = static_cast<int>(x % 3);
      x /= 3;
    }
    out.push_back(v);
  }
  return out;
}

inline bool collinear(const std::vector<int>& a, const std::vector<int>& b,
                      const std::vector<int>& c) {
  if (a == b || b == c || a == c) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] + b[i] + c[i]) % 3 != 0) return false;
  }
  return true;
}

// Every line as a sorted index triple, by O(27^n) triple enumeration.
inline std::vector<std::array<std::uint32_t, 3>> lines(int n) {
  const auto v = all_vectors(n);
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t i = 0; i < v.size(); ++i) {
    for (std::uint32_t j = i + 1; j < v.size(); ++j) {
      for (std::uint32_t k = j + 1; k < v.size(); ++k) {
        if (collinear(v[i], v[j], v[k])) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

// Lines through p, by pairing p with every other Q and solving for R.
inline std::set<std::array<std::uint32_t, 3>> lines_through(int n,
                                                            std::uint32_t p) {
  const auto v = all_vectors(n);
  std::set<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t q = 0; q < v.size(); ++q) {
    for (std::uint32_t r = 0; r < v.size(); ++r) {
      if (collinear(v[p], v[q], v[r])) {
        std::array<std::uint32_t, 3> l{p, q, r};
        std::sort(l.begin(), l.end());
        out.insert(l);
      }
    }
  }
  return out;
}

inline bool is_capset(int n, const std::vector<std::uint32_t>& pts) {
  const auto v = all_vectors(n);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (collinear(v[pts[i]], v[pts[j]], v[pts[k]])) return false;
      }
    }
  }
  return true;
}

// count[p] over alive points from an explicit line list.
inline std::vector<std::uint32_t> counts(
    const std::vector<std::array<std::uint32_t, 3>>& all,
    const std::vector<std::uint8_t>& alive) {
  std::vector<std::uint32_t> c(alive.size(), 0);
  for (const auto& l : all) {
    if (alive[l[0]] && alive[l[1]] && alive[l[2]]) {
      for (auto p : l) ++c[p];
    }
  }
  return c;
}

// Distinct hyperplanes as point sets, from all (a, b) with a != 0.
inline std::set<std::vector<std::uint32_t>> hyperplane_sets(int n) {
  const auto v = all_vectors(n);
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& a : v) {
    if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) continue;
    for (int b = 0; b < 3; ++b) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t i = 0; i < v.size(); ++i) {
        int s = b;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * v[i][k];
        if (s % 3 == 0) members.push_back(i);
      }
      out.insert(members);
    }
  }
  return out;
}

// a(n) by unpruned backtracking with an all-triples capset test.
inline std::size_t max_capset(int n) {
  const auto v = all_vectors(n);
  std::size_t best = 0;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t i) -> void {
    if (cur.size() + (v.size() - i) <= best) return;
    if (i == v.size()) {
      best = std::max(best, cur.size());
      return;
    }
    bool ok = true;
    for (std::size_t a = 0; a < cur.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < cur.size() && ok; ++b) {
        ok = !collinear(v[cur[a]], v[cur[b]], v[i]);
      }
    }
    if (ok) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

}  // namespace capset::oracle
