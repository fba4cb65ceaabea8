// Independent brute-force oracles used to cross-check the linear-algebra paths.
#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "cohomology.hpp"

namespace equibrauer::oracle {

/// Every normalized 2-cocycle, by exhaustive search over U(k)^{(|G|-1)²}.
struct BruteH2 {
  std::vector<std::vector<std::int64_t>> cocycles;      ///< full |G|² value tables
  std::set<std::vector<std::int64_t>> coboundaries;     ///< all δb, b normalized
  std::size_t candidates = 0;
  std::size_t order() const { return cocycles.size() / coboundaries.size(); }
};

inline BruteH2 brute_h2(const FinGroup& g, const ModRing& k, std::size_t max_candidates = 2'000'000) {
  std::vector<std::int64_t> units;
  for (std::int64_t a = 1; a < k.size(); ++a)
    if (k.is_unit(a)) units.push_back(a);
  if (k.size() == 2) units = {1};
  const std::size_t m = g.order(), e = g.identity();
  auto nt = g.nontrivial();
  const std::size_t slots = nt.size() * nt.size();
  BruteH2 out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    total *= units.size();
    if (total > max_candidates) throw Error("brute_h2: search space too large");
  }
  out.candidates = total;
  std::vector<std::size_t> digit(slots, 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<std::int64_t> v(m * m, k.one());
    for (std::size_t s = 0; s < slots; ++s) v[nt[s / nt.size()] * m + nt[s % nt.size()]] = units[digit[s]];
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b)
        for (std::size_t c = 0; c < m && ok; ++c)
          ok = k.mul(v[b * m + c], v[a * m + g.mul(b, c)]) == k.mul(v[a * m + b], v[g.mul(a, b) * m + c]);
    if (ok) out.cocycles.push_back(v);
    for (std::size_t s = 0; s < slots && ++digit[s] == units.size(); ++s) digit[s] = 0;
  }
  // coboundaries: all normalized b
  std::vector<std::size_t> bd(nt.size(), 0);
  std::size_t btotal = 1;
  for (std::size_t i = 0; i < nt.size(); ++i) btotal *= units.size();
  for (std::size_t n = 0; n < btotal; ++n) {
    std::vector<std::int64_t> b(m, k.one());
    for (std::size_t i = 0; i < nt.size(); ++i) b[nt[i]] = units[bd[i]];
    std::vector<std::int64_t> v(m * m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) v[x * m + y] = k.mul(k.mul(b[x], b[y]), k.inv(b[g.mul(x, y)]));
    out.coboundaries.insert(v);
    for (std::size_t s = 0; s < nt.size() && ++bd[s] == units.size(); ++s) bd[s] = 0;
  }
  (void)e;
  return out;
}

/// Nonzero integer (x, y, z, w) with x² − a y² − b z² + ab w² = 0 and all |coords| ≤ height.
inline std::optional<std::array<long, 4>> norm_zero_search(const mpq_class& a, const mpq_class& b, long height) {
  for (long x = 0; x <= height; ++x)
    for (long y = -height; y <= height; ++y)
      for (long z = -height; z <= height; ++z)
        for (long w = -height; w <= height; ++w) {
          if (x == 0 && y == 0 && z == 0 && w == 0) continue;
          mpq_class nrm = mpq_class(x * x) - a * (y * y) - b * (z * z) + a * b * (w * w);
          if (nrm == 0) return std::array<long, 4>{x, y, z, w};
        }
  return std::nullopt;
}


}  // namespace equibrauer::oracle
