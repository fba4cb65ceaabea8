// Unit groups U(k) of finite coefficient rings with explicit discrete logs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ring.hpp"

namespace equibrauer {

/// U(k) ≅ Z/d_1 × ... × Z/d_r with d_1 | d_2 | ... , generators g_i of order d_i,
/// and a complete table unit -> exponent vector.
struct UnitGroupPresentation {
  std::vector<std::int64_t> invariant_factors;
  std::vector<std::int64_t> generators;
  std::map<std::int64_t, std::vector<std::int64_t>> dlog;

  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : invariant_factors) o *= d;
    return o;
  }
};

struct UnitGroupOptions {
  std::int64_t max_ring_size = 1'000'000;
};

namespace detail {

inline std::int64_t element_order(const ModRing& k, std::int64_t u) {
  std::int64_t x = u, ord = 1;
  while (x != k.one()) {
    x = k.mul(x, u);
    ++ord;
  }
  return ord;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// Invariant factors of a finite abelian group given the multiset of orders
/// of its elements: count elements killed by each prime power.
inline std::vector<std::int64_t> invariant_factors_from_orders(const std::vector<std::int64_t>& orders) {
  std::int64_t n = static_cast<std::int64_t>(orders.size());
  std::vector<std::vector<std::int64_t>> primary;  // per prime: exponents of the cyclic factors
  std::vector<std::int64_t> primes = prime_factors(n);
  std::vector<std::int64_t> result;
  std::vector<std::vector<std::int64_t>> parts;
  for (std::int64_t p : primes) {
    // |G[p^j]| = p^{sum_i min(e_i, j)}
    std::vector<std::int64_t> log_sizes{0};
    for (std::int64_t pj = p;; pj *= p) {
      std::int64_t cnt = 0;
      for (auto o : orders)
        if (pj % o == 0) ++cnt;
      std::int64_t l = 0;
      for (std::int64_t c = cnt; c > 1; c /= p) ++l;
      log_sizes.push_back(l);
      if (log_sizes.back() == log_sizes[log_sizes.size() - 2]) break;
    }
    // number of factors with exponent >= j is log_sizes[j] - log_sizes[j-1]
    std::vector<std::int64_t> exps;
    for (std::size_t j = 1; j < log_sizes.size(); ++j) {
      std::int64_t ge_j = log_sizes[j] - log_sizes[j - 1];
      std::int64_t ge_next = (j + 1 < log_sizes.size()) ? log_sizes[j + 1] - log_sizes[j] : 0;
      for (std::int64_t c = 0; c < ge_j - ge_next; ++c) exps.push_back(static_cast<std::int64_t>(j));
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    std::vector<std::int64_t> pp;
    for (auto e : exps) {
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < e; ++i) q *= p;
      pp.push_back(q);
    }
    parts.push_back(pp);
  }
  std::size_t r = 0;
  for (const auto& pp : parts) r = std::max(r, pp.size());
  result.assign(r, 1);
  // largest factor absorbs the largest prime powers
  for (const auto& pp : parts)
    for (std::size_t i = 0; i < pp.size(); ++i) result[r - 1 - i] *= pp[i];
  return result;
}

}  // namespace detail

/// Presentation of U(k) for k = GF(p) or Z/n. Generators are chosen greedily:
/// the smallest unit (as an integer) of the required order that is independent
/// of the generators already chosen, largest invariant factor first.
inline UnitGroupPresentation unit_group(const ModRing& k, const UnitGroupOptions& opt = {}) {
  if (k.size() > opt.max_ring_size)
    throw Error("unit group of " + k.name() + " exceeds the enumeration cap " + std::to_string(opt.max_ring_size));
  std::vector<std::int64_t> units, orders;
  for (std::int64_t a = 1; a < k.size(); ++a)
    if (std::gcd(a, k.size()) == 1) {
      units.push_back(a);
      orders.push_back(detail::element_order(k, a));
    }
  if (k.size() == 2) {
    units = {1};
    orders = {1};
  }
  UnitGroupPresentation out;
  std::vector<std::int64_t> factors = detail::invariant_factors_from_orders(orders);
  factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());

  // span of chosen generators, as map element -> exponent vector
  std::map<std::int64_t, std::vector<std::int64_t>> span{{k.one(), {}}};
  std::vector<std::int64_t> chosen;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const std::int64_t d = *it;
    bool placed = false;
    for (std::size_t i = 0; i < units.size() && !placed; ++i) {
      if (orders[i] != d) continue;
      // independence: the cyclic subgroup meets the current span trivially
      std::int64_t x = units[i];
      bool ok = true;
      for (std::int64_t e = 1; e < d; ++e, x = k.mul(x, units[i]))
        if (span.count(x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::map<std::int64_t, std::vector<std::int64_t>> next;
      for (const auto& [val, ex] : span) {
        std::int64_t y = val;
        for (std::int64_t e = 0; e < d; ++e, y = k.mul(y, units[i])) {
          auto v = ex;
          v.push_back(e);
          next.emplace(y, std::move(v));
        }
      }
      span = std::move(next);
      chosen.push_back(units[i]);
      placed = true;
    }
    if (!placed) throw Error("unit_group: failed to find independent generator of order " + std::to_string(d));
  }
  // exponent vectors were built largest-factor first; reverse to match d_1 | d_2 | ...
  out.invariant_factors = factors;
  out.generators.assign(chosen.rbegin(), chosen.rend());
  for (auto& [val, ex] : span) {
    std::vector<std::int64_t> rev(ex.rbegin(), ex.rend());
    out.dlog.emplace(val, std::move(rev));
  }
  if (static_cast<std::int64_t>(out.dlog.size()) != static_cast<std::int64_t>(units.size()) ||
      out.order() != static_cast<std::int64_t>(units.size()))
    throw Error("unit_group: presentation does not cover U(k)");
  return out;
}

inline UnitGroupPresentation unit_group(const Rationals&, const UnitGroupOptions& = {}) {
  throw Error("unit group not enumerable");
}

}  // namespace equibrauer
