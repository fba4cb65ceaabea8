// Normalized 2-cocycles G×G -> U(k) (trivial action), coboundary tests and H²(G, U(k)).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "units.hpp"

namespace equibrauer {

template <class R>
class Cocycle {
 public:
  using T = typename R::value_type;

  /// values[g*|G| + h] = α(g,h); validated on construction.
  Cocycle(FinGroup g, R k, std::vector<T> values) : group_(std::move(g)), ring_(std::move(k)), v_(std::move(values)) {
    const std::size_t m = group_.order();
    if (v_.size() != m * m) throw InputError("cocycle: expected " + std::to_string(m * m) + " values");
    const std::size_t e = group_.identity();
    for (std::size_t x = 0; x < m * m; ++x)
      if (!ring_.is_unit(v_[x]))
        throw InputError("cocycle value at (" + std::to_string(x / m) + "," + std::to_string(x % m) + ") is not a unit");
    for (std::size_t x = 0; x < m; ++x)
      if (!ring_.is_one(at(e, x)) || !ring_.is_one(at(x, e)))
        throw InputError("cocycle is not normalized at element " + std::to_string(x));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          T lhs = ring_.mul(at(b, c), at(a, group_.mul(b, c)));
          T rhs = ring_.mul(at(a, b), at(group_.mul(a, b), c));
          if (!ring_.equal(lhs, rhs))
            throw InputError("cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
        }
  }

  static Cocycle trivial(const FinGroup& g, const R& k) {
    return Cocycle(g, k, std::vector<T>(g.order() * g.order(), k.one()));
  }

  const FinGroup& group() const { return group_; }
  const R& ring() const { return ring_; }
  const T& at(std::size_t g, std::size_t h) const { return v_[g * group_.order() + h]; }
  const std::vector<T>& values() const { return v_; }

  Cocycle operator*(const Cocycle& o) const {
    std::vector<T> w(v_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ring_.mul(v_[i], o.v_[i]);
    return Cocycle(group_, ring_, std::move(w));
  }
  Cocycle inverse() const {
    std::vector<T> w(v_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ring_.inv(v_[i]);
    return Cocycle(group_, ring_, std::move(w));
  }
  bool is_trivial() const {
    for (const auto& x : v_)
      if (!ring_.is_one(x)) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t m = group_.order();
    for (std::size_t g = 0; g < m; ++g) {
      nlohmann::json r = nlohmann::json::array();
      for (std::size_t h = 0; h < m; ++h) r.push_back(ring_.to_json(at(g, h)));
      rows.push_back(r);
    }
    return rows;
  }

 private:
  FinGroup group_;
  R ring_;
  std::vector<T> v_;
};

/// b(g) b(h) b(gh)⁻¹ for a normalized 1-cochain b.
template <class R>
Cocycle<R> coboundary(const FinGroup& g, const R& k, const std::vector<typename R::value_type>& b) {
  const std::size_t m = g.order();
  std::vector<typename R::value_type> v(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) v[x * m + y] = k.mul(k.mul(b[x], b[y]), k.inv(b[g.mul(x, y)]));
  return Cocycle<R>(g, k, std::move(v));
}

template <class R>
struct CoboundaryResult {
  bool is_coboundary = false;
  std::optional<std::vector<typename R::value_type>> witness;  ///< b with α = δb, b(e) = 1
  std::string note;
};

namespace detail {

/// Linear data of the coboundary equation in additive coordinates: one unknown
/// β(g) per non-identity g, one equation per pair of non-identity elements.
struct CoboundarySystem {
  IntMat a;
  std::vector<std::size_t> pair_rows;  // row r corresponds to pair index pair_rows[r]
};

inline CoboundarySystem coboundary_system(const FinGroup& g) {
  const std::size_t m = g.order(), e = g.identity();
  auto nt = g.nontrivial();
  std::vector<long> col(m, -1);
  for (std::size_t i = 0; i < nt.size(); ++i) col[nt[i]] = static_cast<long>(i);
  CoboundarySystem s;
  s.a = IntMat(nt.size() * nt.size(), nt.size(), mpz_class(0));
  std::size_t r = 0;
  for (std::size_t x : nt)
    for (std::size_t y : nt) {
      s.a(r, col[x]) += 1;
      s.a(r, col[y]) += 1;
      std::size_t xy = g.mul(x, y);
      if (xy != e) s.a(r, col[xy]) -= 1;
      s.pair_rows.push_back(x * m + y);
      ++r;
    }
  return s;
}

}  // namespace detail

/// Decides α = δb over a finite coefficient ring via discrete logs and congruences.
inline CoboundaryResult<ModRing> is_coboundary(const Cocycle<ModRing>& alpha, const UnitGroupOptions& opt = {}) {
  const FinGroup& g = alpha.group();
  const ModRing& k = alpha.ring();
  CoboundaryResult<ModRing> out;
  UnitGroupPresentation u = unit_group(k, opt);
  auto sys = detail::coboundary_system(g);
  auto nt = g.nontrivial();
  std::vector<std::int64_t> b(g.order(), k.one());
  for (std::size_t t = 0; t < u.invariant_factors.size(); ++t) {
    IntVec rhs(sys.a.rows()), mods(sys.a.rows(), mpz_class(static_cast<long>(u.invariant_factors[t])));
    for (std::size_t r = 0; r < sys.a.rows(); ++r) {
      std::size_t p = sys.pair_rows[r];
      rhs[r] = static_cast<long>(u.dlog.at(alpha.values()[p])[t]);
    }
    auto s = solve_congruences(sys.a, rhs, mods);
    if (!s.particular) {
      out.note = "cohomology coordinate " + std::to_string(t) + " (mod " + std::to_string(u.invariant_factors[t]) +
                 ") is nonzero";
      return out;
    }
    for (std::size_t i = 0; i < nt.size(); ++i) {
      mpz_class e = (*s.particular)[i] % u.invariant_factors[t];
      if (e < 0) e += u.invariant_factors[t];
      b[nt[i]] = k.mul(b[nt[i]], k.pow(u.generators[t], e.get_ui()));
    }
  }
  if (coboundary(g, k, b).values() != alpha.values()) throw Error("is_coboundary: witness failed re-verification");
  out.is_coboundary = true;
  out.witness = std::move(b);
  return out;
}

/// Over Q: searches b inside the subgroup of Q* generated by -1 and the primes
/// occurring in the values of α.
inline CoboundaryResult<Rationals> is_coboundary(const Cocycle<Rationals>& alpha, const UnitGroupOptions& = {}) {
  const FinGroup& g = alpha.group();
  Rationals q;
  CoboundaryResult<Rationals> out;
  std::vector<mpz_class> primes;
  auto add_primes = [&](mpz_class n) {
    n = abs(n);
    for (mpz_class p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        while (n % p == 0) n /= p;
      }
    if (n > 1 && std::find(primes.begin(), primes.end(), n) == primes.end()) primes.push_back(n);
  };
  for (const auto& v : alpha.values()) {
    add_primes(v.get_num());
    add_primes(v.get_den());
  }
  std::sort(primes.begin(), primes.end());
  auto valuation = [](mpz_class n, const mpz_class& p) {
    long e = 0;
    n = abs(n);
    while (n != 0 && n % p == 0) {
      n /= p;
      ++e;
    }
    return e;
  };
  auto sys = detail::coboundary_system(g);
  auto nt = g.nontrivial();
  std::vector<mpq_class> b(g.order(), mpq_class(1));
  // coordinate 0: sign (mod 2); then one exact coordinate per prime
  for (std::size_t t = 0; t <= primes.size(); ++t) {
    IntVec rhs(sys.a.rows()), mods(sys.a.rows(), mpz_class(t == 0 ? 2 : 0));
    for (std::size_t r = 0; r < sys.a.rows(); ++r) {
      const mpq_class& v = alpha.values()[sys.pair_rows[r]];
      rhs[r] = t == 0 ? mpz_class(sgn(v) < 0 ? 1 : 0)
                      : mpz_class(valuation(v.get_num(), primes[t - 1]) - valuation(v.get_den(), primes[t - 1]));
    }
    auto s = solve_congruences(sys.a, rhs, mods);
    if (!s.particular) {
      out.note = "not a coboundary within generated subgroup";
      return out;
    }
    for (std::size_t i = 0; i < nt.size(); ++i) {
      const mpz_class& e = (*s.particular)[i];
      if (t == 0) {
        if (e % 2 != 0) b[nt[i]] = -b[nt[i]];
      } else {
        mpq_class f = q.pow(mpq_class(primes[t - 1]), mpz_class(abs(e)).get_ui());
        b[nt[i]] *= e >= 0 ? f : 1 / f;
      }
    }
  }
  for (auto& x : b) x.canonicalize();
  if (coboundary(g, q, b).values() != alpha.values()) throw Error("is_coboundary: witness failed re-verification");
  out.is_coboundary = true;
  out.witness = std::move(b);
  return out;
}

/// H²(G, U(k)) ≅ ⊕ Z/factors[i], with a normalized representative cocycle per generator.
template <class R>
struct SecondCohomology {
  std::vector<std::int64_t> invariant_factors;
  std::vector<Cocycle<R>> representatives;
  std::int64_t order() const {
    std::int64_t o = 1;
    for (auto d : invariant_factors) o *= d;
    return o;
  }
};

struct CohomologyOptions {
  std::size_t max_group_order = 24;
  UnitGroupOptions units;
};

/// Integer-lattice computation on normalized cochains. Coordinates are
/// (pair of non-identity elements, unit-group factor t) with modulus d_t.
inline SecondCohomology<ModRing> second_cohomology(const FinGroup& g, const ModRing& k,
                                                   const CohomologyOptions& opt = {}) {
  if (g.order() > opt.max_group_order)
    throw Error("second_cohomology: group order " + std::to_string(g.order()) + " exceeds cap " +
                std::to_string(opt.max_group_order));
  UnitGroupPresentation u = unit_group(k, opt.units);
  const std::size_t m = g.order(), e = g.identity(), r = u.invariant_factors.size();
  SecondCohomology<ModRing> out;
  if (m == 1 || r == 0) return out;
  auto nt = g.nontrivial();
  const std::size_t q = nt.size();
  std::vector<long> idx(m, -1);
  for (std::size_t i = 0; i < q; ++i) idx[nt[i]] = static_cast<long>(i);
  const std::size_t n2 = q * q * r;
  auto c2 = [&](std::size_t x, std::size_t y, std::size_t t) { return (idx[x] * q + idx[y]) * r + t; };

  // δ2 c (x,y,z) = c(y,z) − c(xy,z) + c(x,yz) − c(x,y), identity terms dropped
  IntMat d2(q * q * q * r, n2, mpz_class(0));
  IntVec mods(d2.rows());
  std::size_t row = 0;
  for (std::size_t x : nt)
    for (std::size_t y : nt)
      for (std::size_t z : nt)
        for (std::size_t t = 0; t < r; ++t, ++row) {
          mods[row] = static_cast<long>(u.invariant_factors[t]);
          d2(row, c2(y, z, t)) += 1;
          d2(row, c2(x, y, t)) -= 1;
          if (g.mul(x, y) != e) d2(row, c2(g.mul(x, y), z, t)) -= 1;
          if (g.mul(y, z) != e) d2(row, c2(x, g.mul(y, z), t)) += 1;
        }
  auto z2 = solve_congruences(d2, IntVec(d2.rows(), 0), mods);
  // Z-basis of the cocycle lattice: nonzero rows of U·K from the Smith form of the generator matrix K
  IntMat kmat(z2.kernel.size(), n2, mpz_class(0));
  for (std::size_t i = 0; i < z2.kernel.size(); ++i) kmat.set_row(i, z2.kernel[i]);
  SmithForm sk = smith_normal_form(kmat);
  const std::size_t rank = sk.rank;
  // B: the coboundaries δb for unit vectors b plus d_t multiples of every coordinate
  std::vector<IntVec> bgens;
  for (std::size_t w : nt)
    for (std::size_t t = 0; t < r; ++t) {
      IntVec v(n2, 0);
      for (std::size_t x : nt)
        for (std::size_t y : nt) {
          if (x == w) v[c2(x, y, t)] += 1;
          if (y == w) v[c2(x, y, t)] += 1;
          if (g.mul(x, y) == w) v[c2(x, y, t)] -= 1;
        }
      bgens.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < n2; ++i) {
    IntVec v(n2, 0);
    v[i] = static_cast<long>(u.invariant_factors[i % r]);
    bgens.push_back(std::move(v));
  }
  // coordinates of w in the basis rows d_i·V⁻¹_i: y_i = (w V)_i / d_i
  std::vector<IntVec> coords;
  for (const auto& w : bgens) {
    IntVec y(rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < n2; ++j) s += w[j] * sk.v(j, i);
      if (s % sk.d(i, i) != 0) throw Error("second_cohomology: coboundary outside the cocycle lattice");
      y[i] = s / sk.d(i, i);
    }
    for (std::size_t j = 0; j < n2; ++j) {
      mpz_class s = 0;
      for (std::size_t i = 0; i < rank; ++i) s += y[i] * sk.d(i, i) * sk.v_inv(i, j);
      if (s != w[j]) throw Error("second_cohomology: basis change failed");
    }
    coords.push_back(std::move(y));
  }
  LatticeQuotient lq = lattice_quotient(rank, coords);
  for (std::size_t f = 0; f < lq.factors.size(); ++f) {
    if (lq.factors[f] == 0) throw Error("second_cohomology: infinite quotient (internal error)");
    out.invariant_factors.push_back(lq.factors[f].get_si());
    IntVec c(n2, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < n2; ++j) c[j] += lq.generators[f][i] * sk.d(i, i) * sk.v_inv(i, j);
    std::vector<std::int64_t> vals(m * m, k.one());
    for (std::size_t x : nt)
      for (std::size_t y : nt)
        for (std::size_t t = 0; t < r; ++t) {
          mpz_class ex = c[c2(x, y, t)] % u.invariant_factors[t];
          if (ex < 0) ex += u.invariant_factors[t];
          vals[x * m + y] = k.mul(vals[x * m + y], k.pow(u.generators[t], ex.get_ui()));
        }
    out.representatives.emplace_back(g, k, std::move(vals));
  }
  return out;
}

inline SecondCohomology<Rationals> second_cohomology(const FinGroup&, const Rationals&, const CohomologyOptions& = {}) {
  throw Error("second_cohomology over Q: supported only via is_coboundary on explicit cocycles");
}

}  // namespace equibrauer
