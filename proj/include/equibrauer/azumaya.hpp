// Taylor-Azumaya test, elementary-algebra recognition, Morita equivalence,
// quaternion algebras over Q and Brauer-class bookkeeping.
#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "elementary.hpp"

namespace equibrauer {

/// Stage-by-stage outcome; `failed_stage` is empty when all five pass.
template <class R>
struct TaylorAzumayaReport {
  bool unital = false, faithful = false, central = false, projective = false, generator = false;
  std::string failed_stage;
  std::size_t center_dim = 0;
  std::size_t hom_dim = 0;  ///< dim Hom_{A^e}(A, A^e)
  std::size_t trace_rank = 0, envelope_dim = 0;
  bool separability_path = false;
  /// dual-basis coefficients: x = Σ_i f_i(x)·x_i with f_i = Σ_q c[i*hom_dim + q] φ_q
  std::optional<RVec<R>> splitting;

  bool azumaya() const { return failed_stage.empty(); }
};

namespace detail {

/// t ∈ A⊗A acting on x: (Σ t_uv x_u⊗x_v)·x = Σ t_uv x_u x x_v.
template <class R>
RVec<R> envelope_act(const FinAlgebra<R>& a, const RVec<R>& t, const RVec<R>& x) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  RVec<R> out = a.zero();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& c = t[u * n + v];
      if (k.is_zero(c)) continue;
      vec_axpy(k, out, c, a.mul(a.mul(a.basis(u), x), a.basis(v)));
    }
  return out;
}

/// Outer bimodule action on A⊗A: a·(x⊗y) = ax⊗y and (x⊗y)·b = x⊗yb.
template <class R>
RVec<R> outer_left(const FinAlgebra<R>& a, std::size_t basis, const RVec<R>& t) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  RVec<R> out = zero_vec(k, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& c = t[u * n + v];
      if (k.is_zero(c)) continue;
      for (const auto& term : a.product(basis, u))
        out[term.index * n + v] = k.add(out[term.index * n + v], k.mul(c, term.coeff));
    }
  return out;
}

template <class R>
RVec<R> outer_right(const FinAlgebra<R>& a, const RVec<R>& t, std::size_t basis) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  RVec<R> out = zero_vec(k, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto& c = t[u * n + v];
      if (k.is_zero(c)) continue;
      for (const auto& term : a.product(v, basis))
        out[u * n + term.index] = k.add(out[u * n + term.index], k.mul(c, term.coeff));
    }
  return out;
}

/// Hom_{A^e}(A, A^e) for A with identity: φ(x) = x·t with a·t = t·a.
template <class R>
std::vector<RVec<R>> invariant_tensors(const FinAlgebra<R>& a) {
  const R& k = a.ring();
  const std::size_t n = a.dim(), N = n * n;
  EquationSystem<R> sys(k, N);
  for (std::size_t b = 0; b < n && !sys.saturated(); ++b) {
    std::vector<RVec<R>> rows(N, zero_vec(k, N));
    for (std::size_t s = 0; s < N; ++s) {
      RVec<R> col = vec_sub(k, outer_left(a, b, unit_vec(k, N, s)), outer_right(a, unit_vec(k, N, s), b));
      for (std::size_t r = 0; r < N; ++r)
        if (!k.is_zero(col[r])) rows[r][s] = col[r];
    }
    for (auto& r : rows) sys.add(r);
  }
  return sys.solutions();
}

/// General Hom_{A^e}(A, A^e): φ(x_c) ∈ A⊗A at unknowns c*n² + s, left and right linear.
template <class R>
std::vector<std::vector<RVec<R>>> bimodule_maps_to_envelope(const FinAlgebra<R>& a) {
  const R& k = a.ring();
  const std::size_t n = a.dim(), N = n * n, U = n * N;
  EquationSystem<R> sys(k, U);
  for (std::size_t i = 0; i < n && !sys.saturated(); ++i)
    for (std::size_t j = 0; j < n && !sys.saturated(); ++j) {
      // φ(x_i x_j) − x_i·φ(x_j) and φ(x_i x_j) − φ(x_i)·x_j
      std::vector<RVec<R>> left(N, zero_vec(k, U)), right(N, zero_vec(k, U));
      for (const auto& t : a.product(i, j))
        for (std::size_t s = 0; s < N; ++s) {
          left[s][t.index * N + s] = k.add(left[s][t.index * N + s], t.coeff);
          right[s][t.index * N + s] = k.add(right[s][t.index * N + s], t.coeff);
        }
      for (std::size_t s = 0; s < N; ++s) {
        RVec<R> l = outer_left(a, i, unit_vec(k, N, s)), r = outer_right(a, unit_vec(k, N, s), j);
        for (std::size_t q = 0; q < N; ++q) {
          if (!k.is_zero(l[q])) left[q][j * N + s] = k.sub(left[q][j * N + s], l[q]);
          if (!k.is_zero(r[q])) right[q][i * N + s] = k.sub(right[q][i * N + s], r[q]);
        }
      }
      for (auto& v : left) sys.add(v);
      for (auto& v : right) sys.add(v);
    }
  std::vector<std::vector<RVec<R>>> out;
  for (const auto& s : sys.solutions()) {
    std::vector<RVec<R>> phi;
    for (std::size_t c = 0; c < n; ++c) phi.emplace_back(s.begin() + c * N, s.begin() + (c + 1) * N);
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace detail

enum class AzumayaMethod { automatic, general };

template <class R>
TaylorAzumayaReport<R> is_taylor_azumaya(const FinAlgebra<R>& a, AzumayaMethod method = AzumayaMethod::automatic) {
  require_field(a.ring(), "is_taylor_azumaya");
  const R& k = a.ring();
  const std::size_t n = a.dim(), N = n * n;
  TaylorAzumayaReport<R> rep;
  rep.envelope_dim = N;
  rep.unital = n > 0 && is_unital(a).unital;
  if (!rep.unital) {
    rep.failed_stage = "unital";
    return rep;
  }
  rep.faithful = is_faithful(a);
  if (!rep.faithful) {
    rep.failed_stage = "faithful";
    return rep;
  }
  auto z = center_endos(a);
  rep.center_dim = z.dim();
  if (z.dim() == 1) {
    std::vector<RVec<R>> span{z.maps[0].data()};
    rep.central = coordinates(k, span, identity_mat(k, n).data()).has_value();
  }
  if (!rep.central) {
    rep.failed_stage = "central";
    return rep;
  }

  // images spanning the trace ideal, and the dual-basis system
  std::vector<RVec<R>> images;
  if (a.has_identity() && method == AzumayaMethod::automatic) {
    // one generator x_1 = 1: the splitting of A⊗A → A is x ↦ x·t with μ(t) = 1
    rep.separability_path = true;
    const RVec<R>& one = *a.identity();
    auto ts = detail::invariant_tensors(a);
    rep.hom_dim = ts.size();
    RMat<R> sys = zero_mat(k, n, ts.size());
    for (std::size_t q = 0; q < ts.size(); ++q) sys.set_col(q, detail::envelope_act(a, ts[q], one));
    auto sol = solve_linear(k, sys, one);
    if (sol.consistent()) rep.splitting = sol.particular;
    for (const auto& t : ts)
      for (std::size_t c = 0; c < n; ++c) images.push_back(detail::outer_left(a, c, t));  // x_c·t
  } else {
    auto phis = detail::bimodule_maps_to_envelope(a);
    const std::size_t p = phis.size();
    rep.hom_dim = p;
    // Σ_{i,q} c_iq φ_q(x)·x_i = x for every basis x
    RMat<R> sys = zero_mat(k, N, n * p);
    RVec<R> rhs = zero_vec(k, N);
    for (std::size_t x = 0; x < n; ++x) {
      rhs[x * n + x] = k.one();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < p; ++q) {
          RVec<R> v = detail::envelope_act(a, phis[q][x], a.basis(i));
          for (std::size_t l = 0; l < n; ++l) sys(x * n + l, i * p + q) = v[l];
        }
    }
    auto sol = solve_linear(k, sys, rhs);
    if (sol.consistent()) rep.splitting = sol.particular;
    for (const auto& phi : phis)
      for (const auto& img : phi) images.push_back(img);
  }
  rep.projective = rep.splitting.has_value();
  if (!rep.projective) {
    rep.failed_stage = "projective";
    return rep;
  }
  rep.trace_rank = span_rank(k, N, images);
  rep.generator = rep.trace_rank == N;
  if (!rep.generator) rep.failed_stage = "generator";
  return rep;
}

/// Monic minimal polynomial of y in a unital algebra, lowest degree first.
template <class R>
std::vector<typename R::value_type> minimal_polynomial(const FinAlgebra<R>& a, const RVec<R>& y) {
  if (!a.has_identity()) throw InputError("minimal polynomial needs an identity");
  const R& k = a.ring();
  std::vector<RVec<R>> powers{*a.identity()};
  for (;;) {
    RVec<R> next = a.mul(powers.back(), y);
    auto c = coordinates(k, powers, next);
    if (c) {
      std::vector<typename R::value_type> poly;
      for (const auto& v : *c) poly.push_back(k.neg(v));
      poly.push_back(k.one());
      return poly;
    }
    powers.push_back(std::move(next));
  }
}

namespace detail {

inline std::vector<std::int64_t> polynomial_roots(const ModRing& k, const std::vector<std::int64_t>& poly) {
  std::vector<std::int64_t> out;
  if (k.size() > 100'000) return out;
  for (std::int64_t r = 0; r < k.size(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = k.add(k.mul(acc, r), poly[i]);
    if (acc == 0) out.push_back(r);
  }
  return out;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > 1'000'000) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Rational root theorem after clearing denominators.
inline std::vector<mpq_class> polynomial_roots(const Rationals&, const std::vector<mpq_class>& poly) {
  mpz_class l = 1;
  for (const auto& c : poly) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c * l));
  std::vector<mpq_class> out;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) out.push_back(0);
  if (low + 1 >= ints.size()) return out;
  for (const auto& p : divisors(ints[low]))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        mpq_class r(sign * p, q);
        r.canonicalize();
        mpq_class acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * r + poly[i];
        if (acc == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  return out;
}

template <class R>
std::size_t left_ideal_dim(const FinAlgebra<R>& a, const RVec<R>& y) {
  std::vector<RVec<R>> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.mul(a.basis(i), y));
  return span_rank(a.ring(), a.dim(), gens);
}

}  // namespace detail

/// Witness that E ≅ E(P): iso is the matrix of E(P) → E on the m_i⊗m'_j basis.
template <class R>
struct ElementaryWitness {
  bool elementary = false;
  std::string method;  ///< "idempotent", "left-ideal", "wedderburn" or empty
  std::optional<DualPair<R>> pair;
  std::optional<RMat<R>> iso;
  std::string note;
};

struct ElementaryOptions {
  bool search = true;
  bool wedderburn_shortcut = true;
  std::size_t shortcut_max_dim = 64;  ///< bimodule simplicity uses a dim² × dim² echelon form
};

namespace detail {

/// e idempotent with eEe = k·e: M = Ee, M' = eE, m'm = μ(m'⊗m)·e.
template <class R>
std::optional<ElementaryWitness<R>> witness_from_idempotent(const FinAlgebra<R>& a, const RVec<R>& e) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  std::vector<RVec<R>> le, re;
  for (std::size_t i = 0; i < n; ++i) {
    le.push_back(a.mul(a.basis(i), e));
    re.push_back(a.mul(e, a.basis(i)));
  }
  auto mb = independent_subset(k, n, le), mpb = independent_subset(k, n, re);
  std::size_t piv = 0;
  while (k.is_zero(e[piv])) ++piv;
  const auto inv = k.inv(e[piv]);
  RMat<R> mu = zero_mat(k, mpb.size(), mb.size());
  for (std::size_t j = 0; j < mpb.size(); ++j)
    for (std::size_t i = 0; i < mb.size(); ++i) {
      RVec<R> prod = a.mul(mpb[j], mb[i]);
      const auto c = k.mul(prod[piv], inv);
      if (vec_scale(k, c, e) != prod) return std::nullopt;
      mu(j, i) = c;
    }
  if (mb.size() * mpb.size() != n) return std::nullopt;
  DualPair<R> p{k, mb.size(), mpb.size(), mu};
  try {
    validate_pair(p);
  } catch (const InputError&) {
    return std::nullopt;
  }
  RMat<R> phi = zero_mat(k, n, n);
  for (std::size_t i = 0; i < mb.size(); ++i)
    for (std::size_t j = 0; j < mpb.size(); ++j) phi.set_col(i * mpb.size() + j, a.mul(mb[i], mpb[j]));
  auto ep = elementary_from_pair(p);
  if (!make_iso(ep.algebra, a, phi)) return std::nullopt;
  return ElementaryWitness<R>{true, "idempotent", p, phi, ""};
}

/// L minimal left ideal of dim d with d² = dim E; E → End(L) is then an iso onto M_d.
template <class R>
std::optional<ElementaryWitness<R>> witness_from_left_ideal(const FinAlgebra<R>& a, const RVec<R>& y) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  std::vector<RVec<R>> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(a.mul(a.basis(i), y));
  auto lb = independent_subset(k, n, gens);
  const std::size_t d = lb.size();
  if (d * d != n) return std::nullopt;
  CoordinateMap<R> coords(k, n, lb);
  RMat<R> rho = zero_mat(k, n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RMat<R> m = zero_mat(k, d, d);
    for (std::size_t t = 0; t < d; ++t) {
      auto v = coords(a.mul(a.basis(c), lb[t]));
      if (!v) return std::nullopt;
      m.set_col(t, *v);
    }
    rho.set_col(c, m.data());
  }
  auto phi = inverse(k, rho);
  if (!phi) return std::nullopt;
  auto p = standard_pair(k, d);
  auto ep = elementary_from_pair(p);
  if (!make_iso(ep.algebra, a, *phi)) return std::nullopt;
  return ElementaryWitness<R>{true, "left-ideal", p, *phi, ""};
}

template <class R>
std::vector<RVec<R>> shifted_candidates(const FinAlgebra<R>& a, const RVec<R>& x) {
  const R& k = a.ring();
  std::vector<RVec<R>> out{x};
  for (const auto& r : polynomial_roots(k, minimal_polynomial(a, x))) {
    RVec<R> z = vec_sub(k, x, vec_scale(k, r, *a.identity()));
    if (!vec_is_zero(k, z)) out.push_back(std::move(z));
  }
  return out;
}

/// A^e → End_k(A) surjective: A simple as a bimodule.
template <class R>
bool is_bimodule_simple(const FinAlgebra<R>& a) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  Echelon<R> e(k, n * n);
  for (std::size_t i = 0; i < n && !e.full(); ++i)
    for (std::size_t j = 0; j < n && !e.full(); ++j)
      e.insert(mat_mul(k, a.left_mult(a.basis(i)), a.right_mult(a.basis(j))).data());
  return e.full();
}

}  // namespace detail

template <class R>
ElementaryWitness<R> is_elementary(const FinAlgebra<R>& a, ElementaryOptions opt = {}) {
  require_field(a.ring(), "is_elementary");
  const R& k = a.ring();
  const std::size_t n = a.dim();
  if (n == 0) return {false, "", std::nullopt, std::nullopt, "zero algebra"};

  if (opt.search) {
    // idempotent basis vectors (after scaling), smallest Ee first
    std::vector<std::pair<std::size_t, RVec<R>>> idem;
    for (std::size_t i = 0; i < n; ++i) {
      RVec<R> sq = a.basis_product(i, i);
      const auto& lam = sq[i];
      if (k.is_zero(lam) || vec_scale(k, lam, a.basis(i)) != sq) continue;
      RVec<R> e = vec_scale(k, k.inv(lam), a.basis(i));
      idem.emplace_back(detail::left_ideal_dim(a, e), std::move(e));
    }
    std::stable_sort(idem.begin(), idem.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [d, e] : idem) {
      std::vector<RVec<R>> corner;
      for (std::size_t i = 0; i < n; ++i) corner.push_back(a.mul(a.mul(e, a.basis(i)), e));
      if (span_rank(k, n, corner) != 1) continue;
      if (auto w = detail::witness_from_idempotent(a, e)) return *w;
    }

    const std::size_t root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (a.has_identity() && root * root == n && n > 1) {
      // greedy descent to a left ideal of dimension √n
      std::optional<RVec<R>> best;
      std::size_t best_dim = n;
      for (std::size_t i = 0; i < n; ++i)
        for (auto& z : detail::shifted_candidates(a, a.basis(i))) {
          const std::size_t d = detail::left_ideal_dim(a, z);
          if (d > 0 && d < best_dim) best_dim = d, best = z;
        }
      while (best && best_dim > root) {
        std::optional<RVec<R>> next;
        std::size_t next_dim = best_dim;
        for (std::size_t i = 0; i < n && next_dim > root; ++i)
          for (auto& z : detail::shifted_candidates(a, a.basis(i))) {
            RVec<R> y = a.mul(z, *best);
            const std::size_t d = detail::left_ideal_dim(a, y);
            if (d > 0 && d < next_dim) next_dim = d, next = std::move(y);
          }
        if (!next) break;
        best = std::move(next);
        best_dim = next_dim;
      }
      if (best && best_dim == root)
        if (auto w = detail::witness_from_left_ideal(a, *best)) return *w;
    }
  }

  if (opt.wedderburn_shortcut && k.is_prime_field() && a.has_identity() && n <= opt.shortcut_max_dim) {
    if (center_endos(a).dim() == 1 && detail::is_bimodule_simple(a))
      return {true, "wedderburn", std::nullopt, std::nullopt, "central simple over a finite field"};
  }
  return {false, "", std::nullopt, std::nullopt, "no witness found"};
}

template <class R>
bool morita_equivalent(const FinAlgebra<R>& a, const FinAlgebra<R>& b) {
  require_same_ring(a, b);
  if (!is_taylor_azumaya(a).azumaya() || !is_taylor_azumaya(b).azumaya())
    throw InputError("morita_equivalent: inputs must be Taylor-Azumaya");
  return is_elementary(tensor_product(a, opposite(b))).elementary;
}

/// Basis 1, i, j, k = ij with i² = a, j² = b, ji = −ij.
template <class R>
FinAlgebra<R> quaternion_algebra(const R& ring, const typename R::value_type& a, const typename R::value_type& b) {
  if (!ring.is_unit(a) || !ring.is_unit(b)) throw InputError("quaternion algebra: a and b must be units");
  if (ring.is_zero(ring.add(ring.one(), ring.one()))) throw InputError("quaternion algebra: characteristic 2");
  using T = typename R::value_type;
  const T ab = ring.mul(a, b);
  auto term = [&](std::size_t idx, T c) {
    RVec<R> v = zero_vec(ring, 4);
    v[idx] = c;
    return v;
  };
  const T one = ring.one();
  auto neg = [&](T x) { return ring.neg(x); };
  // rows: x_i · x_j for i, j ∈ {1, i, j, k}
  std::vector<std::vector<RVec<R>>> t{
      {term(0, one), term(1, one), term(2, one), term(3, one)},
      {term(1, one), term(0, a), term(3, one), term(2, a)},
      {term(2, one), term(3, neg(one)), term(0, b), term(1, neg(b))},
      {term(3, one), term(2, neg(a)), term(1, b), term(0, neg(ab))},
  };
  return algebra_from_products(
      ring, 4, [&](std::size_t i, std::size_t j) { return t[i][j]; }, term(0, one), true, {"1", "i", "j", "k"});
}

/// Hilbert symbol (a, b)_p over Q; p = 0 is the real place.
inline int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p) {
  if (a == 0 || b == 0) throw InputError("Hilbert symbol of zero");
  // a·den² has the same square class as a
  mpz_class x = a.get_num() * a.get_den(), y = b.get_num() * b.get_den();
  if (p == 0) return (x < 0 && y < 0) ? -1 : 1;
  auto split = [&](mpz_class v, unsigned long& e) {
    e = 0;
    while (v % p == 0) v /= p, ++e;
    return v;
  };
  unsigned long al = 0, be = 0;
  mpz_class u = split(x, al), v = split(y, be);
  if (p == 2) {
    auto eps = [](const mpz_class& t) { return mpz_class(((t % 4) + 4) % 4) == 3 ? 1 : 0; };
    auto omega = [](const mpz_class& t) {
      const long r = mpz_class(((t % 8) + 8) % 8).get_si();
      return (r == 3 || r == 5) ? 1 : 0;
    };
    const long s = eps(u) * eps(v) + static_cast<long>(al) * omega(v) + static_cast<long>(be) * omega(u);
    return s % 2 ? -1 : 1;
  }
  auto leg = [&](const mpz_class& t) { return mpz_legendre(t.get_mpz_t(), p.get_mpz_t()); };
  const mpz_class half = (p - 1) / 2;
  int sign = (mpz_class(al * be) * half) % 2 == 0 ? 1 : -1;
  if (be % 2) sign *= leg(u);
  if (al % 2) sign *= leg(v);
  return sign;
}

struct QuaternionSplitReport {
  bool split = true;
  std::map<std::string, int> symbols;  ///< place → (a, b)_place; "inf" for the real place
};

inline std::vector<mpz_class> prime_factors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline QuaternionSplitReport is_split_quaternion(const mpq_class& a, const mpq_class& b) {
  if (a == 0 || b == 0) throw InputError("quaternion algebra: a and b must be nonzero");
  std::vector<mpz_class> places{0, 2};
  for (const auto* q : {&a, &b})
    for (const auto& z : {q->get_num(), q->get_den()})
      for (const auto& p : prime_factors(z))
        if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
  std::sort(places.begin(), places.end());
  QuaternionSplitReport r;
  for (const auto& p : places) {
    const int s = hilbert_symbol(a, b, p);
    r.symbols[p == 0 ? "inf" : p.get_str()] = s;
    if (s < 0) r.split = false;
  }
  return r;
}

/// A Taylor-Azumaya representative with the operations that produced it.
template <class R>
struct BrauerClass {
  FinAlgebra<R> representative;
  std::vector<std::string> provenance;
};

template <class R>
BrauerClass<R> brauer_class(const FinAlgebra<R>& a, const std::string& name) {
  auto rep = is_taylor_azumaya(a);
  if (!rep.azumaya()) throw InputError(name + " is not Taylor-Azumaya (fails at " + rep.failed_stage + ")");
  return {a, {name}};
}

template <class R>
BrauerClass<R> brauer_product(const BrauerClass<R>& x, const BrauerClass<R>& y) {
  BrauerClass<R> out{tensor_product(x.representative, y.representative), x.provenance};
  out.provenance.insert(out.provenance.end(), y.provenance.begin(), y.provenance.end());
  out.provenance.push_back("tensor");
  return out;
}

template <class R>
BrauerClass<R> brauer_inverse(const BrauerClass<R>& x) {
  BrauerClass<R> out{opposite(x.representative), x.provenance};
  out.provenance.push_back("opposite");
  return out;
}

template <class R>
bool brauer_trivial(const BrauerClass<R>& x) {
  return is_elementary(x.representative).elementary;
}

}  // namespace equibrauer
