// Multiplier algebras M(A) and the model of M(E(P)) as pairs (f, f').
#pragma once

#include <vector>

#include "elementary.hpp"

namespace equibrauer {

/// (ρ1, ρ2): ρ1 right A-linear, ρ2 left A-linear, a·ρ1(b) = ρ2(a)·b.
template <class R>
struct Multiplier {
  RMat<R> rho1, rho2;
  bool operator==(const Multiplier&) const = default;
};

template <class R>
Multiplier<R> compose(const R& k, const Multiplier<R>& x, const Multiplier<R>& y) {
  return {mat_mul(k, x.rho1, y.rho1), mat_mul(k, y.rho2, x.rho2)};
}

template <class R>
bool satisfies_multiplier_identities(const FinAlgebra<R>& a, const Multiplier<R>& m) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RVec<R> xy = a.basis_product(i, j);
      if (mat_vec(k, m.rho1, xy) != a.mul(m.rho1.col(i), a.basis(j))) return false;
      if (mat_vec(k, m.rho2, xy) != a.mul(a.basis(i), m.rho2.col(j))) return false;
      if (a.mul(a.basis(i), m.rho1.col(j)) != a.mul(m.rho2.col(i), a.basis(j))) return false;
    }
  return true;
}

/// M(A) on a solved basis of multipliers; `algebra` has the pair (id, id) as identity.
template <class R>
struct MultiplierAlgebra {
  FinAlgebra<R> base;
  std::vector<Multiplier<R>> basis;
  FinAlgebra<R> algebra;
  bool via_identity = false;  ///< A had an identity, so M(A) was read off as A

  std::size_t dim() const { return basis.size(); }

  Multiplier<R> element(const RVec<R>& c) const {
    const R& k = base.ring();
    Multiplier<R> out{zero_mat(k, base.dim(), base.dim()), zero_mat(k, base.dim(), base.dim())};
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (k.is_zero(c[i])) continue;
      out.rho1 = mat_add(k, out.rho1, mat_scale(k, c[i], basis[i].rho1));
      out.rho2 = mat_add(k, out.rho2, mat_scale(k, c[i], basis[i].rho2));
    }
    return out;
  }

  std::optional<RVec<R>> coordinates(const Multiplier<R>& m) const {
    return coords_()(flatten(m));
  }

  static RVec<R> flatten(const Multiplier<R>& m) {
    RVec<R> v = m.rho1.data();
    v.insert(v.end(), m.rho2.data().begin(), m.rho2.data().end());
    return v;
  }

 private:
  CoordinateMap<R> coords_() const {
    std::vector<RVec<R>> flat;
    for (const auto& b : basis) flat.push_back(flatten(b));
    return CoordinateMap<R>(base.ring(), 2 * base.dim() * base.dim(), flat);
  }
};

namespace detail {

/// Unknown ρ1(x_c) coefficient on x_l at c*n + l, ρ2 shifted by n².
template <class R>
std::vector<Multiplier<R>> solve_multipliers(const FinAlgebra<R>& a) {
  const R& k = a.ring();
  const std::size_t n = a.dim(), nn = n * n, N = 2 * nn;
  EquationSystem<R> sys(k, N);
  for (std::size_t i = 0; i < n && !sys.saturated(); ++i)
    for (std::size_t j = 0; j < n && !sys.saturated(); ++j) {
      std::vector<RVec<R>> r1(n, zero_vec(k, N)), r2(n, zero_vec(k, N)), c(n, zero_vec(k, N));
      // ρ1(x_i x_j) − ρ1(x_i) x_j and ρ2(x_i x_j) − x_i ρ2(x_j)
      for (const auto& t : a.product(i, j))
        for (std::size_t l = 0; l < n; ++l) {
          r1[l][t.index * n + l] = k.add(r1[l][t.index * n + l], t.coeff);
          r2[l][nn + t.index * n + l] = k.add(r2[l][nn + t.index * n + l], t.coeff);
        }
      for (std::size_t u = 0; u < n; ++u) {
        for (const auto& t : a.product(u, j)) r1[t.index][i * n + u] = k.sub(r1[t.index][i * n + u], t.coeff);
        for (const auto& t : a.product(i, u))
          r2[t.index][nn + j * n + u] = k.sub(r2[t.index][nn + j * n + u], t.coeff);
        // x_i ρ1(x_j) − ρ2(x_i) x_j
        for (const auto& t : a.product(i, u)) c[t.index][j * n + u] = k.add(c[t.index][j * n + u], t.coeff);
        for (const auto& t : a.product(u, j)) c[t.index][nn + i * n + u] = k.sub(c[t.index][nn + i * n + u], t.coeff);
      }
      for (auto* rows : {&r1, &r2, &c})
        for (auto& v : *rows) sys.add(v);
    }
  std::vector<Multiplier<R>> out;
  for (const auto& s : sys.solutions()) {
    Multiplier<R> m{zero_mat(k, n, n), zero_mat(k, n, n)};
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t l = 0; l < n; ++l) {
        m.rho1(l, col) = s[col * n + l];
        m.rho2(l, col) = s[nn + col * n + l];
      }
    out.push_back(std::move(m));
  }
  return out;
}

template <class R>
FinAlgebra<R> multiplier_product_algebra(const FinAlgebra<R>& a, const std::vector<Multiplier<R>>& basis) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  std::vector<RVec<R>> flat;
  for (const auto& b : basis) flat.push_back(MultiplierAlgebra<R>::flatten(b));
  CoordinateMap<R> coords(k, 2 * n * n, flat);
  auto id = coords(MultiplierAlgebra<R>::flatten({identity_mat(k, n), identity_mat(k, n)}));
  if (!id) throw Error("multiplier algebra: (id, id) is not in the solution space");
  return algebra_from_products(
      k, basis.size(),
      [&](std::size_t i, std::size_t j) {
        auto c = coords(MultiplierAlgebra<R>::flatten(compose(k, basis[i], basis[j])));
        if (!c) throw Error("multiplier algebra: solution space not closed under composition");
        return *c;
      },
      *id, false);
}

}  // namespace detail

enum class MultiplierMethod { automatic, general };

template <class R>
MultiplierAlgebra<R> multiplier_algebra(const FinAlgebra<R>& a, MultiplierMethod method = MultiplierMethod::automatic) {
  require_field(a.ring(), "multiplier_algebra");
  if (!is_faithful(a)) throw Error("multiplier algebra refused: algebra is not faithful");
  if (!is_unital(a).unital) throw Error("multiplier algebra refused: algebra is not unital");
  const R& k = a.ring();
  if (a.has_identity() && method == MultiplierMethod::automatic) {
    // every multiplier is (L_x, R_x) with x = ρ1(1)
    std::vector<Multiplier<R>> basis;
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back({a.left_mult(a.basis(i)), a.right_mult(a.basis(i))});
    return MultiplierAlgebra<R>{a, std::move(basis), a, true};
  }
  auto basis = detail::solve_multipliers(a);
  auto alg = detail::multiplier_product_algebra(a, basis);
  (void)k;
  return MultiplierAlgebra<R>{a, std::move(basis), std::move(alg), false};
}

/// a ↦ (L_a, R_a), verified multiplicative. Its kernel is the two-sided annihilator
/// of A, which can be nonzero for unital faithful A: E(k², k², e11) kills m2⊗m'2.
template <class R>
AlgebraMap<R> canonical_embedding(const MultiplierAlgebra<R>& m) {
  const FinAlgebra<R>& a = m.base;
  const R& k = a.ring();
  RMat<R> mat = zero_mat(k, m.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto c = m.coordinates({a.left_mult(a.basis(i)), a.right_mult(a.basis(i))});
    if (!c) throw Error("canonical embedding: (L_a, R_a) is not a multiplier");
    mat.set_col(i, *c);
  }
  return AlgebraMap<R>(a, m.algebra, std::move(mat));
}

/// β: M(E(P)) → Ē, contracting against m'_j0, m_i0 with μ(m'_j0 ⊗ m_i0) invertible.
template <class R>
std::pair<RMat<R>, RMat<R>> elementary_beta(const DualPair<R>& p, const Multiplier<R>& x) {
  const R& k = p.ring;
  const std::size_t m = p.m, mp = p.mprime;
  std::size_t j0 = 0, i0 = 0;
  bool found = false;
  for (std::size_t j = 0; j < mp && !found; ++j)
    for (std::size_t i = 0; i < m && !found; ++i)
      if (k.is_unit(p.mu(j, i))) j0 = j, i0 = i, found = true;
  if (!found) throw InputError("elementary_beta: μ has no invertible entry");
  const auto inv = k.inv(p.mu(j0, i0));
  RMat<R> f = zero_mat(k, m, m), fp = zero_mat(k, mp, mp);
  // f(m_c) = contraction of ρ1(m_c⊗m'_j0) against m_i0
  for (std::size_t c = 0; c < m; ++c) {
    RVec<R> y = x.rho1.col(c * mp + j0);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < mp; ++s) f(r, c) = k.add(f(r, c), k.mul(y[r * mp + s], k.mul(p.mu(s, i0), inv)));
  }
  // f'(m'_c) = contraction of ρ2(m_i0⊗m'_c) against m'_j0
  for (std::size_t c = 0; c < mp; ++c) {
    RVec<R> y = x.rho2.col(i0 * mp + c);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < mp; ++s) fp(s, c) = k.add(fp(s, c), k.mul(y[r * mp + s], k.mul(p.mu(j0, r), inv)));
  }
  return {std::move(f), std::move(fp)};
}

/// α: Ē → M(E(P)), (f, f') ↦ (f ⊗ id, id ⊗ f').
template <class R>
Multiplier<R> elementary_alpha(const DualPair<R>& p, const RMat<R>& f, const RMat<R>& fp) {
  return {kron(p.ring, f, identity_mat(p.ring, p.mprime)), kron(p.ring, identity_mat(p.ring, p.m), fp)};
}

/// Ē = {(f, f') : μ(m'⊗f(m)) = μ(f'(m')⊗m)} ⊆ End(M) × End(M')^op, with the
/// mutually inverse maps α: Ē → M(E(P)) and β: M(E(P)) → Ē as matrices.
template <class R>
struct ElementaryMultiplierModel {
  ElementaryAlgebra<R> elementary;
  std::vector<std::pair<RMat<R>, RMat<R>>> pairs;  ///< basis (f, f') of Ē
  FinAlgebra<R> ebar;
  MultiplierAlgebra<R> multipliers;
  RMat<R> alpha, beta;
};

template <class R>
ElementaryMultiplierModel<R> elementary_multiplier_model(const DualPair<R>& p) {
  require_field(p.ring, "elementary_multiplier_model");
  const R& k = p.ring;
  const std::size_t m = p.m, mp = p.mprime, N = m * m + mp * mp;
  auto e = elementary_from_pair(p);

  // mu·F − F'^T·mu = 0; F(r, i) at r*m + i, F'(s, j) at m² + s*mp + j
  EquationSystem<R> sys(k, N);
  for (std::size_t j = 0; j < mp; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      RVec<R> row = zero_vec(k, N);
      for (std::size_t r = 0; r < m; ++r) row[r * m + i] = k.add(row[r * m + i], p.mu(j, r));
      for (std::size_t s = 0; s < mp; ++s) row[m * m + s * mp + j] = k.sub(row[m * m + s * mp + j], p.mu(s, i));
      sys.add(row);
    }
  std::vector<std::pair<RMat<R>, RMat<R>>> pairs;
  std::vector<RVec<R>> flat;
  for (const auto& s : sys.solutions()) {
    RMat<R> f = zero_mat(k, m, m), fp = zero_mat(k, mp, mp);
    for (std::size_t t = 0; t < m * m; ++t) f(t / m, t % m) = s[t];
    for (std::size_t t = 0; t < mp * mp; ++t) fp(t / mp, t % mp) = s[m * m + t];
    pairs.emplace_back(std::move(f), std::move(fp));
    flat.push_back(s);
  }
  CoordinateMap<R> coords(k, N, flat);
  auto cat = [&](const RMat<R>& f, const RMat<R>& fp) {
    RVec<R> v = f.data();
    v.insert(v.end(), fp.data().begin(), fp.data().end());
    return v;
  };
  auto id = coords(cat(identity_mat(k, m), identity_mat(k, mp)));
  FinAlgebra<R> ebar = algebra_from_products(
      k, pairs.size(),
      [&](std::size_t a, std::size_t b) {
        // (f, f')(g, g') = (f∘g, g'∘f')
        auto c = coords(cat(mat_mul(k, pairs[a].first, pairs[b].first), mat_mul(k, pairs[b].second, pairs[a].second)));
        if (!c) throw Error("Ē not closed under multiplication");
        return *c;
      },
      id, false);

  auto mult = multiplier_algebra(e.algebra, MultiplierMethod::general);

  // α(f, f') = (f ⊗ id, id ⊗ f')
  RMat<R> alpha = zero_mat(k, mult.dim(), pairs.size());
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    const auto& [f, fp] = pairs[a];
    auto c = mult.coordinates(elementary_alpha(p, f, fp));
    if (!c) throw Error("α(f, f') is not a multiplier");
    alpha.set_col(a, *c);
  }

  RMat<R> beta = zero_mat(k, pairs.size(), mult.dim());
  for (std::size_t b = 0; b < mult.dim(); ++b) {
    auto [f, fp] = elementary_beta(p, mult.basis[b]);
    auto cc = coords(cat(f, fp));
    if (!cc) throw Error("β(ρ) does not land in Ē");
    beta.set_col(b, *cc);
  }

  AlgebraMap<R> check(ebar, mult.algebra, alpha, true);
  if (mat_mul(k, alpha, beta) != identity_mat(k, mult.dim()) || mat_mul(k, beta, alpha) != identity_mat(k, pairs.size()))
    throw Error("α and β are not mutually inverse");
  return {std::move(e), std::move(pairs), std::move(ebar), std::move(mult), std::move(alpha), std::move(beta)};
}

}  // namespace equibrauer
