// Dual pairs (M, M', μ) and the elementary algebras E(M) = M ⊗ M'.
#pragma once

#include <vector>

#include "algebra.hpp"

namespace equibrauer {

/// Free modules M = k^m, M' = k^{m'} and μ(m'_j ⊗ m_i) = mu(j, i).
template <class R>
struct DualPair {
  R ring;
  std::size_t m = 0, mprime = 0;
  RMat<R> mu;  ///< mprime × m

  std::size_t dim() const { return m * mprime; }
};

template <class R>
void validate_pair(const DualPair<R>& p) {
  if (p.m == 0 || p.mprime == 0) throw InputError("dual pair: M and M' must be nonzero");
  if (p.mu.rows() != p.mprime || p.mu.cols() != p.m) throw InputError("dual pair: μ must be m' × m");
  // surjective iff the entries generate the unit ideal
  bool surj = false;
  if constexpr (requires { p.ring.modulus(); }) {
    std::int64_t g = p.ring.modulus();
    for (const auto& x : p.mu.data()) g = std::gcd(g, x);
    surj = g == 1;
  } else {
    surj = !mat_is_zero(p.ring, p.mu);
  }
  if (!surj) throw InputError("invalid dual pair: μ is not surjective");
}

template <class R>
DualPair<R> make_pair(const R& k, std::size_t m, std::size_t mprime, RMat<R> mu) {
  DualPair<R> p{k, m, mprime, std::move(mu)};
  validate_pair(p);
  return p;
}

/// (k^n, k^n, standard pairing).
template <class R>
DualPair<R> standard_pair(const R& k, std::size_t n) {
  return make_pair(k, n, n, identity_mat(k, n));
}

/// E(P) on basis m_i ⊗ m'_j (index i*m' + j), with the module actions on M and M'.
template <class R>
struct ElementaryAlgebra {
  DualPair<R> pair;
  FinAlgebra<R> algebra;

  /// (m_i ⊗ m'_j) n = μ(m'_j ⊗ n) m_i, as an m × m matrix.
  RMat<R> left_action(std::size_t basis) const {
    const R& k = pair.ring;
    const std::size_t i = basis / pair.mprime, j = basis % pair.mprime;
    RMat<R> a = zero_mat(k, pair.m, pair.m);
    for (std::size_t c = 0; c < pair.m; ++c) a(i, c) = pair.mu(j, c);
    return a;
  }
  /// n' (m_i ⊗ m'_j) = μ(n' ⊗ m_i) m'_j, as an m' × m' matrix acting on columns.
  RMat<R> right_action(std::size_t basis) const {
    const R& k = pair.ring;
    const std::size_t i = basis / pair.mprime, j = basis % pair.mprime;
    RMat<R> a = zero_mat(k, pair.mprime, pair.mprime);
    for (std::size_t c = 0; c < pair.mprime; ++c) a(j, c) = pair.mu(c, i);
    return a;
  }
  RMat<R> left_action_of(const RVec<R>& x) const { return combine(x, true); }
  RMat<R> right_action_of(const RVec<R>& x) const { return combine(x, false); }

 private:
  RMat<R> combine(const RVec<R>& x, bool left) const {
    const R& k = pair.ring;
    const std::size_t d = left ? pair.m : pair.mprime;
    RMat<R> a = zero_mat(k, d, d);
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!k.is_zero(x[b])) a = mat_add(k, a, mat_scale(k, x[b], left ? left_action(b) : right_action(b)));
    return a;
  }
};

template <class R>
ElementaryAlgebra<R> elementary_from_pair(const DualPair<R>& p) {
  validate_pair(p);
  const R& k = p.ring;
  const std::size_t m = p.m, mp = p.mprime, n = m * mp;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < mp; ++j) labels.push_back("m" + std::to_string(i + 1) + "⊗m'" + std::to_string(j + 1));
  auto a = algebra_from_products(
      k, n,
      [&](std::size_t x, std::size_t y) {
        RVec<R> v = zero_vec(k, n);
        v[(x / mp) * mp + y % mp] = p.mu(x % mp, y / mp);
        return v;
      },
      std::nullopt, false, labels);
  ElementaryAlgebra<R> e{p, a};
  // module actions are associative: (xy)·n = x·(y·n) and n'·(xy) = (n'·x)·y
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      RVec<R> xy = a.basis_product(x, y);
      if (e.left_action_of(xy) != mat_mul(k, e.left_action(x), e.left_action(y)))
        throw Error("elementary_from_pair: left action on M is not associative");
      if (e.right_action_of(xy) != mat_mul(k, e.right_action(y), e.right_action(x)))
        throw Error("elementary_from_pair: right action on M' is not associative");
    }
  if (!is_unital(a).unital) throw Error("elementary_from_pair: E(P) is not unital");
  return e;
}

}  // namespace equibrauer
