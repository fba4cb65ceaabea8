// G-module algebras, the smash product A#kG, the graded endomorphism algebra
// π(A) = ⊕ End_A^g(A) and strong innerness.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "azumaya.hpp"
#include "graded.hpp"
#include "multiplier.hpp"

namespace equibrauer {

/// A with a left G-action by algebra automorphisms; action(g) is the matrix of a ↦ g·a.
template <class R>
class GModuleAlgebra {
 public:
  GModuleAlgebra(FinAlgebra<R> a, FinGroup g, std::vector<RMat<R>> action, std::string name = "")
      : alg_(std::move(a)), group_(std::move(g)), act_(std::move(action)), name_(std::move(name)) {
    const R& k = alg_.ring();
    const std::size_t n = alg_.dim(), m = group_.order();
    if (act_.size() != m) throw InputError("G-action: expected one matrix per group element");
    for (const auto& x : act_)
      if (x.rows() != n || x.cols() != n) throw InputError("G-action: matrices must be dim A × dim A");
    if (act_[group_.identity()] != identity_mat(k, n)) throw InputError("G-action: e does not act as the identity");
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (mat_mul(k, act_[x], act_[y]) != act_[group_.mul(x, y)])
          throw InputError("G-action: ρ(g)ρ(h) ≠ ρ(gh) for g=" + std::to_string(x) + ", h=" + std::to_string(y));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (mat_vec(k, act_[x], alg_.basis_product(i, j)) != alg_.mul(act_[x].col(i), act_[x].col(j)))
            throw InputError("G-action: element " + std::to_string(x) + " is not multiplicative on basis pair (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
  }

  const FinAlgebra<R>& algebra() const { return alg_; }
  const FinGroup& group() const { return group_; }
  const R& ring() const { return alg_.ring(); }
  std::size_t dim() const { return alg_.dim(); }
  const std::vector<RMat<R>>& actions() const { return act_; }
  const RMat<R>& action(std::size_t g) const { return act_[g]; }
  RVec<R> act(std::size_t g, const RVec<R>& x) const { return mat_vec(ring(), act_[g], x); }
  const std::string& name() const { return name_; }

 private:
  FinAlgebra<R> alg_;
  FinGroup group_;
  std::vector<RMat<R>> act_;
  std::string name_;
};

template <class R>
GModuleAlgebra<R> trivial_g_module(const FinAlgebra<R>& a, const FinGroup& g, std::string name = "") {
  return GModuleAlgebra<R>(a, g, std::vector<RMat<R>>(g.order(), identity_mat(a.ring(), a.dim())), std::move(name));
}

/// g·a = u_g a u_g⁻¹; the u_g must be units. u_g u_h need only agree with u_gh up to a central scalar.
template <class R>
GModuleAlgebra<R> inner_g_module(const FinAlgebra<R>& a, const FinGroup& g, const std::vector<RVec<R>>& units,
                                 std::string name = "") {
  const R& k = a.ring();
  if (!a.has_identity()) throw InputError("inner action needs an identity");
  if (units.size() != g.order()) throw InputError("inner action: expected one unit per group element");
  std::vector<RMat<R>> act;
  for (const auto& u : units) {
    auto inv = inverse(k, a.left_mult(u));
    if (!inv) throw InputError("inner action: element is not a unit");
    RVec<R> uinv = mat_vec(k, *inv, *a.identity());
    act.push_back(mat_mul(k, a.left_mult(u), a.right_mult(uinv)));
  }
  return GModuleAlgebra<R>(a, g, std::move(act), std::move(name));
}

/// A ⊗ B with the diagonal action.
template <class R>
GModuleAlgebra<R> tensor_g_module(const GModuleAlgebra<R>& a, const GModuleAlgebra<R>& b) {
  if (!(a.group() == b.group())) throw InputError("tensor of G-module algebras: group mismatch");
  std::vector<RMat<R>> act;
  for (std::size_t g = 0; g < a.group().order(); ++g) act.push_back(kron(a.ring(), a.action(g), b.action(g)));
  return GModuleAlgebra<R>(tensor_product(a.algebra(), b.algebra()), a.group(), std::move(act),
                           a.name() + "⊗" + b.name());
}

template <class R>
GModuleAlgebra<R> opposite_g_module(const GModuleAlgebra<R>& a) {
  return GModuleAlgebra<R>(opposite(a.algebra()), a.group(), a.actions(), a.name() + "^op");
}

/// A#kG on basis x_i#g (index g*n + i), graded by g.
/// (x_i#g)(x_j#h) = x_i (g·x_j) # gh.
template <class R>
GradedAlgebra<R> smash_product(const GModuleAlgebra<R>& a) {
  const R& k = a.ring();
  const FinGroup& g = a.group();
  const std::size_t n = a.dim(), m = g.order(), N = n * m;
  const auto& alg = a.algebra();
  std::vector<std::string> labels;
  std::vector<std::size_t> deg;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back((alg.labels().empty() ? "x" + std::to_string(i) : alg.labels()[i]) + "#" + std::to_string(x));
      deg.push_back(x);
    }
  std::optional<RVec<R>> one;
  if (alg.has_identity()) {
    one = zero_vec(k, N);
    for (std::size_t i = 0; i < n; ++i) (*one)[g.identity() * n + i] = (*alg.identity())[i];
  }
  auto s = algebra_from_products(
      k, N,
      [&](std::size_t p, std::size_t q) {
        const std::size_t x = p / n, i = p % n, y = q / n, j = q % n;
        RVec<R> v = alg.mul(alg.basis(i), a.action(x).col(j));
        RVec<R> out = zero_vec(k, N);
        const std::size_t xy = g.mul(x, y);
        for (std::size_t l = 0; l < n; ++l) out[xy * n + l] = v[l];
        return out;
      },
      one, false, labels);
  return GradedAlgebra<R>(std::move(s), g, std::move(deg));
}

/// a ↦ a#e as a vector of A#kG.
template <class R>
RVec<R> smash_embed(const GModuleAlgebra<R>& a, const RVec<R>& x) {
  RVec<R> out = zero_vec(a.ring(), a.dim() * a.group().order());
  const std::size_t off = a.group().identity() * a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) out[off + i] = x[i];
  return out;
}

/// Basis of End_A^g(A) = {f : f(ab) = a f(b), f(ab) = f(a)(g·b)}.
/// With an identity every such f is right multiplication by some x with
/// b x = x (g·b); the general path solves the n² linear conditions directly.
template <class R>
std::vector<RMat<R>> graded_component_endos(const GModuleAlgebra<R>& a, std::size_t g, bool use_identity = true) {
  const R& k = a.ring();
  require_field(k, "graded_component_endos");
  const auto& alg = a.algebra();
  const std::size_t n = a.dim();
  std::vector<RMat<R>> out;
  if (use_identity && alg.has_identity()) {
    EquationSystem<R> sys(k, n);
    // b x − x (g·b) = 0, column l of the unknown x
    for (std::size_t b = 0; b < n; ++b) {
      RMat<R> l = alg.left_mult(alg.basis(b)), r = alg.right_mult(a.action(g).col(b));
      RMat<R> d = mat_add(k, l, mat_scale(k, k.neg(k.one()), r));
      for (std::size_t row = 0; row < n && !sys.saturated(); ++row) sys.add(d.row(row));
    }
    for (const auto& x : sys.solutions()) out.push_back(alg.right_mult(x));
    return out;
  }
  // unknown f(x_c) coordinate l at index c*n + l
  EquationSystem<R> sys(k, n * n);
  for (std::size_t i = 0; i < n && !sys.saturated(); ++i)
    for (std::size_t j = 0; j < n && !sys.saturated(); ++j) {
      const auto xy = alg.basis_product(i, j);
      const RVec<R> gj = a.action(g).col(j);
      // rows indexed by output coordinate r
      std::vector<RVec<R>> left(n, zero_vec(k, n * n)), right(n, zero_vec(k, n * n));
      for (std::size_t c = 0; c < n; ++c)
        if (!k.is_zero(xy[c]))
          for (std::size_t r = 0; r < n; ++r) {
            left[r][c * n + r] = k.add(left[r][c * n + r], xy[c]);
            right[r][c * n + r] = k.add(right[r][c * n + r], xy[c]);
          }
      for (std::size_t u = 0; u < n; ++u) {
        const RVec<R> xiu = alg.basis_product(i, u);   // coefficient of f(x_j)_u
        const RVec<R> ugj = alg.mul(alg.basis(u), gj);  // coefficient of f(x_i)_u
        for (std::size_t r = 0; r < n; ++r) {
          left[r][j * n + u] = k.sub(left[r][j * n + u], xiu[r]);
          right[r][i * n + u] = k.sub(right[r][i * n + u], ugj[r]);
        }
      }
      for (std::size_t r = 0; r < n; ++r) {
        sys.add(left[r]);
        sys.add(right[r]);
      }
    }
  for (const auto& s : sys.solutions()) {
    RMat<R> f = zero_mat(k, n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t l = 0; l < n; ++l) f(l, c) = s[c * n + l];
    out.push_back(std::move(f));
  }
  return out;
}

namespace detail {

/// Two decompositions x_c = Σ w_uv x_u x_v of every basis vector (index u*n + v).
template <class R>
std::pair<std::vector<RVec<R>>, std::vector<RVec<R>>> product_decompositions(const FinAlgebra<R>& a) {
  const R& k = a.ring();
  const std::size_t n = a.dim(), nn = n * n;
  std::vector<RVec<R>> first(n, zero_vec(k, nn)), second(n, zero_vec(k, nn));
  if (a.has_identity()) {
    const RVec<R>& one = *a.identity();
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t t = 0; t < n; ++t) {
        first[c][c * n + t] = one[t];   // x_c · 1
        second[c][t * n + c] = one[t];  // 1 · x_c
      }
    return {first, second};
  }
  RMat<R> mult = zero_mat(k, n, nn);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) mult.set_col(u * n + v, a.basis_product(u, v));
  auto ker = nullspace(k, mult);
  for (std::size_t c = 0; c < n; ++c) {
    auto sol = solve_linear(k, mult, a.basis(c));
    if (!sol.consistent()) throw InputError("algebra is not spanned by products (A² ≠ A)");
    first[c] = *sol.particular;
    second[c] = ker.empty() ? first[c] : vec_add(k, first[c], ker[(c) % ker.size()]);
  }
  return {first, second};
}

/// (f * f')(x_c) = Σ w_uv f(x_u) · g·f'(x_v).
template <class R>
RMat<R> convolve(const GModuleAlgebra<R>& a, const RMat<R>& f, std::size_t g, const RMat<R>& fp,
                 const std::vector<RVec<R>>& w) {
  const R& k = a.ring();
  const auto& alg = a.algebra();
  const std::size_t n = a.dim();
  std::vector<RVec<R>> fu(n), gfv(n);
  for (std::size_t u = 0; u < n; ++u) {
    fu[u] = f.col(u);
    gfv[u] = a.act(g, fp.col(u));
  }
  RMat<R> out = zero_mat(k, n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RVec<R> col = zero_vec(k, n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        const auto& s = w[c][u * n + v];
        if (!k.is_zero(s)) vec_axpy(k, col, s, alg.mul(fu[u], gfv[v]));
      }
    out.set_col(c, col);
  }
  return out;
}

/// s with x = s·y, assuming y ≠ 0; nullopt if x is not a multiple of y.
template <class R>
std::optional<typename R::value_type> ratio(const R& k, const std::vector<typename R::value_type>& x,
                                            const std::vector<typename R::value_type>& y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!k.is_zero(y[i])) {
      auto s = k.mul(x[i], k.inv(y[i]));
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!k.equal(x[j], k.mul(s, y[j]))) return std::nullopt;
      return s;
    }
  return std::nullopt;
}

}  // namespace detail

struct PiOptions {
  bool check_azumaya = true;  ///< off for inputs already known to be Taylor-Azumaya
  bool use_identity = true;
};

/// π(A) with its chosen component basis: components[g] spans End_A^g(A), components[e] = id.
template <class R>
struct PiGalois {
  std::vector<RMat<R>> components;
  GaloisObject<R> object;
  bool decomposition_independent = false;
};

template <class R>
PiGalois<R> pi_galois(const GModuleAlgebra<R>& a, const PiOptions& opt = {}) {
  const R& k = a.ring();
  require_field(k, "pi_galois");
  if (opt.check_azumaya) {
    auto rep = is_taylor_azumaya(a.algebra());
    if (!rep.azumaya()) throw InputError("π: algebra is not Taylor-Azumaya (fails at " + rep.failed_stage + ")");
  }
  const FinGroup& g = a.group();
  const std::size_t m = g.order(), n = a.dim();
  std::vector<RMat<R>> comps(m);
  for (std::size_t x = 0; x < m; ++x) {
    auto b = graded_component_endos(a, x, opt.use_identity);
    if (b.size() != 1)
      throw Error("π: End_A^g(A) has dimension " + std::to_string(b.size()) + " for g=" + std::to_string(x));
    comps[x] = x == g.identity() ? identity_mat(k, n) : b[0];
  }
  auto [w1, w2] = detail::product_decompositions(a.algebra());
  std::vector<typename R::value_type> vals(m * m);
  bool indep = true;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      RMat<R> p = detail::convolve(a, comps[x], x, comps[y], w1);
      if (detail::convolve(a, comps[x], x, comps[y], w2) != p) indep = false;
      auto s = detail::ratio(k, p.data(), comps[g.mul(x, y)].data());
      if (!s) throw Error("π: f_g * f_h is not a multiple of f_gh");
      vals[x * m + y] = *s;
    }
  std::vector<std::size_t> deg(m);
  for (std::size_t x = 0; x < m; ++x) deg[x] = x;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < m; ++x) labels.push_back("f" + std::to_string(x));
  auto alg = algebra_from_products(
      k, m, [&](std::size_t x, std::size_t y) { return vec_scale(k, vals[x * m + y], unit_vec(k, m, g.mul(x, y))); },
      unit_vec(k, m, g.identity()), true, labels);
  return PiGalois<R>{std::move(comps), require_galois(GradedAlgebra<R>(alg, g, deg)), indep};
}

/// S ⊗_A S -> S ⊗ kG for S = A#kG: β is well defined on the quotient by
/// xa ⊗ y − x ⊗ ay and β⁻¹((x#g) ⊗ h) = Σ w_uv (x_u#gh⁻¹) ⊗ (hg⁻¹·x_v#h) inverts it.
struct BalancedTensorReport {
  bool checked = false;
  bool ok = false;
  std::size_t quotient_dim = 0;
  bool decomposition_independent = false;
  std::string note;
};

template <class R>
BalancedTensorReport balanced_tensor_check(const GModuleAlgebra<R>& a, std::size_t max_dim = 24) {
  const R& k = a.ring();
  const FinGroup& g = a.group();
  const std::size_t n = a.dim(), m = g.order(), N = n * m, NN = N * N;
  BalancedTensorReport rep;
  if (N > max_dim) {
    rep.note = "skipped: dim A#kG = " + std::to_string(N) + " exceeds " + std::to_string(max_dim);
    return rep;
  }
  rep.checked = true;
  auto s = smash_product(a);
  const auto& sa = s.algebra();
  auto tensor = [&](const RVec<R>& x, const RVec<R>& y) {
    RVec<R> t = zero_vec(k, NN);
    for (std::size_t p = 0; p < N; ++p)
      if (!k.is_zero(x[p]))
        for (std::size_t q = 0; q < N; ++q)
          if (!k.is_zero(y[q])) t[p * N + q] = k.add(t[p * N + q], k.mul(x[p], y[q]));
    return t;
  };
  Echelon<R> rel(k, NN);
  for (std::size_t c = 0; c < n; ++c) {
    const RVec<R> eta = smash_embed(a, a.algebra().basis(c));
    for (std::size_t p = 0; p < N; ++p) {
      const RVec<R> pa = sa.mul(sa.basis(p), eta);
      for (std::size_t q = 0; q < N; ++q)
        rel.insert(vec_sub(k, tensor(pa, sa.basis(q)), tensor(sa.basis(p), sa.mul(eta, sa.basis(q)))));
    }
  }
  rep.quotient_dim = NN - rel.rank();
  // β on S ⊗ S, target index l*m + h
  RMat<R> beta = zero_mat(k, N * m, NN);
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q)
      for (const auto& t : sa.product(p, q)) beta(t.index * m + s.degree(q), p * N + q) = t.coeff;
  bool ok = true;
  for (const auto& r : rel.rows())
    if (!vec_is_zero(k, mat_vec(k, beta, r))) ok = false;
  auto [w1, w2] = detail::product_decompositions(a.algebra());
  auto inverse_map = [&](const std::vector<RVec<R>>& w) {
    RMat<R> bi = zero_mat(k, NN, N * m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t h = 0; h < m; ++h) {
          const std::size_t ghi = g.mul(x, g.inv(h)), hgi = g.mul(h, g.inv(x));
          RVec<R> col = zero_vec(k, NN);
          for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
              const auto& wt = w[c][u * n + v];
              if (k.is_zero(wt)) continue;
              RVec<R> left = zero_vec(k, N), right = zero_vec(k, N);
              left[ghi * n + u] = k.one();
              const RVec<R> gv = a.act(hgi, a.algebra().basis(v));
              for (std::size_t l = 0; l < n; ++l) right[h * n + l] = gv[l];
              vec_axpy(k, col, wt, tensor(left, right));
            }
          bi.set_col((x * n + c) * m + h, col);
        }
    return bi;
  };
  RMat<R> bi1 = inverse_map(w1), bi2 = inverse_map(w2);
  if (mat_mul(k, beta, bi1) != identity_mat(k, N * m)) ok = false;
  RMat<R> round = mat_mul(k, bi1, beta);
  for (std::size_t c = 0; c < NN && ok; ++c) {
    RVec<R> d = round.col(c);
    d[c] = k.sub(d[c], k.one());
    if (!rel.contains(d)) ok = false;
  }
  rep.decomposition_independent = true;
  for (std::size_t c = 0; c < N * m; ++c)
    if (!rel.contains(vec_sub(k, bi1.col(c), bi2.col(c)))) rep.decomposition_independent = false;
  rep.ok = ok && rep.quotient_dim == N * m;
  if (!rep.ok) rep.note = "β is not a bijection S ⊗_A S -> S ⊗ kG";
  return rep;
}

/// The commutant of A in M(A#kG) against π(A): α(ρ) = ρ2(−#e) read off in each degree,
/// β(f_g) = (a#h ↦ f_g(a)#gh, a#h ↦ h·f_g(h⁻¹·a)#hg).
struct CommutantReport {
  bool checked = false;
  bool ok = false;
  std::size_t commutant_dim = 0;
  std::string note;
};

template <class R>
CommutantReport commutant_check(const GModuleAlgebra<R>& a, const PiGalois<R>& pi, std::size_t max_general = 12) {
  const R& k = a.ring();
  const FinGroup& g = a.group();
  const std::size_t n = a.dim(), m = g.order(), N = n * m;
  CommutantReport rep;
  auto s = smash_product(a);
  if (!s.algebra().has_identity() && N > max_general) {
    rep.note = "skipped: non-unital A#kG of dim " + std::to_string(N) + " exceeds " + std::to_string(max_general);
    return rep;
  }
  rep.checked = true;
  auto mult = multiplier_algebra(s.algebra());
  auto emb = canonical_embedding(mult);
  const auto& ma = mult.algebra;
  const std::size_t d = mult.dim();
  EquationSystem<R> sys(k, d);
  for (std::size_t c = 0; c < n; ++c) {
    RVec<R> e = emb.apply(smash_embed(a, a.algebra().basis(c)));
    RMat<R> diff = mat_add(k, ma.left_mult(e), mat_scale(k, k.neg(k.one()), ma.right_mult(e)));
    for (std::size_t r = 0; r < d; ++r) sys.add(diff.row(r));
  }
  auto comm = sys.solutions();
  rep.commutant_dim = comm.size();
  if (comm.size() != m) {
    rep.note = "commutant has dimension " + std::to_string(comm.size());
    return rep;
  }
  CoordinateMap<R> cc(k, d, comm);
  auto calg = algebra_from_products(
      k, m, [&](std::size_t x, std::size_t y) { return *cc(ma.mul(comm[x], comm[y])); }, std::nullopt, false);
  // α: commutant -> π(A)
  RMat<R> alpha = zero_mat(k, m, m);
  for (std::size_t b = 0; b < m; ++b) {
    Multiplier<R> x = mult.element(comm[b]);
    for (std::size_t h = 0; h < m; ++h) {
      RMat<R> f = zero_mat(k, n, n);
      for (std::size_t c = 0; c < n; ++c) {
        RVec<R> v = mat_vec(k, x.rho2, smash_embed(a, a.algebra().basis(c)));
        for (std::size_t l = 0; l < n; ++l) f(l, c) = v[h * n + l];
      }
      if (mat_is_zero(k, f)) continue;
      auto lam = detail::ratio(k, f.data(), pi.components[h].data());
      if (!lam) {
        rep.note = "α(ρ) has a degree part outside End_A^g(A)";
        return rep;
      }
      alpha(h, b) = *lam;
    }
  }
  RMat<R> beta = zero_mat(k, m, m);
  for (std::size_t x = 0; x < m; ++x) {
    const RMat<R>& f = pi.components[x];
    RMat<R> r1 = zero_mat(k, N, N), r2 = zero_mat(k, N, N);
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t gh = g.mul(x, h), hg = g.mul(h, x);
      RMat<R> conj = mat_mul(k, a.action(h), mat_mul(k, f, a.action(g.inv(h))));
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l) {
          r1(gh * n + l, h * n + c) = f(l, c);
          r2(hg * n + l, h * n + c) = conj(l, c);
        }
    }
    Multiplier<R> mx{r1, r2};
    if (!satisfies_multiplier_identities(s.algebra(), mx)) {
      rep.note = "β(f_g) is not a multiplier";
      return rep;
    }
    auto co = mult.coordinates(mx);
    auto cm = co ? cc(*co) : std::nullopt;
    if (!cm) {
      rep.note = "β(f_g) does not commute with A";
      return rep;
    }
    beta.set_col(x, *cm);
  }
  if (mat_mul(k, alpha, beta) != identity_mat(k, m) || mat_mul(k, beta, alpha) != identity_mat(k, m)) {
    rep.note = "α and β are not mutually inverse";
    return rep;
  }
  try {
    AlgebraMap<R> check(calg, pi.object.algebra(), alpha);
  } catch (const AlgebraError& e) {
    rep.note = std::string("α is not multiplicative: ") + e.what();
    return rep;
  }
  rep.ok = true;
  return rep;
}

/// p(f_g) = (a ↦ f_g(g⁻¹·a), f_g) in M(A); p is an anti-homomorphism π(A) -> M(A).
template <class R>
struct AntiHomReport {
  std::vector<Multiplier<R>> images;
  bool multipliers = false;
  bool anti_multiplicative = false;
  bool unit = false;
  bool ok() const { return multipliers && anti_multiplicative && unit; }
};

template <class R>
AntiHomReport<R> anti_hom_p(const GModuleAlgebra<R>& a, const PiGalois<R>& pi) {
  const R& k = a.ring();
  const FinGroup& g = a.group();
  const std::size_t m = g.order();
  AntiHomReport<R> rep;
  for (std::size_t x = 0; x < m; ++x)
    rep.images.push_back({mat_mul(k, pi.components[x], a.action(g.inv(x))), pi.components[x]});
  rep.multipliers = true;
  for (const auto& im : rep.images)
    if (!satisfies_multiplier_identities(a.algebra(), im)) rep.multipliers = false;
  const std::size_t n = a.dim();
  rep.unit = rep.images[g.identity()] == Multiplier<R>{identity_mat(k, n), identity_mat(k, n)};
  rep.anti_multiplicative = true;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto& c = pi.object.cocycle.at(x, y);
      const auto& pxy = rep.images[g.mul(x, y)];
      Multiplier<R> lhs{mat_scale(k, c, pxy.rho1), mat_scale(k, c, pxy.rho2)};
      if (!(lhs == compose(k, rep.images[y], rep.images[x]))) rep.anti_multiplicative = false;
    }
  return rep;
}

/// f : G -> M(A) with f multiplicative, f(e) = 1 and g·a = f(g) a f(g⁻¹);
/// f[g] holds coordinates in multipliers.algebra.
template <class R>
struct InnerWitness {
  MultiplierAlgebra<R> multipliers;
  std::vector<RVec<R>> f;
};

/// Checks the defining identities of a strong-innerness witness.
template <class R>
bool verify_inner_witness(const GModuleAlgebra<R>& a, const InnerWitness<R>& w) {
  const R& k = a.ring();
  const FinGroup& g = a.group();
  const auto& ma = w.multipliers.algebra;
  if (w.f.size() != g.order() || !ma.has_identity()) return false;
  if (w.f[g.identity()] != *ma.identity()) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (ma.mul(w.f[x], w.f[y]) != w.f[g.mul(x, y)]) return false;
  auto emb = canonical_embedding(w.multipliers);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t c = 0; c < a.dim(); ++c) {
      RVec<R> lhs = emb.apply(a.act(x, a.algebra().basis(c)));
      RVec<R> rhs = ma.mul(ma.mul(w.f[x], emb.apply(a.algebra().basis(c))), w.f[g.inv(x)]);
      if (lhs != rhs) return false;
    }
  (void)k;
  return true;
}

namespace detail {

/// Implementers u_g ∈ M(A)^× with u_g a = (g·a) u_g, rescaled by a coboundary
/// to a homomorphism when the implementer cocycle is trivial.
template <class R>
std::optional<InnerWitness<R>> search_inner_witness(const GModuleAlgebra<R>& a, const MultiplierAlgebra<R>& mult,
                                                    std::string& note) {
  const R& k = a.ring();
  const FinGroup& g = a.group();
  const std::size_t m = g.order(), d = mult.dim();
  const auto& ma = mult.algebra;
  if (!ma.has_identity()) throw Error("multiplier algebra without identity");
  auto emb = canonical_embedding(mult);
  std::vector<RVec<R>> u(m), uinv(m);
  for (std::size_t x = 0; x < m; ++x) {
    if (x == g.identity()) {
      u[x] = uinv[x] = *ma.identity();
      continue;
    }
    EquationSystem<R> sys(k, d);
    for (std::size_t c = 0; c < a.dim(); ++c) {
      RVec<R> ea = emb.apply(a.algebra().basis(c)), ega = emb.apply(a.act(x, a.algebra().basis(c)));
      RMat<R> diff = mat_add(k, ma.right_mult(ea), mat_scale(k, k.neg(k.one()), ma.left_mult(ega)));
      for (std::size_t r = 0; r < d; ++r) sys.add(diff.row(r));
    }
    auto sols = sys.solutions();
    if (sols.size() != 1) {
      note = "implementers of g=" + std::to_string(x) + " form a space of dimension " + std::to_string(sols.size());
      return std::nullopt;
    }
    auto inv = inverse(k, ma.left_mult(sols[0]));
    if (!inv) {
      note = "implementer of g=" + std::to_string(x) + " is not invertible";
      return std::nullopt;
    }
    u[x] = sols[0];
    uinv[x] = mat_vec(k, *inv, *ma.identity());
  }
  std::vector<typename R::value_type> vals(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      auto s = ratio(k, ma.mul(u[x], u[y]), u[g.mul(x, y)]);
      if (!s) throw Error("implementers do not multiply up to scalars");
      vals[x * m + y] = *s;
    }
  Cocycle<R> c(g, k, std::move(vals));
  auto cb = is_coboundary(c);
  if (!cb.is_coboundary) {
    note = "implementer cocycle is not a coboundary";
    return std::nullopt;
  }
  InnerWitness<R> w{mult, {}};
  for (std::size_t x = 0; x < m; ++x) w.f.push_back(vec_scale(k, k.inv((*cb.witness)[x]), u[x]));
  if (!verify_inner_witness(a, w)) throw Error("rescaled implementers fail the witness identities");
  return w;
}

}  // namespace detail

template <class R>
struct StronglyInnerReport {
  bool pi_trivial = false;
  std::optional<InnerWitness<R>> witness;
  std::string note;
  bool strongly_inner() const { return witness.has_value(); }
};

/// Decides strong innerness twice: via [π(A)] = 1 and by searching for a witness.
template <class R>
StronglyInnerReport<R> strongly_inner(const GModuleAlgebra<R>& a, const PiOptions& opt = {}) {
  StronglyInnerReport<R> rep;
  auto pi = pi_galois(a, opt);
  rep.pi_trivial = is_coboundary(pi.object.cocycle).is_coboundary;
  auto mult = multiplier_algebra(a.algebra());
  rep.witness = detail::search_inner_witness(a, mult, rep.note);
  if (rep.pi_trivial != rep.witness.has_value())
    throw Error("internal inconsistency: [π(A)] trivial = " + std::to_string(rep.pi_trivial) +
                " but witness search says " + std::to_string(rep.witness.has_value()) + " (" + rep.note + ")");
  return rep;
}

template <class R>
std::optional<InnerWitness<R>> strongly_inner_witness(const GModuleAlgebra<R>& a, const PiOptions& opt = {}) {
  return strongly_inner(a, opt).witness;
}

/// A dual pair with G acting on M and M' (on_m[g], on_mprime[g]) so that μ is invariant.
template <class R>
struct GDualPair {
  DualPair<R> pair;
  FinGroup group;
  std::vector<RMat<R>> on_m, on_mprime;
};

template <class R>
void validate_g_pair(const GDualPair<R>& p) {
  validate_pair(p.pair);
  const R& k = p.pair.ring;
  const FinGroup& g = p.group;
  const std::size_t m = g.order();
  if (p.on_m.size() != m || p.on_mprime.size() != m) throw InputError("G-dual pair: expected one matrix per element");
  for (std::size_t x = 0; x < m; ++x) {
    if (p.on_m[x].rows() != p.pair.m || p.on_m[x].cols() != p.pair.m || p.on_mprime[x].rows() != p.pair.mprime ||
        p.on_mprime[x].cols() != p.pair.mprime)
      throw InputError("G-dual pair: action matrix has the wrong shape");
    if (mat_mul(k, transpose<R>(p.on_mprime[x]), mat_mul(k, p.pair.mu, p.on_m[x])) != p.pair.mu)
      throw InputError("G-dual pair: μ is not invariant under g=" + std::to_string(x));
  }
  for (const auto* act : {&p.on_m, &p.on_mprime}) {
    if ((*act)[g.identity()] != identity_mat(k, (*act)[0].rows())) throw InputError("G-dual pair: e acts nontrivially");
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (mat_mul(k, (*act)[x], (*act)[y]) != (*act)[g.mul(x, y)])
          throw InputError("G-dual pair: not a group action");
  }
}

/// E(P) with g·(m ⊗ m') = gm ⊗ gm'.
template <class R>
GModuleAlgebra<R> elementary_g_module(const GDualPair<R>& p) {
  validate_g_pair(p);
  auto e = elementary_from_pair(p.pair);
  std::vector<RMat<R>> act;
  for (std::size_t x = 0; x < p.group.order(); ++x) act.push_back(kron(p.pair.ring, p.on_m[x], p.on_mprime[x]));
  return GModuleAlgebra<R>(e.algebra, p.group, std::move(act), "E(P)");
}

/// f(g) = α(ψ(g), ψ'(g⁻¹)) for the action induced by a G-dual pair.
template <class R>
InnerWitness<R> pair_witness(const GDualPair<R>& p) {
  auto e = elementary_g_module(p);
  auto mult = multiplier_algebra(e.algebra());
  InnerWitness<R> w{mult, {}};
  for (std::size_t x = 0; x < p.group.order(); ++x) {
    auto c = mult.coordinates(elementary_alpha(p.pair, p.on_m[x], p.on_mprime[p.group.inv(x)]));
    if (!c) throw Error("pair_witness: α(ψ(g), ψ'(g⁻¹)) is not a multiplier");
    w.f.push_back(*c);
  }
  if (!verify_inner_witness(e, w)) throw Error("pair_witness: induced witness fails verification");
  return w;
}

/// The G-dual pair behind a strongly inner action on E(P): g·m = f_g(m), g·m' = f'_{g⁻¹}(m').
template <class R>
GDualPair<R> recover_pair(const DualPair<R>& p, const GModuleAlgebra<R>& a, const InnerWitness<R>& w) {
  const FinGroup& g = a.group();
  const std::size_t m = g.order();
  std::vector<std::pair<RMat<R>, RMat<R>>> parts;
  for (std::size_t x = 0; x < m; ++x) parts.push_back(elementary_beta(p, w.multipliers.element(w.f[x])));
  GDualPair<R> out{p, g, {}, {}};
  for (std::size_t x = 0; x < m; ++x) {
    out.on_m.push_back(parts[x].first);
    out.on_mprime.push_back(parts[g.inv(x)].second);
  }
  validate_g_pair(out);
  auto induced = elementary_g_module(out);
  if (induced.algebra() != a.algebra() || induced.actions() != a.actions())
    throw Error("recover_pair: recovered pair does not induce the given action");
  return out;
}

}  // namespace equibrauer
