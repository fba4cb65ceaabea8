// G-graded algebras with basis-aligned gradings, kG-Galois objects via the
// canonical map γ, crossed products, cotensor products and the Miyashita action.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohomology.hpp"

namespace equibrauer {

/// Product rule violation A_g A_h ⊄ A_{gh}.
class GradingError : public Error {
 public:
  GradingError(const std::string& what, std::size_t g, std::size_t h, std::vector<std::string> product)
      : Error(what), g_(g), h_(h), product_(std::move(product)) {}
  std::size_t g() const { return g_; }
  std::size_t h() const { return h_; }
  const std::vector<std::string>& product() const { return product_; }

 private:
  std::size_t g_, h_;
  std::vector<std::string> product_;
};

/// Basis-aligned grading: basis vector i has degree degrees[i].
template <class R>
class GradedAlgebra {
 public:
  GradedAlgebra(FinAlgebra<R> a, FinGroup g, std::vector<std::size_t> degrees)
      : alg_(std::move(a)), group_(std::move(g)), deg_(std::move(degrees)) {
    if (deg_.size() != alg_.dim()) throw InputError("grading: expected one degree per basis vector");
    for (auto d : deg_)
      if (d >= group_.order()) throw InputError("grading: degree " + std::to_string(d) + " is not a group element");
    const R& k = alg_.ring();
    for (std::size_t i = 0; i < alg_.dim(); ++i)
      for (std::size_t j = 0; j < alg_.dim(); ++j) {
        const std::size_t gh = group_.mul(deg_[i], deg_[j]);
        for (const auto& t : alg_.product(i, j))
          if (deg_[t.index] != gh) {
            std::vector<std::string> v;
            for (const auto& x : alg_.basis_product(i, j)) v.push_back(k.to_string(x));
            throw GradingError("grading violates A_g A_h ⊆ A_gh for g=" + std::to_string(deg_[i]) +
                                   ", h=" + std::to_string(deg_[j]) + " (basis pair " + std::to_string(i) + "," +
                                   std::to_string(j) + ")",
                               deg_[i], deg_[j], std::move(v));
          }
      }
  }

  const FinAlgebra<R>& algebra() const { return alg_; }
  const FinGroup& group() const { return group_; }
  const R& ring() const { return alg_.ring(); }
  std::size_t dim() const { return alg_.dim(); }
  const std::vector<std::size_t>& degrees() const { return deg_; }
  std::size_t degree(std::size_t i) const { return deg_[i]; }

  std::vector<std::size_t> component(std::size_t g) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < deg_.size(); ++i)
      if (deg_[i] == g) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> component_dims() const {
    std::vector<std::size_t> d(group_.order(), 0);
    for (auto x : deg_) ++d[x];
    return d;
  }
  /// The projection π_g as a diagonal 0/1 matrix.
  RMat<R> projection(std::size_t g) const {
    const R& k = ring();
    RMat<R> p = zero_mat(k, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (deg_[i] == g) p(i, i) = k.one();
    return p;
  }
  /// Degree-g part of a vector.
  RVec<R> part(const RVec<R>& v, std::size_t g) const {
    RVec<R> out = zero_vec(ring(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (deg_[i] == g) out[i] = v[i];
    return out;
  }
  /// Degree of a nonzero homogeneous vector; nullopt if zero or inhomogeneous.
  std::optional<std::size_t> homogeneous_degree(const RVec<R>& v) const {
    std::optional<std::size_t> d;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!ring().is_zero(v[i])) {
        if (d && *d != deg_[i]) return std::nullopt;
        d = deg_[i];
      }
    return d;
  }

 private:
  FinAlgebra<R> alg_;
  FinGroup group_;
  std::vector<std::size_t> deg_;
};

/// Grading from a family of projections. Only basis-aligned gradings (diagonal
/// 0/1 projections) are accepted; re-basis first otherwise.
template <class R>
GradedAlgebra<R> attach_grading(const FinAlgebra<R>& a, const FinGroup& g, const std::vector<RMat<R>>& projections) {
  const R& k = a.ring();
  const std::size_t n = a.dim();
  if (projections.size() != g.order()) throw InputError("grading: expected one projection per group element");
  std::vector<std::size_t> deg(n, g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& p = projections[x];
    if (p.rows() != n || p.cols() != n) throw InputError("grading: projection has wrong shape");
    if (mat_mul(k, p, p) != p) throw InputError("grading: projection " + std::to_string(x) + " is not idempotent");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && !k.is_zero(p(i, j)))
          throw InputError("grading: projection " + std::to_string(x) + " is not basis-aligned");
      }
    for (std::size_t i = 0; i < n; ++i)
      if (k.is_one(p(i, i))) {
        if (deg[i] != g.order()) throw InputError("grading: projections are not orthogonal at basis vector " +
                                                  std::to_string(i));
        deg[i] = x;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (deg[i] == g.order()) throw InputError("grading: projections do not sum to the identity");
  return GradedAlgebra<R>(a, g, deg);
}

/// kG with basis u_g and u_g u_h = u_gh.
template <class R>
GradedAlgebra<R> group_algebra(const R& k, const FinGroup& g) {
  const std::size_t m = g.order();
  std::vector<std::string> labels;
  std::vector<std::size_t> deg;
  for (std::size_t x = 0; x < m; ++x) {
    labels.push_back("u" + std::to_string(x));
    deg.push_back(x);
  }
  auto a = algebra_from_products(
      k, m, [&](std::size_t x, std::size_t y) { return unit_vec(k, m, g.mul(x, y)); }, unit_vec(k, m, g.identity()),
      false, labels);
  return GradedAlgebra<R>(a, g, deg);
}

struct StrongGrading {
  bool strongly_graded = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< (g,h) with S_g S_h ≠ S_gh
};

template <class R>
StrongGrading is_strongly_graded(const GradedAlgebra<R>& s) {
  require_field(s.ring(), "is_strongly_graded");
  const FinGroup& g = s.group();
  const auto dims = s.component_dims();
  StrongGrading out;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      std::vector<RVec<R>> prods;
      for (auto i : s.component(x))
        for (auto j : s.component(y)) prods.push_back(s.algebra().basis_product(i, j));
      // containment holds by the product rule, so equality is a rank comparison
      if (span_rank(s.ring(), s.dim(), prods) != dims[g.mul(x, y)]) {
        out.witness = std::make_pair(x, y);
        return out;
      }
    }
  out.strongly_graded = true;
  return out;
}

/// A validated kG-Galois object: γ with its exact inverse, rank-one basis v_g
/// (v_e = 1, otherwise the lowest-index basis vector of degree g) and cocycle.
template <class R>
struct GaloisObject {
  GradedAlgebra<R> graded;
  RMat<R> gamma, gamma_inverse;
  std::vector<RVec<R>> v;
  Cocycle<R> cocycle;

  const FinAlgebra<R>& algebra() const { return graded.algebra(); }
  const FinGroup& group() const { return graded.group(); }
  const R& ring() const { return graded.ring(); }
};

template <class R>
struct GaloisCheck {
  bool galois = false;
  std::string reason;                ///< empty on success
  std::optional<RVec<R>> kernel;     ///< nonzero element of ker γ when γ is singular
  std::optional<GaloisObject<R>> object;
};

/// γ(x_i ⊗ x_j) = x_i x_j ⊗ deg(j), as a matrix S⊗S -> S⊗kG (target index l*|G| + g).
template <class R>
RMat<R> canonical_map(const GradedAlgebra<R>& s) {
  const std::size_t n = s.dim(), m = s.group().order();
  const R& k = s.ring();
  RMat<R> gm = zero_mat(k, n * m, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : s.algebra().product(i, j)) gm(t.index * m + s.degree(j), i * n + j) = t.coeff;
  return gm;
}

template <class R>
GaloisCheck<R> galois_check(const GradedAlgebra<R>& s) {
  const R& k = s.ring();
  require_field(k, "galois_check");
  const FinGroup& g = s.group();
  const std::size_t n = s.dim(), m = g.order(), e = g.identity();
  GaloisCheck<R> out;
  RMat<R> gm = canonical_map(s);
  if (n != m) {
    out.reason = "γ is not square: dim S = " + std::to_string(n) + " but |G| = " + std::to_string(m);
    auto ker = nullspace(k, gm);
    if (!ker.empty()) out.kernel = ker[0];
    return out;
  }
  auto inv = inverse(k, gm);
  if (!inv) {
    out.reason = "γ is singular";
    out.kernel = nullspace(k, gm).at(0);
    return out;
  }
  const auto& a = s.algebra();
  if (s.component(e).size() != 1 || !a.has_identity() || s.homogeneous_degree(*a.identity()) != e) {
    out.reason = "S_e is not k·1";
    return out;
  }
  std::vector<RVec<R>> v(m);
  for (std::size_t x = 0; x < m; ++x) {
    auto comp = s.component(x);
    if (comp.size() != 1) {
      out.reason = "component " + std::to_string(x) + " is not free of rank one";
      return out;
    }
    v[x] = x == e ? *a.identity() : a.basis(comp[0]);
  }
  std::vector<typename R::value_type> vals(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      RVec<R> p = a.mul(v[x], v[y]);
      const std::size_t xy = g.mul(x, y);
      const std::size_t idx = s.component(xy)[0];
      // v_xy has its single nonzero coordinate at idx
      vals[x * m + y] = k.mul(p[idx], k.inv(v[xy][idx]));
      if (vec_scale(k, vals[x * m + y], v[xy]) != p) throw Error("galois_check: component is not rank one");
    }
  out.galois = true;
  out.object = GaloisObject<R>{s, std::move(gm), std::move(*inv), std::move(v), Cocycle<R>(g, k, std::move(vals))};
  return out;
}

/// Throws if S is not a Galois object.
template <class R>
GaloisObject<R> require_galois(const GradedAlgebra<R>& s) {
  auto c = galois_check(s);
  if (!c.galois) throw Error("not a kG-Galois object: " + c.reason);
  return std::move(*c.object);
}

/// ⊕ k v_g with v_g v_h = α(g,h) v_gh.
template <class R>
GaloisObject<R> crossed_product(const R& k, const FinGroup& g, const Cocycle<R>& alpha) {
  const std::size_t m = g.order();
  std::vector<std::string> labels;
  std::vector<std::size_t> deg;
  for (std::size_t x = 0; x < m; ++x) {
    labels.push_back("v" + std::to_string(x));
    deg.push_back(x);
  }
  auto a = algebra_from_products(
      k, m, [&](std::size_t x, std::size_t y) { return vec_scale(k, alpha.at(x, y), unit_vec(k, m, g.mul(x, y))); },
      unit_vec(k, m, g.identity()), true, labels);
  return require_galois(GradedAlgebra<R>(a, g, deg));
}

/// S□T = ⊕_g S_g ⊗ T_g on basis pairs of equal degree (ordered by (i, j)).
template <class R>
GaloisObject<R> cotensor(const GaloisObject<R>& s, const GaloisObject<R>& t) {
  require_same_ring(s.algebra(), t.algebra());
  if (!(s.group() == t.group())) throw InputError("cotensor: group mismatch");
  const auto& gs = s.graded;
  const auto& gt = t.graded;
  const R& k = s.ring();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  std::vector<std::size_t> deg;
  for (std::size_t i = 0; i < gs.dim(); ++i)
    for (std::size_t j = 0; j < gt.dim(); ++j)
      if (gs.degree(i) == gt.degree(j)) {
        basis.emplace_back(i, j);
        deg.push_back(gs.degree(i));
      }
  const std::size_t n = basis.size(), nt = gt.dim();
  std::vector<long> pos(gs.dim() * nt, -1);
  for (std::size_t b = 0; b < n; ++b) pos[basis[b].first * nt + basis[b].second] = static_cast<long>(b);
  auto restrict_vec = [&](const RVec<R>& full) {
    RVec<R> v = zero_vec(k, n);
    for (std::size_t x = 0; x < full.size(); ++x)
      if (!k.is_zero(full[x])) {
        if (pos[x] < 0) throw Error("cotensor: product left S□T");
        v[pos[x]] = full[x];
      }
    return v;
  };
  const auto& sa = s.algebra();
  const auto& ta = t.algebra();
  RVec<R> one_full = zero_vec(k, gs.dim() * nt);
  for (std::size_t i = 0; i < gs.dim(); ++i)
    for (std::size_t j = 0; j < nt; ++j) one_full[i * nt + j] = k.mul((*sa.identity())[i], (*ta.identity())[j]);
  auto a = algebra_from_products(
      k, n,
      [&](std::size_t p, std::size_t q) {
        RVec<R> x = sa.basis_product(basis[p].first, basis[q].first);
        RVec<R> y = ta.basis_product(basis[p].second, basis[q].second);
        RVec<R> full = zero_vec(k, gs.dim() * nt);
        for (std::size_t i = 0; i < x.size(); ++i)
          if (!k.is_zero(x[i]))
            for (std::size_t j = 0; j < y.size(); ++j) full[i * nt + j] = k.add(full[i * nt + j], k.mul(x[i], y[j]));
        return restrict_vec(full);
      },
      restrict_vec(one_full), false);
  return require_galois(GradedAlgebra<R>(a, s.group(), deg));
}

/// Verified graded isomorphism S -> T.
template <class R>
struct GradedIso {
  RMat<R> matrix;
  RMat<R> inverse;
};

/// Checks that m is a unit-preserving, degree-preserving algebra bijection S -> T.
template <class R>
std::optional<GradedIso<R>> verify_graded_iso(const GradedAlgebra<R>& s, const GradedAlgebra<R>& t, const RMat<R>& m) {
  if (!(s.group() == t.group()) || s.dim() != t.dim()) return std::nullopt;
  auto iso = make_iso(s.algebra(), t.algebra(), m);
  if (!iso) return std::nullopt;
  const R& k = s.ring();
  if (s.algebra().has_identity() != t.algebra().has_identity()) return std::nullopt;
  if (s.algebra().has_identity() && mat_vec(k, m, *s.algebra().identity()) != *t.algebra().identity())
    return std::nullopt;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto d = t.homogeneous_degree(m.col(i));
    if (!d || *d != s.degree(i)) return std::nullopt;
  }
  return GradedIso<R>{m, iso->inverse};
}

template <class R>
struct GaloisComparison {
  bool equal = false;
  std::optional<std::vector<typename R::value_type>> coboundary;  ///< b with α_S α_T⁻¹ = δb
  std::optional<GradedIso<R>> iso;                                ///< S -> T, v_g ↦ b(g) w_g
  std::string note;
};

/// Class equality in Gal(k, G), with a re-verified graded isomorphism witness.
template <class R>
GaloisComparison<R> galois_classes_equal(const GaloisObject<R>& s, const GaloisObject<R>& t) {
  GaloisComparison<R> out;
  if (!(s.group() == t.group())) throw InputError("galois_classes_equal: group mismatch");
  auto cb = is_coboundary(s.cocycle * t.cocycle.inverse());
  if (!cb.is_coboundary) {
    out.note = cb.note;
    return out;
  }
  const R& k = s.ring();
  const auto& b = *cb.witness;
  const std::size_t n = s.graded.dim();
  RMat<R> m = zero_mat(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g = s.graded.degree(i);
    // x_i = λ v_g with λ = 1 / (v_g)_i
    auto lambda = k.inv(s.v[g][i]);
    m.set_col(i, vec_scale(k, k.mul(lambda, b[g]), t.v[g]));
  }
  out.iso = verify_graded_iso(s.graded, t.graded, m);
  if (!out.iso) throw Error("galois_classes_equal: coboundary witness did not yield a graded isomorphism");
  out.coboundary = b;
  out.equal = true;
  return out;
}

enum class MiyashitaConvention { corrected, literal };

inline MiyashitaConvention parse_convention(const std::string& s) {
  if (s == "corrected") return MiyashitaConvention::corrected;
  if (s == "literal") return MiyashitaConvention::literal;
  throw InputError("unknown Miyashita convention \"" + s + "\" (expected corrected or literal)");
}

inline std::string convention_name(MiyashitaConvention c) {
  return c == MiyashitaConvention::corrected ? "corrected" : "literal";
}

/// b ↦ Σ X b Y with Σ X⊗Y = γ⁻¹(1⊗g⁻¹) (corrected) or γ⁻¹(1⊗g) (literal).
template <class R>
RMat<R> miyashita_action(const GaloisObject<R>& s, std::size_t g,
                         MiyashitaConvention conv = MiyashitaConvention::corrected) {
  const R& k = s.ring();
  const auto& a = s.algebra();
  const std::size_t n = a.dim(), m = s.group().order();
  const std::size_t h = conv == MiyashitaConvention::corrected ? s.group().inv(g) : g;
  RVec<R> rhs = zero_vec(k, n * m);
  for (std::size_t l = 0; l < n; ++l) rhs[l * m + h] = (*a.identity())[l];
  RVec<R> xy = mat_vec(k, s.gamma_inverse, rhs);
  RMat<R> op = zero_mat(k, n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RVec<R> col = zero_vec(k, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& coef = xy[i * n + j];
        if (k.is_zero(coef)) continue;
        vec_axpy(k, col, coef, a.mul(a.basis_product(i, c), a.basis(j)));
      }
    op.set_col(c, col);
  }
  return op;
}

struct MiyashitaReport {
  bool is_group_action = false;
  bool yetter_drinfeld = false;
  bool quantum_commutative = false;
  bool automorphisms = false;
  std::string first_failure;
  bool all() const { return is_group_action && yetter_drinfeld && quantum_commutative; }
};

template <class R>
MiyashitaReport miyashita_properties(const GaloisObject<R>& s, MiyashitaConvention conv = MiyashitaConvention::corrected) {
  const R& k = s.ring();
  const FinGroup& g = s.group();
  const auto& a = s.algebra();
  const std::size_t n = a.dim(), m = g.order();
  std::vector<RMat<R>> ops;
  for (std::size_t x = 0; x < m; ++x) ops.push_back(miyashita_action(s, x, conv));
  MiyashitaReport r;
  auto fail = [&](const std::string& what) {
    if (r.first_failure.empty()) r.first_failure = what;
  };
  r.is_group_action = ops[g.identity()] == identity_mat(k, n);
  if (!r.is_group_action) fail("e does not act as the identity");
  for (std::size_t x = 0; x < m && r.is_group_action; ++x)
    for (std::size_t y = 0; y < m && r.is_group_action; ++y)
      if (mat_mul(k, ops[x], ops[y]) != ops[g.mul(x, y)]) {
        r.is_group_action = false;
        fail("action of " + std::to_string(x) + "·" + std::to_string(y) + " is not the composite");
      }
  r.automorphisms = true;
  for (std::size_t x = 0; x < m && r.automorphisms; ++x) {
    for (std::size_t i = 0; i < n && r.automorphisms; ++i)
      for (std::size_t j = 0; j < n && r.automorphisms; ++j)
        if (mat_vec(k, ops[x], a.basis_product(i, j)) != a.mul(ops[x].col(i), ops[x].col(j))) r.automorphisms = false;
  }
  r.yetter_drinfeld = true;
  for (std::size_t x = 0; x < m && r.yetter_drinfeld; ++x)
    for (std::size_t i = 0; i < n && r.yetter_drinfeld; ++i) {
      auto d = s.graded.homogeneous_degree(ops[x].col(i));
      if (!d || *d != g.conj(x, s.graded.degree(i))) {
        r.yetter_drinfeld = false;
        fail("g=" + std::to_string(x) + " moves basis vector " + std::to_string(i) + " to the wrong degree");
      }
    }
  r.quantum_commutative = true;
  for (std::size_t i = 0; i < n && r.quantum_commutative; ++i) {
    const std::size_t sigma = s.graded.degree(i);
    for (std::size_t j = 0; j < n && r.quantum_commutative; ++j)
      if (a.basis_product(i, j) != a.mul(ops[sigma].col(j), a.basis(i))) {
        r.quantum_commutative = false;
        fail("b_σ a ≠ (σ⇀a) b_σ for basis pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return r;
}

}  // namespace equibrauer
