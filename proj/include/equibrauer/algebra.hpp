// Finite-dimensional, possibly non-unital associative algebras given by
// structure constants, and algebra maps between them.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace equibrauer {

/// Raised when algebra data violates an axiom; carries the offending basis indices.
class AlgebraError : public Error {
 public:
  AlgebraError(const std::string& what, std::vector<std::size_t> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// Structure-constant algebra: x_i x_j = sum_l c[i][j][l] x_l, stored sparsely.
template <class R>
class FinAlgebra {
 public:
  using T = typename R::value_type;
  struct Term {
    std::uint32_t index;
    T coeff;
  };
  using Product = std::vector<Term>;

  FinAlgebra() = default;

  /// Unchecked constructor; use make_algebra() for validated construction.
  FinAlgebra(R ring, std::size_t dim, std::vector<Product> table, std::optional<RVec<R>> identity,
             std::vector<std::string> labels = {})
      : ring_(std::move(ring)),
        dim_(dim),
        table_(std::make_shared<const std::vector<Product>>(std::move(table))),
        identity_(std::move(identity)),
        labels_(std::move(labels)) {}

  const R& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  bool has_identity() const { return identity_.has_value(); }
  const std::optional<RVec<R>>& identity() const { return identity_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  /// Additive orders of the basis vectors (Z/n only); empty means all free.
  const std::vector<std::int64_t>& module_orders() const { return orders_; }
  void set_module_orders(std::vector<std::int64_t> o) { orders_ = std::move(o); }

  const Product& product(std::size_t i, std::size_t j) const { return (*table_)[i * dim_ + j]; }

  RVec<R> basis(std::size_t i) const { return unit_vec(ring_, dim_, i); }
  RVec<R> zero() const { return zero_vec(ring_, dim_); }

  RVec<R> basis_product(std::size_t i, std::size_t j) const {
    RVec<R> out = zero();
    for (const auto& t : product(i, j)) out[t.index] = t.coeff;
    return out;
  }

  RVec<R> mul(const RVec<R>& x, const RVec<R>& y) const {
    RVec<R> out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (ring_.is_zero(y[j])) continue;
        const T c = ring_.mul(x[i], y[j]);
        for (const auto& t : product(i, j)) out[t.index] = ring_.add(out[t.index], ring_.mul(c, t.coeff));
      }
    }
    return out;
  }

  /// Matrix of y -> x y.
  RMat<R> left_mult(const RVec<R>& x) const {
    RMat<R> m = zero_mat(ring_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, mul(x, basis(j)));
    return m;
  }
  /// Matrix of y -> y x.
  RMat<R> right_mult(const RVec<R>& x) const {
    RMat<R> m = zero_mat(ring_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, mul(basis(j), x));
    return m;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
  }

  /// Dense structure constants c[i][j][l].
  std::vector<std::vector<RVec<R>>> dense() const {
    std::vector<std::vector<RVec<R>>> sc(dim_, std::vector<RVec<R>>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) sc[i][j] = basis_product(i, j);
    return sc;
  }

  bool operator==(const FinAlgebra& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (basis_product(i, j) != o.basis_product(i, j)) return false;
    return true;
  }

 private:
  R ring_{};
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Product>> table_ = std::make_shared<const std::vector<Product>>();
  std::optional<RVec<R>> identity_;
  std::vector<std::string> labels_;
  std::vector<std::int64_t> orders_;
};

namespace detail {

template <class R>
typename FinAlgebra<R>::Product sparse_of(const R& k, const RVec<R>& v) {
  typename FinAlgebra<R>::Product p;
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!k.is_zero(v[l])) p.push_back({static_cast<std::uint32_t>(l), v[l]});
  return p;
}

template <class R>
void check_associative(const FinAlgebra<R>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RVec<R> ij = a.basis_product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        RVec<R> lhs = a.mul(ij, a.basis(l));
        RVec<R> rhs = a.mul(a.basis(i), a.basis_product(j, l));
        if (lhs != rhs)
          throw AlgebraError("non-associative structure constants at basis triple (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(l) + ")",
                             {i, j, l});
      }
    }
}

template <class R>
bool is_two_sided_identity(const FinAlgebra<R>& a, const RVec<R>& e) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.mul(e, a.basis(i)) != a.basis(i)) return false;
    if (a.mul(a.basis(i), e) != a.basis(i)) return false;
  }
  return true;
}

/// Solves e x_i = x_i = x_i e for all i; returns e if the system is consistent.
template <class R>
std::optional<RVec<R>> detect_identity(const FinAlgebra<R>& a) {
  const std::size_t n = a.dim();
  const R& k = a.ring();
  if (n == 0) return std::nullopt;
  RMat<R> sys = zero_mat(k, 2 * n * n, n);
  RVec<R> rhs = zero_vec(k, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < n; ++u) {
      // coefficient of e_u in (x_u x_i) and (x_i x_u)
      for (const auto& t : a.product(u, i)) sys(i * n + t.index, u) = k.add(sys(i * n + t.index, u), t.coeff);
      for (const auto& t : a.product(i, u))
        sys(n * n + i * n + t.index, u) = k.add(sys(n * n + i * n + t.index, u), t.coeff);
      rhs[i * n + i] = k.one();
      rhs[n * n + i * n + i] = k.one();
    }
  auto s = solve_linear(k, sys, rhs);
  if (!s.particular) return std::nullopt;
  if (!is_two_sided_identity(a, *s.particular)) return std::nullopt;
  return s.particular;
}

}  // namespace detail

/// Validated construction from dense structure constants sc[i][j] = coordinates of x_i x_j.
template <class R>
FinAlgebra<R> make_algebra(const R& k, std::size_t dim, const std::vector<std::vector<RVec<R>>>& sc,
                           std::optional<RVec<R>> identity = std::nullopt, std::vector<std::string> labels = {}) {
  if (sc.size() != dim) throw InputError("structure constants: expected " + std::to_string(dim) + " rows");
  std::vector<typename FinAlgebra<R>::Product> table(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sc[i].size() != dim) throw InputError("structure constants: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < dim; ++j) {
      if (sc[i][j].size() != dim)
        throw InputError("structure constants: entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") has wrong length");
      table[i * dim + j] = detail::sparse_of(k, sc[i][j]);
    }
  }
  if (!labels.empty() && labels.size() != dim) throw InputError("labels: expected " + std::to_string(dim));
  FinAlgebra<R> a(k, dim, std::move(table), std::nullopt, std::move(labels));
  detail::check_associative(a);
  if (identity) {
    if (identity->size() != dim || !detail::is_two_sided_identity(a, *identity))
      throw AlgebraError("declared identity is not a two-sided identity", {});
  } else {
    identity = detail::detect_identity(a);
  }
  return FinAlgebra<R>(k, dim, [&] {
    std::vector<typename FinAlgebra<R>::Product> t(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) t[i * dim + j] = a.product(i, j);
    return t;
  }(), identity, a.labels());
}

/// Builds an algebra from a product callback on basis indices. `verify` re-checks
/// associativity (callers constructing from already-verified data may skip it).
template <class R, class F>
FinAlgebra<R> algebra_from_products(const R& k, std::size_t dim, F&& basis_product,
                                    std::optional<RVec<R>> identity, bool verify,
                                    std::vector<std::string> labels = {}) {
  std::vector<typename FinAlgebra<R>::Product> table(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) table[i * dim + j] = detail::sparse_of(k, basis_product(i, j));
  FinAlgebra<R> a(k, dim, std::move(table), std::nullopt, std::move(labels));
  if (verify) detail::check_associative(a);
  if (identity) {
    if (verify && !detail::is_two_sided_identity(a, *identity))
      throw AlgebraError("declared identity is not a two-sided identity", {});
  } else {
    identity = detail::detect_identity(a);
  }
  return FinAlgebra<R>(k, dim,
                       [&] {
                         std::vector<typename FinAlgebra<R>::Product> t(dim * dim);
                         for (std::size_t i = 0; i < dim; ++i)
                           for (std::size_t j = 0; j < dim; ++j) t[i * dim + j] = a.product(i, j);
                         return t;
                       }(),
                       identity, a.labels());
}

/// The ring k as a one-dimensional algebra.
template <class R>
FinAlgebra<R> base_algebra(const R& k) {
  return algebra_from_products(
      k, 1, [&](std::size_t, std::size_t) { return RVec<R>{k.one()}; }, RVec<R>{k.one()}, false, {"1"});
}

/// Full matrix algebra M_n(k) on matrix units e_ij (index i*n+j).
template <class R>
FinAlgebra<R> matrix_algebra(const R& k, std::size_t n) {
  std::vector<std::string> labels;
  RVec<R> one = zero_vec(k, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    one[i * n + i] = k.one();
    for (std::size_t j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  return algebra_from_products(
      k, n * n,
      [&](std::size_t a, std::size_t b) {
        RVec<R> v = zero_vec(k, n * n);
        if (a % n == b / n) v[(a / n) * n + b % n] = k.one();
        return v;
      },
      one, false, labels);
}

/// Coordinates of a matrix (row-major) in the matrix-unit basis of M_n.
template <class R>
RVec<R> matrix_to_vec(const RMat<R>& m) {
  return m.data();
}

template <class R>
RMat<R> vec_to_matrix(const R& k, const RVec<R>& v, std::size_t n) {
  RMat<R> m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

template <class R>
void require_same_ring(const FinAlgebra<R>& a, const FinAlgebra<R>& b) {
  if (!(a.ring() == b.ring())) throw InputError("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

/// A ⊗ B with (a⊗b)(a'⊗b') = aa'⊗bb'; basis index i*dim(B)+j.
template <class R>
FinAlgebra<R> tensor_product(const FinAlgebra<R>& a, const FinAlgebra<R>& b) {
  require_same_ring(a, b);
  const R& k = a.ring();
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<typename FinAlgebra<R>::Product> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          auto& out = table[(i * nb + j) * n + (i2 * nb + j2)];
          for (const auto& s : a.product(i, i2))
            for (const auto& t : b.product(j, j2))
              out.push_back({static_cast<std::uint32_t>(s.index * nb + t.index), k.mul(s.coeff, t.coeff)});
        }
  std::optional<RVec<R>> id;
  if (a.has_identity() && b.has_identity()) {
    RVec<R> e = zero_vec(k, n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) e[i * nb + j] = k.mul((*a.identity())[i], (*b.identity())[j]);
    id = std::move(e);
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty())
    for (const auto& x : a.labels())
      for (const auto& y : b.labels()) labels.push_back(x + "⊗" + y);
  // A tensor product of associative algebras is associative; an identity exists iff both factors have one.
  return FinAlgebra<R>(k, n, std::move(table), std::move(id), std::move(labels));
}

template <class R>
FinAlgebra<R> opposite(const FinAlgebra<R>& a) {
  const std::size_t n = a.dim();
  std::vector<typename FinAlgebra<R>::Product> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a.product(j, i);
  FinAlgebra<R> op(a.ring(), n, std::move(table), a.identity(), a.labels());
  op.set_module_orders(a.module_orders());
  return op;
}

template <class R>
FinAlgebra<R> enveloping(const FinAlgebra<R>& a) {
  return tensor_product(a, opposite(a));
}

/// Verified algebra homomorphism; matrix has target.dim() rows and source.dim() columns.
template <class R>
class AlgebraMap {
 public:
  AlgebraMap(FinAlgebra<R> source, FinAlgebra<R> target, RMat<R> matrix, bool unit_preserving = false)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw InputError("algebra map: matrix shape does not match source/target dimensions");
    const R& k = source_.ring();
    for (std::size_t i = 0; i < source_.dim(); ++i)
      for (std::size_t j = 0; j < source_.dim(); ++j) {
        RVec<R> lhs = apply(source_.basis_product(i, j));
        RVec<R> rhs = target_.mul(matrix_.col(i), matrix_.col(j));
        if (lhs != rhs)
          throw AlgebraError("map is not multiplicative on basis pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")",
                             {i, j});
      }
    if (unit_preserving) {
      if (!source_.has_identity() || !target_.has_identity() || apply(*source_.identity()) != *target_.identity())
        throw AlgebraError("map does not preserve the identity", {});
    }
    (void)k;
  }

  const FinAlgebra<R>& source() const { return source_; }
  const FinAlgebra<R>& target() const { return target_; }
  const RMat<R>& matrix() const { return matrix_; }

  RVec<R> apply(const RVec<R>& x) const { return mat_vec(source_.ring(), matrix_, x); }

  bool is_injective() const { return rank_of(source_.ring(), matrix_) == source_.dim(); }
  bool is_bijective() const { return source_.dim() == target_.dim() && is_injective(); }
  std::size_t rank() const { return rank_of(source_.ring(), matrix_); }

 private:
  FinAlgebra<R> source_, target_;
  RMat<R> matrix_;
};

/// Verified isomorphism: bijective algebra map with its inverse matrix.
template <class R>
struct AlgebraIso {
  AlgebraMap<R> forward;
  RMat<R> inverse;
};

template <class R>
std::optional<AlgebraIso<R>> make_iso(const FinAlgebra<R>& source, const FinAlgebra<R>& target, const RMat<R>& m) {
  try {
    AlgebraMap<R> f(source, target, m);
    if (!f.is_bijective()) return std::nullopt;
    auto inv = inverse(source.ring(), m);
    if (!inv) return std::nullopt;
    return AlgebraIso<R>{std::move(f), std::move(*inv)};
  } catch (const AlgebraError&) {
    return std::nullopt;
  }
}

/// Outcome of the A ⊗_A A -> A test.
template <class R>
struct UnitalityCertificate {
  bool unital = false;
  std::size_t tensor_dim = 0;  ///< dim of A ⊗_A A (fields only)
  std::vector<RVec<R>> cokernel;  ///< vectors of A not in A·A
  std::vector<RVec<R>> kernel;    ///< elements of A⊗A killed by multiplication but not in the relation span
};

/// A ⊗_A A = (A⊗A)/span{ab⊗c − a⊗bc}; A is unital iff multiplication induces
/// a bijection A ⊗_A A -> A.
template <class R>
UnitalityCertificate<R> is_unital(const FinAlgebra<R>& a) {
  UnitalityCertificate<R> cert;
  const std::size_t n = a.dim();
  const R& k = a.ring();
  if (n == 0) return cert;
  // multiplication map A⊗A -> A, column (i*n+j) = x_i x_j
  RMat<R> m = zero_mat(k, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) m(t.index, i * n + j) = t.coeff;
  if (a.has_identity()) {
    // x ⊗ y = x ⊗ 1y ~ xy ⊗ 1, so A ⊗_A A ≅ A
    cert.tensor_dim = n;
    cert.unital = true;
    return cert;
  }
  // relation vectors ab⊗c − a⊗bc on basis triples
  auto for_each_relation = [&](auto&& sink) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          RVec<R> v = zero_vec(k, n * n);
          for (const auto& t : a.product(i, j)) v[t.index * n + l] = k.add(v[t.index * n + l], t.coeff);
          for (const auto& t : a.product(j, l)) v[i * n + t.index] = k.sub(v[i * n + t.index], t.coeff);
          if (!vec_is_zero(k, v)) sink(std::move(v));
        }
  };
  if (k.is_field()) {
    Echelon<R> img(k, n);
    for (std::size_t c = 0; c < n * n; ++c) img.insert(m.col(c));
    for (std::size_t i = 0; i < n; ++i)
      if (!img.contains(a.basis(i))) {
        cert.cokernel.push_back(a.basis(i));
        img.insert(a.basis(i));
      }
    Echelon<R> relspan(k, n * n);
    for_each_relation([&](RVec<R> v) { relspan.insert(std::move(v)); });
    cert.tensor_dim = n * n - relspan.rank();
    for (const auto& v : nullspace(k, m))
      if (!relspan.contains(v)) cert.kernel.push_back(v);
  } else {
    std::vector<RVec<R>> rel;
    for_each_relation([&](RVec<R> v) { rel.push_back(std::move(v)); });
    auto in_span = [&](const RMat<R>& gens, const RVec<R>& v) { return solve_linear(k, gens, v).consistent(); };
    for (std::size_t i = 0; i < n; ++i)
      if (!in_span(m, a.basis(i))) cert.cokernel.push_back(a.basis(i));
    RMat<R> relm = rel.empty() ? zero_mat(k, n * n, 1) : mat_from_cols(k, n * n, rel);
    for (const auto& v : nullspace(k, m))
      if (!in_span(relm, v)) cert.kernel.push_back(v);
  }
  cert.unital = cert.cokernel.empty() && cert.kernel.empty();
  return cert;
}

/// True iff no nonzero scalar annihilates A.
template <class R>
bool is_faithful(const FinAlgebra<R>& a) {
  if (a.dim() == 0) return false;
  if constexpr (requires { a.ring().modulus(); }) {
    if (a.module_orders().empty()) return true;
    std::int64_t l = 1;
    for (auto o : a.module_orders()) l = std::lcm(l, o);
    return l % a.ring().modulus() == 0;
  }
  return true;
}

/// End_{A^e}(A): all k-linear φ with φ(axb) = aφ(x)b, as n×n matrices, together
/// with the commutative algebra they form under composition.
template <class R>
struct Center {
  std::vector<RMat<R>> maps;
  FinAlgebra<R> algebra;
  std::size_t dim() const { return maps.size(); }
};

namespace detail {

/// Solves the bimodule-endomorphism system directly (n² unknowns).
/// For unital A, φ(axb) = aφ(x)b is equivalent to left and right linearity (A = A³).
template <class R>
std::vector<RMat<R>> bimodule_endos_general(const FinAlgebra<R>& a) {
  const std::size_t n = a.dim();
  const R& k = a.ring();
  // unknown φ(x_c) coefficient on x_l at index c*n + l
  EquationSystem<R> sys(k, n * n);
  for (std::size_t i = 0; i < n && !sys.saturated(); ++i)
    for (std::size_t j = 0; j < n && !sys.saturated(); ++j) {
      // φ(x_i x_j) − x_i φ(x_j) = 0 and φ(x_i x_j) − φ(x_i) x_j = 0, coordinate l
      std::vector<RVec<R>> left(n, zero_vec(k, n * n)), right(n, zero_vec(k, n * n));
      for (const auto& t : a.product(i, j))
        for (std::size_t l = 0; l < n; ++l) {
          left[l][t.index * n + l] = k.add(left[l][t.index * n + l], t.coeff);
          right[l][t.index * n + l] = k.add(right[l][t.index * n + l], t.coeff);
        }
      for (std::size_t u = 0; u < n; ++u) {
        for (const auto& t : a.product(i, u)) left[t.index][j * n + u] = k.sub(left[t.index][j * n + u], t.coeff);
        for (const auto& t : a.product(u, j)) right[t.index][i * n + u] = k.sub(right[t.index][i * n + u], t.coeff);
      }
      for (auto& v : left) sys.add(v);
      for (auto& v : right) sys.add(v);
    }
  std::vector<RMat<R>> out;
  for (const auto& s : sys.solutions()) {
    RMat<R> phi = zero_mat(k, n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t l = 0; l < n; ++l) phi(l, c) = s[c * n + l];
    out.push_back(std::move(phi));
  }
  return out;
}

/// With an identity, φ is left multiplication by the central element φ(1).
template <class R>
std::vector<RMat<R>> bimodule_endos_with_identity(const FinAlgebra<R>& a) {
  const std::size_t n = a.dim();
  const R& k = a.ring();
  EquationSystem<R> sys(k, n);
  for (std::size_t i = 0; i < n && !sys.saturated(); ++i) {
    // z x_i − x_i z = 0
    std::vector<RVec<R>> rows(n, zero_vec(k, n));
    for (std::size_t u = 0; u < n; ++u) {
      for (const auto& t : a.product(u, i)) rows[t.index][u] = k.add(rows[t.index][u], t.coeff);
      for (const auto& t : a.product(i, u)) rows[t.index][u] = k.sub(rows[t.index][u], t.coeff);
    }
    for (auto& r : rows) sys.add(r);
  }
  std::vector<RMat<R>> out;
  for (const auto& z : sys.solutions()) out.push_back(a.left_mult(z));
  return out;
}

/// Algebra structure on a basis of linear maps closed under composition.
template <class R>
FinAlgebra<R> composition_algebra(const R& k, const std::vector<RMat<R>>& maps, std::size_t n) {
  std::vector<RVec<R>> flat;
  for (const auto& m : maps) flat.push_back(m.data());
  CoordinateMap<R> coords(k, n * n, flat);
  RVec<R> id_flat = identity_mat(k, n).data();
  auto id = coords(id_flat);
  return algebra_from_products(
      k, maps.size(),
      [&](std::size_t i, std::size_t j) {
        auto c = coords(mat_mul(k, maps[i], maps[j]).data());
        if (!c) throw Error("composition_algebra: basis not closed under composition");
        return *c;
      },
      id, true);
}

}  // namespace detail

enum class CenterMethod { automatic, general, identity_shortcut };

template <class R>
Center<R> center_endos(const FinAlgebra<R>& a, CenterMethod method = CenterMethod::automatic) {
  require_field(a.ring(), "center_endos");
  if (a.dim() == 0 || !is_unital(a).unital) throw Error("center undefined: algebra is not unital");
  bool shortcut = method == CenterMethod::identity_shortcut ||
                  (method == CenterMethod::automatic && a.has_identity());
  if (shortcut && !a.has_identity()) throw Error("identity shortcut requested for an algebra without identity");
  auto maps = shortcut ? detail::bimodule_endos_with_identity(a) : detail::bimodule_endos_general(a);
  FinAlgebra<R> alg = detail::composition_algebra(a.ring(), maps, a.dim());
  return Center<R>{std::move(maps), std::move(alg)};
}

}  // namespace equibrauer
