// Exact linear algebra: incremental row echelon forms over fields, and
// solve/nullspace over any supported ring (Z/n composite goes through Smith form).
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "smith.hpp"

namespace equibrauer {

template <class R>
void require_field(const R& k, const char* what) {
  if (!k.is_field()) throw Error(std::string(what) + " requires a field, got " + k.name());
}

/// Reduced row echelon basis of a subspace of k^n, grown one vector at a time.
/// Invariant: every stored row has a 1 at its pivot and 0 at all other pivots.
template <class R>
class Echelon {
 public:
  using T = typename R::value_type;

  Echelon(const R& k, std::size_t ncols) : k_(k), ncols_(ncols), pivot_row_(ncols, -1) {
    require_field(k, "row reduction");
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<RVec<R>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Subtracts the span from v; v is zero afterwards iff it was in the span.
  void reduce(RVec<R>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = v[pivots_[r]];
      if (k_.is_zero(c)) continue;
      const T nc = k_.neg(c);
      const RVec<R>& row = rows_[r];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!k_.is_zero(row[j])) v[j] = k_.add(v[j], k_.mul(nc, row[j]));
    }
  }

  bool contains(RVec<R> v) const {
    reduce(v);
    return vec_is_zero(k_, v);
  }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(RVec<R> v) {
    if (full()) return false;
    reduce(v);
    std::size_t p = 0;
    while (p < ncols_ && k_.is_zero(v[p])) ++p;
    if (p == ncols_) return false;
    const T inv = k_.inv(v[p]);
    for (auto& x : v) x = k_.mul(x, inv);
    for (auto& row : rows_) {
      const T c = row[p];
      if (k_.is_zero(c)) continue;
      const T nc = k_.neg(c);
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!k_.is_zero(v[j])) row[j] = k_.add(row[j], k_.mul(nc, v[j]));
    }
    pivot_row_[p] = static_cast<long>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  bool full() const { return rows_.size() == ncols_; }

  /// Basis of {x : row . x = 0 for every stored row}.
  std::vector<RVec<R>> orthogonal_nullspace() const {
    std::vector<RVec<R>> out;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      RVec<R> x(ncols_, k_.zero());
      x[f] = k_.one();
      for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = k_.neg(rows_[r][f]);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  R k_;
  std::size_t ncols_;
  std::vector<RVec<R>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

/// Accumulates homogeneous linear equations row by row (useful when the
/// system is generated on the fly and never materialized as a matrix).
template <class R>
class EquationSystem {
 public:
  EquationSystem(const R& k, std::size_t unknowns) : ech_(k, unknowns) {}
  void add(const RVec<R>& row) { ech_.insert(row); }
  bool saturated() const { return ech_.full(); }
  std::size_t rank() const { return ech_.rank(); }
  std::vector<RVec<R>> solutions() const { return ech_.orthogonal_nullspace(); }

 private:
  Echelon<R> ech_;
};

template <class R>
std::size_t rank_of(const R& k, const RMat<R>& a) {
  Echelon<R> e(k, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(a.row(i));
  return e.rank();
}

template <class R>
std::size_t span_rank(const R& k, std::size_t n, const std::vector<RVec<R>>& vs) {
  Echelon<R> e(k, n);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

/// Extracts a basis (a subset of `vs`, first-come order) of their span.
template <class R>
std::vector<RVec<R>> independent_subset(const R& k, std::size_t n, const std::vector<RVec<R>>& vs) {
  Echelon<R> e(k, n);
  std::vector<RVec<R>> out;
  for (const auto& v : vs)
    if (e.insert(v)) out.push_back(v);
  return out;
}

namespace detail {

template <class R>
IntMat lift_matrix(const R& k, const RMat<R>& a) {
  IntMat m(a.rows(), a.cols(), mpz_class(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = k.to_mpz(a(i, j));
  return m;
}

}  // namespace detail

/// Result of solve_linear: a particular solution (if consistent) and
/// generators of the homogeneous solutions. Over a field the generators are a basis.
template <class R>
struct LinearSolution {
  std::optional<RVec<R>> particular;
  std::vector<RVec<R>> nullspace;
  /// When inconsistent: over a field, a left vector y with yA = 0 and y.b != 0;
  /// over Z/n, the index of the contradictory row of the Smith transform.
  std::optional<RVec<R>> certificate;
  std::optional<std::size_t> certificate_row;

  bool consistent() const { return particular.has_value(); }
};

template <class R>
std::vector<RVec<R>> nullspace(const R& k, const RMat<R>& a);

template <class R>
LinearSolution<R> solve_linear(const R& k, const RMat<R>& a, const RVec<R>& b) {
  if (a.rows() != b.size()) throw InputError("solve_linear: right-hand side has wrong length");
  LinearSolution<R> out;
  const std::size_t n = a.cols();
  if (k.is_field()) {
    // reduce [A | b]; consistent iff no pivot lands in the last column
    Echelon<R> e(k, n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      RVec<R> row = a.row(i);
      row.push_back(b[i]);
      e.insert(std::move(row));
    }
    bool ok = true;
    for (std::size_t r = 0; r < e.rank(); ++r)
      if (e.pivots()[r] == n) ok = false;
    if (ok) {
      RVec<R> x(n, k.zero());
      for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = e.rows()[r][n];
      out.particular = std::move(x);
    } else {
      for (const auto& y : nullspace(k, transpose<R>(a))) {
        typename R::value_type s = k.zero();
        for (std::size_t i = 0; i < y.size(); ++i) s = k.add(s, k.mul(y[i], b[i]));
        if (!k.is_zero(s)) {
          out.certificate = y;
          break;
        }
      }
    }
    out.nullspace = nullspace(k, a);
    return out;
  }
  if constexpr (requires { k.modulus(); }) {
    IntMat ia = detail::lift_matrix(k, a);
    IntVec ib(b.size()), mods(b.size(), mpz_class(static_cast<long>(k.modulus())));
    for (std::size_t i = 0; i < b.size(); ++i) ib[i] = k.to_mpz(b[i]);
    CongruenceSolution s = solve_congruences(ia, ib, mods);
    auto down = [&](const IntVec& v) {
      RVec<R> x(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) x[i] = k.from_mpz(v[i]);
      return x;
    };
    if (s.particular) out.particular = down(*s.particular);
    out.certificate_row = s.certificate_row;
    for (const auto& g : s.kernel) {
      RVec<R> x = down(g);
      if (!vec_is_zero(k, x)) out.nullspace.push_back(std::move(x));
    }
    return out;
  }
  throw Error("solve_linear: unsupported ring");
}

/// Basis (field) or generating set (Z/n) of {x : A x = 0}.
template <class R>
std::vector<RVec<R>> nullspace(const R& k, const RMat<R>& a) {
  if (k.is_field()) {
    Echelon<R> e(k, a.cols());
    for (std::size_t i = 0; i < a.rows() && !e.full(); ++i) e.insert(a.row(i));
    return e.orthogonal_nullspace();
  }
  return solve_linear(k, a, zero_vec(k, a.rows())).nullspace;
}

/// Exact inverse of a square matrix over a field, or nullopt when singular.
template <class R>
std::optional<RMat<R>> inverse(const R& k, const RMat<R>& a) {
  require_field(k, "matrix inversion");
  if (!a.square()) return std::nullopt;
  const std::size_t n = a.rows();
  Echelon<R> e(k, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    RVec<R> row = a.row(i);
    for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? k.one() : k.zero());
    e.insert(std::move(row));
  }
  if (e.rank() != n) return std::nullopt;
  RMat<R> inv(n, n, k.zero());
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t p = e.pivots()[r];
    if (p >= n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv(p, j) = e.rows()[r][n + j];
  }
  return inv;
}

/// Coordinates of v in the given basis (which must be linearly independent).
template <class R>
std::optional<RVec<R>> coordinates(const R& k, const std::vector<RVec<R>>& basis, const RVec<R>& v) {
  RMat<R> a = mat_from_cols(k, v.size(), basis);
  auto s = solve_linear(k, a, v);
  return s.particular;
}

/// Precomputed coordinate extraction for a fixed basis of a subspace.
template <class R>
class CoordinateMap {
 public:
  CoordinateMap(const R& k, std::size_t n, std::vector<RVec<R>> basis) : k_(k), n_(n), basis_(std::move(basis)) {
    // Pick rows (coordinates) where the basis matrix has full row rank.
    RMat<R> b = mat_from_cols(k, n, basis_);
    Echelon<R> e(k, basis_.size());
    RMat<R> sel(0, 0, k.zero());
    std::vector<RVec<R>> selected;
    for (std::size_t i = 0; i < n && e.rank() < basis_.size(); ++i)
      if (e.insert(b.row(i))) {
        rows_.push_back(i);
        selected.push_back(b.row(i));
      }
    if (rows_.size() != basis_.size()) throw Error("CoordinateMap: basis is linearly dependent");
    auto inv = inverse(k, mat_from_rows(k, basis_.size(), selected));
    inv_ = *inv;
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<RVec<R>>& basis() const { return basis_; }

  /// Coordinates; nullopt when v is outside the span.
  std::optional<RVec<R>> operator()(const RVec<R>& v) const {
    RVec<R> sub(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) sub[i] = v[rows_[i]];
    RVec<R> c = mat_vec(k_, inv_, sub);
    RVec<R> back = zero_vec(k_, n_);
    for (std::size_t j = 0; j < c.size(); ++j) vec_axpy(k_, back, c[j], basis_[j]);
    if (back != v) return std::nullopt;
    return c;
  }

 private:
  R k_;
  std::size_t n_;
  std::vector<RVec<R>> basis_;
  std::vector<std::size_t> rows_;
  RMat<R> inv_;
};

}  // namespace equibrauer
