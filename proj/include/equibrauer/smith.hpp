// Smith normal form over Z and systems of congruences built on it.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace equibrauer {

using IntMat = Mat<mpz_class>;
using IntVec = Vec<mpz_class>;

inline IntMat int_identity(std::size_t n) {
  IntMat m(n, n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
  IntMat c(a.rows(), b.cols(), mpz_class(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(l, j) != 0) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
/// `v_inv` is V^{-1}, maintained alongside V.
struct SmithForm {
  IntMat u, d, v, v_inv;
  std::size_t rank = 0;

  std::vector<mpz_class> diagonal() const {
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

class SmithWorker {
 public:
  explicit SmithWorker(const IntMat& a)
      : a_(a), u_(int_identity(a.rows())), v_(int_identity(a.cols())), vi_(int_identity(a.cols())) {}

  SmithForm run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        bool changed = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a_(i, t) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
          row_addmul(i, t, -q);
          if (a_(i, t) != 0) {
            swap_rows(i, t);
            changed = true;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_(t, j) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
          col_addmul(j, t, -q);
          if (a_(t, j) != 0) {
            swap_cols(j, t);
            changed = true;
          }
        }
        if (changed) continue;
        // row and column t are clear; enforce divisibility of the remaining block
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
          for (std::size_t j = t + 1; j < n && !fixed; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              row_addmul(t, i, 1);
              fixed = true;
            }
        if (!fixed) break;
      }
      if (a_(t, t) < 0) {
        for (std::size_t j = 0; j < n; ++j) a_(t, j) = -a_(t, j);
        for (std::size_t j = 0; j < m; ++j) u_(t, j) = -u_(t, j);
      }
    }
    SmithForm out{u_, a_, v_, vi_, t};
    return out;
  }

 private:
  bool move_min_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        mpz_class mag = abs(a_(i, j));
        if (!found || mag < best) {
          best = mag;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }
  // row_i += c * row_j
  void row_addmul(std::size_t i, std::size_t j, const mpz_class& c) {
    for (std::size_t k = 0; k < a_.cols(); ++k) a_(i, k) += c * a_(j, k);
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(i, k) += c * u_(j, k);
  }
  // col_i += c * col_j;  V <- V E,  V^{-1} <- E^{-1} V^{-1}
  void col_addmul(std::size_t i, std::size_t j, const mpz_class& c) {
    for (std::size_t k = 0; k < a_.rows(); ++k) a_(k, i) += c * a_(k, j);
    for (std::size_t k = 0; k < v_.rows(); ++k) v_(k, i) += c * v_(k, j);
    for (std::size_t k = 0; k < vi_.cols(); ++k) vi_(j, k) -= c * vi_(i, k);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a_.cols(); ++k) std::swap(a_(i, k), a_(j, k));
    for (std::size_t k = 0; k < u_.cols(); ++k) std::swap(u_(i, k), u_(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a_.rows(); ++k) std::swap(a_(k, i), a_(k, j));
    for (std::size_t k = 0; k < v_.rows(); ++k) std::swap(v_(k, i), v_(k, j));
    for (std::size_t k = 0; k < vi_.cols(); ++k) std::swap(vi_(i, k), vi_(j, k));
  }

  IntMat a_, u_, v_, vi_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMat& a) { return detail::SmithWorker(a).run(); }

/// Solution set of A x = b (mod m_i per row; m_i = 0 means an exact equation) over Z.
struct CongruenceSolution {
  std::optional<IntVec> particular;
  std::vector<IntVec> kernel;  ///< generators of the homogeneous solutions (Z-lattice)
  std::optional<std::size_t> certificate_row;  ///< row of U witnessing inconsistency
};

/// Solves A x ≡ b row-wise modulo `moduli` by lifting to [A | diag(moduli)] over Z.
inline CongruenceSolution solve_congruences(const IntMat& a, const IntVec& b, const IntVec& moduli) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> mod_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (moduli[i] != 0) mod_rows.push_back(i);
  IntMat big(m, n + mod_rows.size(), mpz_class(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) big(i, j) = a(i, j);
  for (std::size_t k = 0; k < mod_rows.size(); ++k) big(mod_rows[k], n + k) = moduli[mod_rows[k]];

  SmithForm s = smith_normal_form(big);
  const std::size_t cols = big.cols();
  IntVec y(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) y[i] += s.u(i, j) * b[j];

  CongruenceSolution out;
  IntVec z(cols, 0);
  bool ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      if (y[i] % s.d(i, i) != 0) {
        ok = false;
        out.certificate_row = i;
        break;
      }
      z[i] = y[i] / s.d(i, i);
    } else if (y[i] != 0) {
      ok = false;
      out.certificate_row = i;
      break;
    }
  }
  auto project = [&](const IntVec& w) {
    IntVec x(n, 0);
    for (std::size_t j = 0; j < n; ++j) x[j] = w[j];
    return x;
  };
  if (ok) {
    IntVec w(cols, 0);
    for (std::size_t r = 0; r < cols; ++r)
      for (std::size_t c = 0; c < cols; ++c) w[r] += s.v(r, c) * z[c];
    out.particular = project(w);
  }
  for (std::size_t c = s.rank; c < cols; ++c) {
    IntVec x = project(s.v.col(c));
    bool zero = true;
    for (const auto& e : x) zero = zero && e == 0;
    if (!zero) out.kernel.push_back(std::move(x));
  }
  return out;
}

/// Invariant factors (>1) of Z^n / L, with L spanned by the rows of `gens`,
/// plus the generator of each cyclic factor (rows of V^{-1}).
struct LatticeQuotient {
  std::vector<mpz_class> factors;   ///< nontrivial invariant factors; 0 means a free Z summand
  std::vector<IntVec> generators;   ///< one per factor, in Z^n
};

inline LatticeQuotient lattice_quotient(std::size_t n, const std::vector<IntVec>& gens) {
  IntMat g(gens.size(), n, mpz_class(0));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gens[i][j];
  LatticeQuotient out;
  if (n == 0) return out;
  SmithForm s = smith_normal_form(g);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class d = (i < s.rank) ? s.d(i, i) : mpz_class(0);
    if (d == 1) continue;
    out.factors.push_back(d);
    out.generators.push_back(s.v_inv.row(i));
  }
  return out;
}

}  // namespace equibrauer
