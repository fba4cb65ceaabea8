// Finite groups by multiplication table, and the dual function algebra k(G).
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace equibrauer {

/// Group axiom violation; witness holds the offending element indices.
class GroupError : public Error {
 public:
  GroupError(const std::string& what, std::vector<std::size_t> witness) : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class FinGroup {
 public:
  FinGroup() : FinGroup({{0}}, "C1") {}

  /// Validates closure, associativity, identity and inverses.
  explicit FinGroup(std::vector<std::vector<std::size_t>> table, std::string name = "")
      : table_(std::move(table)), name_(std::move(name)) {
    const std::size_t m = table_.size();
    if (m == 0) throw GroupError("group table is empty", {});
    for (std::size_t g = 0; g < m; ++g) {
      if (table_[g].size() != m) throw GroupError("group table row " + std::to_string(g) + " has wrong length", {g});
      for (std::size_t h = 0; h < m; ++h)
        if (table_[g][h] >= m) throw GroupError("group table not closed at (" + pair(g, h) + ")", {g, h});
    }
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t h = 0; h < m; ++h)
        for (std::size_t l = 0; l < m; ++l)
          if (table_[table_[g][h]][l] != table_[g][table_[h][l]])
            throw GroupError("group table not associative at (" + pair(g, h) + "," + std::to_string(l) + ")",
                             {g, h, l});
    identity_ = m;
    for (std::size_t e = 0; e < m && identity_ == m; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < m && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
      if (ok) identity_ = e;
    }
    if (identity_ == m) throw GroupError("group table has no identity", {});
    inverse_.assign(m, m);
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t h = 0; h < m; ++h)
        if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
      if (inverse_[g] == m) throw GroupError("element " + std::to_string(g) + " has no inverse", {g});
    }
    if (name_.empty()) name_ = "G" + std::to_string(m);
  }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inv(std::size_t g) const { return inverse_[g]; }
  std::size_t conj(std::size_t g, std::size_t s) const { return mul(mul(g, s), inv(g)); }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  bool is_abelian() const {
    for (std::size_t g = 0; g < order(); ++g)
      for (std::size_t h = 0; h < order(); ++h)
        if (mul(g, h) != mul(h, g)) return false;
    return true;
  }
  std::size_t element_order(std::size_t g) const {
    std::size_t x = g, o = 1;
    while (x != identity_) {
      x = mul(x, g);
      ++o;
    }
    return o;
  }
  std::size_t exponent() const {
    std::size_t e = 1;
    for (std::size_t g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
    return e;
  }
  /// Non-identity elements in index order.
  std::vector<std::size_t> nontrivial() const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < order(); ++g)
      if (g != identity_) out.push_back(g);
    return out;
  }

  bool operator==(const FinGroup& o) const { return table_ == o.table_; }

 private:
  static std::string pair(std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); }

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::string name_;
};

inline FinGroup cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic(0) is not a group");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FinGroup(std::move(t), "C" + std::to_string(n));
}

/// G × H with (g,h) at index g*|H| + h.
inline FinGroup direct_product(const FinGroup& g, const FinGroup& h) {
  const std::size_t m = g.order(), n = h.order();
  std::vector<std::vector<std::size_t>> t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t a = 0; a < m * n; ++a)
    for (std::size_t b = 0; b < m * n; ++b) t[a][b] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
  return FinGroup(std::move(t), g.name() + "x" + h.name());
}

inline FinGroup from_table(std::vector<std::vector<std::size_t>> table, std::string name = "") {
  return FinGroup(std::move(table), std::move(name));
}

/// S3 on permutations of {0,1,2} in lexicographic order; (στ)(x) = σ(τ(x)).
/// Index 0 is the identity; 1, 2, 5 are transpositions; 3, 4 are 3-cycles.
inline FinGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FinGroup(std::move(t), "S3");
}

/// "C<n>", "C2xC2" (any product of cyclic factors) or "S3".
inline FinGroup group_by_name(const std::string& name) {
  if (name == "S3") return symmetric3();
  std::vector<std::size_t> factors;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::size_t next = name.find('x', pos);
    std::string part = name.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2 || part[0] != 'C' || part.find_first_not_of("0123456789", 1) != std::string::npos)
      throw InputError("unknown group \"" + name + "\" (expected Cn, CmxCn, S3 or a table)");
    factors.push_back(std::stoul(part.substr(1)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (factors.empty()) throw InputError("unknown group \"" + name + "\"");
  FinGroup g = cyclic(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic(factors[i]));
  return g;
}

/// k(G) = ⊕ k p_g with p_g p_h = δ_{g,h} p_g, plus Δ(p_g) = Σ_h p_h ⊗ p_{h⁻¹g}.
template <class R>
struct DualFunctionAlgebra {
  FinGroup group;
  FinAlgebra<R> algebra;
  RMat<R> comultiplication;  ///< |G|² × |G|, target index h*|G| + h'
};

template <class R>
DualFunctionAlgebra<R> dual_function_algebra(const R& k, const FinGroup& g) {
  const std::size_t m = g.order();
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < m; ++x) labels.push_back("p" + std::to_string(x));
  RVec<R> one(m, k.one());
  FinAlgebra<R> a = algebra_from_products(
      k, m, [&](std::size_t x, std::size_t y) { return x == y ? unit_vec(k, m, x) : zero_vec(k, m); }, one, true,
      labels);
  RMat<R> delta = zero_mat(k, m * m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t h = 0; h < m; ++h) delta(h * m + g.mul(g.inv(h), x), x) = k.one();
  // algebra map into k(G)⊗k(G), then coassociativity as a matrix identity
  AlgebraMap<R> check(a, tensor_product(a, a), delta, true);
  RMat<R> left = mat_mul(k, kron(k, delta, identity_mat(k, m)), delta);
  RMat<R> right = mat_mul(k, kron(k, identity_mat(k, m), delta), delta);
  if (left != right) throw Error("comultiplication of k(G) is not coassociative");
  return DualFunctionAlgebra<R>{g, std::move(a), std::move(delta)};
}

}  // namespace equibrauer
