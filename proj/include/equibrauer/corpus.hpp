// Bundled verification corpora over (GF(5), C2), (GF(7), C3), (GF(5), C2×C2) and kS3 over GF(7).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "splitting.hpp"

namespace equibrauer {

/// Conjugation action of C_n on M_d by powers of u (u^n must be central).
inline GModuleAlgebra<ModRing> cyclic_conjugation(const ModRing& k, std::size_t n, const RMat<ModRing>& u,
                                                  std::string name) {
  const std::size_t d = u.rows();
  std::vector<RVec<ModRing>> units;
  RMat<ModRing> p = identity_mat(k, d);
  for (std::size_t x = 0; x < n; ++x) {
    units.push_back(p.data());
    p = mat_mul(k, p, u);
  }
  return inner_g_module(matrix_algebra(k, d), cyclic(n), units, std::move(name));
}

inline RMat<ModRing> small_matrix(std::size_t d, const std::vector<std::int64_t>& rows) {
  RMat<ModRing> m(d, d, 0);
  for (std::size_t i = 0; i < d * d; ++i) m(i / d, i % d) = rows[i];
  return m;
}

inline GaloisObject<ModRing> quadratic_object(const ModRing& k, std::int64_t c) {
  return crossed_product(k, cyclic(2), Cocycle<ModRing>(cyclic(2), k, {1, 1, 1, k.from_int(c)}));
}

/// E(k², k, (1 0)) with diag(1, −1) on k² and the trivial action on k: a non-unital G-module algebra.
inline GModuleAlgebra<ModRing> nonunital_elementary_c2(const ModRing& k) {
  RMat<ModRing> mu(1, 2, 0);
  mu(0, 0) = k.one();
  RMat<ModRing> d = identity_mat(k, 2);
  d(1, 1) = k.neg(k.one());
  GDualPair<ModRing> p{make_pair(k, 2, 1, mu), cyclic(2), {identity_mat(k, 2), d},
                       {identity_mat(k, 1), identity_mat(k, 1)}};
  auto e = elementary_g_module(p);
  return GModuleAlgebra<ModRing>(e.algebra(), e.group(), e.actions(), "E(k²,k)");
}

inline GModuleAlgebra<ModRing> named_smash(const GaloisObject<ModRing>& b, const std::string& name) {
  auto s = smash_with_dual(b).smash;
  return GModuleAlgebra<ModRing>(s.algebra(), s.group(), s.actions(), name + "#k^G");
}

inline SequenceCorpus<ModRing> corpus_c2_gf5() {
  const ModRing k = ModRing::prime_field(5);
  const FinGroup g = cyclic(2);
  SequenceCorpus<ModRing> c{"GF(5),C2", k, g, {}, {}};
  c.galois = {{"kC2", quadratic_object(k, 1)},
              {"x²-2", quadratic_object(k, 2)},
              {"x²-3", quadratic_object(k, 3)},
              {"x²-4", quadratic_object(k, 4)}};
  c.algebras = {trivial_g_module(base_algebra(k), g, "k"),
                trivial_g_module(matrix_algebra(k, 2), g, "M2"),
                trivial_g_module(quaternion_algebra(k, 2, 3), g, "(2,3)"),
                cyclic_conjugation(k, 2, small_matrix(2, {1, 0, 0, 4}), "M2,v"),
                cyclic_conjugation(k, 2, small_matrix(2, {0, 1, 2, 0}), "M2,u"),
                cyclic_conjugation(k, 2, small_matrix(2, {0, 2, 4, 0}), "M2,2u"),
                nonunital_elementary_c2(k),
                named_smash(quadratic_object(k, 2), "x²-2")};
  return c;
}

inline SequenceCorpus<ModRing> corpus_c3_gf7() {
  const ModRing k = ModRing::prime_field(7);
  const FinGroup g = cyclic(3);
  SequenceCorpus<ModRing> c{"GF(7),C3", k, g, {}, {}};
  auto h = second_cohomology(g, k);
  c.galois = {{"kC3", crossed_product(k, g, Cocycle<ModRing>::trivial(g, k))}};
  const auto& r = h.representatives.at(0);
  c.galois.push_back({"crossed(α)", crossed_product(k, g, r)});
  c.galois.push_back({"crossed(α²)", crossed_product(k, g, r * r)});
  // w³ = 1 and u³ = 2, 2 not a cube mod 7
  c.algebras = {trivial_g_module(base_algebra(k), g, "k"),
                trivial_g_module(matrix_algebra(k, 2), g, "M2"),
                cyclic_conjugation(k, 3, small_matrix(2, {0, 6, 1, 6}), "M2,w"),
                cyclic_conjugation(k, 3, small_matrix(3, {0, 0, 2, 1, 0, 0, 0, 1, 0}), "M3,u"),
                cyclic_conjugation(k, 3, small_matrix(3, {0, 2, 0, 0, 0, 2, 1, 0, 0}), "M3,u²"),
                named_smash(crossed_product(k, g, r), "crossed(α)")};
  c.max_tensor_dim = 81;
  c.max_morita_dim = 81;
  return c;
}

/// Every cohomology class of C2×C2 over GF(5) as a crossed product.
inline std::vector<std::pair<std::string, GaloisObject<ModRing>>> galois_corpus_v4_gf5() {
  const ModRing k = ModRing::prime_field(5);
  const FinGroup g = direct_product(cyclic(2), cyclic(2));
  std::vector<std::pair<std::string, GaloisObject<ModRing>>> out{
      {"kV4", crossed_product(k, g, Cocycle<ModRing>::trivial(g, k))}};
  auto h = second_cohomology(g, k);
  for (std::size_t i = 0; i < h.representatives.size(); ++i)
    out.push_back({"crossed" + std::to_string(i), crossed_product(k, g, h.representatives[i])});
  return out;
}

}  // namespace equibrauer
