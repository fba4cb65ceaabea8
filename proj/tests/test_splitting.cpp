#include <gtest/gtest.h>

#include "equibrauer/corpus.hpp"

using namespace equibrauer;

namespace {
using K = ModRing;
const K F5 = ModRing::prime_field(5);
const K F7 = ModRing::prime_field(7);
const FinGroup C2 = cyclic(2);

GaloisObject<K> quadratic(std::int64_t c) { return crossed_product(F5, C2, Cocycle<K>(C2, F5, {1, 1, 1, c})); }
GModuleAlgebra<K> m2_conj(std::int64_t u10, std::int64_t u01, std::int64_t u11, std::string name) {
  return inner_g_module(matrix_algebra(F5, 2), C2, {RVec<K>{1, 0, 0, 1}, RVec<K>{u11 == 0 ? 0 : 1, u01, u10, u11}},
                        std::move(name));
}
// E(k², k, (1 0)) with diag(1, −1) on M
GModuleAlgebra<K> nonunital() {
  RMat<K> mu(1, 2, 0);
  mu(0, 0) = 1;
  RMat<K> d = identity_mat(F5, 2);
  d(1, 1) = 4;
  GDualPair<K> p{make_pair(F5, 2, 1, mu), C2, {identity_mat(F5, 2), d}, {identity_mat(F5, 1), identity_mat(F5, 1)}};
  auto e = elementary_g_module(p);
  return GModuleAlgebra<K>(e.algebra(), C2, e.actions(), "E");
}
}  // namespace

TEST(DualSmash, BracketIsomorphism) {
  for (std::int64_t c : {1, 2}) {
    auto d = smash_with_dual(quadratic(c));
    EXPECT_EQ(d.smash.dim(), 4u);
    EXPECT_TRUE(d.smash.algebra().has_identity());
    EXPECT_TRUE(is_taylor_azumaya(d.smash.algebra()).azumaya());
  }
}

TEST(Split, QuadraticAndGroupAlgebras) {
  for (std::int64_t c : {1, 2, 3, 4}) {
    auto r = split_and_verify(quadratic(c));
    EXPECT_TRUE(r.ok()) << r.failed;
  }
  auto kg = split_and_verify(require_galois(group_algebra(F5, cyclic(3))));
  EXPECT_TRUE(kg.ok()) << kg.failed;
}

TEST(Split, NonAbelian) {
  FinGroup s3 = symmetric3();
  auto ks3 = split_and_verify(require_galois(group_algebra(F7, s3)));
  EXPECT_TRUE(ks3.ok()) << ks3.failed;
  auto h = second_cohomology(s3, F7);
  auto tw = split_and_verify(crossed_product(F7, s3, h.representatives[0]));
  EXPECT_TRUE(tw.ok()) << tw.failed;
  // the literal reading of the Miyashita action does not split kS3
  EXPECT_FALSE(split_and_verify(require_galois(group_algebra(F7, s3)), MiyashitaConvention::literal).ok());
}

TEST(Split, KleinFour) {
  auto v4 = direct_product(C2, C2);
  for (const auto& r : second_cohomology(v4, F5).representatives) {
    auto s = split_and_verify(crossed_product(F5, v4, r));
    EXPECT_TRUE(s.ok()) << s.failed;
  }
}

TEST(EquivariantMorita, Examples) {
  auto triv = trivial_g_module(matrix_algebra(F5, 2), C2, "M2");
  auto diag = m2_conj(0, 0, 4, "M2,v");
  auto twisted = m2_conj(2, 1, 0, "M2,u");
  auto k = trivial_g_module(base_algebra(F5), C2, "k");
  EXPECT_TRUE(equivariant_morita(triv, k).equivalent());
  EXPECT_TRUE(equivariant_morita(diag, k).equivalent());
  auto r = equivariant_morita(twisted, k);
  EXPECT_TRUE(r.elementary);
  EXPECT_FALSE(r.strongly_inner);
  EXPECT_TRUE(equivariant_morita(twisted, twisted).equivalent());
  EXPECT_FALSE(equivariant_morita(twisted, triv).equivalent());
  // u and 2u induce the same automorphism
  EXPECT_TRUE(equivariant_morita(twisted, m2_conj(4, 2, 0, "M2,2u")).equivalent());
}

TEST(ExactSequence, C2OverGF5) {
  SequenceCorpus<K> c{"GF5,C2", F5, C2, {}, {}};
  c.algebras = {trivial_g_module(base_algebra(F5), C2, "k"), trivial_g_module(matrix_algebra(F5, 2), C2, "M2"),
                m2_conj(0, 0, 4, "M2,v"), m2_conj(2, 1, 0, "M2,u"), nonunital()};
  c.galois = {{"kC2", quadratic(1)}, {"x²−2", quadratic(2)}};
  auto rep = verify_exact_sequence(c);
  for (const auto& cl : rep.clauses) {
    EXPECT_TRUE(cl.pass()) << cl.clause;
    for (const auto& f : cl.failures) ADD_FAILURE() << cl.clause << ": " << f;
  }
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.clauses[3].checked, 5u);
}

TEST(ExactSequence, BundledCorpora) {
  for (const auto& c : {corpus_c2_gf5(), corpus_c3_gf7()}) {
    auto rep = verify_exact_sequence(c);
    for (const auto& cl : rep.clauses) {
      EXPECT_TRUE(cl.pass()) << c.name << " " << cl.clause;
      EXPECT_EQ(cl.skipped, 0u) << c.name << " " << cl.clause;
    }
  }
}
