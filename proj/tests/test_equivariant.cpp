#include <gtest/gtest.h>

#include "equibrauer/equivariant.hpp"

using namespace equibrauer;

namespace {
using K = ModRing;
const K F5 = ModRing::prime_field(5);
const FinGroup C2 = cyclic(2);

// M2(GF5) under conjugation by u with u² = 2
GModuleAlgebra<K> m2_twisted() {
  return inner_g_module(matrix_algebra(F5, 2), C2, {RVec<K>{1, 0, 0, 1}, RVec<K>{0, 1, 2, 0}}, "M2,u");
}
GModuleAlgebra<K> m2_diag() {
  return inner_g_module(matrix_algebra(F5, 2), C2, {RVec<K>{1, 0, 0, 1}, RVec<K>{1, 0, 0, 4}}, "M2,v");
}
}  // namespace

TEST(GModule, ValidatesAction) {
  auto m2 = matrix_algebra(F5, 2);
  EXPECT_NO_THROW(m2_twisted());
  // transpose is an anti-automorphism
  RMat<K> t = zero_mat(F5, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t(j * 2 + i, i * 2 + j) = 1;
  EXPECT_THROW(GModuleAlgebra<K>(m2, C2, {identity_mat(F5, 4), t}), InputError);
  // conjugation by an element of order 3 does not define a C2-action
  EXPECT_THROW(inner_g_module(m2, C2, {RVec<K>{1, 0, 0, 1}, RVec<K>{1, 1, 0, 1}}), InputError);
  EXPECT_THROW(inner_g_module(m2, C2, {RVec<K>{1, 0, 0, 1}, RVec<K>{1, 0, 0, 0}}), InputError);
}

TEST(Smash, ProductRule) {
  auto a = m2_twisted();
  auto s = smash_product(a);
  EXPECT_EQ(s.dim(), 8u);
  ASSERT_TRUE(s.algebra().has_identity());
  // (1#g)(x#e)(1#g)⁻¹ = g·x
  RVec<K> one_g = zero_vec(F5, 8);
  for (std::size_t i = 0; i < 4; ++i) one_g[4 + i] = (*a.algebra().identity())[i];
  for (std::size_t c = 0; c < 4; ++c) {
    auto lhs = s.algebra().mul(one_g, smash_embed(a, a.algebra().basis(c)));
    auto rhs = s.algebra().mul(smash_embed(a, a.act(1, a.algebra().basis(c))), one_g);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Pi, TwistedConjugationGivesClassOfTwo) {
  auto p = pi_galois(m2_twisted());
  EXPECT_TRUE(p.decomposition_independent);
  auto two = crossed_product(F5, C2, Cocycle<K>(C2, F5, {1, 1, 1, 2}));
  EXPECT_TRUE(galois_classes_equal(p.object, two).equal);
  EXPECT_FALSE(is_coboundary(p.object.cocycle).is_coboundary);
}

TEST(Pi, DiagonalAndTrivialActions) {
  auto kg = group_algebra(F5, C2);
  auto pd = pi_galois(m2_diag());
  EXPECT_TRUE(is_coboundary(pd.object.cocycle).is_coboundary);
  auto pt = pi_galois(trivial_g_module(matrix_algebra(F5, 2), C2));
  EXPECT_TRUE(pt.object.cocycle.is_trivial());
  EXPECT_EQ(pt.object.algebra(), kg.algebra());
  EXPECT_THROW(pi_galois(trivial_g_module(group_algebra(F5, C2).algebra(), C2)), InputError);
}

TEST(Pi, GeneralPathAgrees) {
  for (const auto& a : {m2_twisted(), m2_diag()}) {
    for (std::size_t g = 0; g < 2; ++g) {
      auto fast = graded_component_endos(a, g, true), slow = graded_component_endos(a, g, false);
      ASSERT_EQ(fast.size(), 1u);
      ASSERT_EQ(slow.size(), 1u);
      EXPECT_TRUE(detail::ratio(F5, slow[0].data(), fast[0].data()).has_value());
    }
    auto p = pi_galois(a, {true, false});
    EXPECT_TRUE(galois_classes_equal(p.object, pi_galois(a).object).equal);
  }
}

TEST(BalancedTensor, BetaIsBijective) {
  for (const auto& a : {m2_twisted(), m2_diag(), trivial_g_module(base_algebra(F5), C2)}) {
    auto r = balanced_tensor_check(a);
    ASSERT_TRUE(r.checked);
    EXPECT_TRUE(r.ok) << a.name() << ": " << r.note;
    EXPECT_EQ(r.quotient_dim, a.dim() * 4);
    EXPECT_TRUE(r.decomposition_independent);
  }
  EXPECT_FALSE(balanced_tensor_check(m2_twisted(), 4).checked);
}

TEST(Commutant, MatchesPi) {
  for (const auto& a : {m2_twisted(), m2_diag()}) {
    auto p = pi_galois(a);
    auto r = commutant_check(a, p);
    ASSERT_TRUE(r.checked);
    EXPECT_TRUE(r.ok) << r.note;
    EXPECT_EQ(r.commutant_dim, 2u);
  }
}

TEST(AntiHom, P) {
  for (const auto& a : {m2_twisted(), m2_diag()}) {
    auto r = anti_hom_p(a, pi_galois(a));
    EXPECT_TRUE(r.multipliers);
    EXPECT_TRUE(r.anti_multiplicative);
    EXPECT_TRUE(r.unit);
  }
}

TEST(StronglyInner, TwistedHasNoWitness) {
  auto r = strongly_inner(m2_twisted());
  EXPECT_FALSE(r.pi_trivial);
  EXPECT_FALSE(r.strongly_inner());
}

TEST(StronglyInner, DiagonalWitnessIsV) {
  auto a = m2_diag();
  auto r = strongly_inner(a);
  ASSERT_TRUE(r.strongly_inner());
  EXPECT_TRUE(verify_inner_witness(a, *r.witness));
  // M(M2) = M2 via (L_x, R_x); f(g) is ±v
  const auto& f = r.witness->f[1];
  auto emb = canonical_embedding(r.witness->multipliers);
  RVec<K> v = emb.apply(RVec<K>{1, 0, 0, 4});
  EXPECT_TRUE(f == v || f == vec_scale(F5, 4, v));
}

TEST(StronglyInner, TrivialActionWitnessIsOne) {
  auto a = trivial_g_module(matrix_algebra(F5, 2), C2);
  auto w = strongly_inner_witness(a);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->f[1], *w->multipliers.algebra.identity());
}

namespace {
// (k², k, μ = (1 0)) with M-action diag(1, −1) and trivial M'-action: E(P) is non-unital
GDualPair<K> nonunital_pair() {
  RMat<K> mu(1, 2, 0);
  mu(0, 0) = 1;
  RMat<K> d = identity_mat(F5, 2);
  d(1, 1) = 4;
  return {make_pair(F5, 2, 1, mu), C2, {identity_mat(F5, 2), d}, {identity_mat(F5, 1), identity_mat(F5, 1)}};
}
GDualPair<K> standard_diag_pair() {
  RMat<K> d = identity_mat(F5, 2);
  d(1, 1) = 4;
  return {standard_pair(F5, 2), C2, {identity_mat(F5, 2), d}, {identity_mat(F5, 2), d}};
}
}  // namespace

TEST(GDualPair, Validation) {
  auto p = standard_diag_pair();
  EXPECT_NO_THROW(validate_g_pair(p));
  RMat<K> s = identity_mat(F5, 2);
  s(1, 1) = 2;  // order 4, not a C2-action and not invariant
  p.on_m[1] = s;
  EXPECT_THROW(validate_g_pair(p), InputError);
  auto q = standard_diag_pair();
  q.on_mprime[1] = identity_mat(F5, 2);
  EXPECT_THROW(validate_g_pair(q), InputError);
}

TEST(GDualPair, InducedActionIsStronglyInner) {
  for (const auto& p : {standard_diag_pair(), nonunital_pair()}) {
    auto e = elementary_g_module(p);
    auto w = pair_witness(p);
    EXPECT_TRUE(verify_inner_witness(e, w));
    auto r = strongly_inner(e);
    EXPECT_TRUE(r.pi_trivial);
    ASSERT_TRUE(r.strongly_inner());
    auto back = recover_pair(p.pair, e, *r.witness);
    EXPECT_EQ(elementary_g_module(back).actions(), e.actions());
    // the witness built from the pair recovers the pair itself
    auto same = recover_pair(p.pair, e, w);
    EXPECT_EQ(same.on_m, p.on_m);
    EXPECT_EQ(same.on_mprime, p.on_mprime);
  }
}

TEST(GDualPair, NonUnitalElementaryPi) {
  auto e = elementary_g_module(nonunital_pair());
  EXPECT_FALSE(e.algebra().has_identity());
  auto pi = pi_galois(e);
  EXPECT_TRUE(pi.decomposition_independent);
  EXPECT_TRUE(is_coboundary(pi.object.cocycle).is_coboundary);
  EXPECT_TRUE(anti_hom_p(e, pi).ok());
  auto c = commutant_check(e, pi);
  ASSERT_TRUE(c.checked);
  EXPECT_TRUE(c.ok) << c.note;
  auto b = balanced_tensor_check(e);
  EXPECT_TRUE(b.ok) << b.note;
}

TEST(GDualPair, SwapWithInverseTranspose) {
  RMat<K> swap(2, 2, 0);
  swap(0, 1) = swap(1, 0) = 1;
  // inverse transpose of a permutation is itself
  GDualPair<K> p{standard_pair(F5, 2), C2, {identity_mat(F5, 2), swap}, {identity_mat(F5, 2), swap}};
  auto e = elementary_g_module(p);
  EXPECT_EQ(e.algebra(), matrix_algebra(F5, 2));
  EXPECT_TRUE(strongly_inner(e).strongly_inner());
  // trivial actions on P give the trivial action on E(P)
  GDualPair<K> t{standard_pair(F5, 2), C2, {identity_mat(F5, 2), identity_mat(F5, 2)},
                 {identity_mat(F5, 2), identity_mat(F5, 2)}};
  EXPECT_EQ(elementary_g_module(t).action(1), identity_mat(F5, 4));
}

TEST(Commutant, BaseField) {
  auto a = trivial_g_module(base_algebra(F5), cyclic(3));
  auto r = commutant_check(a, pi_galois(a));
  EXPECT_TRUE(r.ok) << r.note;
  EXPECT_EQ(r.commutant_dim, 3u);
}
