#include <gtest/gtest.h>

#include "equibrauer/graded.hpp"

using namespace equibrauer;

namespace {
using K = ModRing;
const K F5 = ModRing::prime_field(5);
const K F7 = ModRing::prime_field(7);

// GF(5)[x]/(x² − c), basis {1, x}, deg x = generator of C2
GradedAlgebra<K> quadratic(std::int64_t c) {
  auto a = algebra_from_products(
      F5, 2,
      [&](std::size_t i, std::size_t j) {
        if (i == 1 && j == 1) return RVec<K>{F5.from_int(c), 0};
        return unit_vec(F5, 2, i + j);
      },
      RVec<K>{1, 0}, true);
  return GradedAlgebra<K>(a, cyclic(2), {0, 1});
}

Cocycle<K> c2(std::int64_t v) { return Cocycle<K>(cyclic(2), F5, {1, 1, 1, v}); }
}  // namespace

TEST(Grading, TrivialAndQuadratic) {
  auto m2 = matrix_algebra(F5, 2);
  EXPECT_NO_THROW(GradedAlgebra<K>(m2, cyclic(2), {0, 0, 0, 0}));
  auto q = quadratic(2);
  EXPECT_EQ(q.component_dims(), (std::vector<std::size_t>{1, 1}));
  // via projections
  auto p = attach_grading(q.algebra(), cyclic(2), {q.projection(0), q.projection(1)});
  EXPECT_EQ(p.degrees(), q.degrees());
}

TEST(Grading, WrongProjectionsRejected) {
  auto q = quadratic(2);
  // x in degree e violates x·x ∈ A_e? no: put 1 in degree g instead
  EXPECT_THROW(GradedAlgebra<K>(q.algebra(), cyclic(2), {1, 0}), GradingError);
  // non-orthogonal / non-complete families
  RMat<K> id = identity_mat(F5, 2);
  EXPECT_THROW(attach_grading(q.algebra(), cyclic(2), {id, id}), InputError);
  EXPECT_THROW(attach_grading(q.algebra(), cyclic(2), {q.projection(0), q.projection(0)}), InputError);
  RMat<K> off(2, 2, 0);
  off(0, 1) = 1;
  EXPECT_THROW(attach_grading(q.algebra(), cyclic(2), {off, q.projection(1)}), InputError);
  try {
    GradedAlgebra<K>(q.algebra(), cyclic(2), {1, 0});
  } catch (const GradingError& e) {
    EXPECT_EQ(e.g(), 1u);
    EXPECT_EQ(e.h(), 1u);
  }
}

TEST(StronglyGraded, Examples) {
  EXPECT_TRUE(is_strongly_graded(group_algebra(F5, cyclic(3))).strongly_graded);
  EXPECT_TRUE(is_strongly_graded(quadratic(2)).strongly_graded);
  auto dual = is_strongly_graded(quadratic(0));
  EXPECT_FALSE(dual.strongly_graded);
  EXPECT_EQ(dual.witness, std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_TRUE(is_strongly_graded(group_algebra(F7, symmetric3())).strongly_graded);
}

TEST(GroupAlgebra, Examples) {
  auto triv = group_algebra(F5, cyclic(1));
  EXPECT_EQ(triv.algebra(), base_algebra(F5));
  auto kc2 = group_algebra(F5, cyclic(2));
  EXPECT_EQ(kc2.algebra().basis_product(1, 1), (RVec<K>{1, 0}));
  auto ks3 = group_algebra(F7, symmetric3());
  EXPECT_EQ(ks3.dim(), 6u);
  EXPECT_EQ(ks3.component_dims(), std::vector<std::size_t>(6, 1));
}

TEST(Galois, Examples) {
  auto kg = galois_check(group_algebra(F5, cyclic(2)));
  ASSERT_TRUE(kg.galois);
  EXPECT_TRUE(kg.object->cocycle.is_trivial());

  auto q = galois_check(quadratic(2));
  ASSERT_TRUE(q.galois);
  EXPECT_EQ(q.object->cocycle.at(1, 1), 2);
  EXPECT_EQ(q.object->gamma.rows(), 4u);
  EXPECT_EQ(mat_mul(F5, q.object->gamma, q.object->gamma_inverse), identity_mat(F5, 4));

  auto d = galois_check(quadratic(0));
  EXPECT_FALSE(d.galois);
  ASSERT_TRUE(d.kernel);
  // x⊗x (index 1*2+1) lies in the kernel
  EXPECT_EQ(*d.kernel, (RVec<K>{0, 0, 0, 1}));
}

TEST(Galois, SeNotKReportedDistinctly) {
  // M2 with the trivial C1 grading: |G| = 1 but dim 4
  auto r = galois_check(GradedAlgebra<K>(matrix_algebra(F5, 2), cyclic(1), {0, 0, 0, 0}));
  EXPECT_FALSE(r.galois);
  EXPECT_NE(r.reason.find("not square"), std::string::npos);
  // k×k graded by C2 with both factors in degree e: γ square but singular
  auto kk = algebra_from_products(
      F5, 2, [&](std::size_t i, std::size_t j) { return i == j ? unit_vec(F5, 2, i) : zero_vec(F5, 2); },
      RVec<K>{1, 1}, true);
  auto r2 = galois_check(GradedAlgebra<K>(kk, cyclic(2), {0, 0}));
  EXPECT_FALSE(r2.galois);
  EXPECT_FALSE(is_strongly_graded(GradedAlgebra<K>(kk, cyclic(2), {0, 0})).strongly_graded);
}

// galois_check ⟺ strongly graded ∧ dim S_e = 1, both directions on a corpus.
TEST(Galois, EquivalenceWithStrongGrading) {
  std::vector<GradedAlgebra<K>> corpus{quadratic(0), quadratic(1), quadratic(2), quadratic(3), quadratic(4),
                                       group_algebra(F5, cyclic(2)), group_algebra(F5, cyclic(4)),
                                       GradedAlgebra<K>(matrix_algebra(F5, 2), cyclic(2), {0, 1, 1, 0})};
  for (const auto& s : corpus) {
    bool expected = is_strongly_graded(s).strongly_graded && s.component_dims()[s.group().identity()] == 1;
    EXPECT_EQ(galois_check(s).galois, expected);
  }
}

TEST(CrossedProduct, Examples) {
  auto triv = crossed_product(F5, cyclic(2), Cocycle<K>::trivial(cyclic(2), F5));
  EXPECT_EQ(triv.algebra(), group_algebra(F5, cyclic(2)).algebra());
  auto two = crossed_product(F5, cyclic(2), c2(2));
  EXPECT_EQ(two.algebra(), quadratic(2).algebra());
  auto h = second_cohomology(cyclic(3), F7);
  ASSERT_EQ(h.representatives.size(), 1u);
  auto c3 = crossed_product(F7, cyclic(3), h.representatives[0]);
  EXPECT_EQ(c3.algebra().dim(), 3u);
  EXPECT_FALSE(galois_classes_equal(c3, crossed_product(F7, cyclic(3), Cocycle<K>::trivial(cyclic(3), F7))).equal);
}

TEST(CrossedProduct, RoundTripThroughCocycle) {
  for (std::int64_t c : {1, 2, 3, 4}) {
    auto s = require_galois(quadratic(c));
    auto back = crossed_product(F5, cyclic(2), s.cocycle);
    auto cmp = galois_classes_equal(s, back);
    ASSERT_TRUE(cmp.equal);
    EXPECT_TRUE(cmp.iso.has_value());
  }
}

TEST(Cotensor, Examples) {
  auto kg = crossed_product(F5, cyclic(2), Cocycle<K>::trivial(cyclic(2), F5));
  auto s = crossed_product(F5, cyclic(2), c2(2));
  EXPECT_TRUE(galois_classes_equal(cotensor(kg, s), s).equal);
  auto inv = crossed_product(F5, cyclic(2), c2(2).inverse());
  EXPECT_TRUE(galois_classes_equal(cotensor(s, inv), kg).equal);
  auto ss = cotensor(s, s);
  EXPECT_EQ(ss.cocycle.at(1, 1), 4);
  EXPECT_TRUE(is_coboundary(ss.cocycle).is_coboundary);
  EXPECT_TRUE(galois_classes_equal(ss, kg).equal);
  EXPECT_THROW(cotensor(s, crossed_product(F5, cyclic(1), Cocycle<K>::trivial(cyclic(1), F5))), InputError);
}

TEST(Cotensor, PointwiseCocycleAssociativeCommutative) {
  auto v4 = direct_product(cyclic(2), cyclic(2));
  auto h = second_cohomology(v4, F5);
  std::vector<GaloisObject<K>> objs;
  for (const auto& r : h.representatives) objs.push_back(crossed_product(F5, v4, r));
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto ab = cotensor(a, b);
      EXPECT_EQ(ab.cocycle.values(), (a.cocycle * b.cocycle).values());
      EXPECT_TRUE(galois_classes_equal(ab, cotensor(b, a)).equal);
      for (const auto& c : objs) EXPECT_TRUE(galois_classes_equal(cotensor(ab, c), cotensor(a, cotensor(b, c))).equal);
    }
}

TEST(ClassesEqual, Examples) {
  auto s2 = require_galois(quadratic(2)), s3 = require_galois(quadratic(3));
  EXPECT_TRUE(galois_classes_equal(s2, s2).equal);
  auto r = galois_classes_equal(s2, s3);
  EXPECT_TRUE(r.equal);
  // ratio 2·3⁻¹ = 4 = δb with b(g)² = 4
  EXPECT_EQ(F5.mul((*r.coboundary)[1], (*r.coboundary)[1]), 4);
  EXPECT_FALSE(galois_classes_equal(s2, require_galois(group_algebra(F5, cyclic(2)))).equal);
}

TEST(Miyashita, AbelianIsIdentity) {
  auto s = require_galois(quadratic(2));
  for (std::size_t g = 0; g < 2; ++g) EXPECT_EQ(miyashita_action(s, g), identity_mat(F5, 2));
  EXPECT_TRUE(miyashita_properties(s).all());
  auto c3 = crossed_product(F7, cyclic(3), second_cohomology(cyclic(3), F7).representatives[0]);
  EXPECT_TRUE(miyashita_properties(c3).all());
}

TEST(Miyashita, S3Conjugation) {
  FinGroup s3 = symmetric3();
  auto s = require_galois(group_algebra(F7, s3));
  EXPECT_EQ(miyashita_action(s, s3.identity()), identity_mat(F7, 6));
  for (std::size_t g = 0; g < 6; ++g) {
    auto op = miyashita_action(s, g);
    for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(op.col(x), unit_vec(F7, 6, s3.conj(g, x)));
  }
  auto good = miyashita_properties(s, MiyashitaConvention::corrected);
  EXPECT_TRUE(good.is_group_action);
  EXPECT_TRUE(good.yetter_drinfeld);
  EXPECT_TRUE(good.quantum_commutative);

  auto bad = miyashita_properties(s, MiyashitaConvention::literal);
  EXPECT_FALSE(bad.quantum_commutative);
  // the literal reading is conjugation by g⁻¹
  auto lit = miyashita_action(s, 1, MiyashitaConvention::literal);
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(lit.col(x), unit_vec(F7, 6, s3.conj(s3.inv(1), x)));
}

TEST(Miyashita, ActionComposes) {
  FinGroup s3 = symmetric3();
  // a twisted S3 object: crossed product by the nontrivial class
  auto h = second_cohomology(s3, F7);
  ASSERT_EQ(h.order(), 2);
  auto s = crossed_product(F7, s3, h.representatives[0]);
  auto rep = miyashita_properties(s);
  EXPECT_TRUE(rep.all()) << rep.first_failure;
  EXPECT_TRUE(rep.automorphisms);
}
