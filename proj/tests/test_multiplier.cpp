#include <gtest/gtest.h>

#include "equibrauer/multiplier.hpp"

using namespace equibrauer;

namespace {
using K = ModRing;
const K F5 = ModRing::prime_field(5);

RMat<K> row_mat(std::size_t rows, std::size_t cols, std::vector<std::int64_t> v) {
  RMat<K> m = zero_mat(F5, rows, cols);
  for (std::size_t t = 0; t < v.size(); ++t) m(t / cols, t % cols) = F5.from_int(v[t]);
  return m;
}

// (k², k, first coordinate)
DualPair<K> first_coordinate() { return make_pair(F5, 2, 1, row_mat(1, 2, {1, 0})); }
}  // namespace

TEST(Multiplier, BaseField) {
  auto m = multiplier_algebra(base_algebra(F5));
  EXPECT_EQ(m.dim(), 1u);
  EXPECT_TRUE(canonical_embedding(m).is_bijective());
  auto g = multiplier_algebra(base_algebra(F5), MultiplierMethod::general);
  EXPECT_EQ(g.dim(), 1u);
}

TEST(Multiplier, WithIdentityEqualsAlgebra) {
  auto a = matrix_algebra(F5, 2);
  auto fast = multiplier_algebra(a);
  auto slow = multiplier_algebra(a, MultiplierMethod::general);
  EXPECT_TRUE(fast.via_identity);
  EXPECT_EQ(slow.dim(), 4u);
  EXPECT_TRUE(canonical_embedding(slow).is_bijective());
  for (const auto& b : slow.basis) EXPECT_TRUE(satisfies_multiplier_identities(a, b));
}

TEST(Multiplier, NonUnitalElementary) {
  auto e = elementary_from_pair(first_coordinate()).algebra;
  EXPECT_FALSE(e.has_identity());
  auto m = multiplier_algebra(e);
  EXPECT_EQ(m.dim(), 3u);
  ASSERT_TRUE(m.algebra.has_identity());
  for (const auto& b : m.basis) EXPECT_TRUE(satisfies_multiplier_identities(e, b));
  auto emb = canonical_embedding(m);
  EXPECT_EQ(emb.rank(), 2u);
  // the image is a two-sided ideal
  Echelon<K> img(F5, m.dim());
  for (std::size_t i = 0; i < e.dim(); ++i) img.insert(emb.matrix().col(i));
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t b = 0; b < m.dim(); ++b) {
      EXPECT_TRUE(img.contains(m.algebra.mul(emb.matrix().col(i), m.algebra.basis(b))));
      EXPECT_TRUE(img.contains(m.algebra.mul(m.algebra.basis(b), emb.matrix().col(i))));
    }
}

TEST(Multiplier, AnnihilatorIsKernelOfEmbedding) {
  RMat<K> mu(2, 2, 0);
  mu(0, 0) = 1;
  auto e = elementary_from_pair(make_pair(F5, 2, 2, mu)).algebra;
  EXPECT_TRUE(is_unital(e).unital);
  EXPECT_TRUE(is_faithful(e));
  auto emb = canonical_embedding(multiplier_algebra(e));
  EXPECT_EQ(emb.rank(), 3u);
  // m2⊗m'2 (index 3) is killed on both sides
  EXPECT_TRUE(vec_is_zero(F5, emb.matrix().col(3)));
}

TEST(Multiplier, RefusesNonUnital) {
  // k·e ⊕ k·n with e² = e and all other products zero
  auto a = algebra_from_products(
      F5, 2, [&](std::size_t i, std::size_t j) { return i == 0 && j == 0 ? unit_vec(F5, 2, 0) : zero_vec(F5, 2); },
      std::nullopt, true);
  EXPECT_FALSE(is_unital(a).unital);
  EXPECT_THROW(multiplier_algebra(a), Error);
}

TEST(ElementaryModel, CorpusOfPairs) {
  std::vector<std::pair<DualPair<K>, std::size_t>> corpus{
      {make_pair(F5, 1, 1, row_mat(1, 1, {1})), 1},
      {first_coordinate(), 3},
      {standard_pair(F5, 2), 4},
      {standard_pair(F5, 3), 9},
      // M = k³, M' = k², μ of rank 2: f preserves ker μ-directions
      {make_pair(F5, 3, 2, row_mat(2, 3, {1, 0, 0, 0, 1, 0})), 0},
      {make_pair(F5, 2, 3, row_mat(3, 2, {1, 2, 0, 0, 0, 0})), 0},
      {make_pair(F5, 1, 2, row_mat(2, 1, {3, 0})), 0},
  };
  for (const auto& [p, expected] : corpus) {
    auto model = elementary_multiplier_model(p);
    if (expected) EXPECT_EQ(model.ebar.dim(), expected);
    // independent solve of the multiplier side
    EXPECT_EQ(model.multipliers.dim(), multiplier_algebra(model.elementary.algebra).dim());
    EXPECT_EQ(model.ebar.dim(), model.multipliers.dim());
    EXPECT_EQ(mat_mul(F5, model.alpha, model.beta), identity_mat(F5, model.multipliers.dim()));
  }
}

TEST(ElementaryModel, PerfectPairingIsMatrixAlgebra) {
  auto model = elementary_multiplier_model(standard_pair(F5, 2));
  // E(P) has an identity here, and Ē is 4-dim with f' the adjoint of f
  EXPECT_TRUE(model.elementary.algebra.has_identity());
  for (const auto& [f, fp] : model.pairs) EXPECT_EQ(fp, transpose<K>(f));
}

TEST(ElementaryModel, Rationals) {
  Rationals q;
  RMat<Rationals> mu = zero_mat(q, 1, 2);
  mu(0, 0) = mpq_class(1, 2);
  mu(0, 1) = 3;
  auto model = elementary_multiplier_model(make_pair(q, 2, 1, mu));
  EXPECT_EQ(model.ebar.dim(), 3u);
}

TEST(DualPairs, Validation) {
  EXPECT_THROW(make_pair(F5, 2, 1, row_mat(1, 2, {0, 0})), InputError);
  EXPECT_THROW(make_pair(F5, 2, 1, row_mat(2, 2, {1, 0, 0, 1})), InputError);
  K z6 = ModRing::residue_ring(6);
  RMat<K> mu(1, 2, 0);
  mu(0, 0) = 2;
  mu(0, 1) = 4;
  EXPECT_THROW(make_pair(z6, 2, 1, mu), InputError);
  mu(0, 1) = 3;
  EXPECT_NO_THROW(make_pair(z6, 2, 1, mu));
}
