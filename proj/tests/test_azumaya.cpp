#include <gtest/gtest.h>

#include "equibrauer/azumaya.hpp"
#include "equibrauer/oracle.hpp"

using namespace equibrauer;

namespace {
using K = ModRing;
const K F5 = ModRing::prime_field(5);
const Rationals Q;

RMat<K> mat(std::size_t rows, std::size_t cols, std::vector<std::int64_t> v) {
  RMat<K> m = zero_mat(F5, rows, cols);
  for (std::size_t t = 0; t < v.size(); ++t) m(t / cols, t % cols) = F5.from_int(v[t]);
  return m;
}

std::vector<DualPair<K>> pair_corpus() {
  return {make_pair(F5, 1, 1, mat(1, 1, {1})),       make_pair(F5, 2, 1, mat(1, 2, {1, 0})),
          standard_pair(F5, 2),                        make_pair(F5, 3, 2, mat(2, 3, {1, 0, 0, 0, 1, 0})),
          make_pair(F5, 2, 2, mat(2, 2, {1, 1, 0, 0})), make_pair(F5, 1, 3, mat(3, 1, {0, 2, 0}))};
}

FinAlgebra<K> dual_numbers() {
  return algebra_from_products(
      F5, 2, [&](std::size_t i, std::size_t j) { return i + j < 2 ? unit_vec(F5, 2, i + j) : zero_vec(F5, 2); },
      RVec<K>{1, 0}, true);
}
}  // namespace

TEST(Elementary, Examples) {
  auto k = elementary_from_pair(make_pair(F5, 1, 1, mat(1, 1, {1})));
  EXPECT_EQ(k.algebra, base_algebra(F5));
  auto m2 = elementary_from_pair(standard_pair(F5, 2));
  ASSERT_TRUE(m2.algebra.has_identity());
  EXPECT_EQ(m2.algebra, matrix_algebra(F5, 2));
  auto first = elementary_from_pair(make_pair(F5, 2, 1, mat(1, 2, {1, 0})));
  EXPECT_FALSE(first.algebra.has_identity());
  EXPECT_TRUE(is_unital(first.algebra).unital);
  EXPECT_TRUE(is_faithful(first.algebra));
}

TEST(TaylorAzumaya, Examples) {
  auto m2 = is_taylor_azumaya(matrix_algebra(F5, 2));
  EXPECT_TRUE(m2.azumaya());
  EXPECT_TRUE(m2.separability_path);
  EXPECT_EQ(m2.center_dim, 1u);

  auto first = is_taylor_azumaya(elementary_from_pair(make_pair(F5, 2, 1, mat(1, 2, {1, 0}))).algebra);
  EXPECT_TRUE(first.azumaya()) << first.failed_stage;
  EXPECT_FALSE(first.separability_path);

  auto dual = is_taylor_azumaya(dual_numbers());
  EXPECT_EQ(dual.failed_stage, "central");
  EXPECT_EQ(dual.center_dim, 2u);

  auto nonunital = algebra_from_products(
      F5, 2, [&](std::size_t i, std::size_t j) { return i == 0 && j == 0 ? unit_vec(F5, 2, 0) : zero_vec(F5, 2); },
      std::nullopt, true);
  EXPECT_EQ(is_taylor_azumaya(nonunital).failed_stage, "unital");
}

TEST(TaylorAzumaya, GeneralPathAgreesWithSeparability) {
  auto kc2 = algebra_from_products(
      F5, 2, [&](std::size_t i, std::size_t j) { return unit_vec(F5, 2, (i + j) % 2); }, RVec<K>{1, 0}, true);
  for (const auto& a : {matrix_algebra(F5, 2), base_algebra(F5), dual_numbers(), kc2}) {
    auto fast = is_taylor_azumaya(a), slow = is_taylor_azumaya(a, AzumayaMethod::general);
    EXPECT_EQ(fast.failed_stage, slow.failed_stage);
  }
  // past the centrality stage both paths must agree on projectivity and the trace ideal
  auto fast = is_taylor_azumaya(matrix_algebra(F5, 2)), slow = is_taylor_azumaya(matrix_algebra(F5, 2), AzumayaMethod::general);
  EXPECT_EQ(fast.hom_dim, slow.hom_dim);
  EXPECT_EQ(fast.trace_rank, 16u);
  EXPECT_EQ(slow.trace_rank, 16u);
}

TEST(TaylorAzumaya, CorpusOfElementaryAlgebras) {
  for (const auto& p : pair_corpus()) {
    auto e = elementary_from_pair(p);
    auto rep = is_taylor_azumaya(e.algebra);
    EXPECT_TRUE(rep.azumaya()) << rep.failed_stage << " m=" << p.m << " m'=" << p.mprime;
    EXPECT_EQ(rep.center_dim, 1u);
    auto w = is_elementary(e.algebra);
    ASSERT_TRUE(w.elementary);
    ASSERT_TRUE(w.pair);
    EXPECT_EQ(w.pair->m * w.pair->mprime, e.algebra.dim());
    // the witness iso really is an algebra iso E(P') → E(P)
    EXPECT_TRUE(make_iso(elementary_from_pair(*w.pair).algebra, e.algebra, *w.iso).has_value());
    EXPECT_TRUE(brauer_trivial(brauer_class(e.algebra, "E(P)")));
  }
}

TEST(IsElementary, RoutesAndShortcut) {
  auto m3 = matrix_algebra(F5, 3);
  auto w = is_elementary(m3);
  EXPECT_TRUE(w.elementary);
  EXPECT_EQ(w.method, "idempotent");
  ElementaryOptions only_shortcut;
  only_shortcut.search = false;
  auto s = is_elementary(matrix_algebra(F5, 2), only_shortcut);
  EXPECT_TRUE(s.elementary);
  EXPECT_EQ(s.method, "wedderburn");
  EXPECT_FALSE(s.pair.has_value());
  EXPECT_FALSE(is_elementary(dual_numbers()).elementary);
  ElementaryOptions none;
  none.wedderburn_shortcut = false;
  none.search = false;
  EXPECT_EQ(is_elementary(m3, none).note, "no witness found");
}

TEST(IsElementary, LeftIdealRouteOverQ) {
  // i² = 1 has no idempotent basis vector; (1 − i)/2 gives a 2-dim left ideal
  auto q = quaternion_algebra(Q, mpq_class(1), mpq_class(1));
  auto w = is_elementary(q);
  ASSERT_TRUE(w.elementary);
  EXPECT_EQ(w.method, "left-ideal");
  EXPECT_EQ(w.pair->m, 2u);
  auto h = is_elementary(quaternion_algebra(Q, mpq_class(-1), mpq_class(-1)));
  EXPECT_FALSE(h.elementary);
  EXPECT_EQ(h.note, "no witness found");
}

TEST(Morita, Examples) {
  auto m2 = matrix_algebra(F5, 2);
  EXPECT_TRUE(morita_equivalent(m2, base_algebra(F5)));
  EXPECT_TRUE(morita_equivalent(m2, m2));
  EXPECT_THROW(morita_equivalent(m2, dual_numbers()), InputError);
  auto e = elementary_from_pair(make_pair(F5, 2, 1, mat(1, 2, {1, 0}))).algebra;
  EXPECT_TRUE(morita_equivalent(e, base_algebra(F5)));
  EXPECT_TRUE(morita_equivalent(base_algebra(F5), e));
  // transitivity spot check: E ~ k ~ M2
  EXPECT_TRUE(morita_equivalent(e, m2));
}

TEST(Morita, QuaternionsOverQ) {
  auto split = quaternion_algebra(Q, mpq_class(1), mpq_class(1));
  auto ham = quaternion_algebra(Q, mpq_class(-1), mpq_class(-1));
  EXPECT_TRUE(is_taylor_azumaya(ham).azumaya());
  EXPECT_TRUE(is_taylor_azumaya(split).azumaya());
  EXPECT_TRUE(morita_equivalent(split, matrix_algebra(Q, 2)));
  EXPECT_FALSE(morita_equivalent(ham, base_algebra(Q)));
  EXPECT_FALSE(is_split_quaternion(-1, -1).split);
  EXPECT_EQ(is_split_quaternion(-1, -1).symbols.at("inf"), -1);
}

TEST(Quaternion, Relations) {
  auto q = quaternion_algebra(Q, mpq_class(2), mpq_class(-3));
  // k² = −ab = 6, ji = −k, ik = a j
  EXPECT_EQ(q.basis_product(3, 3), (RVec<Rationals>{6, 0, 0, 0}));
  EXPECT_EQ(q.basis_product(2, 1), (RVec<Rationals>{0, 0, 0, -1}));
  EXPECT_EQ(q.basis_product(1, 3), (RVec<Rationals>{0, 0, 2, 0}));
  EXPECT_THROW(quaternion_algebra(Q, mpq_class(0), mpq_class(1)), InputError);
}

// Hilbert-symbol verdicts against a bounded search for an isotropic vector of the norm form.
TEST(Quaternion, HilbertAgreesWithZeroDivisorSearch) {
  std::vector<std::pair<mpq_class, mpq_class>> corpus{
      {1, 1}, {-1, -1}, {-1, 3}, {2, -1}, {5, -1}, {3, 5}, {2, 5}, {2, 3}, {3, -2}, {mpq_class(1, 2), mpq_class(3, 4)}, {-1, 2}, {7, -3}};
  for (const auto& [a, b] : corpus) {
    auto rep = is_split_quaternion(a, b);
    EXPECT_EQ(rep.split, is_split_quaternion(b, a).split);
    int prod = 1;
    for (const auto& [place, s] : rep.symbols) prod *= s;
    EXPECT_EQ(prod, 1) << "reciprocity " << a << "," << b;
    auto z = oracle::norm_zero_search(a, b, 10);
    EXPECT_EQ(rep.split, z.has_value()) << a << "," << b;
    if (z) {
      auto alg = quaternion_algebra(Q, a, b);
      RVec<Rationals> x{(*z)[0], (*z)[1], (*z)[2], (*z)[3]}, bar{(*z)[0], -(*z)[1], -(*z)[2], -(*z)[3]};
      EXPECT_EQ(alg.mul(x, bar), alg.zero());
    }
  }
}

TEST(Brauer, GroupLaw) {
  auto m2 = brauer_class(matrix_algebra(F5, 2), "M2");
  auto k = brauer_class(base_algebra(F5), "k");
  EXPECT_TRUE(morita_equivalent(brauer_product(m2, k).representative, m2.representative));
  auto t = brauer_product(m2, brauer_inverse(m2));
  EXPECT_EQ(t.representative.dim(), 16u);
  EXPECT_TRUE(brauer_trivial(t));
  EXPECT_EQ(t.provenance, (std::vector<std::string>{"M2", "M2", "opposite", "tensor"}));
  auto ham = brauer_class(quaternion_algebra(Q, mpq_class(-1), mpq_class(-1)), "H");
  EXPECT_FALSE(brauer_trivial(ham));
  EXPECT_TRUE(brauer_trivial(brauer_product(ham, ham)));
  EXPECT_THROW(brauer_class(dual_numbers(), "D"), InputError);
}
