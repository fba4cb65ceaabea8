#include <gtest/gtest.h>

#include "equibrauer/cohomology.hpp"
#include "equibrauer/oracle.hpp"

#include <set>

using namespace equibrauer;

namespace {
const ModRing F3 = ModRing::prime_field(3);
const ModRing F5 = ModRing::prime_field(5);
const ModRing F7 = ModRing::prime_field(7);

Cocycle<ModRing> c2_cocycle(std::int64_t v) {
  return Cocycle<ModRing>(cyclic(2), F5, {1, 1, 1, v});
}
}  // namespace

TEST(Group, Constructions) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  auto v4 = direct_product(cyclic(2), cyclic(2));
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(v4.exponent(), 2u);
  EXPECT_TRUE(v4.is_abelian());
  auto s3 = symmetric3();
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.identity(), 0u);
  for (std::size_t t : {1u, 2u, 5u}) EXPECT_EQ(s3.element_order(t), 2u);
  for (std::size_t t : {3u, 4u}) EXPECT_EQ(s3.element_order(t), 3u);
  EXPECT_EQ(group_by_name("C2xC2"), v4);
  EXPECT_EQ(group_by_name("C3").order(), 3u);
  EXPECT_THROW(group_by_name("D4"), InputError);
}

TEST(Group, TableValidation) {
  EXPECT_NO_THROW(from_table({{0, 1}, {1, 0}}));
  // not associative: a Latin square that is not a group
  std::vector<std::vector<std::size_t>> bad{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    from_table(bad);
    FAIL();
  } catch (const GroupError& e) {
    ASSERT_EQ(e.witness().size(), 3u);
    auto w = e.witness();
    EXPECT_NE(bad[bad[w[0]][w[1]]][w[2]], bad[w[0]][bad[w[1]][w[2]]]);
  }
  EXPECT_THROW(from_table({{0, 0}, {0, 0}}), GroupError);
  EXPECT_THROW(from_table({{0, 2}, {1, 0}}), GroupError);
}

TEST(DualFunction, Examples) {
  auto triv = dual_function_algebra(F5, cyclic(1));
  EXPECT_EQ(triv.comultiplication, RMat<ModRing>(1, 1, 1));

  auto c2 = dual_function_algebra(F5, cyclic(2));
  // Δ(p_g) = p_e⊗p_g + p_g⊗p_e, indices 0*2+1 and 1*2+0
  EXPECT_EQ(c2.comultiplication.col(1), (RVec<ModRing>{0, 1, 1, 0}));
  EXPECT_EQ(c2.comultiplication.col(0), (RVec<ModRing>{1, 0, 0, 1}));

  for (const auto& g : {cyclic(3), direct_product(cyclic(2), cyclic(2)), symmetric3()}) {
    auto d = dual_function_algebra(F7, g);
    EXPECT_TRUE(d.algebra.is_commutative());
    ASSERT_TRUE(d.algebra.has_identity());
    EXPECT_EQ(*d.algebra.identity(), RVec<ModRing>(g.order(), 1));
  }
}

TEST(Cocycle, Validation) {
  EXPECT_NO_THROW(c2_cocycle(2));
  EXPECT_THROW(Cocycle<ModRing>(cyclic(2), F5, {2, 1, 1, 1}), InputError);
  EXPECT_THROW(Cocycle<ModRing>(cyclic(2), F5, {1, 1, 1, 0}), InputError);
  // C3 with α(1,1) = 2 only: cocycle identity fails at (1,1,1)
  EXPECT_THROW(Cocycle<ModRing>(cyclic(3), F7, {1, 1, 1, 1, 2, 1, 1, 1, 1}), InputError);
}

TEST(Cocycle, ProductAndInverse) {
  auto a = c2_cocycle(2), b = c2_cocycle(3);
  EXPECT_EQ((a * b).at(1, 1), 1);
  EXPECT_EQ(a.inverse().at(1, 1), 3);
  EXPECT_TRUE((a * a.inverse()).is_trivial());
}

TEST(Coboundary, Examples) {
  auto t = is_coboundary(Cocycle<ModRing>::trivial(cyclic(2), F5));
  EXPECT_TRUE(t.is_coboundary);
  EXPECT_EQ(*t.witness, (std::vector<std::int64_t>{1, 1}));

  auto four = is_coboundary(c2_cocycle(4));
  ASSERT_TRUE(four.is_coboundary);
  // b(g)² = 4
  EXPECT_EQ(F5.mul((*four.witness)[1], (*four.witness)[1]), 4);

  EXPECT_FALSE(is_coboundary(c2_cocycle(2)).is_coboundary);
}

TEST(Coboundary, Rationals) {
  Rationals q;
  FinGroup c2 = cyclic(2);
  auto mk = [&](mpq_class v) { return Cocycle<Rationals>(c2, q, {1, 1, 1, v}); };
  auto sq = is_coboundary(mk(mpq_class(9, 4)));
  ASSERT_TRUE(sq.is_coboundary);
  EXPECT_EQ((*sq.witness)[1] * (*sq.witness)[1], mpq_class(9, 4));
  auto neg = is_coboundary(mk(-1));
  EXPECT_FALSE(neg.is_coboundary);
  EXPECT_EQ(neg.note, "not a coboundary within generated subgroup");
  EXPECT_FALSE(is_coboundary(mk(2)).is_coboundary);
  EXPECT_THROW(second_cohomology(c2, q), Error);
}

TEST(H2, TrivialGroup) { EXPECT_EQ(second_cohomology(cyclic(1), F5).order(), 1); }

TEST(H2, C2OverGF5) {
  auto h = second_cohomology(cyclic(2), F5);
  EXPECT_EQ(h.invariant_factors, (std::vector<std::int64_t>{2}));
  ASSERT_EQ(h.representatives.size(), 1u);
  // the representative is a non-square; α(g,g) = 2 is in its class
  EXPECT_FALSE(is_coboundary(h.representatives[0]).is_coboundary);
  EXPECT_TRUE(is_coboundary(h.representatives[0] * c2_cocycle(2).inverse()).is_coboundary);
}

// k*/(k*)^n for cyclic groups, against exhaustive enumeration.
TEST(H2, CyclicAgainstBruteForce) {
  struct Case {
    std::size_t n;
    ModRing k;
    std::int64_t expected;
  };
  for (const auto& c : {Case{2, F5, 2}, Case{3, F7, 3}, Case{2, F3, 2}, Case{3, F5, 1}, Case{4, F5, 4}}) {
    auto g = cyclic(c.n);
    auto brute = oracle::brute_h2(g, c.k);
    EXPECT_EQ(static_cast<std::int64_t>(brute.order()), c.expected);
    EXPECT_EQ(second_cohomology(g, c.k).order(), c.expected);
  }
}

// Every enumerated cocycle is a product of the computed representatives times a
// brute-force coboundary, and the representatives have exactly the stated orders.
TEST(H2, KleinOverGF3ClassByClass) {
  auto g = direct_product(cyclic(2), cyclic(2));
  auto brute = oracle::brute_h2(g, F3);
  EXPECT_EQ(brute.candidates, 512u);
  auto h = second_cohomology(g, F3);
  EXPECT_EQ(static_cast<std::size_t>(h.order()), brute.order());
  // Ext(Z/2 × Z/2, Z/2) ⊕ Hom(Z/2, Z/2)
  EXPECT_EQ(h.invariant_factors, (std::vector<std::int64_t>{2, 2, 2}));
  // all 8 products of representatives, reduced to brute-force classes
  std::set<std::size_t> hit;
  for (const auto& v : brute.cocycles) {
    std::size_t which = 8;
    for (std::size_t mask = 0; mask < 8; ++mask) {
      Cocycle<ModRing> a(g, F3, v);
      for (std::size_t i = 0; i < 3; ++i)
        if (mask >> i & 1) a = a * h.representatives[i].inverse();
      if (brute.coboundaries.count(a.values())) {
        EXPECT_EQ(which, 8u) << "class found twice";
        which = mask;
      }
    }
    EXPECT_LT(which, 8u);
    hit.insert(which);
  }
  EXPECT_EQ(hit.size(), 8u);
}

TEST(H2, KleinOverGF5AndS3) {
  auto v4 = direct_product(cyclic(2), cyclic(2));
  auto b = oracle::brute_h2(v4, F5, 400'000);
  auto h = second_cohomology(v4, F5);
  EXPECT_EQ(static_cast<std::size_t>(h.order()), b.order());
  // H²(S3, Z/6) with trivial action: Schur multiplier trivial, Ext gives Z/2
  auto s3 = second_cohomology(symmetric3(), F7);
  EXPECT_EQ(s3.order(), 2);
  for (const auto& r : s3.representatives) EXPECT_FALSE(is_coboundary(r).is_coboundary);
}

TEST(H2, CapEnforced) {
  CohomologyOptions opt;
  opt.max_group_order = 3;
  EXPECT_THROW(second_cohomology(cyclic(4), F5, opt), Error);
}
