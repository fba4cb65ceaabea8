#include <gtest/gtest.h>

#include <set>

#include "equibrauer/linalg.hpp"
#include "equibrauer/smith.hpp"
#include "equibrauer/units.hpp"

using namespace equibrauer;

TEST(Ring, ParseAndCanonicalForm) {
  ModRing k = ModRing::prime_field(5);
  EXPECT_EQ(k.from_int(-1), 4);
  EXPECT_EQ(k.from_int(12), 2);
  EXPECT_EQ(k.inv(2), 3);
  EXPECT_THROW(ModRing::prime_field(8), InputError);
  ModRing z8 = ModRing::residue_ring(8);
  EXPECT_FALSE(z8.is_field());
  EXPECT_THROW(z8.inv(2), Error);
  Rationals q;
  EXPECT_EQ(q.from_json(nlohmann::json("6/4")), mpq_class(3, 2));
  EXPECT_EQ(q.to_json(mpq_class(3, 2)), nlohmann::json("3/2"));
  EXPECT_EQ(q.to_json(mpq_class(4, 2)), nlohmann::json(2));
}

TEST(Ring, MultiplicationCommutesWithCanonicalForm) {
  for (std::int64_t n : {2, 5, 8, 12, 49}) {
    ModRing k = ModRing::residue_ring(n);
    for (long long a = -20; a < 20; ++a)
      for (long long b = -20; b < 20; ++b) EXPECT_EQ(k.mul(k.from_int(a), k.from_int(b)), k.from_int(a * b));
  }
}

TEST(Units, SmallCases) {
  auto gf2 = unit_group(ModRing::prime_field(2));
  EXPECT_TRUE(gf2.invariant_factors.empty());
  EXPECT_EQ(gf2.order(), 1);

  auto gf5 = unit_group(ModRing::prime_field(5));
  EXPECT_EQ(gf5.invariant_factors, (std::vector<std::int64_t>{4}));
  EXPECT_EQ(gf5.generators, (std::vector<std::int64_t>{2}));

  auto z8 = unit_group(ModRing::residue_ring(8));
  EXPECT_EQ(z8.invariant_factors, (std::vector<std::int64_t>{2, 2}));
  std::set<std::int64_t> gens(z8.generators.begin(), z8.generators.end());
  EXPECT_EQ(gens, (std::set<std::int64_t>{3, 5}));

  EXPECT_THROW(unit_group(Rationals{}), Error);
}

// Every claimed generator has exactly its factor as order, and the dlog table
// reproduces each unit.
TEST(Units, PresentationProperties) {
  for (std::int64_t n : {3, 7, 8, 9, 12, 15, 16, 24, 35, 49}) {
    ModRing k = ModRing::residue_ring(n);
    auto u = unit_group(k);
    std::int64_t count = 0;
    for (std::int64_t a = 1; a < n; ++a) count += std::gcd(a, n) == 1;
    EXPECT_EQ(u.order(), count) << n;
    for (std::size_t i = 0; i + 1 < u.invariant_factors.size(); ++i)
      EXPECT_EQ(u.invariant_factors[i + 1] % u.invariant_factors[i], 0);
    for (std::size_t i = 0; i < u.generators.size(); ++i) {
      std::int64_t d = u.invariant_factors[i];
      EXPECT_EQ(k.pow(u.generators[i], d), 1);
      for (std::int64_t m = 1; m < d; ++m) {
        if (d % m == 0) EXPECT_NE(k.pow(u.generators[i], m), 1);
      }
    }
    for (const auto& [val, ex] : u.dlog) {
      std::int64_t x = 1;
      for (std::size_t i = 0; i < ex.size(); ++i) x = k.mul(x, k.pow(u.generators[i], ex[i]));
      EXPECT_EQ(x, val);
    }
  }
}

TEST(Linear, IdentitySystem) {
  ModRing k = ModRing::prime_field(7);
  auto s = solve_linear(k, identity_mat(k, 3), RVec<ModRing>{1, 2, 3});
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, (RVec<ModRing>{1, 2, 3}));
  EXPECT_TRUE(s.nullspace.empty());
}

TEST(Linear, ResidueRingSolve) {
  ModRing k = ModRing::residue_ring(8);
  RMat<ModRing> a(1, 1, 2);
  auto s = solve_linear(k, a, RVec<ModRing>{4});
  ASSERT_TRUE(s.particular);
  // oracle: exhaustive enumeration over Z/8
  std::set<std::int64_t> brute, found;
  for (std::int64_t x = 0; x < 8; ++x)
    if (k.mul(2, x) == 4) brute.insert(x);
  EXPECT_EQ(brute, (std::set<std::int64_t>{2, 6}));
  ASSERT_EQ(s.nullspace.size(), 1u);
  for (std::int64_t t = 0; t < 8; ++t) found.insert(k.add((*s.particular)[0], k.mul(t, s.nullspace[0][0])));
  EXPECT_EQ(found, brute);
  EXPECT_EQ(k.mul(2, s.nullspace[0][0]), 0);

  auto bad = solve_linear(k, a, RVec<ModRing>{3});
  EXPECT_FALSE(bad.consistent());
  EXPECT_TRUE(bad.certificate_row.has_value());
}

TEST(Linear, FieldNullspace) {
  ModRing k = ModRing::prime_field(5);
  RMat<ModRing> a(1, 2, 1);
  auto ns = nullspace(k, a);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(vec_is_zero(k, mat_vec(k, a, ns[0])));
}

TEST(Linear, InconsistentFieldCertificate) {
  Rationals q;
  RMat<Rationals> a(2, 1, mpq_class(1));
  auto s = solve_linear(q, a, RVec<Rationals>{1, 2});
  ASSERT_FALSE(s.consistent());
  ASSERT_TRUE(s.certificate);
  const auto& y = *s.certificate;
  EXPECT_EQ(y[0] + y[1], 0);
  EXPECT_NE(y[0] + 2 * y[1], 0);
}

// Round-trip on pseudo-random systems over several rings.
TEST(Linear, RandomRoundTrip) {
  std::uint64_t seed = 12345;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>(seed >> 33);
  };
  for (std::int64_t n : {5, 7, 12, 8}) {
    ModRing k = ModRing::residue_ring(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + next() % 4, c = 1 + next() % 4;
      RMat<ModRing> a(r, c, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = k.from_int(next() % 3 == 0 ? 0 : next());
      RVec<ModRing> x0(c);
      for (auto& v : x0) v = k.from_int(next());
      RVec<ModRing> b = mat_vec(k, a, x0);
      auto s = solve_linear(k, a, b);
      ASSERT_TRUE(s.particular);
      EXPECT_EQ(mat_vec(k, a, *s.particular), b);
      for (const auto& v : s.nullspace) EXPECT_TRUE(vec_is_zero(k, mat_vec(k, a, v)));
    }
  }
}

namespace {
mpz_class det2(const IntMat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
}  // namespace

TEST(Smith, Examples) {
  IntMat a(2, 2, mpz_class(0));
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(1, 0) = 6;
  a(1, 1) = 8;
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.diagonal(), (std::vector<mpz_class>{2, 4}));
  EXPECT_EQ(int_mul(int_mul(s.u, a), s.v), s.d);
  EXPECT_EQ(abs(det2(s.u)), 1);
  EXPECT_EQ(abs(det2(s.v)), 1);
  EXPECT_EQ(int_mul(s.v, s.v_inv), int_identity(2));

  auto id = smith_normal_form(int_identity(3));
  EXPECT_EQ(id.d, int_identity(3));
  auto z = smith_normal_form(IntMat(2, 3, mpz_class(0)));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.d, IntMat(2, 3, mpz_class(0)));
}

TEST(Smith, RandomRoundTrip) {
  std::uint64_t seed = 99;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((seed >> 33) % 21) - 10;
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    IntMat a(r, c, mpz_class(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = next();
    auto s = smith_normal_form(a);
    EXPECT_EQ(int_mul(int_mul(s.u, a), s.v), s.d);
    EXPECT_EQ(int_mul(s.v, s.v_inv), int_identity(c));
    auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_GE(d[i], 0);
      for (std::size_t j = 0; j < r; ++j) {
        if (j != i && i < c) EXPECT_EQ(s.d(j, i), 0);
      }
      if (i + 1 < d.size() && d[i] != 0) {
        EXPECT_EQ(d[i + 1] % d[i], 0);
      }
      if (d[i] == 0) {
        for (std::size_t j = i; j < d.size(); ++j) EXPECT_EQ(d[j], 0);
      }
    }
  }
}

TEST(Smith, LatticeQuotient) {
  // Z^2 / <(2,0),(0,3)> = Z/6
  auto q = lattice_quotient(2, {IntVec{2, 0}, IntVec{0, 3}});
  ASSERT_EQ(q.factors.size(), 1u);
  EXPECT_EQ(q.factors[0], 6);
  auto free = lattice_quotient(2, {IntVec{1, 1}});
  ASSERT_EQ(free.factors.size(), 1u);
  EXPECT_EQ(free.factors[0], 0);
}
