#include "zdb/ring.hpp"

#include <gtest/gtest.h>

#include <thread>

#include "test_rings.hpp"

namespace zdb {
namespace {

TEST(RingTest, ResidueArithmetic) {
  const Ring z7(RingDescriptor::residue(7));
  EXPECT_EQ(z7.order(), 7u);
  EXPECT_EQ(z7.add(3, 5), 1u);
  EXPECT_EQ(z7.mul(3, 5), 1u);
  EXPECT_EQ(z7.neg(3), 4u);
  EXPECT_EQ(z7.one(), 1u);
  EXPECT_EQ(z7.zero(), 0u);
  EXPECT_EQ(z7.try_invert(3), std::optional<Element>(5));
  EXPECT_TRUE(z7.is_field());
}

TEST(RingTest, ResidueNonUnit) {
  const Ring z15(RingDescriptor::residue(15));
  EXPECT_FALSE(z15.try_invert(5).has_value());
  EXPECT_FALSE(z15.try_invert(0).has_value());
  EXPECT_EQ(z15.try_invert(2), std::optional<Element>(8));
  EXPECT_FALSE(z15.is_field());
}

TEST(RingTest, FieldOfFourAddsByXor) {
  const Ring gf4(RingDescriptor::field(2, 2));
  EXPECT_EQ(gf4.descriptor().modulus, (std::vector<std::uint64_t>{1, 1, 1}));
  // x + 1
  EXPECT_EQ(gf4.add(2, 1), 3u);
  // x * x = x + 1 modulo x^2 + x + 1
  EXPECT_EQ(gf4.mul(2, 2), 3u);
  EXPECT_EQ(gf4.enumerate(), (std::vector<Element>{0, 1, 2, 3}));
}

TEST(RingTest, FieldOfTwentyFiveUsesSmallestModulus) {
  const Ring gf25(RingDescriptor::field(5, 2));
  // x^2 + 1 splits (4 = 2^2); x^2 + x + 1 is the first irreducible.
  EXPECT_EQ(gf25.descriptor().modulus, (std::vector<std::uint64_t>{1, 1, 1}));
  // x * x = -x - 1 = 4x + 4
  EXPECT_EQ(gf25.mul(5, 5), gf25.encode({4, 4}));
  EXPECT_EQ(gf25.order(), 25u);
}

TEST(RingTest, SmallestIrreducibleExamples) {
  // c0 is the most significant key: x^3 + x^2 + 1 precedes x^3 + x + 1.
  EXPECT_EQ(smallest_irreducible(2, 3), (std::vector<std::uint64_t>{1, 0, 1, 1}));
  EXPECT_EQ(smallest_irreducible(11, 2), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(smallest_irreducible(7, 1), (std::vector<std::uint64_t>{0, 1}));
}

// Number of monic irreducibles of degree r over F_p: (1/r) sum_{d | r} mu(d) p^(r/d).
std::uint64_t necklace_count(std::uint64_t p, unsigned r) {
  auto mobius = [](unsigned d) {
    int mu = 1;
    for (unsigned f = 2; f * f <= d; ++f) {
      if (d % f == 0) {
        d /= f;
        if (d % f == 0) return 0;
        mu = -mu;
      }
    }
    if (d > 1) mu = -mu;
    return mu;
  };
  std::int64_t total = 0;
  for (unsigned d = 1; d <= r; ++d) {
    if (r % d != 0) continue;
    std::int64_t power = 1;
    for (unsigned i = 0; i < r / d; ++i) power *= static_cast<std::int64_t>(p);
    total += mobius(d) * power;
  }
  return static_cast<std::uint64_t>(total / r);
}

TEST(RingTest, IrreducibilityMatchesNecklaceCount) {
  const std::vector<std::pair<std::uint64_t, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                               {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}};
  for (auto [p, r] : cases) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < r; ++i) total *= p;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint64_t> poly(r + 1, 0);
      std::uint64_t rest = code;
      for (unsigned i = 0; i < r; ++i) {
        poly[i] = rest % p;
        rest /= p;
      }
      poly[r] = 1;
      count += is_irreducible(poly, p);
    }
    EXPECT_EQ(count, necklace_count(p, r)) << "p=" << p << " r=" << r;
  }
}

TEST(RingTest, ProductIsMixedRadix) {
  const Ring r(RingDescriptor::product({RingDescriptor::residue(5), RingDescriptor::residue(7)}));
  EXPECT_EQ(r.order(), 35u);
  EXPECT_EQ(r.enumerate().size(), 35u);
  EXPECT_EQ(r.encode({3, 4}), 3u + 5u * 4u);
  EXPECT_EQ(r.decode(23), (std::vector<std::uint64_t>{3, 4}));
  EXPECT_EQ(r.one(), 1u + 5u);
  EXPECT_EQ(r.mul(r.encode({2, 3}), r.encode({3, 5})), r.encode({1, 1}));
}

TEST(RingTest, MatrixRingOverF5) {
  const Ring m2(RingDescriptor::matrix(2, RingDescriptor::residue(5)));
  EXPECT_EQ(m2.order(), 625u);
  EXPECT_FALSE(m2.is_commutative());
  const Element a = m2.encode({3, 0, 0, 3});
  EXPECT_EQ(m2.mul(a, a), m2.encode({4, 0, 0, 4}));
  EXPECT_EQ(m2.one(), m2.encode({1, 0, 0, 1}));

  const Element b = m2.encode({4, 4, 1, 0});
  const auto b_inv = m2.try_invert(b);
  ASSERT_TRUE(b_inv.has_value());
  // det = -4 = 1, so the inverse is the adjugate [[0, -4], [-1, 4]].
  EXPECT_EQ(*b_inv, m2.encode({0, 1, 4, 4}));
  EXPECT_EQ(m2.mul(b, *b_inv), m2.one());
  EXPECT_EQ(m2.mul(*b_inv, b), m2.one());
  EXPECT_FALSE(m2.try_invert(m2.encode({1, 2, 2, 4})).has_value());

  // entrywise addition
  EXPECT_EQ(m2.add(m2.encode({4, 4, 1, 0}), m2.encode({3, 0, 0, 3})), m2.encode({2, 4, 1, 3}));
}

TEST(RingTest, ErrorsAndValidation) {
  const Ring z7(RingDescriptor::residue(7));
  EXPECT_THROW(z7.add(7, 0), DomainError);
  EXPECT_THROW(z7.mul(0, 9), DomainError);
  EXPECT_THROW(z7.try_invert(7), DomainError);
  EXPECT_THROW(Ring(RingDescriptor::residue(1)), DomainError);
  EXPECT_THROW(Ring(RingDescriptor::residue(0)), DomainError);
  EXPECT_NO_THROW(Ring(RingDescriptor::residue(2)));
  EXPECT_THROW(Ring(RingDescriptor::field(4, 1, {0, 1})), DomainError);
  EXPECT_THROW(Ring(RingDescriptor::field(5, 2, {1, 0, 1})), DomainError);  // x^2 + 1 = (x-2)(x+2)
  EXPECT_THROW(Ring(RingDescriptor::field(5, 2, {1, 1, 2})), DomainError);  // not monic
  EXPECT_THROW(Ring(RingDescriptor::matrix(2, RingDescriptor::residue(6))), DomainError);
  EXPECT_THROW(Ring(RingDescriptor::product({})), DomainError);
  EXPECT_THROW(z7.encode({7}), DomainError);
}

TEST(RingTest, DescriptorEqualityIsStructural) {
  EXPECT_EQ(RingDescriptor::field(5, 2), RingDescriptor::field(5, 2, {1, 1, 1}));
  EXPECT_NE(RingDescriptor::field(5, 2), RingDescriptor::field(5, 2, {2, 0, 1}));
  EXPECT_NE(RingDescriptor::residue(7), RingDescriptor::field(7, 1));
  EXPECT_EQ(describe(RingDescriptor::matrix(2, RingDescriptor::residue(5))), "M_2(Z_5)");
  EXPECT_EQ(describe(RingDescriptor::product({RingDescriptor::field(7, 1), RingDescriptor::field(13, 1)})),
            "GF(7) x GF(13)");
}

class RingAxioms : public ::testing::TestWithParam<RingDescriptor> {};

TEST_P(RingAxioms, ExhaustiveLaws) {
  const Ring r(GetParam());
  const auto n = r.order();
  for (Element a = 0; a < n; ++a) {
    ASSERT_EQ(r.add(a, r.zero()), a);
    ASSERT_EQ(r.mul(a, r.one()), a);
    ASSERT_EQ(r.mul(r.one(), a), a);
    ASSERT_EQ(r.add(a, r.neg(a)), r.zero());
    ASSERT_EQ(r.encode(r.decode(a)), a);
    for (Element b = 0; b < n; ++b) {
      ASSERT_EQ(r.add(a, b), r.add(b, a));
      if (r.is_commutative()) ASSERT_EQ(r.mul(a, b), r.mul(b, a));
      for (Element c = 0; c < n; ++c) {
        ASSERT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        ASSERT_EQ(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c)));
      }
    }
  }
}

TEST_P(RingAxioms, InverseMatchesMultiplicationTable) {
  const Ring r(GetParam());
  const auto n = r.order();
  for (Element a = 0; a < n; ++a) {
    std::optional<Element> two_sided;
    for (Element b = 0; b < n && !two_sided; ++b) {
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) two_sided = b;
    }
    ASSERT_EQ(r.try_invert(a), two_sided) << describe(r.descriptor()) << " element " << a;
  }
}

INSTANTIATE_TEST_SUITE_P(SmallRings, RingAxioms, ::testing::ValuesIn(test::small_rings()),
                         [](const auto& info) { return "ring" + std::to_string(info.index); });

TEST(RingTest, LargeRingWithoutTablesAgreesWithIdentities) {
  // Order above the table threshold exercises the on-the-fly paths.
  const Ring gf121(RingDescriptor::field(11, 2));
  const Ring m2(RingDescriptor::matrix(2, RingDescriptor::residue(7)));
  for (const Ring& r : {gf121, m2}) {
    for (Element a = 0; a < r.order(); a += 7) {
      if (const auto inv = r.try_invert(a)) {
        ASSERT_EQ(r.mul(a, *inv), r.one());
        ASSERT_EQ(r.mul(*inv, a), r.one());
      }
      ASSERT_EQ(r.add(a, r.neg(a)), 0u);
    }
  }
  EXPECT_EQ(gf121.multiplicative_order(gf121.one()), 1u);
}

TEST(RingTest, ConcurrentReadsAgree) {
  const Ring r(RingDescriptor::matrix(2, RingDescriptor::residue(7)));
  std::vector<std::uint64_t> sums(4, 0);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (Element a = 0; a < r.order(); a += 3) sums[t] += r.mul(a, a) + r.try_invert(a).value_or(0);
      });
    }
  }
  EXPECT_EQ(sums[0], sums[1]);
  EXPECT_EQ(sums[0], sums[3]);
}

}  // namespace
}  // namespace zdb
