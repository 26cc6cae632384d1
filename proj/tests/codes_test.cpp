#include "zdb/codes.hpp"

#include <gtest/gtest.h>

#include "zdb/catalog.hpp"
#include "zdb/verify.hpp"

namespace zdb {
namespace {

const Ring kZ7{RingDescriptor::residue(7)};

ZdbFunction z7_product() {
  return construct_product(kZ7, Subgroup(kZ7, {1, 2, 4}), Subgroup(kZ7, {1, 6}));
}

std::vector<std::uint64_t> profile(std::uint64_t e, std::uint64_t m) { return expected_product_profile(e, m); }

// Naive O(M^2 n) distance, independent of the library's loop.
std::uint64_t naive_min_distance(const CodeBook& c) {
  std::uint64_t best = c.n + 1;
  for (std::uint64_t i = 0; i < c.size; ++i) {
    for (std::uint64_t j = i + 1; j < c.size; ++j) {
      std::uint64_t d = 0;
      for (std::uint64_t k = 0; k < c.n; ++k) d += c.words[i * c.n + k] != c.words[j * c.n + k];
      best = std::min(best, d);
    }
  }
  return best;
}

TEST(CccTest, ZSevenProduct) {
  const auto f = z7_product();
  const auto c = ccc_from_zdb(f);
  EXPECT_EQ(c.kind, CodeKind::ccc);
  EXPECT_EQ(c.n, 21u);
  EXPECT_EQ(c.size, 21u);
  EXPECT_EQ(c.q, 11u);
  EXPECT_EQ(c.min_distance, 20u);
  EXPECT_EQ(naive_min_distance(c), 20u);
  EXPECT_EQ(min_distance(c), 20u);
  auto sorted = c.composition;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, profile(3, 10));
  EXPECT_TRUE(common_composition(c).has_value());
  // Row a is the shift by domain element a.
  for (Element a = 0; a < f.domain.order(); ++a) {
    for (Element y = 0; y < f.domain.order(); ++y) ASSERT_EQ(c.row(a)[y], shift_evaluate(f, y, a));
  }
}

TEST(CccTest, FieldOfTwentyFive) {
  const auto c = ccc_from_zdb(*search_cor2({25}, 4).function);
  EXPECT_EQ(c.n, 100u);
  EXPECT_EQ(c.size, 100u);
  EXPECT_EQ(c.min_distance, 98u);
  EXPECT_EQ(c.q, 34u);
}

TEST(CccTest, BijectionOnZThree) {
  const Ring z3(RingDescriptor::residue(3));
  const auto c = ccc_from_zdb(construct_generic(z3, Subgroup(z3, {1})));
  EXPECT_EQ(c.size, 3u);
  EXPECT_EQ(min_distance(c), 3u);
}

TEST(CccTest, DistanceIdentityMatchesLambda) {
  // Every pair of rows of a shift code sits at distance n - lambda.
  const auto c = ccc_from_zdb(z7_product());
  const auto hist = distance_histogram(c);
  ASSERT_EQ(hist.size(), 1u);
  EXPECT_EQ(hist.begin()->first, 20u);
  EXPECT_EQ(hist.begin()->second, 21u * 20u / 2u);
}

TEST(CccTest, MinDistanceEdgeCases) {
  CodeBook c;
  c.n = 3;
  c.size = 2;
  c.q = 2;
  c.words = {0, 1, 1, 0, 1, 1};
  EXPECT_EQ(min_distance(c), 0u);
  c.size = 1;
  c.words.resize(3);
  EXPECT_THROW(min_distance(c), DomainError);
}

TEST(CccTest, RefusesUnverifiedFunction) {
  auto f = z7_product();
  std::swap(f.table[0], f.table[5]);
  EXPECT_THROW(ccc_from_zdb(f), UnverifiedFunction);
  EXPECT_THROW(cwc_from_zdb(f), UnverifiedFunction);
  EXPECT_THROW(dss_from_zdb(f), UnverifiedFunction);
}

TEST(CwcTest, Examples) {
  const auto c = cwc_from_zdb(z7_product());
  EXPECT_EQ(c.kind, CodeKind::cwc);
  EXPECT_EQ(c.weight, 20u);
  EXPECT_EQ(common_weight(c), std::optional<std::uint64_t>(20));
  EXPECT_EQ(c.min_distance, 20u);

  const auto c100 = cwc_from_zdb(*search_cor2({25}, 4).function);
  EXPECT_EQ(c100.weight, 99u);
  EXPECT_EQ(c100.min_distance, 98u);

  Provenance prov;
  const Ring z5(RingDescriptor::residue(5));
  const ZdbFunction zero{AbelianDomain::ring_additive(z5), 1, {0, 0, 0, 0, 0}, {5, 1, 5}, prov};
  EXPECT_THROW(cwc_from_zdb(zero), NotCwcEligible);
}

TEST(CccBoundTest, Examples) {
  const auto r21 = ccc_bound(21, 20, profile(3, 10), 21);
  EXPECT_TRUE(r21.applicable);
  EXPECT_EQ(r21.bound, Rational(21));
  EXPECT_TRUE(r21.optimal);

  const auto r100 = ccc_bound(100, 98, profile(4, 33), 100);
  EXPECT_EQ(r100.bound, Rational(100));
  EXPECT_TRUE(r100.optimal);

  const auto bad = ccc_bound(21, 1, profile(3, 10), 21);
  EXPECT_FALSE(bad.applicable);
  EXPECT_FALSE(bad.optimal);

  EXPECT_FALSE(ccc_bound(21, 20, profile(3, 10), 20).optimal);
}

TEST(CwcBoundTest, Examples) {
  const auto r21 = cwc_bound(21, 20, 20, 11, 21);
  EXPECT_TRUE(r21.applicable);
  EXPECT_EQ(r21.bound, Rational(21));
  EXPECT_TRUE(r21.optimal);

  const auto r100 = cwc_bound(100, 98, 99, 34, 100);
  EXPECT_EQ(r100.bound, Rational(100));
  EXPECT_TRUE(r100.optimal);

  EXPECT_FALSE(cwc_bound(21, 2, 20, 11, 21).applicable);
  EXPECT_THROW(cwc_bound(21, 20, 20, 1, 21), DomainError);
}

TEST(DssBoundTest, Examples) {
  const auto r21 = dss_bound(21, 20, 11, 21);
  EXPECT_EQ(r21.bound, Rational(21));
  EXPECT_TRUE(r21.optimal);
  const auto r100 = dss_bound(100, 98, 34, 100);
  EXPECT_EQ(r100.bound, Rational(100));
  EXPECT_TRUE(r100.optimal);
  EXPECT_FALSE(dss_bound(100, 98, 34, 101).optimal);
}

TEST(CeilSqrtTest, AgainstSquares) {
  for (std::uint64_t x = 0; x < 3000; ++x) {
    const BigInt s = ceil_sqrt(BigInt(x));
    ASSERT_GE(s * s, BigInt(x));
    if (s > 0) ASSERT_LT((s - 1) * (s - 1), BigInt(x));
  }
  EXPECT_EQ(ceil_sqrt(BigInt(441)), BigInt(21));
  EXPECT_EQ(ceil_sqrt(BigInt(440)), BigInt(21));
  EXPECT_EQ(ceil_sqrt(BigInt(9996)), BigInt(100));
}

TEST(DssTest, FromZdb) {
  const auto s = dss_from_zdb(z7_product());
  EXPECT_EQ(s.blocks.size(), 11u);
  EXPECT_EQ(s.tau(), 21u);
  EXPECT_TRUE(s.partitioned);
  const auto check = dss_perfect_check(s);
  EXPECT_TRUE(check.perfect);
  EXPECT_EQ(check.lambda, std::optional<std::uint64_t>(20));

  const auto s100 = dss_from_zdb(*search_cor2({25}, 4).function);
  EXPECT_EQ(dss_perfect_check(s100).lambda, std::optional<std::uint64_t>(98));
}

TEST(DssTest, HandBuiltSystems) {
  const Ring z4(RingDescriptor::residue(4));
  const DssSystem not_perfect{AbelianDomain::ring_additive(z4), {{0}, {1}}};
  const auto c4 = dss_perfect_check(not_perfect);
  EXPECT_FALSE(c4.perfect);
  EXPECT_EQ(c4.lambda_min, 0u);

  const Ring z2(RingDescriptor::residue(2));
  const DssSystem two{AbelianDomain::ring_additive(z2), {{0}, {1}}};
  const auto c2 = dss_perfect_check(two);
  // Ordered pairs: 0 - 1 and 1 - 0 both give 1, so lambda(n - 1) = n^2 - sum w^2 = 2.
  EXPECT_TRUE(c2.perfect);
  EXPECT_EQ(c2.lambda, std::optional<std::uint64_t>(2));

  const DssSystem single{AbelianDomain::ring_additive(z4), {{0, 1, 2}}};
  const auto c1 = dss_perfect_check(single);
  EXPECT_FALSE(c1.perfect);
  EXPECT_EQ(c1.lambda_min, 0u);
  EXPECT_FALSE(c1.lambda.has_value());
  EXPECT_FALSE(c1.diagnostic.empty());
}

TEST(DssTest, NaiveDifferenceCount) {
  // lambda(n - 1) = n^2 - sum w^2 for a partition-type perfect DSS.
  const auto s = dss_from_zdb(z7_product());
  std::vector<std::uint64_t> counts(s.group.order(), 0);
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    for (std::size_t j = 0; j < s.blocks.size(); ++j) {
      if (i == j) continue;
      for (Element x : s.blocks[i]) {
        for (Element y : s.blocks[j]) ++counts[s.group.compose(x, s.group.inverse(y))];
      }
    }
  }
  EXPECT_EQ(counts[s.group.identity()], 0u);
  for (Element x = 0; x < counts.size(); ++x) {
    if (x != s.group.identity()) ASSERT_EQ(counts[x], 20u);
  }
  std::uint64_t squares = 0;
  for (const auto& b : s.blocks) squares += b.size() * b.size();
  EXPECT_EQ(20u * 20u, 21u * 21u - squares);
}

TEST(RationalFormatTest, Strings) {
  EXPECT_EQ(to_string(Rational(21)), "21");
  EXPECT_EQ(to_string(Rational(BigInt(7), BigInt(2))), "7/2");
}

}  // namespace
}  // namespace zdb
