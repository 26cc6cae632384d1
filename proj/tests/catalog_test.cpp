#include "zdb/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace zdb {
namespace {

TEST(FindElementTest, Examples) {
  const Ring z7(RingDescriptor::residue(7));
  EXPECT_EQ(find_element_of_order(z7, 3, false), 2u);
  EXPECT_THROW(find_element_of_order(z7, 5, false), NotFound);
  EXPECT_EQ(find_element_of_order(Ring(RingDescriptor::residue(31)), 5, true), 2u);
  EXPECT_EQ(find_element_of_order(z7, 1, true), 1u);
}

TEST(FindElementTest, MatchesScan) {
  const Ring gf49(RingDescriptor::field(7, 2));
  for (std::uint64_t e : {2, 3, 4, 6, 8, 12, 16, 24, 48}) {
    Element expected = 0;
    for (Element a = 1; a < gf49.order(); ++a) {
      Element x = a;
      std::uint64_t k = 1;
      while (x != gf49.one()) {
        x = gf49.mul(x, a);
        ++k;
      }
      if (k == e) {
        expected = a;
        break;
      }
    }
    EXPECT_EQ(find_element_of_order(gf49, e, false), expected) << "e=" << e;
  }
}

// Independent admissibility: every prime factor p of n has e(e-1) | p - 1.
std::vector<std::uint64_t> admissible_by_trial_division(std::uint64_t n_max, std::uint64_t e) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; n <= n_max; n += 2) {
    bool ok = true;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest; ++p) {
      if (rest % p != 0) continue;
      ok = ok && (p - 1) % (e * (e - 1)) == 0;
      while (rest % p == 0) rest /= p;
    }
    if (ok) out.push_back(n);
  }
  return out;
}

TEST(SearchCor1Test, OrderThree) {
  const auto results = search_cor1(100, 3);
  std::vector<std::uint64_t> ns;
  for (const auto& r : results) ns.push_back(r.ring.n);
  const std::vector<std::uint64_t> expected{7, 13, 19, 31, 37, 43, 49, 61, 67, 73, 79, 91, 97};
  EXPECT_EQ(ns, expected);
  EXPECT_EQ(ns, admissible_by_trial_division(100, 3));
  for (const auto& r : results) {
    EXPECT_EQ(r.expected, (ZdbParams{3 * r.ring.n, (3 * r.ring.n - 1) / 2 + 1, 1}));
    EXPECT_EQ(r.function->claimed, r.expected);
  }
}

TEST(SearchCor1Test, OrderFour) {
  std::vector<std::uint64_t> ns;
  for (const auto& r : search_cor1(100, 4)) ns.push_back(r.ring.n);
  EXPECT_EQ(ns, (std::vector<std::uint64_t>{13, 37, 61, 73, 97}));
  EXPECT_EQ(ns, admissible_by_trial_division(100, 4));
}

TEST(SearchCor1Test, AdmissibilityAgreesWithTrialDivision) {
  for (std::uint64_t e : {3, 4, 5, 6}) {
    std::vector<std::uint64_t> ours;
    for (std::uint64_t n = 3; n <= 2000; n += 2) {
      if (cor1_admissible(n, e)) ours.push_back(n);
    }
    EXPECT_EQ(ours, admissible_by_trial_division(2000, e)) << "e=" << e;
  }
  EXPECT_FALSE(cor1_admissible(8, 3));
}

TEST(SearchCor1Test, ComposedModulusCertifies) {
  auto r = run_recipe(Recipe{"cor1", 91, 3});
  EXPECT_EQ(r.expected, (ZdbParams{273, 137, 1}));
  EXPECT_TRUE(certify(r));
  EXPECT_EQ(r.certified, std::optional<ZdbParams>(ZdbParams{273, 137, 1}));
}

TEST(SearchCor2Test, Examples) {
  auto r25 = search_cor2({25}, 4);
  EXPECT_EQ(r25.expected, (ZdbParams{100, 34, 2}));
  EXPECT_TRUE(certify(r25));

  auto r121 = search_cor2({121}, 6);
  EXPECT_EQ(r121.expected, (ZdbParams{726, 146, 4}));
  EXPECT_TRUE(certify(r121));

  auto r91 = search_cor2({7, 13}, 3);
  EXPECT_EQ(r91.expected, (ZdbParams{273, 137, 1}));
  EXPECT_TRUE(certify(r91));

  try {
    search_cor2({7, 11}, 3);
    FAIL() << "expected NotFound";
  } catch (const NotFound& e) {
    EXPECT_NE(std::string(e.what()).find("11"), std::string::npos);
  }
  EXPECT_THROW(search_cor2({6}, 3), std::exception);
}

TEST(RecipeTest, SpecialCases) {
  auto d3 = run_recipe(Recipe{"ding_thm3", std::nullopt, std::nullopt, 5});
  EXPECT_EQ(d3.expected, (ZdbParams{31, 7, 4}));
  EXPECT_TRUE(certify(d3));

  auto d5 = run_recipe(Recipe{"ding_thm5", std::nullopt, std::nullopt, 5});
  EXPECT_EQ(d5.expected, (ZdbParams{31, 4, 9}));
  EXPECT_TRUE(certify(d5));

  Recipe zha{"zha_thm2"};
  zha.b = 2;
  zha.s = 5;
  auto z = run_recipe(zha);
  EXPECT_EQ(z.expected, (ZdbParams{961, 193, 4}));
  EXPECT_TRUE(certify(z));

  Recipe zc1{"zha_cor1"};
  zc1.b = 3;
  zc1.s = 5;
  EXPECT_EQ(run_recipe(zc1).expected, (ZdbParams{121, 25, 4}));
  zc1.id = "zha_cor2";
  EXPECT_EQ(run_recipe(zc1).expected, (ZdbParams{121, 13, 9}));

  auto m2 = run_recipe(Recipe{"m2f5"});
  EXPECT_EQ(m2.expected, (ZdbParams{2500, 834, 2}));
}

TEST(RecipeTest, HypothesisViolationsAreNamed) {
  try {
    run_recipe(Recipe{"ding_thm3", std::nullopt, std::nullopt, 4});
    FAIL() << "expected RecipeHypothesisError";
  } catch (const RecipeHypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("ding_thm3"), std::string::npos);
  }
  EXPECT_THROW(run_recipe(Recipe{"cor1", 15, 3}), RecipeHypothesisError);
  EXPECT_THROW(run_recipe(Recipe{"cor1"}), RecipeHypothesisError);
  EXPECT_THROW(run_recipe(Recipe{"no_such_recipe"}), RecipeHypothesisError);
}

TEST(CertifyAllTest, EmptyInput) {
  std::vector<SearchResult> none;
  EXPECT_TRUE(certify_all(none).empty());
}

TEST(CertifyAllTest, CorruptedTableAborts) {
  std::vector<SearchResult> results{run_recipe(Recipe{"cor1", 7, 3})};
  // Moving one element into the single-preimage symbol 0 changes sum w^2, so no constant spectrum survives.
  auto& table = results[0].function->table;
  const auto victim = std::find_if(table.begin(), table.end(), [](auto v) { return v != 0; });
  *victim = 0;
  try {
    certify_all(results);
    FAIL() << "expected CertificationFailure";
  } catch (const CertificationFailure& e) {
    EXPECT_EQ(e.label(), results[0].label);
  }
}

TEST(CertifyAllTest, SmallSubset) {
  std::vector<SearchResult> results{run_recipe(Recipe{"cor1", 7, 3}), run_recipe(Recipe{"cor1", 13, 4}),
                                    run_recipe(Recipe{"cai_thm1", 31, 5})};
  const auto rows = certify_all(results);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.certified, row.claimed);
    EXPECT_TRUE(row.profile_ok);
    EXPECT_TRUE(row.distance_identity);
  }
  EXPECT_TRUE(rows[0].ccc->optimal);
  EXPECT_TRUE(rows[0].cwc->optimal);
  EXPECT_TRUE(rows[0].dss->optimal);
  EXPECT_EQ(rows[1].dss_check->lambda, std::optional<std::uint64_t>(4 * 13 - 4 + 2));
}

TEST(DefaultCatalogTest, ShapeOfRecipeList) {
  const auto recipes = default_recipes();
  EXPECT_GE(recipes.size(), 30u);
  std::size_t product = 0;
  for (const auto& r : recipes) {
    if (r.id == "cor1" || r.id == "cor2" || r.id == "m2f5") ++product;
  }
  EXPECT_GE(product, 10u);
}

}  // namespace
}  // namespace zdb
