#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdb/codes.hpp"
#include "zdb/construct.hpp"
#include "zdb/verify.hpp"

namespace zdb {

/// Smallest-index unit of multiplicative order exactly e, optionally also
/// requiring <b> to satisfy the unit-difference condition. Throws NotFound.
Element find_element_of_order(const Ring& ring, std::uint64_t e, bool require_unit_difference);

/// Named constructions, each with its parameters.
///
/// Parameters used per id:
///   cor1      n, e        Z_n x <order-e>, product construction
///   cor2      q_list, e   prod GF(q_i) x <order-e>, product construction
///   cai_thm1  n, e        Z_n, <b> of order e, generic
///   ding_thm1 q_list, e   prod GF(q_i), <(b_1..b_k)> each of order e, generic
///   ding_thm3 m           Z_{2^m-1}, <2>, generic
///   ding_thm5 m           Z_{2^m-1}, <2>, doubled
///   zha_cor1  b, s        Z_{(b^s-1)/(b-1)}, <b>, generic
///   zha_cor2  b, s        same ring, doubled
///   zha_thm2  b, s        F_p x F_p with p = (b^s-1)/(b-1), <(b,b)>, generic
///   m2f5      -           M_2(F_5), G = <3I>, H = <[[4,4],[1,0]]>, product
struct Recipe {
  std::string id;
  std::optional<std::uint64_t> n, e, m, b, s;
  std::vector<std::uint64_t> q_list;
};

struct SearchResult {
  std::string label;
  std::string recipe;
  RingDescriptor ring;
  std::vector<Element> generators;        // G generator, then H generator if any
  std::vector<std::uint64_t> subgroup_orders;
  std::string construction;               // generic | product | doubled
  ZdbParams expected;
  std::optional<ZdbFunction> function;  // always set by run_recipe
  std::optional<ZdbParams> certified;
  std::vector<std::string> notes;
};

/// Builds the instance and checks the claim against the recipe's closed form.
/// Throws RecipeHypothesisError naming the failed hypothesis. Certification
/// (the O(n^2) oracle) is left to certify().
SearchResult run_recipe(const Recipe& recipe);

/// True iff n is odd, n >= 3, and e(e-1) divides p - 1 for every prime p | n.
bool cor1_admissible(std::uint64_t n, std::uint64_t e);

/// All admissible odd n <= n_max for the given e, built with run_recipe(cor1), ascending n.
std::vector<SearchResult> search_cor1(std::uint64_t n_max, std::uint64_t e);

/// Product construction over prod GF(q_i). Throws NotFound naming the first
/// q_i with e(e-1) not dividing q_i - 1.
SearchResult search_cor2(const std::vector<std::uint64_t>& q_list, std::uint64_t e);

/// Runs verify_zdb and stores the certified parameters. Returns the verdict.
bool certify(SearchResult& result);

struct CertificationRow {
  std::string label;
  std::string construction;
  ZdbParams claimed;
  ZdbParams certified;
  bool profile_ok = false;
  std::optional<BoundReport> ccc, cwc, dss;
  std::optional<DssCheck> dss_check;
  bool distance_identity = false;
};

class CertificationFailure : public std::runtime_error {
 public:
  CertificationFailure(std::string label, std::string what)
      : std::runtime_error(label + ": " + what), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

/// Verification, composition profile, and every applicable bound check.
/// Product-construction instances must additionally meet all three bounds
/// with equality and give a perfect DSS with lambda = en - e + 2.
/// Throws CertificationFailure identifying the first failing instance.
std::vector<CertificationRow> certify_all(std::vector<SearchResult>& results);

/// The built-in recipe list: product triples over Z_n, field products and
/// M_2(F_5), plus the generic and doubled special cases. All domains <= 2500.
std::vector<Recipe> default_recipes();
std::vector<SearchResult> default_catalog();

}  // namespace zdb
