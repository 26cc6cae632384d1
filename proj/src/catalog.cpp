#include "zdb/catalog.hpp"

#include <algorithm>

namespace zdb {

namespace {

constexpr std::uint64_t kMaxRecipeOrder = 1000000;

void hypothesis(bool ok, const std::string& recipe, const std::string& condition) {
  if (!ok) throw RecipeHypothesisError(recipe + ": hypothesis violated: " + condition);
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const std::string& recipe, const char* name) {
  if (!v) throw RecipeHypothesisError(recipe + ": missing parameter " + std::string(name));
  return *v;
}

bool has_order(const Ring& ring, Element b, std::uint64_t e) {
  if (ring.pow(b, e) != ring.one()) return false;
  for (const auto& [prime, mult] : factorize(e)) {
    if (ring.pow(b, e / prime) == ring.one()) return false;
  }
  return true;
}

// (b^s - 1)/(b - 1), refusing anything above the desk-scale cap.
std::uint64_t repunit(std::uint64_t b, std::uint64_t s, const std::string& recipe) {
  std::uint64_t value = 0;
  for (std::uint64_t i = 0; i < s; ++i) {
    value = value * b + 1;
    hypothesis(value <= kMaxRecipeOrder, recipe, "(b^s - 1)/(b - 1) <= " + std::to_string(kMaxRecipeOrder));
  }
  return value;
}

RingDescriptor field_product(const std::vector<std::uint64_t>& q_list) {
  std::vector<RingDescriptor> comps;
  for (auto q : q_list) {
    const auto pr = prime_power(q);
    comps.push_back(RingDescriptor::field(pr->first, pr->second));
  }
  if (comps.size() == 1) return comps.front();
  return RingDescriptor::product(std::move(comps));
}

// Tuple whose component i is the smallest element of order e in component i.
Element componentwise_element(const Ring& ring, std::uint64_t e) {
  if (ring.descriptor().kind != RingKind::product) return find_element_of_order(ring, e, false);
  std::vector<std::uint64_t> coords;
  for (const auto& c : ring.components()) coords.push_back(find_element_of_order(c, e, false));
  return ring.encode(coords);
}

ZdbParams product_params(std::uint64_t n, std::uint64_t e) {
  const std::uint64_t en = e * n;
  return {en, (en - 1) / (e - 1) + 1, e - 2};
}

ZdbParams generic_params(std::uint64_t n, std::uint64_t e) { return {n, (n - 1) / e + 1, e - 1}; }

SearchResult finish(SearchResult r, const Ring& ring, const Subgroup& g, const std::optional<Subgroup>& h) {
  r.ring = ring.descriptor();
  r.generators.push_back(g.generator().value_or(ring.one()));
  r.subgroup_orders.push_back(g.order());
  if (h) {
    r.generators.push_back(h->generator().value_or(ring.one()));
    r.subgroup_orders.push_back(h->order());
  }
  if (r.construction == "generic") {
    r.function = construct_generic(ring, g);
  } else if (r.construction == "doubled") {
    r.function = construct_doubled(ring, g);
  } else {
    r.function = construct_product(ring, g, *h);
  }
  if (!(r.function->claimed == r.expected)) {
    throw std::logic_error(r.label + ": construction claims " + to_string(r.function->claimed) +
                           " but the closed form gives " + to_string(r.expected));
  }
  return r;
}

void check_prime_powers(const std::vector<std::uint64_t>& q_list, const std::string& recipe) {
  hypothesis(!q_list.empty(), recipe, "q_list is nonempty");
  std::uint64_t order = 1;
  for (auto q : q_list) {
    hypothesis(prime_power(q).has_value(), recipe, "q = " + std::to_string(q) + " is a prime power");
    order *= q;
    hypothesis(order <= kMaxRecipeOrder, recipe, "prod q_i <= " + std::to_string(kMaxRecipeOrder));
  }
}

SearchResult product_from_field_list(const Recipe& rec, std::uint64_t e) {
  const Ring ring(field_product(rec.q_list));
  const Subgroup g = cyclic_subgroup(ring, componentwise_element(ring, e));
  const Subgroup h = cyclic_subgroup(ring, componentwise_element(ring, e - 1));
  if (!check_unit_difference(g)) throw ConditionNotSatisfied("G fails the unit-difference condition");
  if (!check_unit_difference(h)) throw ConditionNotSatisfied("H fails the unit-difference condition");
  SearchResult r;
  r.recipe = rec.id;
  r.label = "cor2 " + describe(ring.descriptor()) + " e=" + std::to_string(e);
  r.construction = "product";
  r.expected = product_params(ring.order(), e);
  return finish(std::move(r), ring, g, h);
}

}  // namespace

Element find_element_of_order(const Ring& ring, std::uint64_t e, bool require_unit_difference) {
  if (e == 0) throw DomainError("order must be at least 1");
  for (Element b = 0; b < ring.order(); ++b) {
    if (!ring.is_unit(b) || !has_order(ring, b, e)) continue;
    if (require_unit_difference && !check_unit_difference(cyclic_subgroup(ring, b))) continue;
    return b;
  }
  throw NotFound("no element of order " + std::to_string(e) + (require_unit_difference ? " with unit differences" : "") +
                 " in " + describe(ring.descriptor()));
}

bool cor1_admissible(std::uint64_t n, std::uint64_t e) {
  if (n < 3 || n % 2 == 0 || e < 2) return false;
  const std::uint64_t step = e * (e - 1);
  for (const auto& [p, mult] : factorize(n)) {
    if ((p - 1) % step != 0) return false;
  }
  return true;
}

SearchResult run_recipe(const Recipe& rec) {
  const std::string& id = rec.id;
  SearchResult r;
  r.recipe = id;

  if (id == "cor1") {
    const auto n = need(rec.n, id, "n");
    const auto e = need(rec.e, id, "e");
    hypothesis(e >= 2, id, "e >= 2");
    hypothesis(n >= 3 && n % 2 == 1, id, "n is odd and n >= 3");
    hypothesis(n <= kMaxRecipeOrder, id, "n <= " + std::to_string(kMaxRecipeOrder));
    hypothesis(cor1_admissible(n, e), id, "e(e-1) divides p - 1 for every prime p | n");
    if (gcd(n, e) != 1) throw std::logic_error("cor1: gcd(n, e) != 1 despite admissible parameters");
    const Ring ring(RingDescriptor::residue(n));
    const Subgroup g = cyclic_subgroup(ring, find_element_of_order(ring, e, true));
    const Subgroup h = cyclic_subgroup(ring, find_element_of_order(ring, e - 1, true));
    r.label = "cor1 Z_" + std::to_string(n) + " e=" + std::to_string(e);
    r.construction = "product";
    r.expected = product_params(n, e);
    r.notes.push_back("Z_" + std::to_string(n) + " x Z_" + std::to_string(e) + " is isomorphic to Z_" +
                      std::to_string(n * e) + " since gcd(n, e) = 1");
    return finish(std::move(r), ring, g, h);
  }

  if (id == "cor2") {
    const auto e = need(rec.e, id, "e");
    hypothesis(e >= 2, id, "e >= 2");
    check_prime_powers(rec.q_list, id);
    for (auto q : rec.q_list) {
      hypothesis((q - 1) % (e * (e - 1)) == 0, id, "e(e-1) divides q - 1 for q = " + std::to_string(q));
    }
    return product_from_field_list(rec, e);
  }

  if (id == "cai_thm1") {
    const auto n = need(rec.n, id, "n");
    const auto e = need(rec.e, id, "e");
    hypothesis(e >= 1, id, "e >= 1");
    hypothesis(n >= 3 && n % 2 == 1, id, "n is odd and n >= 3");
    hypothesis(n <= kMaxRecipeOrder, id, "n <= " + std::to_string(kMaxRecipeOrder));
    for (const auto& [p, mult] : factorize(n)) {
      hypothesis((p - 1) % e == 0, id, "e divides p - 1 for p = " + std::to_string(p));
    }
    const Ring ring(RingDescriptor::residue(n));
    const Subgroup g = cyclic_subgroup(ring, find_element_of_order(ring, e, true));
    r.label = "cai_thm1 Z_" + std::to_string(n) + " e=" + std::to_string(e);
    r.construction = "generic";
    r.expected = generic_params(n, e);
    return finish(std::move(r), ring, g, std::nullopt);
  }

  if (id == "ding_thm1") {
    const auto e = need(rec.e, id, "e");
    hypothesis(e >= 1, id, "e >= 1");
    check_prime_powers(rec.q_list, id);
    for (auto q : rec.q_list) {
      hypothesis((q - 1) % e == 0, id, "e divides q - 1 for q = " + std::to_string(q));
    }
    const Ring ring(field_product(rec.q_list));
    const Subgroup g = cyclic_subgroup(ring, componentwise_element(ring, e));
    r.label = "ding_thm1 " + describe(ring.descriptor()) + " e=" + std::to_string(e);
    r.construction = "generic";
    r.expected = generic_params(ring.order(), e);
    return finish(std::move(r), ring, g, std::nullopt);
  }

  if (id == "ding_thm3" || id == "ding_thm5") {
    const auto m = need(rec.m, id, "m");
    const bool doubled = id == "ding_thm5";
    hypothesis(is_prime(m), id, "m is prime");
    if (doubled) hypothesis(m % 2 == 1, id, "m is odd");
    hypothesis(m < 20, id, "2^m - 1 <= " + std::to_string(kMaxRecipeOrder));
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    const Ring ring(RingDescriptor::residue(n));
    const Subgroup g = cyclic_subgroup(ring, 2 % n);
    if (g.order() != m) throw std::logic_error(id + ": <2> has unexpected order");
    r.label = id + " Z_" + std::to_string(n) + " m=" + std::to_string(m);
    r.construction = doubled ? "doubled" : "generic";
    r.expected = generic_params(n, doubled ? 2 * m : m);
    if (m == 2) r.notes.push_back("m = 2 gives the degenerate e = 2 case over Z_3");
    return finish(std::move(r), ring, g, std::nullopt);
  }

  if (id == "zha_cor1" || id == "zha_cor2") {
    const auto b = need(rec.b, id, "b");
    const auto s = need(rec.s, id, "s");
    const bool doubled = id == "zha_cor2";
    hypothesis(is_prime(s), id, "s is prime");
    if (doubled) hypothesis(s % 2 == 1, id, "s is odd");
    hypothesis(b >= 2, id, "b >= 2");
    hypothesis(gcd(s, b - 1) == 1, id, "gcd(s, b - 1) = 1");
    const std::uint64_t n = repunit(b, s, id);
    hypothesis(n >= 3, id, "(b^s - 1)/(b - 1) >= 3");
    const Ring ring(RingDescriptor::residue(n));
    const Subgroup g = cyclic_subgroup(ring, b % n);
    if (g.order() != s) throw std::logic_error(id + ": <b> has unexpected order");
    r.label = id + " Z_" + std::to_string(n) + " b=" + std::to_string(b) + " s=" + std::to_string(s);
    r.construction = doubled ? "doubled" : "generic";
    r.expected = generic_params(n, doubled ? 2 * s : s);
    return finish(std::move(r), ring, g, std::nullopt);
  }

  if (id == "zha_thm2") {
    const auto b = need(rec.b, id, "b");
    const auto s = need(rec.s, id, "s");
    hypothesis(is_prime(s), id, "s is prime");
    hypothesis(b >= 2, id, "b >= 2");
    hypothesis(gcd(s, b - 1) == 1, id, "gcd(s, b - 1) = 1");
    const std::uint64_t p = repunit(b, s, id);
    hypothesis(p % 2 == 1 && is_prime(p), id, "p = (b^s - 1)/(b - 1) is an odd prime");
    hypothesis(p * p <= kMaxRecipeOrder, id, "p^2 <= " + std::to_string(kMaxRecipeOrder));
    const Ring ring(RingDescriptor::product({RingDescriptor::residue(p), RingDescriptor::residue(p)}));
    const Subgroup g = cyclic_subgroup(ring, ring.encode({b % p, b % p}));
    r.label = "zha_thm2 F_" + std::to_string(p) + " x F_" + std::to_string(p) + " b=" + std::to_string(b);
    r.construction = "generic";
    r.expected = generic_params(p * p, s);
    return finish(std::move(r), ring, g, std::nullopt);
  }

  if (id == "m2f5") {
    const Ring ring(RingDescriptor::matrix(2, RingDescriptor::residue(5)));
    const Subgroup g = cyclic_subgroup(ring, ring.encode({3, 0, 0, 3}));
    const Subgroup h = cyclic_subgroup(ring, ring.encode({4, 4, 1, 0}));
    r.label = "m2f5 M_2(GF(5)) e=4";
    r.construction = "product";
    r.expected = product_params(ring.order(), 4);
    r.notes.push_back("noncommutative ring; left cosets");
    return finish(std::move(r), ring, g, h);
  }

  throw RecipeHypothesisError("unknown recipe id '" + id + "'");
}

std::vector<SearchResult> search_cor1(std::uint64_t n_max, std::uint64_t e) {
  if (e < 2) throw DomainError("e must be at least 2");
  if (n_max > kMaxRecipeOrder) throw DomainError("n_max is capped at " + std::to_string(kMaxRecipeOrder));
  std::vector<SearchResult> out;
  for (std::uint64_t n = 3; n <= n_max; n += 2) {
    if (!cor1_admissible(n, e)) continue;
    Recipe rec{"cor1", n, e, {}, {}, {}, {}};
    out.push_back(run_recipe(rec));
  }
  return out;
}

SearchResult search_cor2(const std::vector<std::uint64_t>& q_list, std::uint64_t e) {
  if (e < 2) throw DomainError("e must be at least 2");
  if (q_list.empty()) throw DomainError("q_list must be nonempty");
  for (auto q : q_list) {
    if (!prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
    if ((q - 1) % (e * (e - 1)) != 0) {
      throw NotFound("e(e-1) = " + std::to_string(e * (e - 1)) + " does not divide q - 1 for q = " + std::to_string(q));
    }
  }
  Recipe rec{"cor2", {}, e, {}, {}, {}, q_list};
  return run_recipe(rec);
}

bool certify(SearchResult& result) {
  const auto v = verify_zdb(*result.function);
  if (v.ok) result.certified = v.certified;
  return v.ok;
}

std::vector<CertificationRow> certify_all(std::vector<SearchResult>& results) {
  std::vector<CertificationRow> rows;
  for (auto& res : results) {
    const auto& f = *res.function;
    CertificationRow row;
    row.label = res.label;
    row.construction = res.construction;
    row.claimed = f.claimed;

    const auto v = verify_zdb(f);
    if (!v.ok) {
      std::string what = "verification failed";
      if (v.witness) {
        what += " (" + v.witness->reason;
        if (v.witness->shift) what += ", shift " + std::to_string(*v.witness->shift);
        what += ", expected " + std::to_string(v.witness->expected) + ", got " + std::to_string(v.witness->actual) + ")";
      }
      throw CertificationFailure(res.label, what);
    }
    res.certified = v.certified;
    row.certified = v.certified;
    if (!(v.certified == res.expected)) {
      throw CertificationFailure(res.label, "certified " + to_string(v.certified) + " differs from closed form " +
                                                to_string(res.expected));
    }

    const auto profile = composition_profile(f).sorted();
    const std::uint64_t n = f.domain.order();
    const std::uint64_t lambda = v.certified.lambda;
    const std::uint64_t m = v.certified.m;
    if (res.construction == "product") {
      const std::uint64_t e = lambda + 2;
      row.profile_ok = profile == expected_product_profile(e, m - 1);
    } else {
      const std::uint64_t e = lambda + 1;
      row.profile_ok = profile == expected_product_profile(e + 1, m - 1);
    }
    if (!row.profile_ok) throw CertificationFailure(res.label, "composition profile differs from {1, w x (m-1)}");

    const CodeBook ccc = ccc_from_zdb(f);
    const auto hist = distance_histogram(ccc);
    row.distance_identity = hist.size() == 1 && hist.begin()->first == n - lambda;
    row.ccc = ccc_bound(ccc.n, ccc.min_distance, ccc.composition, ccc.size);

    const auto per_symbol = composition_profile(f).per_symbol;
    if (!per_symbol.empty() && per_symbol[0] == 1) {
      CodeBook cwc = ccc;
      cwc.kind = CodeKind::cwc;
      cwc.weight = common_weight(cwc).value_or(0);
      row.cwc = cwc_bound(cwc.n, cwc.min_distance, cwc.weight, cwc.q, cwc.size);
    }

    const DssSystem dss = dss_from_zdb(f);
    row.dss_check = dss_perfect_check(dss);
    if (dss.blocks.size() >= 2 && dss.lambda >= 1) {
      row.dss = dss_bound(n, dss.lambda, dss.blocks.size(), dss.tau());
    }

    if (!row.distance_identity) throw CertificationFailure(res.label, "shift-code distances are not all n - lambda");
    if (res.construction == "product") {
      const std::uint64_t e = lambda + 2;
      if (!row.ccc->optimal) throw CertificationFailure(res.label, "CCC bound not met with equality");
      if (!row.cwc || !row.cwc->optimal) throw CertificationFailure(res.label, "CWC bound not met with equality");
      if (!row.dss || !row.dss->optimal) throw CertificationFailure(res.label, "DSS bound not met with equality");
      if (!row.dss_check->perfect || row.dss_check->lambda != n - e + 2) {
        throw CertificationFailure(res.label, "DSS is not perfect with lambda = en - e + 2");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Recipe> default_recipes() {
  auto nr = [](std::string id, std::uint64_t n, std::uint64_t e) { return Recipe{std::move(id), n, e, {}, {}, {}, {}}; };
  auto qr = [](std::string id, std::vector<std::uint64_t> q, std::uint64_t e) {
    return Recipe{std::move(id), {}, e, {}, {}, {}, std::move(q)};
  };
  auto mr = [](std::string id, std::uint64_t m) { return Recipe{std::move(id), {}, {}, m, {}, {}, {}}; };
  auto bs = [](std::string id, std::uint64_t b, std::uint64_t s) { return Recipe{std::move(id), {}, {}, {}, b, s, {}}; };
  return {
      // product construction
      nr("cor1", 5, 2),
      nr("cor1", 7, 3),
      nr("cor1", 13, 3),
      nr("cor1", 13, 4),
      nr("cor1", 19, 3),
      nr("cor1", 31, 6),
      nr("cor1", 37, 4),
      nr("cor1", 49, 3),
      nr("cor1", 61, 5),
      nr("cor1", 91, 3),
      qr("cor2", {25}, 4),
      qr("cor2", {49}, 4),
      qr("cor2", {7, 13}, 3),
      qr("cor2", {121}, 6),
      Recipe{"m2f5", {}, {}, {}, {}, {}, {}},
      // generic and doubled special cases
      nr("cai_thm1", 49, 3),
      nr("cai_thm1", 91, 3),
      qr("ding_thm1", {9}, 4),
      qr("ding_thm1", {25}, 4),
      qr("ding_thm1", {7, 13}, 3),
      mr("ding_thm3", 2),
      mr("ding_thm3", 3),
      mr("ding_thm3", 5),
      mr("ding_thm3", 7),
      mr("ding_thm5", 3),
      mr("ding_thm5", 5),
      mr("ding_thm5", 7),
      bs("zha_cor1", 2, 3),
      bs("zha_cor1", 3, 5),
      bs("zha_cor1", 5, 3),
      bs("zha_cor2", 3, 5),
      bs("zha_cor2", 5, 3),
      bs("zha_thm2", 2, 3),
      bs("zha_thm2", 2, 5),
  };
}

std::vector<SearchResult> default_catalog() {
  std::vector<SearchResult> out;
  for (const auto& rec : default_recipes()) out.push_back(run_recipe(rec));
  return out;
}

}  // namespace zdb
