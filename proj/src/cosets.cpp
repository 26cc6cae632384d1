#include "zdb/cosets.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace zdb {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

}  // namespace

Subgroup::Subgroup(Ring ring, std::vector<Element> elements, std::optional<Element> generator)
    : ring_(std::move(ring)), elements_(std::move(elements)), generator_(generator) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw ConditionNotSatisfied("subgroup element list has duplicates");
  }
  if (elements_.empty()) throw ConditionNotSatisfied("subgroup is empty");
  for (Element x : elements_) {
    if (x >= ring_.order()) throw DomainError("subgroup element out of range");
    if (!ring_.is_unit(x)) {
      throw ConditionNotSatisfied("subgroup element " + std::to_string(x) + " is not a unit");
    }
  }
  if (!contains(ring_.one())) throw ConditionNotSatisfied("subgroup does not contain the identity");
  identity_pos_ = position(ring_.one());

  const std::size_t e = elements_.size();
  mul_table_.resize(e * e);
  inv_table_.resize(e);
  for (std::size_t i = 0; i < e; ++i) {
    const auto inv = ring_.try_invert(elements_[i]);
    if (!contains(*inv)) throw ConditionNotSatisfied("subgroup is not closed under inversion");
    inv_table_[i] = static_cast<std::uint32_t>(position(*inv));
    for (std::size_t j = 0; j < e; ++j) {
      const Element prod = ring_.mul(elements_[i], elements_[j]);
      if (!contains(prod)) throw ConditionNotSatisfied("subgroup is not closed under multiplication");
      mul_table_[i * e + j] = static_cast<std::uint32_t>(position(prod));
    }
  }
}

bool Subgroup::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::size_t Subgroup::position(Element x) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw DomainError("element " + std::to_string(x) + " is not in the subgroup");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

Subgroup cyclic_subgroup(const Ring& ring, Element b) {
  if (!ring.is_unit(b)) throw NotAUnitError("generator " + std::to_string(b) + " is not a unit");
  std::vector<Element> elems{ring.one()};
  for (Element cur = b; cur != ring.one(); cur = ring.mul(cur, b)) elems.push_back(cur);
  return Subgroup(ring, std::move(elems), b);
}

bool check_unit_difference(const Subgroup& g) {
  const Ring& ring = g.ring();
  return std::all_of(g.elements().begin(), g.elements().end(), [&](Element x) {
    return x == ring.one() || ring.is_unit(ring.sub(x, ring.one()));
  });
}

bool check_plus_one(const Subgroup& g) {
  const Ring& ring = g.ring();
  return std::all_of(g.elements().begin(), g.elements().end(),
                     [&](Element x) { return ring.is_unit(ring.add(x, ring.one())); });
}

Subgroup doubled_subgroup(const Subgroup& g) {
  const Ring& ring = g.ring();
  const Element minus_one = ring.neg(ring.one());
  if (g.contains(minus_one)) throw DegenerateDoubling("-1 already lies in G, so G u (-G) = G");
  std::vector<Element> elems = g.elements();
  for (Element x : g.elements()) elems.push_back(ring.mul(minus_one, x));
  return Subgroup(ring, std::move(elems));
}

CosetPartition::CosetPartition(Subgroup subgroup) : subgroup_(std::move(subgroup)) {
  if (!check_unit_difference(subgroup_)) {
    throw ConditionNotSatisfied("unit-difference condition fails: some g - 1 with g != 1 is not a unit");
  }
  const Ring& r = ring();
  const std::uint64_t n = r.order();
  const auto& elems = subgroup_.elements();
  const std::size_t e = elems.size();
  coset_id_.assign(n, kUnassigned);
  column_pos_.assign(n, kUnassigned);

  // Scanning in index order makes the first unassigned element the minimum of its coset.
  for (Element alpha = 0; alpha < n; ++alpha) {
    if (coset_id_[alpha] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(cosets_.size());
    std::vector<Element> members;
    for (std::size_t pos = 0; pos < e; ++pos) {
      const Element x = r.mul(alpha, elems[pos]);
      if (coset_id_[x] == id) continue;
      if (coset_id_[x] != kUnassigned) {
        throw ConditionNotSatisfied("left cosets overlap; G does not act freely on R*");
      }
      coset_id_[x] = id;
      if (alpha != 0) column_pos_[x] = static_cast<std::uint32_t>(pos);
      members.push_back(x);
    }
    if (alpha != 0 && members.size() != e) {
      throw ConditionNotSatisfied("coset of " + std::to_string(alpha) + " has " + std::to_string(members.size()) +
                                  " elements, expected " + std::to_string(e));
    }
    std::sort(members.begin(), members.end());
    cosets_.push_back(std::move(members));
    reps_.push_back(alpha);
  }
}

std::size_t CosetPartition::coset_of(Element x) const {
  if (x >= coset_id_.size()) throw DomainError("element out of range");
  return coset_id_[x];
}

Element CosetPartition::row_indicator(Element r) const {
  if (r == 0) throw DomainError("row indicator is undefined at 0");
  return reps_[coset_of(r)];
}

std::size_t CosetPartition::column_position(Element r) const {
  if (r == 0) throw DomainError("column indicator is undefined at 0");
  if (r >= column_pos_.size()) throw DomainError("element out of range");
  return column_pos_[r];
}

Element CosetPartition::column_indicator(Element r) const { return subgroup_.elements()[column_position(r)]; }

}  // namespace zdb
