#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdb/ring.hpp"

namespace zdb {

/// A finite multiplicative subgroup of the unit group of a ring.
///
/// Elements are kept sorted by index, so an element's position in
/// `elements()` is a stable coordinate for it.
class Subgroup {
 public:
  /// Validates closure, identity and the unit property; throws ConditionNotSatisfied otherwise.
  Subgroup(Ring ring, std::vector<Element> elements, std::optional<Element> generator = std::nullopt);

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::optional<Element>& generator() const { return generator_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(Element x) const;
  /// Position of x in elements(); throws DomainError if x is not in the subgroup.
  std::size_t position(Element x) const;
  std::size_t identity_position() const { return identity_pos_; }
  /// Position of elements()[i] * elements()[j].
  std::size_t mul_position(std::size_t i, std::size_t j) const { return mul_table_[i * elements_.size() + j]; }
  std::size_t inverse_position(std::size_t i) const { return inv_table_[i]; }

 private:
  Ring ring_;
  std::vector<Element> elements_;
  std::optional<Element> generator_;
  std::size_t identity_pos_ = 0;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

/// <b> = {1, b, b^2, ...}. Throws NotAUnitError when b is not a unit.
Subgroup cyclic_subgroup(const Ring& ring, Element b);

/// (G - 1) \ {0} consists of units.
bool check_unit_difference(const Subgroup& g);

/// G + 1 consists of units.
bool check_plus_one(const Subgroup& g);

/// G u (-1)G. Throws DegenerateDoubling when -1 is already in G.
Subgroup doubled_subgroup(const Subgroup& g);

/// The partition of a ring into left cosets alpha*G, with minimum-index
/// representatives and precomputed row/column indicator tables.
class CosetPartition {
 public:
  /// Throws ConditionNotSatisfied if G fails the unit-difference condition.
  explicit CosetPartition(Subgroup subgroup);

  const Subgroup& subgroup() const { return subgroup_; }
  const Ring& ring() const { return subgroup_.ring(); }

  /// Cosets in ascending order of representative; cosets()[0] == {0}.
  const std::vector<std::vector<Element>>& cosets() const { return cosets_; }
  /// Minimum-index member of each coset, ascending; reps()[0] == 0.
  const std::vector<Element>& reps() const { return reps_; }

  /// Index into cosets() of the coset containing x.
  std::size_t coset_of(Element x) const;

  /// The representative alpha with r in alpha*G. Throws DomainError for r = 0.
  Element row_indicator(Element r) const;
  /// The g in G with r = row_indicator(r) * g. Throws DomainError for r = 0.
  Element column_indicator(Element r) const;
  /// Position of column_indicator(r) within subgroup().elements().
  std::size_t column_position(Element r) const;

 private:
  Subgroup subgroup_;
  std::vector<std::vector<Element>> cosets_;
  std::vector<Element> reps_;
  std::vector<std::uint32_t> coset_id_;
  std::vector<std::uint32_t> column_pos_;
};

}  // namespace zdb
