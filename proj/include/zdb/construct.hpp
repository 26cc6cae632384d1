#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zdb/cosets.hpp"
#include "zdb/ring.hpp"

namespace zdb {

enum class DomainKind { ring_additive, ring_times_group };

/// The finite abelian group a ZDB function is defined on: either (R,+) or
/// (R,+) x (G,x).
///
/// Elements are single indices. For ring_times_group the index of (r, x) is
/// r * e + position(x), where position is the place of x in the index-sorted G.
class AbelianDomain {
 public:
  static AbelianDomain ring_additive(Ring ring);
  static AbelianDomain ring_times_group(Ring ring, Subgroup group);

  DomainKind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  /// Only for ring_times_group.
  const Subgroup& group() const;

  std::uint64_t order() const { return order_; }
  Element identity() const { return identity_; }

  /// Group law: (+) on the ring, or componentwise ((+), (x)).
  Element compose(Element a, Element b) const;
  Element inverse(Element a) const;

  Element pair(Element ring_index, std::size_t group_position) const;
  std::pair<Element, std::size_t> split(Element a) const;

 private:
  AbelianDomain(DomainKind kind, Ring ring, std::optional<Subgroup> group);
  void check(Element a) const;

  DomainKind kind_;
  Ring ring_;
  std::optional<Subgroup> group_;
  std::uint64_t order_ = 0;
  Element identity_ = 0;
};

/// Image alphabet of the product construction:
/// T = {0, (0,1)} u L_H* u (L_G* x G).
struct ZeroLabel {
  friend bool operator==(const ZeroLabel&, const ZeroLabel&) = default;
};
struct ZeroPairLabel {
  friend bool operator==(const ZeroPairLabel&, const ZeroPairLabel&) = default;
};
struct HCosetLabel {
  Element rep;
  friend bool operator==(const HCosetLabel&, const HCosetLabel&) = default;
};
struct GCosetPairLabel {
  Element rep;
  Element g;
  friend bool operator==(const GCosetPairLabel&, const GCosetPairLabel&) = default;
};
using TLabel = std::variant<ZeroLabel, ZeroPairLabel, HCosetLabel, GCosetPairLabel>;

std::string to_string(const TLabel& label);

struct ZdbParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t lambda = 0;
  friend bool operator==(const ZdbParams&, const ZdbParams&) = default;
};

/// "(n, m, lambda)"
std::string to_string(const ZdbParams& p);

/// Which construction produced a table and from which subgroups.
struct Provenance {
  std::string construction;  // generic | product | doubled | external
  std::vector<Element> g_elements;
  std::optional<Element> g_generator;
  std::vector<Element> h_elements;
  std::optional<Element> h_generator;
  /// generic / doubled: coset representative behind each symbol.
  std::vector<Element> coset_reps;
  /// product: T label behind each symbol.
  std::vector<TLabel> labels;
};

/// A fully tabulated function from a finite abelian group to Z_q.
struct ZdbFunction {
  AbelianDomain domain;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> table;
  ZdbParams claimed;
  Provenance provenance;
};

/// f(x) = index of the coset xG; coset {0} -> 0, remaining cosets in ascending
/// representative order. Claims (n, (n-1)/e + 1, e - 1).
ZdbFunction construct_generic(const Ring& ring, const Subgroup& g);

/// The four-case map over (R,+) x (G,x) followed by the canonical labelling
/// Zero -> 0, ZeroPair -> 1, H cosets by representative, then (G coset, g) pairs
/// in lexicographic order. Claims (en, (en-1)/(e-1) + 1, e - 2).
ZdbFunction construct_product(const Ring& ring, const Subgroup& g, const Subgroup& h);

/// construct_generic over H = G u (-G). Claims (n, (n-1)/(2e) + 1, 2e - 1).
ZdbFunction construct_doubled(const Ring& ring, const Subgroup& g);

std::uint32_t evaluate(const ZdbFunction& f, Element y);
/// f(y + delta) under the domain group law.
std::uint32_t shift_evaluate(const ZdbFunction& f, Element y, Element delta);

}  // namespace zdb
