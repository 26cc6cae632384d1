#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zdb/errors.hpp"

namespace zdb {

/// Canonical index of a ring element in [0, order).
///
/// residue: the residue itself. field: base-p digits are the polynomial
/// coefficients, constant term least significant. product: mixed radix over
/// the components, first component least significant. matrix: row-major
/// entries in base q, entry (0,0) least significant.
using Element = std::uint64_t;

enum class RingKind { residue, field, product, matrix };

/// Structural description of a finite ring with identity.
///
/// Equality is structural: same kind, same parameters, same modulus.
struct RingDescriptor {
  RingKind kind = RingKind::residue;
  std::uint64_t n = 0;                   // residue
  std::uint64_t p = 0;                   // field
  unsigned r = 0;                        // field
  std::vector<std::uint64_t> modulus;    // field: c0..cr, monic
  std::vector<RingDescriptor> components;  // product; matrix holds its base field at [0]
  unsigned k = 0;                        // matrix

  static RingDescriptor residue(std::uint64_t n);
  /// GF(p^r) with the lexicographically smallest monic irreducible modulus.
  static RingDescriptor field(std::uint64_t p, unsigned r);
  static RingDescriptor field(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus);
  static RingDescriptor product(std::vector<RingDescriptor> components);
  static RingDescriptor matrix(unsigned k, RingDescriptor base_field);

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

std::string to_string(RingKind kind);
/// Human-readable name, e.g. "Z_7", "GF(5^2)", "GF(7) x GF(13)", "M_2(GF(5))".
std::string describe(const RingDescriptor& desc);

/// An immutable finite ring with exact arithmetic on canonical indices.
///
/// Cheap to copy (shared immutable state); all member functions are const and
/// thread-safe.
class Ring {
 public:
  explicit Ring(const RingDescriptor& desc);

  const RingDescriptor& descriptor() const;
  std::uint64_t order() const;
  bool is_commutative() const;
  /// True for residue rings of prime order and field kinds.
  bool is_field() const;

  Element zero() const { return 0; }
  Element one() const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t exponent) const;

  /// Two-sided inverse, or nullopt when a is not a unit.
  std::optional<Element> try_invert(Element a) const;
  bool is_unit(Element a) const { return try_invert(a).has_value(); }

  /// Multiplicative order of a unit; throws NotAUnitError otherwise.
  std::uint64_t multiplicative_order(Element a) const;

  /// All elements in index order 0..order-1.
  std::vector<Element> enumerate() const;

  /// Per-kind coordinates of an element: residue {a}; field base-p digits;
  /// product per-component indices; matrix row-major entries.
  std::vector<std::uint64_t> decode(Element a) const;
  Element encode(const std::vector<std::uint64_t>& coords) const;

  /// Components of a product ring, or the base field of a matrix ring.
  const std::vector<Ring>& components() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.descriptor() == b.descriptor(); }

  struct State;

 private:
  void check(Element a) const;
  std::shared_ptr<const State> state_;
};

// ---------------------------------------------------------------------------
// Number-theoretic helpers shared by the catalog and the ring kinds.

bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Prime factorization by trial division, primes ascending with multiplicity.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
/// If q = p^r for a prime p returns (p, r).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Lexicographically smallest (c0 first) monic irreducible polynomial of degree
/// r over F_p, returned as c0..cr with cr = 1.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned r);
bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p);

}  // namespace zdb
