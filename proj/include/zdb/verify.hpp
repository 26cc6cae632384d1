#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdb/construct.hpp"

namespace zdb {

// Brute-force oracles. Everything here reads only the table and the domain's
// group law; provenance and subgroup structure are never consulted.

/// Coincidence counts |{y : f(y + delta) = f(y)}| over all non-identity shifts.
struct DifferenceSpectrum {
  /// Per-shift counts, (shift, count) in shift index order. Left empty when the
  /// domain exceeds kDenseSpectrumLimit; the histogram is always filled.
  std::vector<std::pair<Element, std::uint64_t>> per_shift;
  /// count -> number of shifts with that count.
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t shifts = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;

  bool is_constant() const { return histogram.size() <= 1; }
  std::optional<std::uint64_t> constant_value() const;
};

inline constexpr std::uint64_t kDenseSpectrumLimit = 1000;
/// Domains above this size need an explicit opt-in for O(n^2) checks.
inline constexpr std::uint64_t kVerifyLimit = 10000;

/// |{y : f(y + delta) = f(y)}|
std::uint64_t coincidences(const ZdbFunction& f, Element delta);

/// Exhaustive spectrum; the shift range is split across `threads` workers.
DifferenceSpectrum difference_spectrum(const ZdbFunction& f, unsigned threads = 1);

struct Witness {
  std::optional<Element> shift;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  std::string reason;
};

struct VerifyResult {
  bool ok = false;
  /// (n, distinct symbols, lambda) as measured; lambda is only meaningful when ok.
  ZdbParams certified;
  std::optional<Witness> witness;
};

/// Succeeds iff the table is well formed, the spectrum is constant at the
/// claimed lambda, and the distinct-symbol count equals the claimed m.
VerifyResult verify_zdb(const ZdbFunction& f, unsigned threads = 1);

/// Preimage sizes w_b for every symbol b in [0, q).
struct CompositionProfile {
  std::vector<std::uint64_t> per_symbol;
  std::vector<std::uint64_t> sorted() const;
  std::uint64_t total() const;
};

CompositionProfile composition_profile(const ZdbFunction& f);

/// The multiset {1, (e-1) x m} expected of product-construction functions,
/// sorted ascending.
std::vector<std::uint64_t> expected_product_profile(std::uint64_t e, std::uint64_t m);

/// Brute-force {x : x*G = (x + a)*G} compared with {a (g - 1)^-1 : g in G \ {1}}.
/// Throws DomainError for a = 0.
bool check_solution_set(const Subgroup& g, Element a);

/// For every nonzero r: {CI(r) / CI(r g) : g in G} = G, with ratio 1 exactly at g = 1.
bool check_ci_lemma(const CosetPartition& partition);

}  // namespace zdb
