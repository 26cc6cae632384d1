#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "zdb/construct.hpp"

namespace zdb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

enum class CodeKind { ccc, cwc };
std::string to_string(CodeKind kind);

/// M codewords of length n over Z_q, stored row-major.
struct CodeBook {
  CodeKind kind = CodeKind::ccc;
  std::uint64_t n = 0;
  std::uint64_t size = 0;  // M
  std::uint32_t q = 0;
  std::vector<std::uint32_t> words;
  std::uint64_t min_distance = 0;
  /// CCC: occurrences of each symbol per codeword.
  std::vector<std::uint64_t> composition;
  /// CWC: number of nonzero entries per codeword.
  std::uint64_t weight = 0;

  std::span<const std::uint32_t> row(std::uint64_t i) const { return {words.data() + i * n, n}; }
};

/// Codewords c_a = (f(y + a))_y for every a in the domain, in index order.
/// Throws UnverifiedFunction unless verify_zdb succeeds on f.
CodeBook ccc_from_zdb(const ZdbFunction& f);

/// Same codewords as ccc_from_zdb, as a constant weight code of weight n - 1.
/// Throws NotCwcEligible unless symbol 0 has exactly one preimage.
CodeBook cwc_from_zdb(const ZdbFunction& f);

/// Hamming distance -> number of unordered codeword pairs at that distance.
std::map<std::uint64_t, std::uint64_t> distance_histogram(const CodeBook& code);

/// Exhaustive minimum pairwise Hamming distance; DomainError when M < 2.
std::uint64_t min_distance(const CodeBook& code);

/// Per-row symbol composition is identical for all rows; returns it, or
/// nullopt if rows differ.
std::optional<std::vector<std::uint64_t>> common_composition(const CodeBook& code);
/// Common Hamming weight of all rows, or nullopt.
std::optional<std::uint64_t> common_weight(const CodeBook& code);

/// Disjoint subsets D_0..D_{q-1} of an abelian group.
struct DssSystem {
  AbelianDomain group;
  std::vector<std::vector<Element>> blocks;
  std::uint64_t lambda = 0;
  bool perfect = false;
  bool partitioned = false;

  std::uint64_t tau() const;
};

struct DssCheck {
  /// Minimum multiplicity over non-identity elements.
  std::uint64_t lambda_min = 0;
  bool perfect = false;
  std::optional<std::uint64_t> lambda;
  std::string diagnostic;
};

/// Brute-force multiset of cross-block differences x - y, x in D_i, y in D_j, i != j.
DssCheck dss_perfect_check(const DssSystem& dss);

/// D_b = f^-1(b). Throws UnverifiedFunction unless verify_zdb succeeds.
DssSystem dss_from_zdb(const ZdbFunction& f);

struct BoundReport {
  std::string name;
  Rational bound;
  BigInt achieved;
  bool applicable = false;
  bool optimal = false;
  std::string note;
};

/// A_q(n, d, [w]) <= nd / (nd - n^2 + sum w_i^2) when the denominator is positive.
BoundReport ccc_bound(std::uint64_t n, std::uint64_t d, const std::vector<std::uint64_t>& w, std::uint64_t achieved);

/// A_q(n, d, w) <= nd / (nd - 2nw + l/(l-1) w^2), with l taken as the alphabet size q.
BoundReport cwc_bound(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t q, std::uint64_t achieved);

/// tau_q(n, lambda) >= sqrt(SQUARE(lambda(n-1) + ceil(lambda(n-1)/(q-1)))).
BoundReport dss_bound(std::uint64_t n, std::uint64_t lambda, std::uint64_t q, std::uint64_t tau);

/// Smallest s with s*s >= x.
BigInt ceil_sqrt(const BigInt& x);

std::string to_string(const Rational& r);

}  // namespace zdb
