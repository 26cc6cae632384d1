#include "zdb/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace zdb {

std::optional<std::uint64_t> DifferenceSpectrum::constant_value() const {
  if (histogram.size() != 1) return std::nullopt;
  return histogram.begin()->first;
}

std::uint64_t coincidences(const ZdbFunction& f, Element delta) {
  const auto& dom = f.domain;
  const auto& table = f.table;
  std::uint64_t count = 0;
  for (Element y = 0; y < dom.order(); ++y) {
    if (table[dom.compose(y, delta)] == table[y]) ++count;
  }
  return count;
}

namespace {

void check_table(const ZdbFunction& f) {
  if (f.table.size() != f.domain.order()) throw DomainError("table length differs from the domain order");
}

std::vector<Element> nonidentity_shifts(const AbelianDomain& dom) {
  std::vector<Element> shifts;
  shifts.reserve(dom.order());
  for (Element d = 0; d < dom.order(); ++d) {
    if (d != dom.identity()) shifts.push_back(d);
  }
  return shifts;
}

std::uint64_t sum_of_squares(const CompositionProfile& p) {
  std::uint64_t s = 0;
  for (auto w : p.per_symbol) s += w * w;
  return s;
}

}  // namespace

DifferenceSpectrum difference_spectrum(const ZdbFunction& f, unsigned threads) {
  check_table(f);
  const auto shifts = nonidentity_shifts(f.domain);
  std::vector<std::uint64_t> counts(shifts.size());

  threads = std::max(1u, threads);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) counts[i] = coincidences(f, shifts[i]);
  };
  if (threads == 1) {
    work(0, shifts.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (shifts.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < shifts.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(shifts.size(), begin + chunk));
    }
  }

  DifferenceSpectrum s;
  s.shifts = shifts.size();
  const bool dense = f.domain.order() <= kDenseSpectrumLimit;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    ++s.histogram[counts[i]];
    if (dense) s.per_shift.emplace_back(shifts[i], counts[i]);
  }
  if (!s.histogram.empty()) {
    s.min = s.histogram.begin()->first;
    s.max = s.histogram.rbegin()->first;
  }

  // Each ordered pair (y, y') with y != y' and f(y) = f(y') is counted under exactly one shift.
  std::uint64_t total = 0;
  for (auto [count, mult] : s.histogram) total += count * mult;
  if (total != sum_of_squares(composition_profile(f)) - f.domain.order()) {
    throw std::logic_error("difference spectrum violates the pair-counting identity");
  }
  return s;
}

VerifyResult verify_zdb(const ZdbFunction& f, unsigned threads) {
  VerifyResult result;
  result.certified.n = f.domain.order();
  if (f.table.size() != f.domain.order()) {
    result.witness = Witness{std::nullopt, f.domain.order(), f.table.size(), "table length differs from domain order"};
    return result;
  }
  for (Element y = 0; y < f.table.size(); ++y) {
    if (f.table[y] >= f.q) {
      result.witness = Witness{y, f.q, f.table[y], "symbol out of range at element " + std::to_string(y)};
      return result;
    }
  }
  const auto profile = composition_profile(f);
  const auto distinct = static_cast<std::uint64_t>(
      std::count_if(profile.per_symbol.begin(), profile.per_symbol.end(), [](auto w) { return w > 0; }));
  result.certified.m = distinct;

  const auto spectrum = difference_spectrum(f, threads);
  if (!spectrum.is_constant() || spectrum.min != f.claimed.lambda) {
    // First shift in index order whose count disagrees with the claim.
    for (Element d = 0; d < f.domain.order(); ++d) {
      if (d == f.domain.identity()) continue;
      const auto c = coincidences(f, d);
      if (c != f.claimed.lambda) {
        result.witness = Witness{d, f.claimed.lambda, c,
                                 spectrum.is_constant() ? "spectrum constant at a different lambda"
                                                        : "spectrum not constant"};
        break;
      }
    }
    return result;
  }
  result.certified.lambda = spectrum.min;
  if (distinct != f.claimed.m) {
    result.witness = Witness{std::nullopt, f.claimed.m, distinct, "distinct symbol count differs from claimed m"};
    return result;
  }
  if (f.domain.order() != f.claimed.n) {
    result.witness = Witness{std::nullopt, f.claimed.n, f.domain.order(), "domain order differs from claimed n"};
    return result;
  }
  result.ok = true;
  return result;
}

std::vector<std::uint64_t> CompositionProfile::sorted() const {
  auto out = per_symbol;
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t CompositionProfile::total() const {
  std::uint64_t s = 0;
  for (auto w : per_symbol) s += w;
  return s;
}

CompositionProfile composition_profile(const ZdbFunction& f) {
  CompositionProfile p;
  p.per_symbol.assign(f.q, 0);
  for (auto s : f.table) {
    if (s >= p.per_symbol.size()) p.per_symbol.resize(s + 1, 0);
    ++p.per_symbol[s];
  }
  return p;
}

std::vector<std::uint64_t> expected_product_profile(std::uint64_t e, std::uint64_t m) {
  std::vector<std::uint64_t> out(m, e - 1);
  out.push_back(1);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_solution_set(const Subgroup& g, Element a) {
  const Ring& ring = g.ring();
  if (a == 0) throw DomainError("shift must be nonzero");
  if (a >= ring.order()) throw DomainError("shift out of range");

  // x and x + a lie in the same coset iff x * g = x + a for some g in G.
  std::set<Element> brute;
  for (Element x = 0; x < ring.order(); ++x) {
    const Element target = ring.add(x, a);
    for (Element h : g.elements()) {
      if (ring.mul(x, h) == target) {
        brute.insert(x);
        break;
      }
    }
  }
  std::set<Element> closed;
  for (Element h : g.elements()) {
    if (h == ring.one()) continue;
    const auto inv = ring.try_invert(ring.sub(h, ring.one()));
    if (!inv) return false;
    closed.insert(ring.mul(a, *inv));
  }
  return brute == closed;
}

bool check_ci_lemma(const CosetPartition& partition) {
  const Ring& ring = partition.ring();
  const Subgroup& g = partition.subgroup();
  for (Element r = 1; r < ring.order(); ++r) {
    std::set<Element> ratios;
    const Element ci = partition.column_indicator(r);
    for (Element x : g.elements()) {
      const Element moved = ring.mul(r, x);
      if (partition.row_indicator(moved) != partition.row_indicator(r)) return false;
      const Element ratio = ring.mul(ci, *ring.try_invert(partition.column_indicator(moved)));
      if ((ratio == ring.one()) != (x == ring.one())) return false;
      ratios.insert(ratio);
    }
    if (!std::equal(ratios.begin(), ratios.end(), g.elements().begin(), g.elements().end())) return false;
  }
  return true;
}

}  // namespace zdb
