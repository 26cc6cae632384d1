#include "zdb/codes.hpp"

#include <algorithm>
#include <sstream>

#include "zdb/verify.hpp"

namespace zdb {

std::string to_string(CodeKind kind) { return kind == CodeKind::ccc ? "CCC" : "CWC"; }

namespace {

void require_verified(const ZdbFunction& f) {
  const auto result = verify_zdb(f);
  if (!result.ok) {
    std::string msg = "function does not verify as a " + to_string(f.claimed) + " ZDB function";
    if (result.witness) msg += ": " + result.witness->reason;
    throw UnverifiedFunction(msg);
  }
}

CodeBook shift_code(const ZdbFunction& f) {
  const auto& dom = f.domain;
  CodeBook code;
  code.n = dom.order();
  code.size = dom.order();
  code.q = f.q;
  code.words.resize(code.n * code.size);
  for (Element a = 0; a < code.size; ++a) {
    for (Element y = 0; y < code.n; ++y) code.words[a * code.n + y] = f.table[dom.compose(y, a)];
  }
  return code;
}

std::uint64_t hamming(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Rational exact(std::uint64_t v) { return Rational(BigInt(v)); }

BigInt floor_of(const Rational& r) {
  // numerator/denominator with positive denominator; floor for non-negative values only used here
  BigInt q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) q -= 1;
  return q;
}

}  // namespace

CodeBook ccc_from_zdb(const ZdbFunction& f) {
  require_verified(f);
  CodeBook code = shift_code(f);
  code.kind = CodeKind::ccc;
  code.composition = *common_composition(code);
  code.min_distance = min_distance(code);
  return code;
}

CodeBook cwc_from_zdb(const ZdbFunction& f) {
  require_verified(f);
  const auto profile = composition_profile(f);
  if (profile.per_symbol.empty() || profile.per_symbol[0] != 1) {
    throw NotCwcEligible("symbol 0 must have exactly one preimage");
  }
  CodeBook code = shift_code(f);
  code.kind = CodeKind::cwc;
  code.weight = *common_weight(code);
  code.min_distance = min_distance(code);
  return code;
}

std::map<std::uint64_t, std::uint64_t> distance_histogram(const CodeBook& code) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t i = 0; i < code.size; ++i) {
    for (std::uint64_t j = i + 1; j < code.size; ++j) ++hist[hamming(code.row(i), code.row(j))];
  }
  return hist;
}

std::uint64_t min_distance(const CodeBook& code) {
  if (code.size < 2) throw DomainError("minimum distance needs at least two codewords");
  if (code.words.size() != code.size * code.n) throw DomainError("codeword matrix has the wrong shape");
  std::uint64_t best = code.n;
  for (std::uint64_t i = 0; i < code.size && best > 0; ++i) {
    for (std::uint64_t j = i + 1; j < code.size; ++j) best = std::min(best, hamming(code.row(i), code.row(j)));
  }
  return best;
}

std::optional<std::vector<std::uint64_t>> common_composition(const CodeBook& code) {
  std::optional<std::vector<std::uint64_t>> first;
  for (std::uint64_t i = 0; i < code.size; ++i) {
    std::vector<std::uint64_t> comp(code.q, 0);
    for (auto s : code.row(i)) {
      if (s >= code.q) return std::nullopt;
      ++comp[s];
    }
    if (!first) {
      first = std::move(comp);
    } else if (*first != comp) {
      return std::nullopt;
    }
  }
  return first;
}

std::optional<std::uint64_t> common_weight(const CodeBook& code) {
  std::optional<std::uint64_t> first;
  for (std::uint64_t i = 0; i < code.size; ++i) {
    const auto row = code.row(i);
    const auto w = static_cast<std::uint64_t>(std::count_if(row.begin(), row.end(), [](auto s) { return s != 0; }));
    if (first && *first != w) return std::nullopt;
    first = w;
  }
  return first;
}

std::uint64_t DssSystem::tau() const {
  std::uint64_t t = 0;
  for (const auto& b : blocks) t += b.size();
  return t;
}

DssCheck dss_perfect_check(const DssSystem& dss) {
  const auto& g = dss.group;
  DssCheck out;
  std::vector<std::int64_t> owner(g.order(), -1);
  for (std::size_t i = 0; i < dss.blocks.size(); ++i) {
    for (Element x : dss.blocks[i]) {
      if (x >= g.order()) throw DomainError("block element out of range");
      if (owner[x] != -1) throw DomainError("blocks are not pairwise disjoint");
      owner[x] = static_cast<std::int64_t>(i);
    }
  }
  const auto nonempty = std::count_if(dss.blocks.begin(), dss.blocks.end(), [](const auto& b) { return !b.empty(); });
  if (nonempty < 2) {
    out.diagnostic = "fewer than two nonempty blocks: no cross-block differences";
    return out;
  }

  std::vector<std::uint64_t> mult(g.order(), 0);
  for (Element y = 0; y < g.order(); ++y) {
    if (owner[y] < 0) continue;
    const Element minus_y = g.inverse(y);
    for (Element x = 0; x < g.order(); ++x) {
      if (owner[x] < 0 || owner[x] == owner[y]) continue;
      ++mult[g.compose(x, minus_y)];
    }
  }
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (Element d = 0; d < g.order(); ++d) {
    if (d == g.identity()) continue;
    lo = std::min(lo, mult[d]);
    hi = std::max(hi, mult[d]);
  }
  out.lambda_min = lo;
  out.perfect = lo == hi;
  if (out.perfect) {
    out.lambda = lo;
  } else {
    out.diagnostic = "difference multiplicities range over [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  }
  return out;
}

DssSystem dss_from_zdb(const ZdbFunction& f) {
  require_verified(f);
  DssSystem dss{f.domain, std::vector<std::vector<Element>>(f.q), 0, false, true};
  for (Element y = 0; y < f.table.size(); ++y) dss.blocks[f.table[y]].push_back(y);
  const auto check = dss_perfect_check(dss);
  dss.lambda = check.lambda_min;
  dss.perfect = check.perfect;
  return dss;
}

BoundReport ccc_bound(std::uint64_t n, std::uint64_t d, const std::vector<std::uint64_t>& w, std::uint64_t achieved) {
  BoundReport r;
  r.name = "ccc";
  r.achieved = achieved;
  BigInt sum_sq = 0;
  for (auto wi : w) sum_sq += BigInt(wi) * wi;
  const BigInt nd = BigInt(n) * d;
  const BigInt den = nd - BigInt(n) * n + sum_sq;
  r.applicable = den > 0;
  if (r.applicable) {
    r.bound = Rational(nd, den);
    r.optimal = r.achieved == floor_of(r.bound);
  }
  return r;
}

BoundReport cwc_bound(std::uint64_t n, std::uint64_t d, std::uint64_t w, std::uint64_t q, std::uint64_t achieved) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  BoundReport r;
  r.name = "cwc";
  r.achieved = achieved;
  r.note = "l taken as the alphabet size q = " + std::to_string(q);
  const Rational nd = exact(n) * exact(d);
  const Rational den = nd - exact(2) * exact(n) * exact(w) + Rational(BigInt(q), BigInt(q - 1)) * exact(w) * exact(w);
  r.applicable = den > 0;
  if (r.applicable) {
    r.bound = nd / den;
    r.optimal = r.achieved == floor_of(r.bound);
  }
  return r;
}

BigInt ceil_sqrt(const BigInt& x) {
  if (x <= 0) return 0;
  BigInt s = boost::multiprecision::sqrt(x);
  if (s * s < x) s += 1;
  return s;
}

BoundReport dss_bound(std::uint64_t n, std::uint64_t lambda, std::uint64_t q, std::uint64_t tau) {
  if (q < 2) throw DomainError("number of blocks must be at least 2");
  if (lambda < 1) throw DomainError("lambda must be at least 1");
  BoundReport r;
  r.name = "dss";
  r.achieved = tau;
  const BigInt base = BigInt(lambda) * (n - 1);
  const BigInt x = base + (base + (q - 2)) / (q - 1);
  r.bound = Rational(ceil_sqrt(x));
  r.applicable = true;
  r.optimal = BigInt(tau) == r.bound.numerator();
  return r;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace zdb
