#include "zdb/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace zdb {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;
constexpr std::uint64_t kTableOrder = 1024;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > kMaxOrder) {
    throw DomainError("ring order exceeds the supported range");
  }
  return out;
}

// Dense polynomials over F_p, coefficient i is the x^i term.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime here.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % p);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>((unsigned __int128)a.back() * lead_inv % p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t t = static_cast<std::uint64_t>((unsigned __int128)c * f[i] % p);
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint64_t>((out[i + j] + (unsigned __int128)a[i] * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Elements of GF(p^r) as digit vectors of length r.
Poly digits_of(std::uint64_t idx, std::uint64_t p, unsigned r) {
  Poly d(r, 0);
  for (unsigned i = 0; i < r; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

std::uint64_t index_of(const Poly& d, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    out.emplace_back(d, mult);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  const auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  if (f[0] == 0) return false;
  // f has no factor of degree i <= r/2 iff gcd(f, x^{p^i} - x) = 1 for all such i.
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= r / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime");
  if (r == 0) throw DomainError("field degree must be at least 1");
  // Candidates enumerated with c0 as the most significant lexicographic key.
  const std::uint64_t count = checked_mul(1, [&] {
    std::uint64_t c = 1;
    for (unsigned i = 0; i < r; ++i) c = checked_mul(c, p);
    return c;
  }());
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly cand(r + 1, 0);
    std::uint64_t rest = code;
    for (unsigned i = r; i-- > 0;) {
      cand[i] = rest % p;
      rest /= p;
    }
    cand[r] = 1;
    if (is_irreducible(cand, p)) return cand;
  }
  throw DomainError("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

RingDescriptor RingDescriptor::residue(std::uint64_t n) {
  RingDescriptor d;
  d.kind = RingKind::residue;
  d.n = n;
  return d;
}

RingDescriptor RingDescriptor::field(std::uint64_t p, unsigned r) {
  return field(p, r, smallest_irreducible(p, r));
}

RingDescriptor RingDescriptor::field(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus) {
  RingDescriptor d;
  d.kind = RingKind::field;
  d.p = p;
  d.r = r;
  d.modulus = std::move(modulus);
  return d;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> components) {
  RingDescriptor d;
  d.kind = RingKind::product;
  d.components = std::move(components);
  return d;
}

RingDescriptor RingDescriptor::matrix(unsigned k, RingDescriptor base_field) {
  RingDescriptor d;
  d.kind = RingKind::matrix;
  d.k = k;
  d.components.push_back(std::move(base_field));
  return d;
}

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::residue: return "residue";
    case RingKind::field: return "field";
    case RingKind::product: return "product";
    case RingKind::matrix: return "matrix";
  }
  return "?";
}

std::string describe(const RingDescriptor& desc) {
  std::ostringstream os;
  switch (desc.kind) {
    case RingKind::residue: os << "Z_" << desc.n; break;
    case RingKind::field:
      if (desc.r == 1) {
        os << "GF(" << desc.p << ")";
      } else {
        os << "GF(" << desc.p << "^" << desc.r << ")";
      }
      break;
    case RingKind::product:
      for (std::size_t i = 0; i < desc.components.size(); ++i) {
        if (i) os << " x ";
        os << describe(desc.components[i]);
      }
      break;
    case RingKind::matrix: os << "M_" << desc.k << "(" << describe(desc.components.at(0)) << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

struct Ring::State {
  RingDescriptor desc;
  std::uint64_t order = 0;
  Element one = 0;
  bool commutative = true;
  bool field = false;

  // field
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length order-1
  std::vector<std::uint32_t> log;  // log[a] for a != 0

  // product: components with strides; matrix: components = {base}
  std::vector<Ring> comps;
  std::vector<std::uint64_t> stride;
  std::uint64_t base_order = 0;

  // dense tables for small rings; inv_table holds `order` for non-units
  std::vector<std::uint32_t> add_table, mul_table, neg_table, inv_table;

  Element raw_add(Element a, Element b) const;
  Element raw_neg(Element a) const;
  Element raw_mul(Element a, Element b) const;
  std::optional<Element> raw_invert(Element a) const;
  std::vector<std::uint64_t> decode(Element a) const;
  Element encode(const std::vector<std::uint64_t>& c) const;

  std::optional<Element> matrix_invert(Element a) const;
};

std::vector<std::uint64_t> Ring::State::decode(Element a) const {
  switch (desc.kind) {
    case RingKind::residue: return {a};
    case RingKind::field: return digits_of(a, desc.p, desc.r);
    case RingKind::product: {
      std::vector<std::uint64_t> out(comps.size());
      for (std::size_t i = 0; i < comps.size(); ++i) out[i] = (a / stride[i]) % comps[i].order();
      return out;
    }
    case RingKind::matrix: {
      std::vector<std::uint64_t> out(static_cast<std::size_t>(desc.k) * desc.k);
      for (auto& v : out) {
        v = a % base_order;
        a /= base_order;
      }
      return out;
    }
  }
  return {};
}

Element Ring::State::encode(const std::vector<std::uint64_t>& c) const {
  switch (desc.kind) {
    case RingKind::residue: return c.at(0);
    case RingKind::field: return index_of(c, desc.p);
    case RingKind::product: {
      Element idx = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) idx += c[i] * stride[i];
      return idx;
    }
    case RingKind::matrix: {
      Element idx = 0;
      for (std::size_t i = c.size(); i-- > 0;) idx = idx * base_order + c[i];
      return idx;
    }
  }
  return 0;
}

Element Ring::State::raw_add(Element a, Element b) const {
  switch (desc.kind) {
    case RingKind::residue: {
      const Element s = a + b;
      return s >= order ? s - order : s;
    }
    case RingKind::field: {
      if (desc.p == 2) return a ^ b;
      Element idx = 0;
      Element place = 1;
      for (unsigned i = 0; i < desc.r; ++i) {
        const std::uint64_t d = (a % desc.p + b % desc.p) % desc.p;
        idx += d * place;
        place *= desc.p;
        a /= desc.p;
        b /= desc.p;
      }
      return idx;
    }
    case RingKind::product: {
      Element idx = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        idx += c.add((a / stride[i]) % c.order(), (b / stride[i]) % c.order()) * stride[i];
      }
      return idx;
    }
    case RingKind::matrix: {
      const Ring& base = comps[0];
      Element idx = 0;
      Element place = 1;
      const std::size_t entries = static_cast<std::size_t>(desc.k) * desc.k;
      for (std::size_t i = 0; i < entries; ++i) {
        idx += base.add(a % base_order, b % base_order) * place;
        place *= base_order;
        a /= base_order;
        b /= base_order;
      }
      return idx;
    }
  }
  return 0;
}

Element Ring::State::raw_neg(Element a) const {
  switch (desc.kind) {
    case RingKind::residue: return a == 0 ? 0 : order - a;
    case RingKind::field: {
      if (desc.p == 2) return a;
      auto d = digits_of(a, desc.p, desc.r);
      for (auto& v : d) v = v == 0 ? 0 : desc.p - v;
      return index_of(d, desc.p);
    }
    case RingKind::product: {
      Element idx = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        idx += comps[i].neg((a / stride[i]) % comps[i].order()) * stride[i];
      }
      return idx;
    }
    case RingKind::matrix: {
      auto d = decode(a);
      for (auto& v : d) v = comps[0].neg(v);
      return encode(d);
    }
  }
  return 0;
}

Element Ring::State::raw_mul(Element a, Element b) const {
  switch (desc.kind) {
    case RingKind::residue:
      return static_cast<Element>((unsigned __int128)a * b % order);
    case RingKind::field: {
      if (a == 0 || b == 0) return 0;
      const std::uint64_t span = order - 1;
      return exp[(static_cast<std::uint64_t>(log[a]) + log[b]) % span];
    }
    case RingKind::product: {
      Element idx = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        idx += c.mul((a / stride[i]) % c.order(), (b / stride[i]) % c.order()) * stride[i];
      }
      return idx;
    }
    case RingKind::matrix: {
      const Ring& base = comps[0];
      const std::size_t k = desc.k;
      const auto x = decode(a);
      const auto y = decode(b);
      std::vector<std::uint64_t> z(k * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Element acc = 0;
          for (std::size_t t = 0; t < k; ++t) acc = base.add(acc, base.mul(x[i * k + t], y[t * k + j]));
          z[i * k + j] = acc;
        }
      }
      return encode(z);
    }
  }
  return 0;
}

std::optional<Element> Ring::State::matrix_invert(Element a) const {
  // Gauss-Jordan elimination over the base field on [A | I].
  const Ring& base = comps[0];
  const std::size_t k = desc.k;
  auto m = decode(a);
  std::vector<std::uint64_t> inv(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = base.one();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot * k + col] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) {
        std::swap(m[pivot * k + j], m[col * k + j]);
        std::swap(inv[pivot * k + j], inv[col * k + j]);
      }
    }
    const Element scale = *base.try_invert(m[col * k + col]);
    for (std::size_t j = 0; j < k; ++j) {
      m[col * k + j] = base.mul(scale, m[col * k + j]);
      inv[col * k + j] = base.mul(scale, inv[col * k + j]);
    }
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row * k + col] == 0) continue;
      const Element factor = m[row * k + col];
      for (std::size_t j = 0; j < k; ++j) {
        m[row * k + j] = base.sub(m[row * k + j], base.mul(factor, m[col * k + j]));
        inv[row * k + j] = base.sub(inv[row * k + j], base.mul(factor, inv[col * k + j]));
      }
    }
  }
  return encode(inv);
}

std::optional<Element> Ring::State::raw_invert(Element a) const {
  switch (desc.kind) {
    case RingKind::residue: {
      // extended Euclid
      std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(order);
      std::int64_t old_s = 1, s = 0;
      while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
      }
      if (old_r != 1) return std::nullopt;
      const auto n = static_cast<std::int64_t>(order);
      return static_cast<Element>(((old_s % n) + n) % n);
    }
    case RingKind::field: {
      if (a == 0) return std::nullopt;
      const std::uint64_t span = order - 1;
      return exp[(span - log[a]) % span];
    }
    case RingKind::product: {
      Element idx = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto inv = comps[i].try_invert((a / stride[i]) % comps[i].order());
        if (!inv) return std::nullopt;
        idx += *inv * stride[i];
      }
      return idx;
    }
    case RingKind::matrix: return matrix_invert(a);
  }
  return std::nullopt;
}

namespace {

void build_field(Ring::State& s) {
  const auto& d = s.desc;
  if (!is_prime(d.p)) throw DomainError("field characteristic " + std::to_string(d.p) + " is not prime");
  if (d.r == 0) throw DomainError("field degree must be at least 1");
  if (d.modulus.size() != d.r + 1 || d.modulus.back() != 1) {
    throw DomainError("field modulus must be monic of degree r");
  }
  for (auto c : d.modulus) {
    if (c >= d.p) throw DomainError("field modulus coefficient out of range");
  }
  if (!is_irreducible(d.modulus, d.p)) throw DomainError("field modulus is reducible");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d.r; ++i) q = checked_mul(q, d.p);
  if (q > kMaxFieldOrder) throw DomainError("field order exceeds the supported range");
  s.order = q;
  s.one = 1;
  s.field = true;

  // exp/log tables from a primitive element
  const std::uint64_t span = q - 1;
  s.log.assign(q, 0);
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    const Poly g = digits_of(cand, d.p, d.r);
    s.exp.assign(1, 1);
    Poly cur = digits_of(1, d.p, d.r);
    bool primitive = true;
    for (std::uint64_t i = 1; i < span; ++i) {
      cur = poly_mulmod(cur, g, d.modulus, d.p);
      cur.resize(d.r, 0);
      const auto idx = index_of(cur, d.p);
      if (idx == 1) {
        primitive = false;
        break;
      }
      s.exp.push_back(static_cast<std::uint32_t>(idx));
    }
    if (primitive) break;
  }
  for (std::uint64_t i = 0; i < span; ++i) s.log[s.exp[i]] = static_cast<std::uint32_t>(i);
}

}  // namespace

Ring::Ring(const RingDescriptor& desc) {
  auto s = std::make_shared<State>();
  s->desc = desc;
  switch (desc.kind) {
    case RingKind::residue:
      if (desc.n < 2) throw DomainError("residue ring order must be at least 2");
      if (desc.n > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("residue ring order exceeds the supported range");
      }
      s->order = desc.n;
      s->one = 1;
      s->field = is_prime(desc.n);
      break;
    case RingKind::field: build_field(*s); break;
    case RingKind::product: {
      if (desc.components.empty()) throw DomainError("product ring needs at least one component");
      std::uint64_t order = 1;
      for (const auto& c : desc.components) {
        s->comps.emplace_back(c);
        s->stride.push_back(order);
        order = checked_mul(order, s->comps.back().order());
        s->commutative = s->commutative && s->comps.back().is_commutative();
      }
      s->order = order;
      std::vector<std::uint64_t> ones;
      for (const auto& c : s->comps) ones.push_back(c.one());
      s->one = s->encode(ones);
      break;
    }
    case RingKind::matrix: {
      if (desc.k == 0) throw DomainError("matrix size must be at least 1");
      if (desc.components.size() != 1) throw DomainError("matrix ring needs exactly one base field");
      s->comps.emplace_back(desc.components[0]);
      if (!s->comps[0].is_field()) throw DomainError("matrix ring base must be a field");
      s->base_order = s->comps[0].order();
      std::uint64_t order = 1;
      for (unsigned i = 0; i < desc.k * desc.k; ++i) order = checked_mul(order, s->base_order);
      s->order = order;
      s->commutative = desc.k == 1;
      s->field = desc.k == 1;
      std::vector<std::uint64_t> ident(static_cast<std::size_t>(desc.k) * desc.k, 0);
      for (unsigned i = 0; i < desc.k; ++i) ident[i * desc.k + i] = s->comps[0].one();
      s->one = s->encode(ident);
      break;
    }
  }
  if (s->order < 2) throw DomainError("ring order must be at least 2");

  if (s->order <= kTableOrder) {
    const std::uint64_t n = s->order;
    s->add_table.resize(n * n);
    s->mul_table.resize(n * n);
    s->neg_table.resize(n);
    s->inv_table.resize(n);
    for (Element a = 0; a < n; ++a) {
      s->neg_table[a] = static_cast<std::uint32_t>(s->raw_neg(a));
      const auto inv = s->raw_invert(a);
      s->inv_table[a] = static_cast<std::uint32_t>(inv ? *inv : n);
      for (Element b = 0; b < n; ++b) {
        s->add_table[a * n + b] = static_cast<std::uint32_t>(s->raw_add(a, b));
        s->mul_table[a * n + b] = static_cast<std::uint32_t>(s->raw_mul(a, b));
      }
    }
  }
  state_ = std::move(s);
}

const RingDescriptor& Ring::descriptor() const { return state_->desc; }
std::uint64_t Ring::order() const { return state_->order; }
bool Ring::is_commutative() const { return state_->commutative; }
bool Ring::is_field() const { return state_->field; }
Element Ring::one() const { return state_->one; }
const std::vector<Ring>& Ring::components() const { return state_->comps; }

void Ring::check(Element a) const {
  if (a >= state_->order) {
    throw DomainError("element index " + std::to_string(a) + " out of range for ring of order " +
                      std::to_string(state_->order));
  }
}

Element Ring::add(Element a, Element b) const {
  check(a);
  check(b);
  if (!state_->add_table.empty()) return state_->add_table[a * state_->order + b];
  return state_->raw_add(a, b);
}

Element Ring::neg(Element a) const {
  check(a);
  if (!state_->neg_table.empty()) return state_->neg_table[a];
  return state_->raw_neg(a);
}

Element Ring::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (!state_->mul_table.empty()) return state_->mul_table[a * state_->order + b];
  return state_->raw_mul(a, b);
}

Element Ring::pow(Element a, std::uint64_t exponent) const {
  check(a);
  Element result = one();
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::optional<Element> Ring::try_invert(Element a) const {
  check(a);
  if (!state_->inv_table.empty()) {
    const auto v = state_->inv_table[a];
    if (v == state_->order) return std::nullopt;
    return v;
  }
  return state_->raw_invert(a);
}

std::uint64_t Ring::multiplicative_order(Element a) const {
  if (!is_unit(a)) throw NotAUnitError("element " + std::to_string(a) + " is not a unit");
  std::uint64_t ord = 1;
  for (Element cur = a; cur != one(); cur = mul(cur, a)) ++ord;
  return ord;
}

std::vector<Element> Ring::enumerate() const {
  std::vector<Element> out(state_->order);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

std::vector<std::uint64_t> Ring::decode(Element a) const {
  check(a);
  return state_->decode(a);
}

Element Ring::encode(const std::vector<std::uint64_t>& coords) const {
  const auto& d = state_->desc;
  std::size_t expected = 1;
  switch (d.kind) {
    case RingKind::residue: expected = 1; break;
    case RingKind::field: expected = d.r; break;
    case RingKind::product: expected = state_->comps.size(); break;
    case RingKind::matrix: expected = static_cast<std::size_t>(d.k) * d.k; break;
  }
  if (coords.size() != expected) throw DomainError("wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::uint64_t bound = 0;
    switch (d.kind) {
      case RingKind::residue: bound = state_->order; break;
      case RingKind::field: bound = d.p; break;
      case RingKind::product: bound = state_->comps[i].order(); break;
      case RingKind::matrix: bound = state_->base_order; break;
    }
    if (coords[i] >= bound) throw DomainError("coordinate out of range");
  }
  return state_->encode(coords);
}

}  // namespace zdb
