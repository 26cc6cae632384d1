#include "zdb/construct.hpp"

#include <sstream>

namespace zdb {

AbelianDomain::AbelianDomain(DomainKind kind, Ring ring, std::optional<Subgroup> group)
    : kind_(kind), ring_(std::move(ring)), group_(std::move(group)) {
  if (kind_ == DomainKind::ring_additive) {
    order_ = ring_.order();
    identity_ = ring_.zero();
  } else {
    if (!(group_->ring() == ring_)) throw DomainError("group and ring of a product domain differ");
    order_ = ring_.order() * group_->order();
    identity_ = pair(ring_.zero(), group_->identity_position());
  }
}

AbelianDomain AbelianDomain::ring_additive(Ring ring) {
  return AbelianDomain(DomainKind::ring_additive, std::move(ring), std::nullopt);
}

AbelianDomain AbelianDomain::ring_times_group(Ring ring, Subgroup group) {
  return AbelianDomain(DomainKind::ring_times_group, std::move(ring), std::move(group));
}

const Subgroup& AbelianDomain::group() const {
  if (!group_) throw DomainError("additive ring domain has no group factor");
  return *group_;
}

void AbelianDomain::check(Element a) const {
  if (a >= order_) {
    throw DomainError("domain element " + std::to_string(a) + " out of range for order " + std::to_string(order_));
  }
}

Element AbelianDomain::pair(Element ring_index, std::size_t group_position) const {
  if (kind_ == DomainKind::ring_additive) {
    if (group_position != 0) throw DomainError("additive ring domain has no group factor");
    return ring_index;
  }
  return ring_index * group_->order() + group_position;
}

std::pair<Element, std::size_t> AbelianDomain::split(Element a) const {
  check(a);
  if (kind_ == DomainKind::ring_additive) return {a, 0};
  const std::size_t e = group_->order();
  return {a / e, static_cast<std::size_t>(a % e)};
}

Element AbelianDomain::compose(Element a, Element b) const {
  check(a);
  check(b);
  if (kind_ == DomainKind::ring_additive) return ring_.add(a, b);
  const std::size_t e = group_->order();
  return ring_.add(a / e, b / e) * e + group_->mul_position(a % e, b % e);
}

Element AbelianDomain::inverse(Element a) const {
  check(a);
  if (kind_ == DomainKind::ring_additive) return ring_.neg(a);
  const std::size_t e = group_->order();
  return ring_.neg(a / e) * e + group_->inverse_position(a % e);
}

std::string to_string(const TLabel& label) {
  std::ostringstream os;
  std::visit(
      [&](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, ZeroLabel>) {
          os << "0";
        } else if constexpr (std::is_same_v<L, ZeroPairLabel>) {
          os << "(0,1)";
        } else if constexpr (std::is_same_v<L, HCosetLabel>) {
          os << "H:" << l.rep;
        } else {
          os << "G:(" << l.rep << "," << l.g << ")";
        }
      },
      label);
  return os.str();
}

std::string to_string(const ZdbParams& p) {
  std::ostringstream os;
  os << "(" << p.n << ", " << p.m << ", " << p.lambda << ")";
  return os.str();
}

namespace {

void require(bool ok, const std::string& clause) {
  if (!ok) throw ConditionNotSatisfied(clause);
}

void require_same_ring(const Ring& ring, const Subgroup& g, const char* name) {
  require(g.ring() == ring, std::string(name) + " is not a subgroup of the given ring");
}

}  // namespace

ZdbFunction construct_generic(const Ring& ring, const Subgroup& g) {
  require_same_ring(ring, g, "G");
  require(check_unit_difference(g), "G fails the unit-difference condition (G - 1) \\ {0} in R^x");
  const CosetPartition partition(g);

  ZdbFunction f{AbelianDomain::ring_additive(ring), 0, {}, {}, {}};
  const std::uint64_t n = ring.order();
  f.table.resize(n);
  for (Element x = 0; x < n; ++x) f.table[x] = static_cast<std::uint32_t>(partition.coset_of(x));
  f.q = static_cast<std::uint32_t>(partition.cosets().size());

  const std::uint64_t e = g.order();
  f.claimed = {n, (n - 1) / e + 1, e - 1};
  f.provenance.construction = "generic";
  f.provenance.g_elements = g.elements();
  f.provenance.g_generator = g.generator();
  f.provenance.coset_reps = partition.reps();
  return f;
}

ZdbFunction construct_product(const Ring& ring, const Subgroup& g, const Subgroup& h) {
  require_same_ring(ring, g, "G");
  require_same_ring(ring, h, "H");
  require(g.order() >= 2, "|G| >= 2");
  require(check_unit_difference(g), "condition 1: (G - 1) \\ {0} in R^x");
  require(check_unit_difference(h), "condition 2: (H - 1) \\ {0} in R^x");
  require(h.order() + 1 == g.order(), "condition 3: |H| = |G| - 1");

  const CosetPartition pg(g);
  const CosetPartition ph(h);
  const std::size_t e = g.order();
  const std::uint64_t n = ring.order();
  const std::size_t h_reps = ph.reps().size() - 1;
  const std::size_t g_reps = pg.reps().size() - 1;

  ZdbFunction f{AbelianDomain::ring_times_group(ring, g), 0, {}, {}, {}};
  const std::size_t one_pos = g.identity_position();

  // Canonical labelling of T.
  auto& labels = f.provenance.labels;
  labels.push_back(ZeroLabel{});
  labels.push_back(ZeroPairLabel{});
  for (std::size_t i = 1; i <= h_reps; ++i) labels.push_back(HCosetLabel{ph.reps()[i]});
  for (std::size_t i = 1; i <= g_reps; ++i) {
    for (Element x : g.elements()) labels.push_back(GCosetPairLabel{pg.reps()[i], x});
  }
  const std::uint32_t pair_base = static_cast<std::uint32_t>(2 + h_reps);

  f.table.resize(n * e);
  for (Element r = 0; r < n; ++r) {
    for (std::size_t pos = 0; pos < e; ++pos) {
      std::uint32_t symbol = 0;
      if (r == 0) {
        symbol = pos == one_pos ? 0 : 1;
      } else if (pos == one_pos) {
        symbol = static_cast<std::uint32_t>(1 + ph.coset_of(r));
      } else {
        // (RI_G(r), x * CI_G(r))
        const std::size_t moved = g.mul_position(pos, pg.column_position(r));
        symbol = static_cast<std::uint32_t>(pair_base + (pg.coset_of(r) - 1) * e + moved);
      }
      f.table[r * e + pos] = symbol;
    }
  }
  f.q = static_cast<std::uint32_t>(labels.size());

  const std::uint64_t en = e * n;
  f.claimed = {en, (en - 1) / (e - 1) + 1, e - 2};
  f.provenance.construction = "product";
  f.provenance.g_elements = g.elements();
  f.provenance.g_generator = g.generator();
  f.provenance.h_elements = h.elements();
  f.provenance.h_generator = h.generator();
  return f;
}

ZdbFunction construct_doubled(const Ring& ring, const Subgroup& g) {
  require_same_ring(ring, g, "G");
  require(ring.order() >= 3, "n >= 3");
  require(check_unit_difference(g), "condition 1: (G - 1) \\ {0} in R^x");
  // -1 in G would also fail condition 2; report the more specific cause.
  const Subgroup h = doubled_subgroup(g);
  require(check_plus_one(g), "condition 2: (G + 1) in R^x");

  ZdbFunction f = construct_generic(ring, h);
  f.provenance.construction = "doubled";
  f.provenance.g_elements = g.elements();
  f.provenance.g_generator = g.generator();
  f.provenance.h_elements = h.elements();
  f.provenance.h_generator = std::nullopt;
  return f;
}

std::uint32_t evaluate(const ZdbFunction& f, Element y) {
  if (y >= f.table.size()) throw DomainError("domain element " + std::to_string(y) + " out of range");
  return f.table[y];
}

std::uint32_t shift_evaluate(const ZdbFunction& f, Element y, Element delta) {
  return evaluate(f, f.domain.compose(y, delta));
}

}  // namespace zdb
