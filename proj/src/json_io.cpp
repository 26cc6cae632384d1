#include "zdb/json_io.hpp"

#include <sstream>

namespace zdb {

namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("field '") + key + "': " + ex.what());
  }
}

Json opt(const std::optional<Element>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<Element> opt_element(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<Element>(j, key);
}

std::string big(const BigInt& v) { return v.str(); }

}  // namespace

Json to_json(const RingDescriptor& d) {
  Json j;
  j["kind"] = to_string(d.kind);
  switch (d.kind) {
    case RingKind::residue: j["n"] = d.n; break;
    case RingKind::field:
      j["p"] = d.p;
      j["r"] = d.r;
      j["modulus"] = d.modulus;
      break;
    case RingKind::product: {
      Json comps = Json::array();
      for (const auto& c : d.components) comps.push_back(to_json(c));
      j["components"] = comps;
      break;
    }
    case RingKind::matrix:
      j["k"] = d.k;
      j["field"] = to_json(d.components.at(0));
      break;
  }
  return j;
}

RingDescriptor ring_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "residue") return RingDescriptor::residue(get<std::uint64_t>(j, "n"));
  if (kind == "field") {
    const auto p = get<std::uint64_t>(j, "p");
    const auto r = get<unsigned>(j, "r");
    if (j.contains("modulus")) return RingDescriptor::field(p, r, get<std::vector<std::uint64_t>>(j, "modulus"));
    return RingDescriptor::field(p, r);
  }
  if (kind == "product") {
    std::vector<RingDescriptor> comps;
    if (!j.contains("components") || !j["components"].is_array()) throw FormatError("product needs 'components'");
    for (const auto& c : j["components"]) comps.push_back(ring_from_json(c));
    return RingDescriptor::product(std::move(comps));
  }
  if (kind == "matrix") {
    if (!j.contains("field")) throw FormatError("matrix needs 'field'");
    return RingDescriptor::matrix(get<unsigned>(j, "k"), ring_from_json(j["field"]));
  }
  throw FormatError("unknown ring kind '" + kind + "'");
}

Json to_json(const Subgroup& g) {
  Json j;
  j["ring"] = to_json(g.ring().descriptor());
  j["order"] = g.order();
  j["generator"] = opt(g.generator());
  j["elements"] = g.elements();
  return j;
}

Json to_json(const CosetPartition& p) {
  Json j;
  j["subgroup"] = to_json(p.subgroup());
  j["count"] = p.cosets().size();
  j["reps"] = p.reps();
  j["cosets"] = p.cosets();
  return j;
}

Json to_json(const AbelianDomain& d) {
  Json j;
  if (d.kind() == DomainKind::ring_additive) {
    j["kind"] = "ring_additive";
    j["ring"] = to_json(d.ring().descriptor());
  } else {
    j["kind"] = "ring_times_group";
    j["ring"] = to_json(d.ring().descriptor());
    j["group"] = d.group().elements();
  }
  return j;
}

AbelianDomain domain_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (!j.contains("ring")) throw FormatError("domain needs 'ring'");
  Ring ring(ring_from_json(j["ring"]));
  if (kind == "ring_additive") return AbelianDomain::ring_additive(ring);
  if (kind == "ring_times_group") {
    Subgroup g(ring, get<std::vector<Element>>(j, "group"));
    return AbelianDomain::ring_times_group(ring, std::move(g));
  }
  throw FormatError("unknown domain kind '" + kind + "'");
}

Json to_json(const ZdbParams& p) { return Json{{"n", p.n}, {"m", p.m}, {"lambda", p.lambda}}; }

Json to_json(const TLabel& label) {
  return std::visit(
      [](const auto& l) -> Json {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, ZeroLabel>) {
          return Json{{"tag", "zero"}};
        } else if constexpr (std::is_same_v<L, ZeroPairLabel>) {
          return Json{{"tag", "zero_pair"}};
        } else if constexpr (std::is_same_v<L, HCosetLabel>) {
          return Json{{"tag", "h_coset"}, {"rep", l.rep}};
        } else {
          return Json{{"tag", "g_coset_pair"}, {"rep", l.rep}, {"g", l.g}};
        }
      },
      label);
}

namespace {

TLabel label_from_json(const Json& j) {
  const auto tag = get<std::string>(j, "tag");
  if (tag == "zero") return ZeroLabel{};
  if (tag == "zero_pair") return ZeroPairLabel{};
  if (tag == "h_coset") return HCosetLabel{get<Element>(j, "rep")};
  if (tag == "g_coset_pair") return GCosetPairLabel{get<Element>(j, "rep"), get<Element>(j, "g")};
  throw FormatError("unknown label tag '" + tag + "'");
}

}  // namespace

Json to_json(const ZdbFunction& f) {
  Json prov;
  prov["construction"] = f.provenance.construction;
  prov["g"] = f.provenance.g_elements;
  prov["g_generator"] = opt(f.provenance.g_generator);
  prov["h"] = f.provenance.h_elements;
  prov["h_generator"] = opt(f.provenance.h_generator);
  if (!f.provenance.coset_reps.empty()) prov["coset_reps"] = f.provenance.coset_reps;
  if (!f.provenance.labels.empty()) {
    Json labels = Json::array();
    for (const auto& l : f.provenance.labels) labels.push_back(to_json(l));
    prov["labels"] = labels;
  }
  Json j;
  j["domain"] = to_json(f.domain);
  j["q"] = f.q;
  j["n"] = f.claimed.n;
  j["m"] = f.claimed.m;
  j["lambda"] = f.claimed.lambda;
  j["table"] = f.table;
  j["provenance"] = prov;
  return j;
}

ZdbFunction zdb_from_json(const Json& j) {
  if (!j.contains("domain")) throw FormatError("missing field 'domain'");
  ZdbFunction f{domain_from_json(j["domain"]), get<std::uint32_t>(j, "q"), get<std::vector<std::uint32_t>>(j, "table"),
                {}, {}};
  f.claimed.n = j.contains("n") ? get<std::uint64_t>(j, "n") : f.domain.order();
  f.claimed.lambda = get<std::uint64_t>(j, "lambda");
  f.claimed.m = j.contains("m") ? get<std::uint64_t>(j, "m") : f.q;
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    f.provenance.construction = p.value("construction", "external");
    if (p.contains("g")) f.provenance.g_elements = get<std::vector<Element>>(p, "g");
    if (p.contains("h")) f.provenance.h_elements = get<std::vector<Element>>(p, "h");
    f.provenance.g_generator = opt_element(p, "g_generator");
    f.provenance.h_generator = opt_element(p, "h_generator");
    if (p.contains("coset_reps")) f.provenance.coset_reps = get<std::vector<Element>>(p, "coset_reps");
    if (p.contains("labels")) {
      for (const auto& l : p["labels"]) f.provenance.labels.push_back(label_from_json(l));
    }
  } else {
    f.provenance.construction = "external";
  }
  return f;
}

Json to_json(const VerifyResult& v) {
  Json j;
  j["ok"] = v.ok;
  j["n"] = v.certified.n;
  j["m"] = v.certified.m;
  if (v.ok) j["lambda"] = v.certified.lambda;
  if (v.witness) {
    Json w;
    w["shift"] = opt(v.witness->shift);
    w["expected"] = v.witness->expected;
    w["actual"] = v.witness->actual;
    w["reason"] = v.witness->reason;
    j["witness"] = w;
  }
  return j;
}

Json to_json(const DifferenceSpectrum& s) {
  Json j;
  j["shifts"] = s.shifts;
  j["min"] = s.min;
  j["max"] = s.max;
  j["constant"] = s.is_constant();
  Json hist = Json::array();
  for (auto [count, mult] : s.histogram) hist.push_back(Json{{"count", count}, {"shifts", mult}});
  j["histogram"] = hist;
  return j;
}

Json to_json(const CodeBook& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["n"] = c.n;
  j["M"] = c.size;
  j["q"] = c.q;
  j["d"] = c.min_distance;
  if (c.kind == CodeKind::ccc) {
    j["composition"] = c.composition;
  } else {
    j["weight"] = c.weight;
  }
  Json rows = Json::array();
  for (std::uint64_t i = 0; i < c.size; ++i) {
    const auto r = c.row(i);
    rows.push_back(std::vector<std::uint32_t>(r.begin(), r.end()));
  }
  j["codewords"] = rows;
  return j;
}

CodeBook codebook_from_json(const Json& j) {
  CodeBook c;
  const auto kind = get<std::string>(j, "kind");
  if (kind == "CCC") {
    c.kind = CodeKind::ccc;
    c.composition = get<std::vector<std::uint64_t>>(j, "composition");
  } else if (kind == "CWC") {
    c.kind = CodeKind::cwc;
    c.weight = get<std::uint64_t>(j, "weight");
  } else {
    throw FormatError("unknown code kind '" + kind + "'");
  }
  c.n = get<std::uint64_t>(j, "n");
  c.size = get<std::uint64_t>(j, "M");
  c.q = get<std::uint32_t>(j, "q");
  c.min_distance = get<std::uint64_t>(j, "d");
  const auto rows = get<std::vector<std::vector<std::uint32_t>>>(j, "codewords");
  if (rows.size() != c.size) throw FormatError("codeword count differs from M");
  for (const auto& r : rows) {
    if (r.size() != c.n) throw FormatError("codeword length differs from n");
    c.words.insert(c.words.end(), r.begin(), r.end());
  }
  return c;
}

std::string to_csv(const CodeBook& c) {
  std::ostringstream os;
  for (std::uint64_t i = 0; i < c.size; ++i) {
    const auto r = c.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
    os << '\n';
  }
  return os.str();
}

Json to_json(const DssSystem& s) {
  Json j;
  j["kind"] = "DSS";
  j["group"] = to_json(s.group);
  j["lambda"] = s.lambda;
  j["perfect"] = s.perfect;
  j["partitioned"] = s.partitioned;
  j["tau"] = s.tau();
  j["blocks"] = s.blocks;
  return j;
}

DssSystem dss_from_json(const Json& j) {
  if (!j.contains("group")) throw FormatError("missing field 'group'");
  DssSystem s{domain_from_json(j["group"]), get<std::vector<std::vector<Element>>>(j, "blocks"),
              get<std::uint64_t>(j, "lambda"), get<bool>(j, "perfect"), false};
  s.partitioned = j.value("partitioned", false);
  return s;
}

Json to_json(const DssCheck& c) {
  Json j;
  j["lambda_min"] = c.lambda_min;
  j["perfect"] = c.perfect;
  j["lambda"] = opt(c.lambda);
  if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
  return j;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["name"] = b.name;
  j["applicable"] = b.applicable;
  j["bound"] = b.applicable ? Json(to_string(b.bound)) : Json(nullptr);
  j["achieved"] = big(b.achieved);
  j["optimal"] = b.optimal;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

Json to_json(const Recipe& r) {
  Json j;
  j["id"] = r.id;
  if (r.n) j["n"] = *r.n;
  if (r.e) j["e"] = *r.e;
  if (r.m) j["m"] = *r.m;
  if (r.b) j["b"] = *r.b;
  if (r.s) j["s"] = *r.s;
  if (!r.q_list.empty()) j["q_list"] = r.q_list;
  return j;
}

Recipe recipe_from_json(const std::string& id, const Json& p) {
  Recipe r;
  r.id = id;
  if (!p.is_object()) throw FormatError("recipe parameters must be a JSON object");
  auto field = [&](const char* key) -> std::optional<std::uint64_t> {
    if (!p.contains(key)) return std::nullopt;
    return get<std::uint64_t>(p, key);
  };
  r.n = field("n");
  r.e = field("e");
  r.m = field("m");
  r.b = field("b");
  r.s = field("s");
  if (p.contains("q_list")) r.q_list = get<std::vector<std::uint64_t>>(p, "q_list");
  return r;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["label"] = r.label;
  j["recipe"] = r.recipe;
  j["construction"] = r.construction;
  j["ring"] = to_json(r.ring);
  j["generators"] = r.generators;
  j["subgroup_orders"] = r.subgroup_orders;
  j["expected"] = to_json(r.expected);
  j["certified"] = r.certified ? to_json(*r.certified) : Json(nullptr);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const CertificationRow& row) {
  Json j;
  j["label"] = row.label;
  j["construction"] = row.construction;
  j["claimed"] = to_json(row.claimed);
  j["certified"] = to_json(row.certified);
  j["profile_ok"] = row.profile_ok;
  j["distance_identity"] = row.distance_identity;
  j["ccc"] = row.ccc ? to_json(*row.ccc) : Json(nullptr);
  j["cwc"] = row.cwc ? to_json(*row.cwc) : Json(nullptr);
  j["dss"] = row.dss ? to_json(*row.dss) : Json(nullptr);
  j["dss_check"] = row.dss_check ? to_json(*row.dss_check) : Json(nullptr);
  return j;
}

}  // namespace zdb
