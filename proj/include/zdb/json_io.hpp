#pragma once

#include <string>

#include <json.hpp>

#include "zdb/catalog.hpp"
#include "zdb/codes.hpp"
#include "zdb/construct.hpp"
#include "zdb/cosets.hpp"
#include "zdb/ring.hpp"
#include "zdb/verify.hpp"

namespace zdb {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON payload.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"kind":"residue","n":…} | {"kind":"field","p":…,"r":…,"modulus":[c0,…,cr]}
// | {"kind":"product","components":[…]} | {"kind":"matrix","k":…,"field":{…}}
// A field without "modulus" gets the smallest irreducible one.
Json to_json(const RingDescriptor& desc);
RingDescriptor ring_from_json(const Json& j);

Json to_json(const Subgroup& g);
Json to_json(const CosetPartition& p);

// {"kind":"ring_additive","ring":{…}} | {"kind":"ring_times_group","ring":{…},"group":[…]}
Json to_json(const AbelianDomain& d);
AbelianDomain domain_from_json(const Json& j);

Json to_json(const ZdbParams& p);
Json to_json(const TLabel& label);

// {"domain":{…},"q":…,"n":…,"m":…,"lambda":…,"table":[…],"provenance":{…}}
Json to_json(const ZdbFunction& f);
ZdbFunction zdb_from_json(const Json& j);

Json to_json(const VerifyResult& v);
Json to_json(const DifferenceSpectrum& s);

Json to_json(const CodeBook& c);
CodeBook codebook_from_json(const Json& j);
/// One codeword per line, symbols comma separated.
std::string to_csv(const CodeBook& c);

Json to_json(const DssSystem& s);
DssSystem dss_from_json(const Json& j);
Json to_json(const DssCheck& c);

Json to_json(const BoundReport& b);

Json to_json(const Recipe& r);
Recipe recipe_from_json(const std::string& id, const Json& params);
Json to_json(const SearchResult& r);
Json to_json(const CertificationRow& row);

}  // namespace zdb
