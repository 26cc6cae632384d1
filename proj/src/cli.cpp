#include "zdb/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zdb/catalog.hpp"
#include "zdb/json_io.hpp"

namespace zdb {

namespace {

// Raised for problems that should exit with 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw UsageError("malformed JSON in " + what + " at byte " + std::to_string(ex.byte) + ": " + ex.what());
  }
}

// Inline JSON, or @path for a file.
Json json_arg(const std::string& value, const std::string& what) {
  if (!value.empty() && value[0] == '@') return parse_json(read_file(value.substr(1)), value.substr(1));
  return parse_json(value, what);
}

Json json_file(const std::string& path) { return parse_json(read_file(path), path); }

std::vector<Element> element_list(const std::string& value) {
  std::string s = value;
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
  }
  std::istringstream is(s);
  std::vector<Element> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad element index '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("empty element list");
  return out;
}

// A single index names a generator; a list names the subgroup elements.
Subgroup subgroup_arg(const Ring& ring, const std::string& value) {
  const auto elems = element_list(value);
  for (auto x : elems) {
    if (x >= ring.order()) throw UsageError("element " + std::to_string(x) + " out of range");
  }
  if (elems.size() == 1 && value.find_first_of(",[") == std::string::npos) return cyclic_subgroup(ring, elems[0]);
  return Subgroup(ring, elems);
}

struct Output {
  std::string path;
  std::string format = "json";
  std::ostream& out;

  void emit(const std::string& payload) const {
    if (path.empty()) {
      out << payload;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << payload;
  }
  void emit(const Json& j) const { emit(j.dump(2) + "\n"); }
};

void guard_size(std::uint64_t n, bool force) {
  if (n > kVerifyLimit && !force) {
    throw UsageError("domain of order " + std::to_string(n) + " exceeds " + std::to_string(kVerifyLimit) +
                     " for exhaustive checks; pass --force to run anyway");
  }
}

std::string witness_text(const VerifyResult& v) {
  if (!v.witness) return "verification failed";
  std::ostringstream os;
  os << "verification failed: " << v.witness->reason;
  if (v.witness->shift) os << " at shift " << *v.witness->shift;
  os << " (expected " << v.witness->expected << ", got " << v.witness->actual << ")";
  return os.str();
}

// Recomputes everything a code payload declares; returns failure reasons.
std::vector<std::string> audit_code(const CodeBook& c, Json& report) {
  std::vector<std::string> problems;
  const auto d = min_distance(c);
  report["d_declared"] = c.min_distance;
  report["d_computed"] = d;
  if (d != c.min_distance) problems.push_back("declared minimum distance " + std::to_string(c.min_distance) +
                                              " differs from computed " + std::to_string(d));
  if (c.kind == CodeKind::ccc) {
    const auto comp = common_composition(c);
    if (!comp || *comp != c.composition) problems.push_back("codewords do not share the declared composition");
  } else {
    const auto w = common_weight(c);
    if (!w || *w != c.weight) problems.push_back("codewords do not share the declared weight");
  }
  const auto b = c.kind == CodeKind::ccc ? ccc_bound(c.n, d, c.composition, c.size)
                                         : cwc_bound(c.n, d, c.weight, c.q, c.size);
  report["bound"] = to_json(b);
  if (!b.applicable) problems.push_back("bound hypothesis does not hold");
  if (b.applicable && !b.optimal) problems.push_back("bound not met with equality");
  return problems;
}

std::vector<std::string> audit_dss(const DssSystem& s, Json& report) {
  std::vector<std::string> problems;
  const auto check = dss_perfect_check(s);
  report["check"] = to_json(check);
  if (check.lambda_min != s.lambda) {
    problems.push_back("declared lambda " + std::to_string(s.lambda) + " differs from computed " +
                       std::to_string(check.lambda_min));
  }
  if (check.perfect != s.perfect) problems.push_back("declared perfectness differs from computed");
  if (s.blocks.size() >= 2 && check.lambda_min >= 1) {
    const auto b = dss_bound(s.group.order(), check.lambda_min, s.blocks.size(), s.tau());
    report["bound"] = to_json(b);
    if (!b.optimal) problems.push_back("bound not met with equality");
  } else {
    problems.push_back("bound needs at least two blocks and lambda >= 1");
  }
  return problems;
}

std::string params_text(const ZdbParams& p) { return to_string(p) + " ZDB"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-difference balanced functions over finite rings, with derived codes and certificates", "zdbkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  std::string format = "json";
  bool force = false;
  unsigned threads = 1;
  app.add_option("--out", out_path, "Write the payload to this file instead of standard output");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--force", force, "Allow exhaustive checks above 10^4 domain elements");
  app.add_option("--threads", threads, "Worker threads for exhaustive checks")->check(CLI::PositiveNumber);

  std::string ring_json, generator, g_arg, h_arg, input, zdb_path, in_path, construction, recipe_id, params_json;
  std::uint64_t e = 0, n_max = 100;
  std::vector<std::uint64_t> q_list;
  bool all = false;

  auto* ring_cmd = app.add_subcommand("ring", "Ring descriptors");
  ring_cmd->require_subcommand(1);
  auto* ring_info = ring_cmd->add_subcommand("info", "Order, identity and unit count of a ring");
  ring_info->add_option("--ring", ring_json, "Ring descriptor JSON (or @file)")->required();

  auto* cosets_cmd = app.add_subcommand("cosets", "Cyclic subgroups and coset partitions");
  cosets_cmd->require_subcommand(1);
  auto* partition = cosets_cmd->add_subcommand("partition", "Partition R into cosets of <generator>");
  partition->add_option("--ring", ring_json, "Ring descriptor JSON (or @file)")->required();
  partition->add_option("--generator", generator, "Generator index")->required();

  auto* zdb_cmd = app.add_subcommand("zdb", "Construct and verify ZDB functions");
  zdb_cmd->require_subcommand(1);
  auto* construct = zdb_cmd->add_subcommand("construct", "Build a ZDB function");
  construct->require_subcommand(1);
  CLI::App* kinds[3];
  const char* kind_names[3] = {"generic", "product", "doubled"};
  for (int i = 0; i < 3; ++i) {
    kinds[i] = construct->add_subcommand(kind_names[i], std::string(kind_names[i]) + " construction");
    kinds[i]->set_help_flag("--help", "Print this help message and exit");
    kinds[i]->add_option("--ring", ring_json, "Ring descriptor JSON (or @file)")->required();
    kinds[i]->add_option("--g", g_arg, "Generator index or element list of G")->required();
  }
  kinds[1]->add_option("--h", h_arg, "Generator index or element list of H")->required();
  auto* verify = zdb_cmd->add_subcommand("verify", "Exhaustively verify a tabulated function");
  verify->add_option("--input", input, "ZDB function JSON file")->required();

  auto* codes_cmd = app.add_subcommand("codes", "Derived codes and difference systems");
  codes_cmd->require_subcommand(1);
  CLI::App* code_kinds[3];
  const char* code_names[3] = {"ccc", "cwc", "dss"};
  for (int i = 0; i < 3; ++i) {
    code_kinds[i] = codes_cmd->add_subcommand(code_names[i], std::string("Derive the ") + code_names[i]);
    code_kinds[i]->add_option("--zdb", zdb_path, "ZDB function JSON file")->required();
  }
  auto* check_bounds = codes_cmd->add_subcommand("check-bounds", "Recompute and certify a code or DSS payload");
  check_bounds->add_option("--in", in_path, "CCC/CWC/DSS JSON file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Parameter search and recipes");
  catalog_cmd->require_subcommand(1);
  auto* search = catalog_cmd->add_subcommand("search", "Search parameter families");
  search->add_option("--construction", construction, "cor1 or cor2")->required()->check(CLI::IsMember({"cor1", "cor2"}));
  search->add_option("--e", e, "Subgroup order e")->required();
  search->add_option("--max", n_max, "Largest n for cor1");
  search->add_option("--q", q_list, "Field orders for cor2 (repeatable)");
  auto* recipe = catalog_cmd->add_subcommand("recipe", "Run one named recipe");
  recipe->add_option("--id", recipe_id, "Recipe id")->required();
  recipe->add_option("--params", params_json, "Recipe parameters as JSON");
  auto* certify_cmd = catalog_cmd->add_subcommand("certify", "Certify the default catalog");
  certify_cmd->add_flag("--all", all, "Certify every built-in instance");

  std::vector<std::string> argv_store{"zdbkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& ex) {
    app.exit(ex, out, err);
    return 0;
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return 2;
  }

  const Output output{out_path, format, out};

  try {
    if (ring_info->parsed()) {
      const Ring ring(ring_from_json(json_arg(ring_json, "--ring")));
      Json j;
      j["ring"] = to_json(ring.descriptor());
      j["name"] = describe(ring.descriptor());
      j["order"] = ring.order();
      j["one"] = ring.one();
      j["commutative"] = ring.is_commutative();
      j["field"] = ring.is_field();
      if (ring.order() <= 1000000) {
        std::uint64_t units = 0;
        for (Element a = 0; a < ring.order(); ++a) units += ring.is_unit(a);
        j["units"] = units;
      }
      output.emit(j);
      return 0;
    }

    if (partition->parsed()) {
      const Ring ring(ring_from_json(json_arg(ring_json, "--ring")));
      const Subgroup g = subgroup_arg(ring, generator);
      output.emit(to_json(CosetPartition(g)));
      return 0;
    }

    for (int i = 0; i < 3; ++i) {
      if (!kinds[i]->parsed()) continue;
      const Ring ring(ring_from_json(json_arg(ring_json, "--ring")));
      const Subgroup g = subgroup_arg(ring, g_arg);
      ZdbFunction f = i == 0   ? construct_generic(ring, g)
                      : i == 1 ? construct_product(ring, g, subgroup_arg(ring, h_arg))
                               : construct_doubled(ring, g);
      if (format == "text") {
        output.emit(params_text(f.claimed) + "\n");
      } else {
        output.emit(to_json(f));
      }
      if (!out_path.empty()) err << "claimed " << params_text(f.claimed) << " written to " << out_path << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const ZdbFunction f = zdb_from_json(json_file(input));
      guard_size(f.domain.order(), force);
      const auto v = verify_zdb(f, threads);
      if (!v.ok) {
        err << witness_text(v) << "\n";
        output.emit(to_json(v));
        return 1;
      }
      if (format == "text") {
        output.emit(params_text(v.certified) + " certified\n");
      } else {
        output.emit(Json{{"n", v.certified.n}, {"m", v.certified.m}, {"lambda", v.certified.lambda}}.dump() + "\n");
      }
      return 0;
    }

    for (int i = 0; i < 3; ++i) {
      if (!code_kinds[i]->parsed()) continue;
      const ZdbFunction f = zdb_from_json(json_file(zdb_path));
      guard_size(f.domain.order(), force);
      if (i == 2) {
        if (format == "csv") throw UsageError("DSS exports are JSON only");
        output.emit(to_json(dss_from_zdb(f)));
        return 0;
      }
      const CodeBook c = i == 0 ? ccc_from_zdb(f) : cwc_from_zdb(f);
      if (format == "csv") {
        output.emit(to_csv(c));
      } else {
        output.emit(to_json(c));
      }
      err << to_string(c.kind) << " (" << c.n << ", " << c.size << ", " << c.min_distance << ") over Z_" << c.q
          << "\n";
      return 0;
    }

    if (check_bounds->parsed()) {
      const Json payload = json_file(in_path);
      const auto kind = payload.value("kind", "");
      Json report;
      report["kind"] = kind;
      std::vector<std::string> problems;
      if (kind == "DSS") {
        const DssSystem s = dss_from_json(payload);
        guard_size(s.group.order(), force);
        problems = audit_dss(s, report);
      } else if (kind == "CCC" || kind == "CWC") {
        const CodeBook c = codebook_from_json(payload);
        guard_size(c.n, force);
        problems = audit_code(c, report);
      } else {
        throw UsageError("payload kind must be CCC, CWC or DSS");
      }
      report["optimal"] = problems.empty();
      report["problems"] = problems;
      output.emit(report);
      for (const auto& p : problems) err << p << "\n";
      return problems.empty() ? 0 : 1;
    }

    if (search->parsed()) {
      std::vector<SearchResult> results;
      if (construction == "cor1") {
        results = search_cor1(n_max, e);
      } else {
        if (q_list.empty()) throw UsageError("cor2 needs at least one --q");
        results.push_back(search_cor2(q_list, e));
      }
      std::ostringstream lines;
      bool ok = true;
      for (auto& r : results) {
        guard_size(r.function->domain.order(), force);
        if (!certify(r)) {
          ok = false;
          err << r.label << ": verification failed\n";
        }
        lines << to_json(r).dump() << "\n";
      }
      output.emit(lines.str());
      return ok ? 0 : 1;
    }

    if (recipe->parsed()) {
      const Json params = params_json.empty() ? Json::object() : json_arg(params_json, "--params");
      SearchResult r = run_recipe(recipe_from_json(recipe_id, params));
      guard_size(r.function->domain.order(), force);
      const bool ok = certify(r);
      output.emit(to_json(r).dump() + "\n");
      if (!ok) err << r.label << ": verification failed\n";
      return ok ? 0 : 1;
    }

    if (certify_cmd->parsed()) {
      if (!all) throw UsageError("catalog certify needs --all");
      auto results = default_catalog();
      const auto rows = certify_all(results);
      std::ostringstream lines;
      for (const auto& row : rows) lines << to_json(row).dump() << "\n";
      output.emit(lines.str());
      err << rows.size() << " instances certified\n";
      return 0;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const FormatError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const CertificationFailure& ex) {
    err << "certification failed: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace zdb
