// vkc: command-line front end for the cohomology and gluing library.
//
// Exit status: 0 when the command ran and every check held, 1 when a
// verification failed, 2 on usage, parse, hypothesis or budget errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vkc/acceptance.hpp"
#include "vkc/correspondence.hpp"
#include "vkc/error.hpp"
#include "vkc/io.hpp"
#include "vkc/random.hpp"
#include "vkc/relative.hpp"
#include "vkc/svk.hpp"

#ifndef VKC_FIXTURE_DIR
#define VKC_FIXTURE_DIR "fixtures"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace vkc;

struct Options {
  std::string file;
  std::string group = "S3";
  std::string battery = "default";
  std::string budget = "1e7";
  std::string format = "text";
  std::string base;
  std::string extra;
  std::string cover;
  std::string fixtures = VKC_FIXTURE_DIR;
  std::uint64_t seed = 20240611;
  bool list = false;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::uint64_t parse_budget(const std::string& s) {
  double v = 0;
  try {
    std::size_t used = 0;
    v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "budget must be a number, got " + s);
  }
  if (!(v >= 1) || v > 1e18) fail(ErrorCode::InvalidArgument, "budget must be positive");
  return static_cast<std::uint64_t>(v);
}

VertexId vertex_named(const TwoComplex& x, const std::string& name) {
  const auto v = x.find_vertex(name);
  if (!v) fail(ErrorCode::InvalidArgument, "unknown vertex " + name);
  return *v;
}

VertexId base_of(const ComplexFile& cf, const Options& o) {
  if (!o.base.empty()) return vertex_named(cf.complex, o.base);
  if (cf.base) return *cf.base;
  if (cf.complex.vertex_count() == 0) fail(ErrorCode::InvalidArgument, "complex has no vertices");
  return 0;
}

std::vector<VertexId> extras_of(const ComplexFile& cf, const Options& o) {
  std::vector<VertexId> out;
  for (const std::string& n : split_commas(o.extra)) out.push_back(vertex_named(cf.complex, n));
  return out;
}

std::vector<std::string> cover_names(const Options& o, std::size_t want) {
  auto names = split_commas(o.cover);
  if (names.empty() && want == 2) names = {"U", "V"};
  if (want != 0 && names.size() != want) {
    fail(ErrorCode::InvalidArgument, "--cover needs " + std::to_string(want) + " subcomplex names");
  }
  if (names.empty()) fail(ErrorCode::InvalidArgument, "--cover is required");
  return names;
}

// Comparison map as "gen -> word over pi_1(X, b)".
std::string word_list(const GluedPresentation& gp) {
  std::string out;
  for (std::size_t k = 0; k < gp.to_pi1.size(); ++k) {
    out += (k ? ", " : "") + gp.presentation.generators()[k] + " -> " +
           gp.pi1_x.presentation.word_to_string(gp.to_pi1[k]);
  }
  return out;
}

// One record per battery group comparing the built presentation with
// pi_1(X, b). Over-budget groups are reported, not compared.
bool battery_records(const GluedPresentation& gp, const Options& o, std::vector<json>& out) {
  bool ok = true;
  const std::uint64_t budget = parse_budget(o.budget);
  for (const FiniteGroup& g : parse_battery(o.battery)) {
    json r;
    r["group"] = g.label();
    try {
      const HomBijectionReport h = check_hom_bijection(gp, g, budget);
      r["built"] = h.built_count;
      r["pi1"] = h.pi1_count;
      r["bijection"] = h.bijective();
      ok = ok && h.bijective();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      r["skipped"] = "over budget";
    }
    out.push_back(std::move(r));
  }
  return ok;
}

struct Result {
  std::vector<json> records;
  bool verified = true;
};

Result cmd_validate(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const TwoComplex& x = cf.complex;
  json r;
  r["command"] = "validate";
  r["vertices"] = x.vertex_count();
  r["edge_pairs"] = x.edge_pair_count();
  r["cells"] = x.cell_count();
  r["connected"] = is_connected(x);
  json subs = json::array();
  for (const auto& [name, s] : cf.subcomplexes) subs.push_back(name);
  r["subcomplexes"] = subs;
  if (cf.base) r["base"] = x.vertex_name(*cf.base);
  return {{r}, true};
}

Result cmd_pi1(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const Pi1Data d = pi1_presentation(cf.complex, base_of(cf, o));
  json r;
  r["command"] = "pi1";
  r["base"] = cf.complex.vertex_name(d.base);
  r["generators"] = d.presentation.rank();
  r["relators"] = d.presentation.relators().size();
  r["presentation"] = d.presentation.to_string();
  return {{r}, true};
}

Result cmd_homcount(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const Pi1Data d = pi1_presentation(cf.complex, base_of(cf, o));
  const std::uint64_t budget = parse_budget(o.budget);
  Result res;
  for (const FiniteGroup& g : parse_battery(o.battery)) {
    json r;
    r["command"] = "homcount";
    r["group"] = g.label();
    try {
      r["count"] = hom_count(d.presentation, g, budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      r["skipped"] = "over budget";
    }
    res.records.push_back(std::move(r));
  }
  return res;
}

Result cmd_rho_epsilon(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const Pi1Data d = pi1_presentation(cf.complex, base_of(cf, o));
  const std::uint64_t budget = parse_budget(o.budget);
  Result res;
  for (const FiniteGroup& g : parse_battery(o.battery)) {
    const auto homs = enumerate_homs(d.presentation, g, budget);
    const auto classes = cohomology_classes(cf.complex, {d.base}, g, budget);
    bool ok = homs.size() == classes.size();
    for (const Homomorphism& h : homs) ok = ok && rho(epsilon(h, d), d) == h;
    for (const CohomologyClass& c : classes) ok = ok && epsilon(rho(c, d), d) == c;
    json r;
    r["command"] = "verify-rho-epsilon";
    r["group"] = g.label();
    r["homs"] = homs.size();
    r["classes"] = classes.size();
    r["inverse"] = ok;
    res.verified = res.verified && ok;
    res.records.push_back(std::move(r));
  }
  return res;
}

Result cmd_h1(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const FiniteGroup g = resolve_group(o.group);
  std::vector<VertexId> ys = extras_of(cf, o);
  ys.push_back(base_of(cf, o));
  const BaseSet y = make_base_set(ys);
  const auto classes = cohomology_classes(cf.complex, y, g, parse_budget(o.budget));
  json r;
  r["command"] = "h1";
  r["group"] = g.label();
  json names = json::array();
  for (VertexId v : y) names.push_back(cf.complex.vertex_name(v));
  r["base_set"] = names;
  r["classes"] = classes.size();
  Result res{{r}, true};
  if (o.list) {
    for (std::size_t k = 0; k < classes.size(); ++k) {
      json c;
      c["class"] = k;
      json values;
      for (EdgeId e = 0; e < cf.complex.edge_count(); e += 2) {
        values[cf.complex.edge_pair_name(pair_of(e))] = g.name(classes[k].representative[e]);
      }
      c["representative"] = values;
      res.records.push_back(std::move(c));
    }
  }
  return res;
}

Result cmd_h1_relative(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const TwoComplex& x = cf.complex;
  const FiniteGroup g = resolve_group(o.group);
  const std::uint64_t budget = parse_budget(o.budget);
  const BasePointFamily fam = default_family(x, base_of(cf, o), extras_of(cf, o));
  if (fam.extras.empty()) fail(ErrorCode::InvalidArgument, "--extra needs at least one vertex");
  const auto rel = cohomology_classes(x, fam.base_set(), g, budget);
  const auto abs = cohomology_classes(x, {fam.base}, g, budget);
  std::uint64_t factor = 1;
  for (std::size_t k = 0; k < fam.extras.size(); ++k) factor *= g.order();
  bool round_trip = true;
  for (const RelativeClass& rc : rel) {
    const auto [alpha, c] = split_f(x, rc, fam);
    round_trip = round_trip && join_g(x, alpha, c, fam) == rc;
  }
  json r;
  r["command"] = "h1-relative";
  r["group"] = g.label();
  r["relative_classes"] = rel.size();
  r["absolute_classes"] = abs.size();
  r["group_power"] = factor;
  r["product_matches"] = rel.size() == abs.size() * factor;
  r["round_trip"] = round_trip;
  return {{r}, round_trip && rel.size() == abs.size() * factor};
}

GluingData gluing_of(const ComplexFile& cf, const Options& o) {
  const auto subs = resolve_subs(cf, cover_names(o, 2));
  return make_gluing(cf.complex, subs[0], subs[1], base_of(cf, o), extras_of(cf, o));
}

Result cmd_check_cartesian(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const GluingData gd = gluing_of(cf, o);
  const FiniteGroup g = resolve_group(o.group);
  const BaseSet y = make_base_set(gd.points);
  const CartesianReport c = check_cartesian_pair(cf.complex, gd.u, gd.v, y, g, parse_budget(o.budget));
  json r;
  r["command"] = "check-cartesian";
  r["group"] = g.label();
  r["components"] = gd.components.size();
  r["classes"] = c.total;
  r["fibered"] = c.fibered;
  r["commutes"] = c.commutes;
  r["injective"] = c.injective;
  r["witnesses"] = c.witnesses_ok;
  r["bijection"] = c.bijective();
  return {{r}, c.bijective()};
}

Result glued_result(const std::string& command, const GluedPresentation& gp, const Options& o) {
  json head;
  head["command"] = command;
  head["generators"] = gp.presentation.rank();
  head["relators"] = gp.presentation.relators().size();
  head["presentation"] = gp.presentation.to_string();
  head["comparison"] = word_list(gp);
  head["pi1"] = gp.pi1_x.presentation.to_string();
  Result res{{head}, true};
  res.verified = battery_records(gp, o, res.records);
  return res;
}

Result cmd_glue_amalgam(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  return glued_result("glue-amalgam", amalgamated_presentation(gluing_of(cf, o)), o);
}

Result cmd_glue_hnn(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  return glued_result("glue-hnn", hnn_presentation(gluing_of(cf, o)), o);
}

Result cmd_glue_colimit(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const auto subs = resolve_subs(cf, cover_names(o, 0));
  return glued_result("glue-colimit", colimit_presentation(cf.complex, Cover{subs}, base_of(cf, o)), o);
}

Result cmd_verify_triples(const Options& o) {
  const ComplexFile cf = load_complex(o.file);
  const FiniteGroup g = resolve_group(o.group);
  const TripleReport t = verify_triple_description(gluing_of(cf, o), g, parse_budget(o.budget));
  json r;
  r["command"] = "verify-triples";
  r["group"] = g.label();
  r["triples"] = t.triples;
  r["relative_classes"] = t.relative_classes;
  r["orbits"] = t.orbits;
  r["pairs"] = t.pairs;
  r["absolute_classes"] = t.absolute_classes;
  r["product_invariant"] = t.product_invariant;
  r["triples_bijection"] = t.triples_bijective();
  r["pairs_bijection"] = t.pairs_bijective();
  return {{r}, t.triples_bijective() && t.pairs_bijective()};
}

Result cmd_verify_all(const Options& o) {
  AcceptanceConfig config;
  config.fixture_dir = o.fixtures;
  config.budget = parse_budget(o.budget);
  config.seed = o.seed;
  Result res;
  for (const CriterionResult& c : run_acceptance(config)) {
    json r;
    r["criterion"] = c.id;
    r["name"] = c.name;
    r["passed"] = c.passed;
    r["detail"] = c.detail;
    res.verified = res.verified && c.passed;
    res.records.push_back(std::move(r));
  }
  return res;
}

Result cmd_gen_complex(const Options& o) {
  Rng rng(o.seed);
  ComplexFile cf{random_complex(rng), {}, VertexId{0}};
  std::cout << emit_complex(cf);
  return {};
}

void print(const Result& res, const std::string& format) {
  for (const json& r : res.records) {
    if (format == "records") {
      std::cout << r.dump() << "\n";
      continue;
    }
    for (const auto& [key, value] : r.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group H^1 of 2-complexes and van Kampen presentations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or records (JSON lines)")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--budget", o.budget, "enumeration budget per search (e.g. 1e6)");

  struct Command {
    const char* name;
    const char* help;
    Result (*run)(const Options&);
    bool takes_file;
  };
  const Command commands[] = {
      {"validate", "parse and validate a complex file", cmd_validate, true},
      {"pi1", "edge-path presentation of pi_1(X, b)", cmd_pi1, true},
      {"homcount", "hom counts of pi_1(X, b) over a battery", cmd_homcount, true},
      {"verify-rho-epsilon", "check that rho and epsilon are inverse", cmd_rho_epsilon, true},
      {"h1", "count H^1(X, Y) classes", cmd_h1, true},
      {"h1-relative", "relative splitting for Y = {b} + extras", cmd_h1_relative, true},
      {"check-cartesian", "cartesian square for a two-set cover", cmd_check_cartesian, true},
      {"glue-amalgam", "amalgamated product presentation", cmd_glue_amalgam, true},
      {"glue-colimit", "colimit presentation over a cover", cmd_glue_colimit, true},
      {"glue-hnn", "HNN-style presentation for a disconnected intersection", cmd_glue_hnn, true},
      {"verify-triples", "triple description of H^1(X, {a, b})", cmd_verify_triples, true},
      {"verify-all", "run the acceptance suite", cmd_verify_all, false},
      {"gen-complex", "print a random connected complex", cmd_gen_complex, false},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.takes_file) sub->add_option("file", o.file, "complex file")->required();
    sub->add_option("--group", o.group, "group: Zn, Sn, 'cyclic n', 'symmetric n' or a file");
    sub->add_option("--battery", o.battery, "comma-separated groups or 'default'");
    sub->add_option("--base", o.base, "base vertex (default: the file's base line)");
    sub->add_option("--extra", o.extra, "comma-separated extra points");
    sub->add_option("--cover", o.cover, "comma-separated subcomplex names (* is the whole complex; two-set commands default to U,V)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--fixtures", o.fixtures, "fixture directory for verify-all");
    sub->add_flag("--list", o.list, "list class representatives");
    sub->add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}));
    sub->add_option("--budget", o.budget, "enumeration budget per search");
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, c] : subs) {
    if (!sub->parsed()) continue;
    try {
      const Result res = c->run(o);
      print(res, o.format);
      return res.verified ? 0 : 1;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
