#include "vkc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vkc/correspondence.hpp"
#include "vkc/error.hpp"
#include "vkc/random.hpp"
#include "vkc/relative.hpp"

namespace vkc {

std::vector<GluingEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path.string());
  std::vector<GluingEntry> out;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    GluingEntry e;
    if (!(ss >> e.file)) continue;
    if (!(ss >> e.kind) || (e.kind != "amalgam" && e.kind != "hnn" && e.kind != "colimit")) {
      fail(ErrorCode::ParseError, "line " + std::to_string(ln) + ": expected amalgam, hnn or colimit");
    }
    for (std::string s; ss >> s;) e.subs.push_back(s);
    if (e.subs.empty()) fail(ErrorCode::ParseError, "line " + std::to_string(ln) + ": no subcomplexes");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Subcomplex> resolve_subs(const ComplexFile& cf, const std::vector<std::string>& names) {
  std::vector<Subcomplex> out;
  for (const std::string& n : names) out.push_back(n == "*" ? Subcomplex::whole(cf.complex) : cf.sub(n));
  return out;
}

GluedPresentation build_entry(const ComplexFile& cf, const GluingEntry& entry) {
  if (!cf.base) fail(ErrorCode::InvalidArgument, entry.file + " has no base vertex");
  const std::vector<Subcomplex> subs = resolve_subs(cf, entry.subs);
  if (entry.kind == "colimit") return colimit_presentation(cf.complex, Cover{subs}, *cf.base);
  if (subs.size() != 2) fail(ErrorCode::InvalidArgument, entry.kind + " needs exactly two subcomplexes");
  const GluingData g = make_gluing(cf.complex, subs[0], subs[1], *cf.base);
  return entry.kind == "hnn" ? hnn_presentation(g) : amalgamated_presentation(g);
}

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

// Battery groups of order at most 6.
std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (const FiniteGroup& g : default_battery()) {
    if (g.order() <= 6) out.push_back(g);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

ComplexFile fixture(const AcceptanceConfig& cfg, const std::string& name) {
  return load_complex(cfg.fixture_dir / name);
}

GluingData split_of(const ComplexFile& cf) {
  return make_gluing(cf.complex, cf.sub("U"), cf.sub("V"), *cf.base);
}

constexpr std::size_t kDualityInstances = 60;
constexpr std::size_t kCartesianInstances = 24;
constexpr std::size_t kRelativeInstances = 24;

Outcome duality(const AcceptanceConfig& cfg) {
  Rng complexes(cfg.seed);
  Rng aux(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto groups = small_groups();
  std::size_t checked = 0, bad = 0;
  for (std::size_t i = 0; i < kDualityInstances; ++i) {
    const TwoComplex x = random_complex(complexes);
    const Pi1Data pi1 = pi1_presentation(x, 0);
    const VertexId roots[] = {0};
    const SpanningForest other = random_forest(x, roots, aux);
    for (const FiniteGroup& g : groups) {
      const auto homs = enumerate_homs(pi1.presentation, g, cfg.budget);
      const auto classes = cohomology_classes(x, {0}, g, cfg.budget);
      if (homs.size() != classes.size()) ++bad;
      for (const Homomorphism& h : homs) {
        const CohomologyClass c = epsilon(h, pi1);
        if (!std::binary_search(classes.begin(), classes.end(), c) || rho(c, pi1) != h) ++bad;
        if (!epsilon_forest_independence(h, pi1, other)) ++bad;
        ++checked;
      }
      for (const CohomologyClass& c : classes) {
        if (epsilon(rho(c, pi1), pi1) != c) ++bad;
        ++checked;
      }
    }
  }
  return {bad == 0, std::to_string(kDualityInstances) + " complexes x " + std::to_string(groups.size()) +
                        " groups, " + std::to_string(checked) + " round trips, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome short_long(const AcceptanceConfig& cfg) {
  Rng complexes(cfg.seed);
  Rng aux(cfg.seed ^ 0x5bd1e995ULL);
  const auto groups = small_groups();
  std::size_t checked = 0, bad = 0;
  for (std::size_t i = 0; i < kDualityInstances; ++i) {
    const TwoComplex x = random_complex(complexes);
    const Cover cover = random_adapted_cover(x, aux);
    const SpanningForest forest = base_forest(x, {0});
    for (const FiniteGroup& g : groups) {
      const auto classes = cohomology_classes(x, {0}, g, forest, cfg.budget);
      const auto shorts = short_classes(x, {0}, g, cover, forest, cfg.budget);
      std::vector<ShortCocycle> mapped;
      for (const CohomologyClass& c : classes) {
        ShortCocycle s = to_short(x, c.representative, cover);
        if (extend_short(x, s) != c.representative) ++bad;
        mapped.push_back(std::move(s));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped != shorts) ++bad;
      for (const ShortCocycle& s : shorts) {
        if (to_short(x, extend_short(x, s), cover) != s) ++bad;
      }
      // Non-canonical cocycles: random gauge transforms of a few classes.
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
      for (std::size_t k = 0; k < std::min<std::size_t>(classes.size(), 12); ++k) {
        ZeroCochain c = identity_cochain(x, g, {0});
        for (VertexId v = 1; v < x.vertex_count(); ++v) c.values[v] = pick(aux);
        const Cocycle z = gauge_act(x, c, classes[k].representative);
        const ShortCocycle s = to_short(x, z, cover);
        if (extend_short(x, s) != z) ++bad;
        if (class_of(x, extend_short(x, canonical_short(x, s, forest)), forest) != classes[k]) ++bad;
      }
      checked += classes.size() + shorts.size();
    }
  }
  return {bad == 0, std::to_string(kDualityInstances) + " complexes with random adapted covers, " +
                        std::to_string(checked) + " classes, " + std::to_string(bad) + " mismatches"};
}

Outcome cartesian(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 3);
  const FiniteGroup groups[] = {make_cyclic(2), make_cyclic(6), make_symmetric(3)};
  std::size_t instances = 0, bad = 0, largest = 0;
  for (std::size_t tries = 0; instances < kCartesianInstances && tries < 5000; ++tries) {
    const TwoComplex x = random_complex(rng);
    const auto split = random_split(x, 0, 1, rng, 200);
    if (!split) continue;
    const Subcomplex whole = Subcomplex::whole(x);
    if (split->u == whole || split->v == whole) continue;
    ++instances;
    for (const FiniteGroup& g : groups) {
      const CartesianReport r = check_cartesian_pair(x, split->u, split->v, {0}, g, cfg.budget);
      if (!r.bijective()) ++bad;
      largest = std::max(largest, r.total);
    }
  }
  return {bad == 0 && instances == kCartesianInstances,
          std::to_string(instances) + " proper splits x {Z2, Z6, S3}, largest |H1| " +
              std::to_string(largest) + ", " + std::to_string(bad) + " failures"};
}

// Hom counts of a built presentation against a target function of |G|.
Outcome battery_target(const GluedPresentation& gp, const std::function<std::uint64_t(std::size_t)>& target,
                       std::uint64_t budget, const std::string& label) {
  std::string detail = label + ":";
  bool ok = true;
  for (const FiniteGroup& g : default_battery()) {
    const HomBijectionReport r = check_hom_bijection(gp, g, budget);
    const bool good = r.bijective() && r.built_count == target(g.order());
    ok = ok && good;
    detail += " " + g.label() + "=" + std::to_string(r.built_count) + (good ? "" : "(!)");
  }
  return {ok, detail};
}

Outcome circle(const AcceptanceConfig& cfg) {
  const GluedPresentation gp = hnn_presentation(split_of(fixture(cfg, "circle.cx")));
  return battery_target(gp, [](std::size_t n) { return n; }, cfg.budget, "two-arc circle");
}

Outcome pseudo_wedge(const AcceptanceConfig& cfg) {
  Outcome out{true, ""};
  for (std::size_t m : {2, 3}) {
    const ComplexFile cf = fixture(cfg, "pwedge" + std::to_string(m) + ".cx");
    const Outcome o = battery_target(hnn_presentation(split_of(cf)),
                                     [m](std::size_t n) { return ipow(n, m); }, cfg.budget,
                                     "m=" + std::to_string(m));
    out.passed = out.passed && o.passed;
    out.detail += (out.detail.empty() ? "" : "; ") + o.detail;
  }
  return out;
}

Outcome torus_amalgam(const AcceptanceConfig& cfg) {
  const ComplexFile cf = fixture(cfg, "torus1.cx");
  const GluedPresentation gp = amalgamated_presentation(split_of(cf));
  const FiniteGroup s3 = make_symmetric(3);
  std::uint64_t commuting = 0;
  for (Element a = 0; a < s3.order(); ++a) {
    for (Element b = 0; b < s3.order(); ++b) commuting += s3.mul(a, b) == s3.mul(b, a) ? 1 : 0;
  }
  const std::uint64_t built = hom_count(gp.presentation, s3, cfg.budget);
  bool ok = built == 18 && commuting == 18;
  std::string detail = "S3: built " + std::to_string(built) + ", commuting pairs " + std::to_string(commuting) + ";";
  for (const FiniteGroup& g : default_battery()) {
    const std::uint64_t lhs = hom_count(gp.presentation, g, cfg.budget);
    const std::uint64_t rhs = hom_count(gp.pi1_x.presentation, g, cfg.budget);
    ok = ok && lhs == rhs && check_hom_bijection(gp, g, cfg.budget).bijective();
    detail += " " + g.label() + "=" + std::to_string(lhs) + (lhs == rhs ? "" : "/" + std::to_string(rhs));
  }
  return {ok, detail};
}

Outcome family_gluing(const AcceptanceConfig& cfg) {
  const ComplexFile cf = fixture(cfg, "wedge2.cx");
  const TwoComplex& x = cf.complex;
  const VertexId b = *cf.base;
  const std::vector<std::string> names = {"U1", "U2", "U3"};
  const std::vector<Subcomplex> subs = resolve_subs(cf, names);
  std::vector<Embedding> els;
  for (const Subcomplex& s : subs) els.push_back(extract(x, s));

  bool ok = true;
  std::string detail;
  for (const FiniteGroup& g : {make_cyclic(2), make_symmetric(3)}) {
    const auto global = cohomology_classes(x, {b}, g, cfg.budget);
    std::vector<std::vector<CohomologyClass>> local;
    for (const Embedding& e : els) local.push_back(cohomology_classes(e.complex, {e.local_vertex(b)}, g, cfg.budget));

    // Every family: compatible ones glue to a class restricting back to
    // them, in every element order; incompatible ones are rejected.
    std::size_t compatible = 0;
    std::vector<CohomologyClass> glued_all;
    for (const auto& h0 : local[0]) {
      for (const auto& h1 : local[1]) {
        for (const auto& h2 : local[2]) {
          const std::vector<CohomologyClass> fam = {h0, h1, h2};
          std::vector<std::size_t> order = {0, 1, 2};
          std::optional<CohomologyClass> first;
          bool rejected = false;
          do {
            std::vector<Subcomplex> s;
            std::vector<CohomologyClass> c;
            for (std::size_t k : order) {
              s.push_back(subs[k]);
              c.push_back(fam[k]);
            }
            const FamilyGlueResult r = glue_family_class(x, Cover{s}, c, b);
            if (!r.glued) {
              rejected = true;
              continue;
            }
            if (first && *first != *r.glued) ok = false;
            if (!first) first = r.glued;
          } while (std::next_permutation(order.begin(), order.end()));
          if (first && rejected) ok = false;  // order must not matter
          if (!first) continue;
          ++compatible;
          glued_all.push_back(*first);
          for (std::size_t k = 0; k < 3; ++k) {
            if (class_of(els[k].complex, restrict(first->representative, els[k])) != fam[k]) ok = false;
          }
        }
      }
    }
    std::sort(glued_all.begin(), glued_all.end());
    if (compatible != global.size() || glued_all != global) ok = false;
    detail += g.label() + ": " + std::to_string(compatible) + " compatible families = |H1(X,b)| " +
              std::to_string(global.size()) + "; ";
  }

  // Trivial on U1 and U2, nontrivial on the first circle inside U3.
  const FiniteGroup z2 = make_cyclic(2);
  const Embedding& e3 = els[2];
  std::vector<Element> pairs(e3.complex.edge_pair_count(), z2.identity());
  pairs[pair_of(e3.local_edge(*x.find_edge("e2")))] = 1;
  std::vector<CohomologyClass> fam;
  for (std::size_t k = 0; k < 2; ++k) {
    fam.push_back(class_of(els[k].complex, trivial_cocycle(els[k].complex, z2, {els[k].local_vertex(b)})));
  }
  fam.push_back(class_of(e3.complex, cocycle_from_pairs(e3.complex, z2, pairs, {e3.local_vertex(b)})));
  const FamilyGlueResult bad = glue_family_class(x, Cover{subs}, fam, b);
  const bool named = !bad.glued && bad.conflict && *bad.conflict == std::make_pair<std::size_t, std::size_t>(0, 2);
  ok = ok && named;
  detail += std::string("engineered family rejected") +
            (bad.conflict ? " at pair (" + std::to_string(bad.conflict->first) + ", " +
                                std::to_string(bad.conflict->second) + ")"
                          : " without a pair");
  return {ok, detail};
}

Outcome relative_split(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 8);
  RandomComplexLimits limits;
  limits.max_rank = 4;
  const FiniteGroup groups[] = {make_cyclic(2), make_cyclic(3), make_symmetric(3)};
  std::size_t instances = 0, bad = 0, checked = 0;
  while (instances < kRelativeInstances) {
    const std::size_t m = 1 + instances % 2;
    const TwoComplex x = random_complex(rng, limits);
    if (x.vertex_count() < m + 1) continue;
    ++instances;
    const BasePointFamily fam = default_family(x, 0, random_extra_points(x, 0, m, rng));
    for (const FiniteGroup& g : groups) {
      const auto rel = cohomology_classes(x, fam.base_set(), g, cfg.budget);
      const auto abs = cohomology_classes(x, {0}, g, cfg.budget);
      if (rel.size() != abs.size() * ipow(g.order(), m)) ++bad;
      for (const RelativeClass& rc : rel) {
        const auto [alpha, c] = split_f(x, rc, fam);
        if (join_g(x, alpha, c, fam) != rc) ++bad;
      }
      const std::size_t cochains = ipow(g.order(), m);
      for (const CohomologyClass& alpha : abs) {
        for (std::size_t code = 0; code < cochains; ++code) {
          YCochain c{g, {}};
          for (std::size_t k = 0, r = code; k < m; ++k, r /= g.order()) {
            c.values.push_back(static_cast<Element>(r % g.order()));
          }
          const auto [a2, c2] = split_f(x, join_g(x, alpha, c, fam), fam);
          if (a2 != alpha || c2 != c) ++bad;
        }
      }
      checked += rel.size();
    }
  }
  return {bad == 0, std::to_string(instances) + " instances (m = 1, 2) x {Z2, Z3, S3}, " +
                        std::to_string(checked) + " relative classes, " + std::to_string(bad) +
                        " failures"};
}

Outcome triples(const AcceptanceConfig& cfg) {
  const GluingData g = split_of(fixture(cfg, "circle.cx"));
  bool ok = true;
  std::string detail;
  for (const FiniteGroup& grp : {make_cyclic(2), make_symmetric(3)}) {
    const TripleReport r = verify_triple_description(g, grp, cfg.budget);
    ok = ok && r.triples_bijective() && r.pairs_bijective();
    detail += (detail.empty() ? "" : "; ") + grp.label() + ": " + std::to_string(r.triples) + " triples / " +
              std::to_string(r.relative_classes) + " classes, " + std::to_string(r.orbits) +
              " orbits / " + std::to_string(r.pairs) + " pairs / " +
              std::to_string(r.absolute_classes) + " classes" +
              (r.product_invariant ? ", h k^-1 invariant" : ", h k^-1 NOT invariant");
  }
  return {ok, detail};
}

Outcome cross_validation(const AcceptanceConfig& cfg) {
  const auto entries = load_manifest(cfg.fixture_dir / "gluings.txt");
  std::size_t compared = 0, skipped = 0, bad = 0;
  std::string failures;
  for (const GluingEntry& e : entries) {
    const GluedPresentation gp = build_entry(fixture(cfg, e.file), e);
    for (const FiniteGroup& g : default_battery()) {
      try {
        const HomBijectionReport r = check_hom_bijection(gp, g, cfg.budget);
        ++compared;
        if (!r.bijective()) {
          ++bad;
          failures += " " + e.file + "/" + e.kind + "/" + g.label();
        }
      } catch (const Error& err) {
        if (err.code() != ErrorCode::BudgetExceeded) throw;
        ++skipped;
      }
    }
  }
  return {bad == 0 && compared > 0,
          std::to_string(entries.size()) + " gluings, " + std::to_string(compared) +
              " comparisons, " + std::to_string(skipped) + " over budget, " + std::to_string(bad) +
              " mismatches" + failures};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  Outcome (*run)(const AcceptanceConfig&);
};

constexpr Criterion kCriteria[] = {
    {1, "rho/epsilon duality", 60, duality},
    {2, "short/long bijection", 30, short_long},
    {3, "cartesian square", 60, cartesian},
    {4, "circle is free of rank 1", 0, circle},
    {5, "pseudo-wedge is free of rank m", 0, pseudo_wedge},
    {6, "torus amalgam", 0, torus_amalgam},
    {7, "family gluing", 0, family_gluing},
    {8, "relative splitting", 60, relative_split},
    {9, "triple description", 0, triples},
    {10, "cross-validation of gluings", 0, cross_validation},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : kCriteria) {
    CriterionResult r{c.id, c.name, false, 0, c.limit, ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(config);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && r.seconds > c.limit) {
      r.passed = false;
      r.detail += " (time limit exceeded)";
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "(%.2f s, limit %.0f s)", r.seconds, r.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "(%.2f s)", r.seconds);
  }
  return std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + ": " +
         r.detail + " " + timing;
}

}  // namespace vkc
