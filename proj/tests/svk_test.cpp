#include <gtest/gtest.h>

#include "support.hpp"
#include "vkc/correspondence.hpp"
#include "vkc/error.hpp"
#include "vkc/io.hpp"
#include "vkc/svk.hpp"

namespace vkc {
namespace {

using test::code_of;
using test::pick;

ComplexFile fixture(const std::string& name) { return load_complex(std::string(VKC_FIXTURE_DIR) + "/" + name); }

GluingData gluing(const ComplexFile& cf, const std::string& u = "U", const std::string& v = "V") {
  return make_gluing(cf.complex, cf.sub(u), cf.sub(v), *cf.base);
}

TEST(GluingTest, HypothesesAreChecked) {
  const auto circle = fixture("circle.cx");
  const TwoComplex& x = circle.complex;
  const Subcomplex& u = circle.sub("U");
  const Subcomplex& v = circle.sub("V");
  // U alone does not cover X.
  EXPECT_EQ(code_of([&] { make_gluing(x, u, u, 0); }), ErrorCode::HypothesisViolation);
  // Two bare points are not connected.
  Subcomplex points = Subcomplex::empty(x);
  points.add_vertex(0);
  points.add_vertex(1);
  EXPECT_EQ(code_of([&] { make_gluing(x, points, Subcomplex::whole(x), 0); }), ErrorCode::HypothesisViolation);
  // Wrong number of extra points.
  EXPECT_EQ(code_of([&] { make_gluing(x, u, v, 0, {0, 1}); }), ErrorCode::HypothesisViolation);
  // A connector that leaves U, and one that stops short.
  const EdgePath through_v = make_path(x, 0, {reverse_edge(*x.find_edge("f"))});
  EXPECT_EQ(code_of([&] { make_gluing(x, u, v, 0, {1}, {through_v}, {through_v}); }),
            ErrorCode::HypothesisViolation);
  const EdgePath stay{0, {}};
  EXPECT_EQ(code_of([&] { make_gluing(x, u, v, 0, {1}, {stay}, {through_v}); }), ErrorCode::EndpointMismatch);

  const GluingData g = make_gluing(x, u, v, 0);
  EXPECT_EQ(g.extra_count(), 1u);
  EXPECT_EQ(g.points, (std::vector<VertexId>{0, 1}));
  EXPECT_TRUE(g.p_paths[0].is_constant());
  EXPECT_TRUE(u.contains_path(x, g.p_paths[1]));
  EXPECT_TRUE(v.contains_path(x, g.q_paths[1]));
}

TEST(GluingTest, WrongShapeForEachConstruction) {
  const auto circle = fixture("circle.cx");
  const auto torus = fixture("torus1.cx");
  const auto pwedge3 = fixture("pwedge3.cx");
  EXPECT_EQ(code_of([&] { amalgamated_presentation(gluing(circle)); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([&] { build_double(gluing(torus)); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([&] { verify_triple_description(gluing(pwedge3), make_cyclic(2)); }),
            ErrorCode::HypothesisViolation);
}

TEST(DoubledSpaceTest, FoldMapIsCellular) {
  for (const char* name : {"circle.cx", "pwedge2.cx", "pwedge2loop.cx", "pwedge3.cx"}) {
    const auto cf = fixture(name);
    const GluingData g = gluing(cf);
    const DoubledSpace d = build_double(g);
    const TwoComplex& c = d.complex;
    EXPECT_TRUE(validate_complex(c).empty()) << name;
    EXPECT_TRUE(is_connected(c)) << name;
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      const EdgeId s = d.sigma_edge[e];
      EXPECT_EQ(d.sigma_vertex[c.src(e)], cf.complex.src(s)) << name;
      EXPECT_EQ(d.sigma_edge[reverse_edge(e)], reverse_edge(s)) << name;
    }
    for (CellId k = 0; k < c.cell_count(); ++k) {
      for (EdgeId e : c.boundary(k)) EXPECT_TRUE(d.sigma_edge[e] < cf.complex.edge_count());
    }
    // Every cell of X has a preimage through V or through U'.
    EXPECT_GE(c.cell_count(), cf.complex.cell_count()) << name;
    EXPECT_EQ(d.iota.size(), g.extra_count()) << name;
    EXPECT_EQ(d.u_image.unite(d.v_image), Subcomplex::whole(c)) << name;
  }
}

TEST(DoubledSpaceTest, PathsLiftAndFold) {
  Rng rng(61);
  for (const char* name : {"pwedge2.cx", "pwedge2loop.cx", "pwedge3.cx"}) {
    const auto cf = fixture(name);
    const GluingData g = gluing(cf);
    const DoubledSpace d = build_double(g);
    const Embedding u = extract(cf.complex, g.u), v = extract(cf.complex, g.v);
    for (int trial = 0; trial < 50; ++trial) {
      const EdgePath pu = u.to_parent(test::random_path(u.complex, u.local_vertex(g.base()), 6, rng));
      const EdgePath lifted = d.via_u(pu);
      EXPECT_TRUE(d.u_image.contains_path(d.complex, lifted));
      EXPECT_EQ(d.fold(lifted), pu);
      const EdgePath pv = v.to_parent(test::random_path(v.complex, v.local_vertex(g.base()), 6, rng));
      EXPECT_TRUE(d.v_image.contains_path(d.complex, d.via_v(pv)));
      EXPECT_EQ(d.fold(d.via_v(pv)), pv);
    }
  }
}

TEST(DoubledSpaceTest, CircleDoublesToATree) {
  const auto circle = fixture("circle.cx");
  const GluingData g = gluing(circle);
  const DoubledSpace d = build_double(g);
  const Pi1Data pi = pi1_presentation(d.complex, d.from_v_vertex[g.base()]);
  EXPECT_EQ(pi.presentation.rank(), 0u);
  const GluedPresentation hnn = hnn_presentation(g);
  ASSERT_EQ(hnn.presentation.rank(), 1u);
  EXPECT_EQ(hnn.presentation.generators().front(), "t1");
  for (const auto& grp : default_battery()) EXPECT_EQ(hom_count(hnn.presentation, grp), grp.order());
}

TEST(DoubledSpaceTest, LoopOnOneSideSurvives) {
  const auto cf = fixture("pwedge2loop.cx");
  const GluingData g = gluing(cf);
  const GluedPresentation hnn = hnn_presentation(g);
  for (const auto& grp : default_battery()) {
    const HomBijectionReport r = check_hom_bijection(hnn, grp);
    EXPECT_TRUE(r.bijective()) << grp.label();
    // pi_1 is free of rank 3: the loop and two cycles through the stars.
    EXPECT_EQ(r.pi1_count, saturating_pow(grp.order(), 3)) << grp.label();
  }
}

TEST(CartesianTest, RandomSplitsWithZ3AndZ4) {
  Rng rng(62);
  RandomComplexLimits limits;
  limits.max_rank = 4;
  const FiniteGroup groups[] = {make_cyclic(3), make_cyclic(4)};
  int checked = 0;
  while (checked < 16) {
    const TwoComplex x = random_complex(rng, limits);
    const std::size_t want = pick(rng, 1, 2);
    const auto split = random_split(x, 0, want, rng, 200);
    if (!split) continue;
    const Subcomplex w = split->u.intersect(split->v);
    std::vector<VertexId> y;
    for (const auto& comp : components(x, w)) {
      y.push_back(std::find(comp.begin(), comp.end(), VertexId{0}) != comp.end() ? 0 : comp.front());
    }
    const FiniteGroup& g = groups[checked % 2];
    const CartesianReport r = check_cartesian_pair(x, split->u, split->v, make_base_set(y), g);
    EXPECT_TRUE(r.bijective()) << "split " << checked << ": " << r.total << " vs " << r.fibered;
    ++checked;
  }
}

TEST(CartesianTest, GluePairRestrictsBack) {
  const auto cf = fixture("torus22.cx");
  const TwoComplex& x = cf.complex;
  const Subcomplex& u = cf.sub("U");
  const Subcomplex& v = cf.sub("V");
  const Subcomplex w = u.intersect(v);
  const Embedding eu = extract(x, u), ev = extract(x, v), ew = extract(x, w);
  std::vector<VertexId> y;
  for (const auto& comp : components(x, w)) y.push_back(comp.front());
  const BaseSet base = make_base_set(y);
  const FiniteGroup s3 = make_symmetric(3);
  std::size_t glued = 0;
  for (const auto& cu : cohomology_classes(eu.complex, restrict(base, eu), s3)) {
    for (const auto& cv : cohomology_classes(ev.complex, restrict(base, ev), s3)) {
      const auto z = glue_pair(x, eu, ev, ew, cu.representative, cv.representative, base);
      const bool agree = class_of(ew.complex, restrict_between(cu.representative, eu, ew)) ==
                         class_of(ew.complex, restrict_between(cv.representative, ev, ew));
      EXPECT_EQ(z.has_value(), agree);
      if (!z) continue;
      ++glued;
      EXPECT_EQ(class_of(eu.complex, restrict(*z, eu)), cu);
      EXPECT_EQ(class_of(ev.complex, restrict(*z, ev)), cv);
    }
  }
  EXPECT_EQ(glued, cohomology_classes(x, base, s3).size());
  EXPECT_EQ(glued, 108u);
}

TEST(FamilyTest, WedgeOfThreeCirclesWithZ3) {
  const auto cf = fixture("wedge3.cx");
  const TwoComplex& x = cf.complex;
  const std::vector<Subcomplex> subs{cf.sub("U1"), cf.sub("U2"), cf.sub("U3")};
  const FiniteGroup z3 = make_cyclic(3);
  check_family_hypotheses(x, Cover{subs}, 0);
  std::vector<Embedding> els;
  std::vector<std::vector<CohomologyClass>> local;
  for (const auto& s : subs) {
    els.push_back(extract(x, s));
    local.push_back(cohomology_classes(els.back().complex, {els.back().local_vertex(0)}, z3));
  }
  std::set<CohomologyClass> seen;
  for (const auto& a : local[0]) {
    for (const auto& b : local[1]) {
      for (const auto& c : local[2]) {
        const std::vector<CohomologyClass> fam{a, b, c};
        const FamilyGlueResult r = glue_family_class(x, Cover{subs}, fam, 0);
        ASSERT_TRUE(r.glued.has_value());
        for (std::size_t k = 0; k < 3; ++k) {
          EXPECT_EQ(class_of(els[k].complex, restrict(r.glued->representative, els[k])), fam[k]);
        }
        // Reversed cover order gives the same class.
        const std::vector<Subcomplex> rsubs{subs[2], subs[1], subs[0]};
        const std::vector<CohomologyClass> rfam{c, b, a};
        EXPECT_EQ(glue_family_class(x, Cover{rsubs}, rfam, 0).glued, r.glued);
        seen.insert(*r.glued);
      }
    }
  }
  EXPECT_EQ(seen.size(), 27u);
}

TEST(FamilyTest, ConflictNamesThePair) {
  const auto cf = fixture("wedge2.cx");
  const TwoComplex& x = cf.complex;
  const VertexId o = *cf.base;
  const FiniteGroup z3 = make_cyclic(3);
  // Order U3, U2, U1: U3 carries a nontrivial value on the first triangle,
  // U1 (the first triangle) is trivial, U2 is trivial.
  const std::vector<Subcomplex> subs{cf.sub("U3"), cf.sub("U2"), cf.sub("U1")};
  std::vector<CohomologyClass> fam;
  for (std::size_t k = 0; k < 3; ++k) {
    const Embedding e = extract(x, subs[k]);
    std::vector<Element> pairs(e.complex.edge_pair_count(), z3.identity());
    if (k == 0) pairs[pair_of(e.local_edge(*x.find_edge("e2")))] = 1;
    fam.push_back(class_of(e.complex, cocycle_from_pairs(e.complex, z3, pairs, {e.local_vertex(o)})));
  }
  const FamilyGlueResult r = glue_family_class(x, Cover{subs}, fam, o);
  EXPECT_FALSE(r.glued.has_value());
  ASSERT_TRUE(r.conflict.has_value());
  EXPECT_EQ(*r.conflict, (std::pair<std::size_t, std::size_t>{0, 2}));
}

TEST(FamilyTest, HypothesisFailures) {
  const auto cf = fixture("circle.cx");
  const TwoComplex& x = cf.complex;
  // U n V is two points.
  EXPECT_EQ(code_of([&] { check_family_hypotheses(x, Cover{{cf.sub("U"), cf.sub("V")}}, 0); }),
            ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([&] { check_family_hypotheses(x, Cover{{cf.sub("U")}}, 0); }), ErrorCode::NotAdapted);
}

TEST(PresentationGlueTest, ColimitsOfSurfaces) {
  for (const char* name : {"klein.cx", "rp2.cx", "disk.cx"}) {
    const auto cf = fixture(name);
    const Cover whole{{Subcomplex::whole(cf.complex)}};
    const GluedPresentation p = colimit_presentation(cf.complex, whole, *cf.base);
    for (const auto& g : default_battery()) {
      EXPECT_TRUE(check_hom_bijection(p, g).bijective()) << name << " " << g.label();
    }
  }
  const auto wedge = fixture("wedge3.cx");
  const GluedPresentation p = colimit_presentation(
      wedge.complex, Cover{{wedge.sub("U1"), wedge.sub("U2"), wedge.sub("U3")}}, 0);
  EXPECT_EQ(p.presentation.rank(), 3u);
  EXPECT_EQ(hom_count(p.presentation, make_symmetric(3)), 216u);
}

TEST(PresentationGlueTest, AmalgamOverAnnulus) {
  const auto cf = fixture("torus22.cx");
  const GluedPresentation p = amalgamated_presentation(gluing(cf, "Ua", "V"));
  for (const auto& g : {make_cyclic(2), make_cyclic(3), make_symmetric(3)}) {
    const HomBijectionReport r = check_hom_bijection(p, g);
    EXPECT_TRUE(r.bijective()) << g.label();
  }
  EXPECT_EQ(check_hom_bijection(p, make_symmetric(3)).pi1_count, 18u);
}

TEST(TripleTest, TrivialGroupHasOneOfEverything) {
  const auto cf = fixture("circle.cx");
  const TripleReport r = verify_triple_description(gluing(cf), make_cyclic(1));
  EXPECT_EQ(r.triples, 1u);
  EXPECT_EQ(r.pairs, 1u);
  EXPECT_EQ(r.orbits, 1u);
  EXPECT_TRUE(r.triples_bijective());
  EXPECT_TRUE(r.pairs_bijective());
}

TEST(TripleTest, CircleCountsWithCyclicGroups) {
  const auto cf = fixture("circle.cx");
  for (std::size_t n = 2; n <= 5; ++n) {
    const TripleReport r = verify_triple_description(gluing(cf), make_cyclic(n));
    // H^1(circle, {a, b}) = G x G and H^1(circle, a) = G.
    EXPECT_EQ(r.relative_classes, n * n);
    EXPECT_EQ(r.absolute_classes, n);
    EXPECT_TRUE(r.triples_bijective()) << n;
    EXPECT_TRUE(r.pairs_bijective()) << n;
  }
}

}  // namespace
}  // namespace vkc
