#include <gtest/gtest.h>

#include "support.hpp"
#include "vkc/cochain.hpp"
#include "vkc/error.hpp"

namespace vkc {
namespace {

using test::code_of;
using test::pick;

/// Y = {0} plus a random selection of other vertices.
BaseSet random_base(const TwoComplex& x, Rng& rng) {
  std::vector<VertexId> y{0};
  for (VertexId v = 1; v < x.vertex_count(); ++v) {
    if (pick(rng, 0, 2) == 0) y.push_back(v);
  }
  return make_base_set(y);
}

TEST(CocycleTest, ValidationCatchesBadAssignments) {
  TwoComplex x;
  const VertexId o = x.add_vertex("o");
  const EdgeId a = x.add_edge("a", o, o);
  x.add_cell("D", {a, a});
  const FiniteGroup z3 = make_cyclic(3);
  // a^2 = 1 forces a = 0 in Z3.
  EXPECT_EQ(code_of([&] { make_cocycle(x, z3, {1, 2}, {0}); }), ErrorCode::NotACocycle);
  // Not inverse on the reversed edge.
  EXPECT_FALSE(validate_cocycle(x, z3, {0, 1}, {0}).ok());
  EXPECT_TRUE(validate_cocycle(x, z3, {0, 0}, {0}).ok());
  EXPECT_EQ(code_of([&] { make_zero_cochain(x, z3, {1}, {0}); }), ErrorCode::InvalidArgument);
}

TEST(CocycleTest, EnumerationMatchesBruteForce) {
  Rng rng(31);
  const auto groups = test::small_groups();
  for (int trial = 0; trial < 60; ++trial) {
    const TwoComplex x = random_complex(rng, test::tiny_limits());
    const FiniteGroup& g = groups[pick(rng, 0, groups.size() - 1)];
    std::set<std::vector<Element>> expected;
    for (auto& v : test::brute_cocycles(x, g)) expected.insert(v);
    std::set<std::vector<Element>> got;
    for (const Cocycle& u : enumerate_cocycles(x, {0}, g)) got.insert(u.values());
    EXPECT_EQ(got, expected);
  }
}

TEST(CohomologyTest, ClassCountMatchesOrbitOracle) {
  Rng rng(32);
  const auto groups = test::small_groups();
  for (int trial = 0; trial < 80; ++trial) {
    const TwoComplex x = random_complex(rng, test::tiny_limits());
    const BaseSet y = random_base(x, rng);
    const FiniteGroup& g = groups[pick(rng, 0, groups.size() - 1)];
    const auto orbits = test::brute_orbits(x, g, y);
    const auto classes = cohomology_classes(x, y, g);
    ASSERT_EQ(classes.size(), orbits.size()) << "trial " << trial << " |Y| = " << y.size();
    EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end()));
    // Distinct classes must be in distinct brute-force orbits.
    const auto gauges = test::brute_gauges(x, g, y);
    std::set<std::vector<Element>> labels;
    for (const auto& c : classes) {
      std::vector<Element> least = c.representative.values();
      for (const auto& gauge : gauges) least = std::min(least, test::brute_act(x, g, gauge, c.representative.values()));
      labels.insert(least);
    }
    EXPECT_EQ(labels, orbits);
  }
}

TEST(CohomologyTest, CanonicalFormIsGaugeInvariant) {
  Rng rng(33);
  const auto groups = test::small_groups();
  for (int trial = 0; trial < 150; ++trial) {
    const TwoComplex x = random_complex(rng);
    const BaseSet y = random_base(x, rng);
    const FiniteGroup& g = groups[pick(rng, 0, groups.size() - 1)];
    const Cocycle u = test::random_cocycle(x, g, y, rng);
    const ZeroCochain c = test::random_gauge(x, g, y, rng);
    const SpanningForest forest = base_forest(x, y);
    const Cocycle cu = gauge_act(x, c, u);
    const Cocycle canon = canonical_form(x, u, forest);
    EXPECT_EQ(canonical_form(x, cu, forest), canon);
    EXPECT_EQ(canonical_form(x, canon, forest), canon);
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
      if (forest.is_tree_edge(e)) EXPECT_EQ(canon[e], g.identity());
    }
    EXPECT_TRUE(gauge_equivalent(x, u, cu));
  }
}

TEST(CohomologyTest, GaugeActionIsAnAction) {
  Rng rng(34);
  const FiniteGroup g = make_symmetric(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoComplex x = random_complex(rng);
    const BaseSet y{0};
    const Cocycle u = test::random_cocycle(x, g, y, rng);
    const ZeroCochain c = test::random_gauge(x, g, y, rng), d = test::random_gauge(x, g, y, rng);
    EXPECT_EQ(gauge_act(x, multiply(c, d), u), gauge_act(x, c, gauge_act(x, d, u)));
    EXPECT_EQ(gauge_act(x, invert(c), gauge_act(x, c, u)), u);
    EXPECT_EQ(gauge_act(x, c, u).values(), test::brute_act(x, g, c.values, u.values()));
  }
}

TEST(CohomologyTest, GaugeBetweenSolvesTheGaugeEquation) {
  Rng rng(35);
  const auto groups = test::small_groups();
  for (int trial = 0; trial < 80; ++trial) {
    const TwoComplex x = random_complex(rng, test::tiny_limits());
    const BaseSet y = random_base(x, rng);
    const FiniteGroup& g = groups[pick(rng, 0, groups.size() - 1)];
    const SpanningForest forest = base_forest(x, y);
    const Cocycle v = test::random_cocycle(x, g, y, rng);
    const Cocycle w = test::random_cocycle(x, g, y, rng);

    // Oracle: search every gauge.
    bool related = false;
    for (const auto& c : test::brute_gauges(x, g, y)) related = related || test::brute_act(x, g, c, v.values()) == w.values();

    const auto c = gauge_between(x, v, w, forest);
    EXPECT_EQ(c.has_value(), related);
    if (c) EXPECT_EQ(gauge_act(x, *c, v), w);

    const ZeroCochain d = test::random_gauge(x, g, y, rng);
    const auto back = gauge_between(x, v, gauge_act(x, d, v), forest);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(gauge_act(x, *back, v), gauge_act(x, d, v));
  }
}

TEST(CohomologyTest, MismatchedGroupsAndBases) {
  TwoComplex x;
  const VertexId a = x.add_vertex("a"), b = x.add_vertex("b");
  x.add_edge("e", a, b);
  const Cocycle u = trivial_cocycle(x, make_cyclic(2), {0});
  EXPECT_EQ(code_of([&] { gauge_act(x, identity_cochain(x, make_cyclic(3), {0}), u); }), ErrorCode::GroupMismatch);
  EXPECT_EQ(code_of([&] { gauge_act(x, identity_cochain(x, u.group(), {0, 1}), u); }), ErrorCode::BaseMismatch);
  const std::vector<VertexId> roots{1};
  EXPECT_EQ(code_of([&] { canonical_form(x, u, spanning_forest(x, roots)); }), ErrorCode::RootNotInBaseSet);
}

TEST(CohomologyTest, DisconnectedComplexNeedsBasePointEverywhere) {
  TwoComplex x;
  x.add_vertex("a");
  x.add_vertex("b");
  EXPECT_EQ(code_of([&] { base_forest(x, {0}); }), ErrorCode::BaseSetMissesComponent);
  EXPECT_EQ(cohomology_classes(x, {0, 1}, make_cyclic(5)).size(), 1u);
}

TEST(CohomologyTest, RestrictionFollowsEmbedding) {
  Rng rng(36);
  const FiniteGroup g = make_symmetric(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TwoComplex x = random_complex(rng);
    const Cocycle u = test::random_cocycle(x, g, {0}, rng);
    const Cover cover = random_adapted_cover(x, rng, 3);
    const Embedding a = extract(x, cover.elements.front());
    const Cocycle r = restrict(u, a);
    for (EdgeId e = 0; e < a.complex.edge_count(); ++e) EXPECT_EQ(r[e], u[a.edge_to_parent[e]]);
    EXPECT_EQ(lift(r.base(), a), a.members.has_vertex(0) ? BaseSet{0} : BaseSet{});
  }
}

TEST(ShortCocycleTest, RoundTripAndEvaluation) {
  Rng rng(37);
  const auto groups = test::small_groups();
  for (int trial = 0; trial < 150; ++trial) {
    const TwoComplex x = random_complex(rng);
    const FiniteGroup& g = groups[pick(rng, 0, groups.size() - 1)];
    const Cocycle u = test::random_cocycle(x, g, {0}, rng);
    const Cover cover = random_adapted_cover(x, rng);
    const ShortCocycle s = to_short(x, u, cover);
    EXPECT_EQ(extend_short(x, s), u);
    for (int k = 0; k < 5; ++k) {
      const EdgePath p = test::random_path(x, static_cast<VertexId>(pick(rng, 0, x.vertex_count() - 1)), 8, rng);
      EXPECT_EQ(evaluate_short(x, s, p), evaluate(u, p));
    }
    const ZeroCochain c = test::random_gauge(x, g, {0}, rng);
    EXPECT_EQ(extend_short(x, gauge_act_short(x, c, s)), gauge_act(x, c, u));
    const SpanningForest forest = base_forest(x, {0});
    EXPECT_EQ(extend_short(x, canonical_short(x, s, forest)), canonical_form(x, u, forest));
  }
}

TEST(ShortCocycleTest, ShortClassesMatchLongClasses) {
  Rng rng(38);
  const auto groups = test::small_groups();
  for (int trial = 0; trial < 60; ++trial) {
    const TwoComplex x = random_complex(rng, test::tiny_limits());
    const FiniteGroup& g = groups[pick(rng, 0, groups.size() - 1)];
    const Cover cover = random_adapted_cover(x, rng);
    const SpanningForest forest = base_forest(x, {0});
    const auto shorts = short_classes(x, {0}, g, cover, forest);
    std::vector<CohomologyClass> extended;
    for (const auto& s : shorts) extended.push_back({extend_short(x, s)});
    std::sort(extended.begin(), extended.end());
    EXPECT_EQ(extended, cohomology_classes(x, {0}, g, forest));
  }
}

TEST(ShortCocycleTest, OverlapDisagreementIsRejected) {
  TwoComplex x;
  const VertexId a = x.add_vertex("a"), b = x.add_vertex("b");
  const EdgeId e = x.add_edge("e", a, b);
  Cover cover;
  const std::vector<EdgeId> edges{e};
  cover.elements.push_back(Subcomplex::closure(x, {}, edges, {}));
  cover.elements.push_back(cover.elements.front());
  const FiniteGroup z2 = make_cyclic(2);
  std::vector<Embedding> parts{extract(x, cover.elements[0]), extract(x, cover.elements[1])};
  const std::vector<Element> one{1}, zero{0};
  std::vector<Cocycle> pieces{cocycle_from_pairs(parts[0].complex, z2, one, {0}),
                              cocycle_from_pairs(parts[1].complex, z2, zero, {0})};
  EXPECT_EQ(code_of([&] { make_short(x, cover, pieces, {0}); }), ErrorCode::InconsistentOverlap);
  EXPECT_EQ(code_of([&] { make_short(x, Cover{{Subcomplex::empty(x)}}, {pieces[0]}, {0}); }),
            ErrorCode::NotAdapted);
}

}  // namespace
}  // namespace vkc
