#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "vkc/complex.hpp"
#include "vkc/error.hpp"

namespace vkc {
namespace {

using test::code_of;
using test::pick;

/// Union-find labels, renumbered by least member.
std::vector<std::vector<VertexId>> union_find_components(const TwoComplex& x, const Subcomplex& s) {
  std::vector<VertexId> parent(x.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (s.has_edge(e)) parent[find(x.src(e))] = find(x.tgt(e));
  }
  std::map<VertexId, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (s.has_vertex(v)) groups[find(v)].push_back(v);
  }
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

Subcomplex random_subcomplex(const TwoComplex& x, Rng& rng) {
  Subcomplex s = Subcomplex::empty(x);
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (pick(rng, 0, 1)) s.add_vertex(v);
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (pick(rng, 0, 2) == 0) s.add_edge(x, e);
  }
  for (CellId c = 0; c < x.cell_count(); ++c) {
    if (pick(rng, 0, 3) == 0) s.add_cell(x, c);
  }
  return s;
}

TwoComplex triangle() {
  TwoComplex x;
  const VertexId a = x.add_vertex("a"), b = x.add_vertex("b"), c = x.add_vertex("c");
  const EdgeId e = x.add_edge("e", a, b), f = x.add_edge("f", b, c), g = x.add_edge("g", c, a);
  x.add_cell("D", {e, f, g});
  return x;
}

TEST(TwoComplexTest, EdgeNamesAndLookup) {
  const TwoComplex x = triangle();
  EXPECT_EQ(x.edge_name(0), "e");
  EXPECT_EQ(x.edge_name(1), "e'");
  EXPECT_EQ(x.find_edge("~f"), std::optional<EdgeId>(3));
  EXPECT_EQ(x.find_edge("f'"), std::optional<EdgeId>(3));
  EXPECT_FALSE(x.find_edge("h").has_value());
  EXPECT_EQ(x.src(1), x.tgt(0));
  EXPECT_TRUE(validate_complex(x).empty());
}

TEST(TwoComplexTest, ValidationFindsOpenBoundary) {
  TwoComplex x;
  const VertexId a = x.add_vertex("a"), b = x.add_vertex("b");
  const EdgeId e = x.add_edge("e", a, b);
  x.add_cell("D", {e});
  EXPECT_FALSE(validate_complex(x).empty());
}

TEST(TwoComplexTest, RandomComplexesAreValidAndConnected) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    EXPECT_TRUE(validate_complex(x).empty());
    EXPECT_TRUE(is_connected(x));
    EXPECT_LE(x.edge_pair_count() + 1, x.vertex_count() + 6);
  }
}

TEST(PathTest, ConcatAndReverse) {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    const EdgePath p = test::random_path(x, 0, 6, rng);
    const EdgePath q = test::random_path(x, p.end(x), 6, rng);
    ASSERT_TRUE(is_composable(x, p));
    const EdgePath pq = concat(x, p, q);
    EXPECT_EQ(pq.letters.size(), p.letters.size() + q.letters.size());
    EXPECT_EQ(pq.end(x), q.end(x));
    EXPECT_EQ(reverse(x, reverse(x, pq)), pq);
    EXPECT_EQ(reverse(x, pq).end(x), pq.start);
  }
}

TEST(PathTest, RejectsBrokenPaths) {
  const TwoComplex x = triangle();
  EXPECT_EQ(code_of([&] { make_path(x, 0, {0, 0}); }), ErrorCode::NotComposable);
  EXPECT_EQ(code_of([&] { make_path(x, 1, {0}); }), ErrorCode::NotComposable);
  EXPECT_NO_THROW(make_path(x, 0, {0, 2, 4}));
}

TEST(SubcomplexTest, ComponentsMatchUnionFind) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const TwoComplex x = random_complex(rng);
    const Subcomplex s = random_subcomplex(x, rng);
    ASSERT_TRUE(s.is_closed(x));
    EXPECT_EQ(components(x, s), union_find_components(x, s));
    EXPECT_EQ(is_connected(x, s), union_find_components(x, s).size() == 1);
    for (const Subcomplex& part : component_subcomplexes(x, s)) {
      EXPECT_TRUE(part.is_closed(x));
      EXPECT_TRUE(s.contains(part));
      EXPECT_TRUE(is_connected(x, part));
    }
  }
}

TEST(SubcomplexTest, LatticeLaws) {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    const Subcomplex a = random_subcomplex(x, rng), b = random_subcomplex(x, rng);
    const Subcomplex meet = a.intersect(b), join = a.unite(b);
    EXPECT_TRUE(meet.is_closed(x));
    EXPECT_TRUE(join.is_closed(x));
    EXPECT_TRUE(a.contains(meet) && b.contains(meet));
    EXPECT_TRUE(join.contains(a) && join.contains(b));
    EXPECT_EQ(a.intersect(join), a);
    EXPECT_TRUE(Subcomplex::whole(x).contains(join));
  }
}

TEST(SubcomplexTest, ClosureAddsBoundary) {
  const TwoComplex x = triangle();
  const std::vector<CellId> cells{0};
  const Subcomplex s = Subcomplex::closure(x, {}, {}, cells);
  EXPECT_EQ(s, Subcomplex::whole(x));
  const std::vector<EdgeId> edges{3};
  const Subcomplex t = Subcomplex::closure(x, {}, edges, {});
  EXPECT_EQ(t.vertices(), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(t.edges(), (std::vector<EdgeId>{2}));
}

TEST(SubcomplexTest, ExtractRoundTrip) {
  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    const Subcomplex s = random_subcomplex(x, rng);
    const Embedding emb = extract(x, s);
    EXPECT_EQ(emb.complex.vertex_count(), s.vertex_count());
    EXPECT_TRUE(validate_complex(emb.complex).empty());
    for (EdgeId e = 0; e < emb.complex.edge_count(); ++e) {
      const EdgeId pe = emb.edge_to_parent[e];
      EXPECT_EQ(emb.local_edge(pe), e);
      EXPECT_EQ(emb.vertex_to_parent[emb.complex.src(e)], x.src(pe));
    }
    if (emb.complex.vertex_count() == 0) continue;
    const EdgePath local = test::random_path(emb.complex, 0, 5, rng);
    const EdgePath parent = emb.to_parent(local);
    EXPECT_TRUE(s.contains_path(x, parent));
    EXPECT_EQ(emb.to_local(parent), local);
  }
}

TEST(ForestTest, SpanningForestShape) {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    const std::vector<VertexId> roots{0};
    const SpanningForest f = spanning_forest(x, roots);
    ASSERT_TRUE(f.covers_all());
    std::size_t tree_pairs = 0;
    for (EdgeId e = 0; e < x.edge_count(); e += 2) tree_pairs += f.is_tree_edge(e);
    EXPECT_EQ(tree_pairs, x.vertex_count() - 1);
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
      const EdgePath p = f.tree_path(x, v);
      EXPECT_EQ(p.start, 0u);
      EXPECT_EQ(p.end(x), v);
      for (EdgeId e : p.letters) EXPECT_TRUE(f.is_tree_edge(e) && f.is_tree_edge(reverse_edge(e)));
    }
  }
}

TEST(ForestTest, RootCountsAreEnforced) {
  const TwoComplex x = triangle();
  const std::vector<VertexId> two{0, 2};
  EXPECT_EQ(code_of([&] { spanning_forest(x, two); }), ErrorCode::RootCountMismatch);
  const SpanningForest f = rooted_forest(x, two);
  EXPECT_EQ(f.root_of(2), 2u);
  EXPECT_EQ(f.root_of(1) == 0 || f.root_of(1) == 2, true);
}

TEST(ForestTest, RandomForestsAreForests) {
  Rng rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    std::vector<VertexId> roots{0};
    if (x.vertex_count() > 2 && pick(rng, 0, 1)) roots.push_back(static_cast<VertexId>(x.vertex_count() - 1));
    const SpanningForest f = random_forest(x, roots, rng);
    ASSERT_TRUE(f.covers_all());
    std::size_t tree_pairs = 0;
    for (EdgeId e = 0; e < x.edge_count(); e += 2) tree_pairs += f.is_tree_edge(e);
    EXPECT_EQ(tree_pairs, x.vertex_count() - roots.size());
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
      EXPECT_EQ(f.tree_path(x, v).start, f.root_of(v));
      EXPECT_EQ(f.tree_path(x, v).end(x), v);
    }
  }
}

TEST(ForestTest, ParentListsAreChecked) {
  const TwoComplex x = triangle();
  const std::vector<VertexId> roots{0};
  // e: a->b, f: b->c, g: c->a.
  const std::vector<EdgeId> good{kNoEdge, 0, 2};
  EXPECT_NO_THROW(forest_from_parents(x, roots, good));
  const std::vector<EdgeId> wrong_end{kNoEdge, 2, 2};
  EXPECT_EQ(code_of([&] { forest_from_parents(x, roots, wrong_end); }), ErrorCode::InvalidArgument);
  const std::vector<EdgeId> cycle{kNoEdge, 3, 2};  // b <- c <- b
  EXPECT_EQ(code_of([&] { forest_from_parents(x, roots, cycle); }), ErrorCode::InvalidArgument);
  const std::vector<EdgeId> root_parent{4, 0, 2};
  EXPECT_EQ(code_of([&] { forest_from_parents(x, roots, root_parent); }), ErrorCode::InvalidArgument);
}

TEST(CoverTest, SubdivisionReassemblesPath) {
  Rng rng(28);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoComplex x = random_complex(rng);
    const Cover cover = random_adapted_cover(x, rng);
    ASSERT_TRUE(is_adapted(x, cover).adapted);
    const EdgePath p = test::random_path(x, 0, 8, rng);
    const auto segments = subdivide_path(x, p, cover);
    EdgePath joined{p.start, {}};
    for (const auto& seg : segments) {
      EXPECT_TRUE(cover.elements[seg.element].contains_path(x, seg.path));
      EXPECT_EQ(seg.path.start, joined.end(x));
      joined = concat(x, joined, seg.path);
    }
    EXPECT_EQ(joined, p);
  }
}

TEST(CoverTest, OrphanIsReported) {
  const TwoComplex x = triangle();
  Cover cover;
  const std::vector<EdgeId> edges{0, 2, 4};
  cover.elements.push_back(Subcomplex::closure(x, {}, edges, {}));
  const AdaptedReport r = is_adapted(x, cover);
  EXPECT_FALSE(r.adapted);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, Orphan::Kind::Cell);
  EXPECT_EQ(code_of([&] { subdivide_path(x, make_path(x, 0, {0}), Cover{}); }), ErrorCode::NotAdapted);
}

}  // namespace
}  // namespace vkc
