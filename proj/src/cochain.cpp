#include "vkc/cochain.hpp"

#include <algorithm>

#include "vkc/error.hpp"

namespace vkc {

namespace detail {
Cocycle unchecked_cocycle(FiniteGroup g, std::vector<Element> values, BaseSet base) {
  return Cocycle(std::move(g), std::move(values), std::move(base));
}
}  // namespace detail

BaseSet make_base_set(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

ZeroCochain identity_cochain(const TwoComplex& x, const FiniteGroup& g, BaseSet base) {
  return {g, std::vector<Element>(x.vertex_count(), g.identity()), std::move(base)};
}

ZeroCochain make_zero_cochain(const TwoComplex& x, const FiniteGroup& g,
                              std::vector<Element> values, BaseSet base) {
  if (values.size() != x.vertex_count()) fail(ErrorCode::InvalidArgument, "0-cochain size mismatch");
  for (Element v : values) {
    if (v >= g.order()) fail(ErrorCode::InvalidArgument, "0-cochain value outside the group");
  }
  for (VertexId y : base) {
    if (values[y] != g.identity()) {
      fail(ErrorCode::InvalidArgument, "0-cochain is not 1 at base vertex " + x.vertex_name(y));
    }
  }
  return {g, std::move(values), std::move(base)};
}

ZeroCochain multiply(const ZeroCochain& c, const ZeroCochain& d) {
  if (!c.group.same_as(d.group)) fail(ErrorCode::GroupMismatch, "0-cochains over different groups");
  ZeroCochain out = c;
  for (std::size_t v = 0; v < out.values.size(); ++v) out.values[v] = c.group.mul(c.values[v], d.values[v]);
  return out;
}

ZeroCochain invert(const ZeroCochain& c) {
  ZeroCochain out = c;
  for (Element& v : out.values) v = c.group.inv(v);
  return out;
}

CocycleReport validate_cocycle(const TwoComplex& x, const FiniteGroup& g,
                               std::vector<Element> edge_values, BaseSet base) {
  CocycleReport report;
  if (edge_values.size() != x.edge_count()) {
    report.violations.push_back("expected " + std::to_string(x.edge_count()) +
                                " oriented edge values, got " + std::to_string(edge_values.size()));
    return report;
  }
  for (Element v : edge_values) {
    if (v >= g.order()) {
      report.violations.push_back("edge value outside the group");
      return report;
    }
  }
  for (VertexId y : base) {
    if (y >= x.vertex_count()) {
      report.violations.push_back("base vertex outside the complex");
      return report;
    }
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (edge_values[reverse_edge(e)] != g.inv(edge_values[e])) {
      report.violations.push_back("edge " + x.edge_name(e) + ": reverse value is not the inverse");
    }
  }
  for (CellId c = 0; c < x.cell_count(); ++c) {
    Element acc = g.identity();
    for (EdgeId e : x.boundary(c)) acc = g.mul(acc, edge_values[e]);
    if (acc != g.identity()) {
      report.violations.push_back("cell " + x.cell_name(c) + ": holonomy " + g.name(acc) +
                                  " is not the identity");
    }
  }
  if (report.violations.empty()) {
    report.cocycle = detail::unchecked_cocycle(g, std::move(edge_values), make_base_set(std::move(base)));
  }
  return report;
}

Cocycle make_cocycle(const TwoComplex& x, const FiniteGroup& g, std::vector<Element> edge_values,
                     BaseSet base) {
  CocycleReport r = validate_cocycle(x, g, std::move(edge_values), std::move(base));
  if (!r.ok()) fail(ErrorCode::NotACocycle, r.violations.front());
  return *std::move(r.cocycle);
}

Cocycle cocycle_from_pairs(const TwoComplex& x, const FiniteGroup& g,
                           std::span<const Element> pair_values, BaseSet base) {
  if (pair_values.size() != x.edge_pair_count()) {
    fail(ErrorCode::InvalidArgument, "expected one value per edge pair");
  }
  std::vector<Element> values(x.edge_count());
  for (std::size_t k = 0; k < pair_values.size(); ++k) {
    if (pair_values[k] >= g.order()) fail(ErrorCode::InvalidArgument, "edge value outside the group");
    values[2 * k] = pair_values[k];
    values[2 * k + 1] = g.inv(pair_values[k]);
  }
  return make_cocycle(x, g, std::move(values), std::move(base));
}

Cocycle trivial_cocycle(const TwoComplex& x, const FiniteGroup& g, BaseSet base) {
  return detail::unchecked_cocycle(g, std::vector<Element>(x.edge_count(), g.identity()),
                                   make_base_set(std::move(base)));
}

Cocycle with_base(const Cocycle& u, BaseSet base) {
  return detail::unchecked_cocycle(u.group(), u.values(), make_base_set(std::move(base)));
}

Element evaluate(const Cocycle& u, const EdgePath& p) {
  const FiniteGroup& g = u.group();
  Element acc = g.identity();
  for (EdgeId e : p.letters) acc = g.mul(acc, u[e]);
  return acc;
}

Cocycle gauge_act(const TwoComplex& x, const ZeroCochain& c, const Cocycle& u) {
  if (!c.group.same_as(u.group())) fail(ErrorCode::GroupMismatch, "0-cochain and cocycle use different groups");
  if (c.base != u.base()) fail(ErrorCode::BaseMismatch, "0-cochain and cocycle use different base sets");
  const FiniteGroup& g = u.group();
  std::vector<Element> values(x.edge_count());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    values[e] = g.mul(g.mul(c.values[x.src(e)], u[e]), g.inv(c.values[x.tgt(e)]));
  }
  return detail::unchecked_cocycle(g, std::move(values), u.base());
}

void for_each_flat_assignment(const TwoComplex& x, const FiniteGroup& g,
                              std::span<const std::optional<Element>> fixed,
                              std::uint64_t budget,
                              const std::function<bool(std::span<const Element>)>& visit) {
  const std::size_t pairs = x.edge_pair_count();
  if (fixed.size() != pairs) fail(ErrorCode::InvalidArgument, "fixed assignment size mismatch");

  std::vector<Element> values(x.edge_count(), g.identity());
  std::vector<std::uint32_t> free;
  std::vector<std::size_t> slot_of_pair(pairs, 0);
  for (std::uint32_t k = 0; k < pairs; ++k) {
    if (fixed[k]) {
      values[2 * k] = *fixed[k];
      values[2 * k + 1] = g.inv(*fixed[k]);
    } else {
      slot_of_pair[k] = free.size();
      free.push_back(k);
    }
  }
  const std::uint64_t candidates = saturating_pow(g.order(), free.size());
  if (candidates > budget) {
    fail(ErrorCode::BudgetExceeded, std::to_string(g.order()) + "^" + std::to_string(free.size()) +
                                        " edge assignments exceed budget " + std::to_string(budget));
  }

  auto holonomy_ok = [&](CellId c) {
    Element acc = g.identity();
    for (EdgeId e : x.boundary(c)) acc = g.mul(acc, values[e]);
    return acc == g.identity();
  };

  // Each cell is checked once its last free boundary pair is assigned.
  std::vector<std::vector<CellId>> due(free.size());
  for (CellId c = 0; c < x.cell_count(); ++c) {
    std::optional<std::size_t> last;
    for (EdgeId e : x.boundary(c)) {
      if (!fixed[pair_of(e)]) {
        const std::size_t slot = slot_of_pair[pair_of(e)];
        last = last ? std::max(*last, slot) : slot;
      }
    }
    if (last) {
      due[*last].push_back(c);
    } else if (!holonomy_ok(c)) {
      return;  // the fixed data already violates flatness
    }
  }

  if (free.empty()) {
    visit(values);
    return;
  }
  const Element n = static_cast<Element>(g.order());
  std::vector<Element> next(free.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (next[depth] == n) {
      if (depth == 0) return;
      next[depth] = 0;
      --depth;
      continue;
    }
    const Element v = next[depth]++;
    const std::uint32_t k = free[depth];
    values[2 * k] = v;
    values[2 * k + 1] = g.inv(v);
    bool ok = true;
    for (CellId c : due[depth]) {
      if (!holonomy_ok(c)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == free.size()) {
      if (!visit(values)) return;
    } else {
      ++depth;
    }
  }
}

std::vector<Cocycle> enumerate_cocycles(const TwoComplex& x, const BaseSet& base,
                                        const FiniteGroup& g, std::uint64_t budget) {
  std::vector<std::optional<Element>> fixed(x.edge_pair_count());
  std::vector<Cocycle> out;
  for_each_flat_assignment(x, g, fixed, budget, [&](std::span<const Element> values) {
    out.push_back(detail::unchecked_cocycle(g, {values.begin(), values.end()}, base));
    return true;
  });
  return out;
}

SpanningForest base_forest(const TwoComplex& x, const BaseSet& base) {
  return rooted_forest(x, base);
}

ZeroCochain canonicalizing_cochain(const TwoComplex& x, const Cocycle& u,
                                   const SpanningForest& forest) {
  const FiniteGroup& g = u.group();
  ZeroCochain c{g, std::vector<Element>(x.vertex_count(), g.identity()), u.base()};
  // BFS order visits parents first.
  for (VertexId v : forest.order()) {
    const EdgeId e = forest.parent_edge(v);
    if (e != kNoEdge) c.values[v] = g.mul(c.values[x.src(e)], u[e]);
  }
  return c;
}

namespace {

void check_forest_matches_base(const TwoComplex& x, const SpanningForest& forest,
                               const BaseSet& base) {
  if (make_base_set(forest.roots()) != base) {
    fail(ErrorCode::RootNotInBaseSet, "forest roots must be exactly the base set");
  }
  if (!forest.covers_all()) {
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
      if (!forest.covers(v)) {
        fail(ErrorCode::BaseSetMissesComponent,
             "vertex " + x.vertex_name(v) + " lies in a component without a base vertex");
      }
    }
  }
}

}  // namespace

Cocycle canonical_form(const TwoComplex& x, const Cocycle& u, const SpanningForest& forest) {
  check_forest_matches_base(x, forest, u.base());
  return gauge_act(x, canonicalizing_cochain(x, u, forest), u);
}

CohomologyClass class_of(const TwoComplex& x, const Cocycle& u, const SpanningForest& forest) {
  return {canonical_form(x, u, forest)};
}

CohomologyClass class_of(const TwoComplex& x, const Cocycle& u) {
  return class_of(x, u, base_forest(x, u.base()));
}

std::vector<CohomologyClass> cohomology_classes(const TwoComplex& x, const BaseSet& base,
                                                const FiniteGroup& g,
                                                const SpanningForest& forest,
                                                std::uint64_t budget) {
  check_forest_matches_base(x, forest, base);
  std::vector<std::optional<Element>> fixed(x.edge_pair_count());
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (forest.is_tree_edge(e)) fixed[pair_of(e)] = g.identity();
  }
  std::vector<CohomologyClass> out;
  for_each_flat_assignment(x, g, fixed, budget, [&](std::span<const Element> values) {
    out.push_back({detail::unchecked_cocycle(g, {values.begin(), values.end()}, base)});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CohomologyClass> cohomology_classes(const TwoComplex& x, const BaseSet& base,
                                                const FiniteGroup& g, std::uint64_t budget) {
  return cohomology_classes(x, base, g, base_forest(x, base), budget);
}

bool gauge_equivalent(const TwoComplex& x, const Cocycle& u, const Cocycle& w) {
  if (u.base() != w.base() || !u.group().same_as(w.group())) return false;
  const SpanningForest f = base_forest(x, u.base());
  return canonical_form(x, u, f) == canonical_form(x, w, f);
}

std::optional<ZeroCochain> gauge_between(const TwoComplex& x, const Cocycle& v, const Cocycle& w,
                                         const SpanningForest& forest) {
  const FiniteGroup& g = v.group();
  // c(root) = 1 and c(y) = w(e)^-1 c(x) v(e) along each tree edge e: x -> y.
  ZeroCochain c{g, std::vector<Element>(x.vertex_count(), g.identity()), v.base()};
  for (VertexId y : forest.order()) {
    const EdgeId e = forest.parent_edge(y);
    if (e != kNoEdge) c.values[y] = g.mul(g.mul(g.inv(w[e]), c.values[x.src(e)]), v[e]);
  }
  for (VertexId b : v.base()) {
    if (c.values[b] != g.identity()) return std::nullopt;
  }
  if (gauge_act(x, c, v).values() != w.values()) return std::nullopt;
  return c;
}

BaseSet restrict(const BaseSet& base, const Embedding& a) {
  BaseSet out;
  for (VertexId y : base) {
    const VertexId l = a.local_vertex(y);
    if (l != kNoVertex) out.push_back(l);
  }
  return out;
}

BaseSet lift(const BaseSet& local, const Embedding& a) {
  BaseSet out;
  for (VertexId y : local) out.push_back(a.vertex_to_parent[y]);
  return make_base_set(std::move(out));
}

Cocycle restrict(const Cocycle& u, const Embedding& a) {
  std::vector<Element> values(a.complex.edge_count());
  for (EdgeId l = 0; l < values.size(); ++l) values[l] = u[a.edge_to_parent[l]];
  return detail::unchecked_cocycle(u.group(), std::move(values), restrict(u.base(), a));
}

Cocycle restrict_between(const Cocycle& u, const Embedding& from, const Embedding& to) {
  std::vector<Element> values(to.complex.edge_count());
  for (EdgeId l = 0; l < values.size(); ++l) {
    const EdgeId mid = from.local_edge(to.edge_to_parent[l]);
    if (mid == kNoEdge) fail(ErrorCode::InvalidArgument, "target subcomplex is not contained in the source");
    values[l] = u[mid];
  }
  return detail::unchecked_cocycle(u.group(), std::move(values),
                                   restrict(lift(u.base(), from), to));
}

ZeroCochain restrict(const ZeroCochain& c, const Embedding& a) {
  ZeroCochain out{c.group, {}, restrict(c.base, a)};
  for (VertexId p : a.vertex_to_parent) out.values.push_back(c.values[p]);
  return out;
}

// --- Short cocycles ----------------------------------------------------------

ShortCocycle make_short(const TwoComplex& x, const Cover& cover, std::vector<Embedding> elements,
                        std::vector<Cocycle> pieces, BaseSet base) {
  if (!is_adapted(x, cover).adapted) fail(ErrorCode::NotAdapted, "cover is not adapted");
  if (pieces.size() != cover.elements.size() || elements.size() != cover.elements.size()) {
    fail(ErrorCode::InvalidArgument, "need one piece per cover element");
  }
  if (pieces.empty()) fail(ErrorCode::InvalidArgument, "empty cover");
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (!pieces[k].group().same_as(pieces[0].group())) {
      fail(ErrorCode::GroupMismatch, "short cocycle pieces use different groups");
    }
    if (pieces[k].values().size() != elements[k].complex.edge_count()) {
      fail(ErrorCode::InvalidArgument, "piece " + std::to_string(k) + " does not fit its element");
    }
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    std::optional<std::pair<std::size_t, Element>> first;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const EdgeId l = elements[k].local_edge(e);
      if (l == kNoEdge) continue;
      const Element v = pieces[k][l];
      if (!first) {
        first = {k, v};
      } else if (first->second != v) {
        fail(ErrorCode::InconsistentOverlap,
             "elements " + std::to_string(first->first) + " and " + std::to_string(k) +
                 " disagree on edge " + x.edge_name(e));
      }
    }
  }
  ShortCocycle s;
  s.cover_ = cover;
  s.elements_ = std::move(elements);
  s.group_ = pieces[0].group();
  s.pieces_ = std::move(pieces);
  s.base_ = std::move(base);
  return s;
}

ShortCocycle make_short(const TwoComplex& x, const Cover& cover, std::vector<Cocycle> pieces,
                        BaseSet base) {
  std::vector<Embedding> elements;
  for (const Subcomplex& s : cover.elements) elements.push_back(extract(x, s));
  return make_short(x, cover, std::move(elements), std::move(pieces), std::move(base));
}

ShortCocycle to_short(const TwoComplex& x, const Cocycle& u, const Cover& cover) {
  std::vector<Embedding> elements;
  std::vector<Cocycle> pieces;
  for (const Subcomplex& s : cover.elements) {
    elements.push_back(extract(x, s));
    pieces.push_back(restrict(u, elements.back()));
  }
  return make_short(x, cover, std::move(elements), std::move(pieces), u.base());
}

Cocycle extend_short(const TwoComplex& x, const ShortCocycle& s) {
  const FiniteGroup& g = s.group();
  std::vector<Element> values(x.edge_count(), g.identity());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    std::size_t k = 0;
    while (k < s.elements().size() && s.elements()[k].local_edge(e) == kNoEdge) ++k;
    if (k == s.elements().size()) fail(ErrorCode::NotAdapted, "edge " + x.edge_name(e) + " is uncovered");
    values[e] = s.pieces()[k][s.elements()[k].local_edge(e)];
  }
  return make_cocycle(x, g, std::move(values), s.base());
}

Element evaluate_short(const TwoComplex& x, const ShortCocycle& s, const EdgePath& p) {
  const FiniteGroup& g = s.group();
  Element acc = g.identity();
  for (const PathSegment& seg : subdivide_path(x, p, s.cover())) {
    const Embedding& el = s.elements()[seg.element];
    acc = g.mul(acc, evaluate(s.pieces()[seg.element], el.to_local(seg.path)));
  }
  return acc;
}

ShortCocycle gauge_act_short(const TwoComplex& x, const ZeroCochain& c, const ShortCocycle& s) {
  std::vector<Cocycle> pieces;
  for (std::size_t k = 0; k < s.pieces().size(); ++k) {
    const Embedding& el = s.elements()[k];
    pieces.push_back(gauge_act(el.complex, restrict(c, el), s.pieces()[k]));
  }
  return make_short(x, s.cover(), s.elements(), std::move(pieces), s.base());
}

ShortCocycle canonical_short(const TwoComplex& x, const ShortCocycle& s,
                             const SpanningForest& forest) {
  check_forest_matches_base(x, forest, s.base());
  const FiniteGroup& g = s.group();
  ZeroCochain c{g, std::vector<Element>(x.vertex_count(), g.identity()), s.base()};
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    c.values[v] = evaluate_short(x, s, forest.tree_path(x, v));
  }
  return gauge_act_short(x, c, s);
}

std::vector<ShortCocycle> short_classes(const TwoComplex& x, const BaseSet& base,
                                        const FiniteGroup& g, const Cover& cover,
                                        const SpanningForest& forest, std::uint64_t budget) {
  check_forest_matches_base(x, forest, base);
  if (!is_adapted(x, cover).adapted) fail(ErrorCode::NotAdapted, "cover is not adapted");
  std::vector<Embedding> elements;
  for (const Subcomplex& s : cover.elements) elements.push_back(extract(x, s));

  std::vector<std::optional<Element>> global(x.edge_pair_count());
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (forest.is_tree_edge(e)) global[pair_of(e)] = g.identity();
  }

  std::vector<ShortCocycle> out;
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == elements.size()) {
      std::vector<Cocycle> pieces;
      for (const Embedding& el : elements) {
        std::vector<Element> values(el.complex.edge_count());
        for (EdgeId l = 0; l < values.size(); ++l) {
          const EdgeId p = el.edge_to_parent[l];
          values[l] = is_reversed(p) ? g.inv(*global[pair_of(p)]) : *global[pair_of(p)];
        }
        pieces.push_back(detail::unchecked_cocycle(g, std::move(values), restrict(base, el)));
      }
      out.push_back(make_short(x, cover, elements, std::move(pieces), base));
      return;
    }
    const Embedding& el = elements[k];
    std::vector<std::optional<Element>> fixed(el.complex.edge_pair_count());
    std::vector<std::uint32_t> assigned_here;
    for (std::uint32_t lp = 0; lp < fixed.size(); ++lp) {
      const std::uint32_t pp = pair_of(el.edge_to_parent[forward_edge(lp)]);
      fixed[lp] = global[pp];
      if (!global[pp]) assigned_here.push_back(lp);
    }
    for_each_flat_assignment(el.complex, g, fixed, budget, [&](std::span<const Element> values) {
      for (std::uint32_t lp : assigned_here) {
        global[pair_of(el.edge_to_parent[forward_edge(lp)])] = values[forward_edge(lp)];
      }
      descend(k + 1);
      for (std::uint32_t lp : assigned_here) {
        global[pair_of(el.edge_to_parent[forward_edge(lp)])].reset();
      }
      return true;
    });
  };
  descend(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vkc
