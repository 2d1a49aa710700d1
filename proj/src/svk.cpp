#include "vkc/svk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "vkc/error.hpp"

namespace vkc {

namespace {

[[noreturn]] void violation(const std::string& what) { fail(ErrorCode::HypothesisViolation, what); }

Word shifted(const Word& w, std::uint32_t offset) {
  Word out = w;
  for (Letter& l : out) l.gen += offset;
  return out;
}

// a . b^-1, free-reduced.
Word quotient(const Word& a, const Word& b) {
  const Word inv = inverse(b);
  return free_reduce(concat({a, inv}));
}

// Tree path from the local base of an extracted part, returned in parent ids.
EdgePath tree_path_in(const Embedding& part, VertexId base, VertexId target) {
  const VertexId roots[] = {part.local_vertex(base)};
  const SpanningForest f = spanning_forest(part.complex, roots);
  return part.to_parent(f.tree_path(part.complex, part.local_vertex(target)));
}

void check_connector(const TwoComplex& x, const Subcomplex& inside, const EdgePath& p, VertexId from,
                     VertexId to, const std::string& label) {
  if (!is_composable(x, p) || p.start != from || p.end(x) != to) {
    fail(ErrorCode::EndpointMismatch, "connector " + label + " must run from " +
                                          x.vertex_name(from) + " to " + x.vertex_name(to));
  }
  if (!inside.contains_path(x, p)) violation("connector " + label + " leaves its side of the cover");
}

Cocycle pull_to(const Embedding& target, const Cocycle& u, std::span<const EdgeId> edge_map,
                BaseSet base) {
  std::vector<Element> values(target.complex.edge_count());
  for (EdgeId l = 0; l < values.size(); ++l) values[l] = u[edge_map[target.edge_to_parent[l]]];
  return make_cocycle(target.complex, u.group(), std::move(values), std::move(base));
}

}  // namespace

GluingData make_gluing(const TwoComplex& x, const Subcomplex& u, const Subcomplex& v, VertexId base,
                       std::vector<VertexId> extras, std::vector<EdgePath> p_paths,
                       std::vector<EdgePath> q_paths) {
  if (!u.is_closed(x) || !v.is_closed(x)) violation("U and V must be closed subcomplexes");
  if (!u.unite(v).contains(Subcomplex::whole(x))) violation("U and V do not cover X");
  if (!is_connected(x, u)) violation("U is not connected");
  if (!is_connected(x, v)) violation("V is not connected");
  if (base >= x.vertex_count() || !u.has_vertex(base) || !v.has_vertex(base)) {
    violation("base point is not in U n V");
  }

  GluingData g;
  g.complex = x;
  g.u = u;
  g.v = v;
  g.w = u.intersect(v);
  std::vector<Subcomplex> comps = component_subcomplexes(x, g.w);
  const auto home = std::find_if(comps.begin(), comps.end(),
                                 [&](const Subcomplex& c) { return c.has_vertex(base); });
  g.components.push_back(*home);
  g.points.push_back(base);
  comps.erase(home);

  if (extras.empty()) {
    for (const Subcomplex& c : comps) {
      g.components.push_back(c);
      g.points.push_back(c.vertices().front());
    }
  } else {
    if (extras.size() != comps.size()) {
      violation("need one point per component of U n V besides the base component");
    }
    for (VertexId a : extras) {
      const auto it = std::find_if(comps.begin(), comps.end(), [&](const Subcomplex& c) {
        return a < x.vertex_count() && c.has_vertex(a);
      });
      if (it == comps.end()) violation("chosen points must lie in distinct components of U n V");
      g.components.push_back(*it);
      g.points.push_back(a);
      comps.erase(it);
    }
  }

  const std::size_t m = g.extra_count();
  if ((!p_paths.empty() && p_paths.size() != m) || (!q_paths.empty() && q_paths.size() != m)) {
    fail(ErrorCode::InvalidArgument, "need one connector per chosen point");
  }
  g.p_paths.push_back(EdgePath{base, {}});
  g.q_paths.push_back(EdgePath{base, {}});
  const Embedding eu = extract(x, u);
  const Embedding ev = extract(x, v);
  for (std::size_t k = 1; k <= m; ++k) {
    const VertexId a = g.points[k];
    EdgePath p = p_paths.empty() ? tree_path_in(eu, base, a) : p_paths[k - 1];
    EdgePath q = q_paths.empty() ? tree_path_in(ev, base, a) : q_paths[k - 1];
    check_connector(x, u, p, base, a, "p" + std::to_string(k));
    check_connector(x, v, q, base, a, "q" + std::to_string(k));
    g.p_paths.push_back(std::move(p));
    g.q_paths.push_back(std::move(q));
  }
  return g;
}

std::optional<Cocycle> glue_pair(const TwoComplex& x, const Embedding& u_part,
                                 const Embedding& v_part, const Embedding& w_part,
                                 const Cocycle& u, const Cocycle& v, const BaseSet& y) {
  const FiniteGroup& g = u.group();
  if (!g.same_as(v.group())) fail(ErrorCode::GroupMismatch, "pieces use different groups");
  const Cocycle u_w = restrict_between(u, u_part, w_part);
  const Cocycle v_w = restrict_between(v, v_part, w_part);
  const SpanningForest forest = base_forest(w_part.complex, v_w.base());
  const std::optional<ZeroCochain> c = gauge_between(w_part.complex, v_w, u_w, forest);
  if (!c) return std::nullopt;

  ZeroCochain on_v = identity_cochain(v_part.complex, g, v.base());
  for (VertexId t = 0; t < w_part.complex.vertex_count(); ++t) {
    on_v.values[v_part.local_vertex(w_part.vertex_to_parent[t])] = c->values[t];
  }
  const Cocycle v2 = gauge_act(v_part.complex, on_v, v);

  std::vector<Element> values(x.edge_count());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    values[e] = u_part.members.has_edge(e) ? u[u_part.local_edge(e)] : v2[v_part.local_edge(e)];
  }
  return make_cocycle(x, g, std::move(values), y);
}

CartesianReport check_cartesian_pair(const TwoComplex& x, const Subcomplex& u,
                                     const Subcomplex& v, const BaseSet& y, const FiniteGroup& g,
                                     std::uint64_t budget) {
  if (!u.is_closed(x) || !v.is_closed(x)) violation("U and V must be closed subcomplexes");
  if (!u.unite(v).contains(Subcomplex::whole(x))) violation("U and V do not cover X");
  if (!is_connected(x, u)) violation("U is not connected");
  if (!is_connected(x, v)) violation("V is not connected");
  const Subcomplex w = u.intersect(v);
  for (VertexId p : y) {
    if (p >= x.vertex_count() || !w.has_vertex(p)) violation("base set must lie in U n V");
  }
  for (const std::vector<VertexId>& comp : components(x, w)) {
    const auto hits = std::count_if(comp.begin(), comp.end(), [&](VertexId p) {
      return std::binary_search(y.begin(), y.end(), p);
    });
    if (hits != 1) violation("each component of U n V needs exactly one base point");
  }

  const Embedding eu = extract(x, u);
  const Embedding ev = extract(x, v);
  const Embedding ew = extract(x, w);
  const SpanningForest fx = base_forest(x, y);
  const SpanningForest fu = base_forest(eu.complex, restrict(y, eu));
  const SpanningForest fv = base_forest(ev.complex, restrict(y, ev));
  const SpanningForest fw = base_forest(ew.complex, restrict(y, ew));

  const auto classes_x = cohomology_classes(x, y, g, fx, budget);
  const auto classes_u = cohomology_classes(eu.complex, restrict(y, eu), g, fu, budget);
  const auto classes_v = cohomology_classes(ev.complex, restrict(y, ev), g, fv, budget);

  auto index_of = [](const std::vector<CohomologyClass>& all, const CohomologyClass& c) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), c) - all.begin());
  };
  auto on_w_from = [&](const Embedding& part, const CohomologyClass& c) {
    return class_of(ew.complex, restrict_between(c.representative, part, ew), fw);
  };

  CartesianReport r;
  r.total = classes_x.size();

  std::map<CohomologyClass, std::vector<std::size_t>> u_over, v_over;
  for (std::size_t i = 0; i < classes_u.size(); ++i) u_over[on_w_from(eu, classes_u[i])].push_back(i);
  for (std::size_t i = 0; i < classes_v.size(); ++i) v_over[on_w_from(ev, classes_v[i])].push_back(i);
  for (const auto& [wc, us] : u_over) {
    const auto it = v_over.find(wc);
    if (it != v_over.end()) r.fibered += us.size() * it->second.size();
  }

  r.commutes = true;
  std::set<std::pair<std::size_t, std::size_t>> images;
  for (const CohomologyClass& c : classes_x) {
    const CohomologyClass cu = class_of(eu.complex, restrict(c.representative, eu), fu);
    const CohomologyClass cv = class_of(ev.complex, restrict(c.representative, ev), fv);
    if (on_w_from(eu, cu) != on_w_from(ev, cv)) r.commutes = false;
    images.insert({index_of(classes_u, cu), index_of(classes_v, cv)});
  }
  r.injective = images.size() == classes_x.size();

  r.witnesses_ok = true;
  for (const auto& [wc, us] : u_over) {
    const auto it = v_over.find(wc);
    if (it == v_over.end()) continue;
    for (std::size_t i : us) {
      for (std::size_t j : it->second) {
        const auto glued = glue_pair(x, eu, ev, ew, classes_u[i].representative,
                                     classes_v[j].representative, y);
        if (!glued) {
          r.witnesses_ok = false;
          continue;
        }
        const CohomologyClass c = class_of(x, *glued, fx);
        if (class_of(eu.complex, restrict(c.representative, eu), fu) != classes_u[i] ||
            class_of(ev.complex, restrict(c.representative, ev), fv) != classes_v[j]) {
          r.witnesses_ok = false;
        }
      }
    }
  }
  return r;
}

void check_family_hypotheses(const TwoComplex& x, const Cover& cover, VertexId base) {
  const AdaptedReport adapted = is_adapted(x, cover);
  if (!adapted.adapted) fail(ErrorCode::NotAdapted, "cover is not adapted");
  const auto& els = cover.elements;
  if (els.empty()) violation("cover has no elements");
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (!els[i].is_closed(x)) violation("element " + std::to_string(i) + " is not closed");
    if (base >= x.vertex_count() || !els[i].has_vertex(base)) {
      violation("element " + std::to_string(i) + " misses the base point");
    }
    if (!is_connected(x, els[i])) violation("element " + std::to_string(i) + " is not connected");
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Subcomplex ij = els[i].intersect(els[j]);
      if (!is_connected(x, ij)) {
        violation("intersection " + std::to_string(i) + "," + std::to_string(j) + " is not connected");
      }
      for (std::size_t k = j + 1; k < els.size(); ++k) {
        if (!is_connected(x, ij.intersect(els[k]))) {
          violation("intersection " + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + " is not connected");
        }
      }
    }
  }
}

FamilyGlueResult glue_family_class(const TwoComplex& x, const Cover& cover,
                                   std::span<const CohomologyClass> classes, VertexId base) {
  check_family_hypotheses(x, cover, base);
  const std::size_t n = cover.elements.size();
  if (classes.size() != n) fail(ErrorCode::InvalidArgument, "need one class per cover element");
  const FiniteGroup& g = classes.front().representative.group();

  std::vector<Embedding> els;
  std::vector<Cocycle> reps;
  for (std::size_t k = 0; k < n; ++k) {
    els.push_back(extract(x, cover.elements[k]));
    const Cocycle& u = classes[k].representative;
    if (!u.group().same_as(g)) fail(ErrorCode::GroupMismatch, "classes use different groups");
    if (u.base() != BaseSet{els[k].local_vertex(base)} ||
        u.values().size() != els[k].complex.edge_count()) {
      fail(ErrorCode::BaseMismatch, "class " + std::to_string(k) + " is not over its element");
    }
    reps.push_back(u);
  }

  std::vector<std::vector<Embedding>> overlap(n);
  std::vector<std::vector<SpanningForest>> overlap_forest(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      overlap[i].push_back(extract(x, cover.elements[i].intersect(cover.elements[j])));
      const Embedding& w = overlap[i].back();
      overlap_forest[i].push_back(base_forest(w.complex, {w.local_vertex(base)}));
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      const Embedding& w = overlap[i][j];
      const SpanningForest& f = overlap_forest[i][j];
      if (class_of(w.complex, restrict_between(reps[i], els[i], w), f) !=
          class_of(w.complex, restrict_between(reps[j], els[j], w), f)) {
        return {std::nullopt, std::make_pair(j, i)};
      }
    }
  }

  std::vector<std::optional<Element>> glued(x.edge_count());
  for (EdgeId l = 0; l < els[0].complex.edge_count(); ++l) glued[els[0].edge_to_parent[l]] = reps[0][l];

  for (std::size_t i = 1; i < n; ++i) {
    const Embedding& el = els[i];
    ZeroCochain c = identity_cochain(el.complex, g, reps[i].base());
    std::vector<char> fixed(el.complex.vertex_count(), 0);
    for (std::size_t j = 0; j < i; ++j) {
      const Embedding& w = overlap[i][j];
      const Cocycle v_w = restrict_between(reps[i], el, w);
      std::vector<Element> so_far(w.complex.edge_count());
      for (EdgeId l = 0; l < so_far.size(); ++l) so_far[l] = *glued[w.edge_to_parent[l]];
      const Cocycle target = make_cocycle(w.complex, g, std::move(so_far), v_w.base());
      const auto d = gauge_between(w.complex, v_w, target, overlap_forest[i][j]);
      if (!d) fail(ErrorCode::InconsistentOverlap, "re-gauging failed on a pairwise overlap");
      for (VertexId t = 0; t < w.complex.vertex_count(); ++t) {
        const VertexId li = el.local_vertex(w.vertex_to_parent[t]);
        if (fixed[li] && c.values[li] != d->values[t]) {
          violation("re-gauging disagrees on a triple overlap");
        }
        c.values[li] = d->values[t];
        fixed[li] = 1;
      }
    }
    const Cocycle moved = gauge_act(el.complex, c, reps[i]);
    for (EdgeId l = 0; l < el.complex.edge_count(); ++l) {
      std::optional<Element>& slot = glued[el.edge_to_parent[l]];
      if (slot && *slot != moved[l]) fail(ErrorCode::InconsistentOverlap, "glued values disagree");
      slot = moved[l];
    }
  }

  std::vector<Element> values(x.edge_count());
  for (EdgeId e = 0; e < values.size(); ++e) values[e] = *glued[e];
  CohomologyClass out = class_of(x, make_cocycle(x, g, std::move(values), {base}));
  for (std::size_t k = 0; k < n; ++k) {
    if (class_of(els[k].complex, restrict(out.representative, els[k])) !=
        class_of(els[k].complex, reps[k])) {
      fail(ErrorCode::InconsistentOverlap, "glued class does not restrict to the given classes");
    }
  }
  return {std::move(out), std::nullopt};
}

GluedPresentation amalgamated_presentation(const GluingData& g) {
  if (g.extra_count() != 0) violation("U n V is disconnected; use the HNN construction");
  const TwoComplex& x = g.complex;
  const VertexId b = g.base();
  const Embedding eu = extract(x, g.u);
  const Embedding ev = extract(x, g.v);
  const Embedding ew = extract(x, g.w);
  const Pi1Data pu = pi1_presentation(eu.complex, eu.local_vertex(b));
  const Pi1Data pv = pi1_presentation(ev.complex, ev.local_vertex(b));
  const Pi1Data pw = pi1_presentation(ew.complex, ew.local_vertex(b));
  const auto offset = static_cast<std::uint32_t>(pu.presentation.rank());

  std::vector<std::string> names;
  for (const std::string& s : pu.presentation.generators()) names.push_back("U." + s);
  for (const std::string& s : pv.presentation.generators()) names.push_back("V." + s);

  std::vector<Word> relators = pu.presentation.relators();
  for (const Word& r : pv.presentation.relators()) relators.push_back(shifted(r, offset));
  for (std::size_t k = 0; k < pw.presentation.rank(); ++k) {
    const EdgePath l = ew.to_parent(pw.loop(k));
    const Word r = quotient(pu.rewrite(eu.to_local(l)), shifted(pv.rewrite(ev.to_local(l)), offset));
    if (!r.empty()) relators.push_back(r);
  }

  GluedPresentation out{Presentation(std::move(names), std::move(relators)), {},
                        pi1_presentation(x, b)};
  for (std::size_t k = 0; k < pu.presentation.rank(); ++k) {
    out.to_pi1.push_back(out.pi1_x.rewrite(eu.to_parent(pu.loop(k))));
  }
  for (std::size_t k = 0; k < pv.presentation.rank(); ++k) {
    out.to_pi1.push_back(out.pi1_x.rewrite(ev.to_parent(pv.loop(k))));
  }
  return out;
}

GluedPresentation colimit_presentation(const TwoComplex& x, const Cover& cover, VertexId base) {
  check_family_hypotheses(x, cover, base);
  const std::size_t n = cover.elements.size();
  std::vector<Embedding> els;
  std::vector<Pi1Data> pis;
  std::vector<std::uint32_t> offsets;
  std::vector<std::string> names;
  std::vector<Word> relators;
  for (std::size_t k = 0; k < n; ++k) {
    els.push_back(extract(x, cover.elements[k]));
    pis.push_back(pi1_presentation(els[k].complex, els[k].local_vertex(base)));
    offsets.push_back(static_cast<std::uint32_t>(names.size()));
    for (const std::string& s : pis[k].presentation.generators()) {
      names.push_back("U" + std::to_string(k) + "." + s);
    }
    for (const Word& r : pis[k].presentation.relators()) relators.push_back(shifted(r, offsets[k]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Embedding w = extract(x, cover.elements[i].intersect(cover.elements[j]));
      const Pi1Data pw = pi1_presentation(w.complex, w.local_vertex(base));
      for (std::size_t k = 0; k < pw.presentation.rank(); ++k) {
        const EdgePath l = w.to_parent(pw.loop(k));
        const Word r = quotient(shifted(pis[i].rewrite(els[i].to_local(l)), offsets[i]),
                                shifted(pis[j].rewrite(els[j].to_local(l)), offsets[j]));
        if (!r.empty()) relators.push_back(r);
      }
    }
  }
  GluedPresentation out{Presentation(std::move(names), std::move(relators)), {},
                        pi1_presentation(x, base)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < pis[k].presentation.rank(); ++t) {
      out.to_pi1.push_back(out.pi1_x.rewrite(els[k].to_parent(pis[k].loop(t))));
    }
  }
  return out;
}

EdgePath DoubledSpace::via_u(const EdgePath& p) const {
  EdgePath out{from_u_vertex.at(p.start), {}};
  for (EdgeId e : p.letters) out.letters.push_back(from_u_edge.at(e));
  if (out.start == kNoVertex ||
      std::find(out.letters.begin(), out.letters.end(), kNoEdge) != out.letters.end()) {
    fail(ErrorCode::InvalidArgument, "path leaves U");
  }
  return out;
}

EdgePath DoubledSpace::via_v(const EdgePath& p) const {
  EdgePath out{from_v_vertex.at(p.start), {}};
  for (EdgeId e : p.letters) out.letters.push_back(from_v_edge.at(e));
  if (out.start == kNoVertex ||
      std::find(out.letters.begin(), out.letters.end(), kNoEdge) != out.letters.end()) {
    fail(ErrorCode::InvalidArgument, "path leaves V");
  }
  return out;
}

EdgePath DoubledSpace::fold(const EdgePath& p) const {
  EdgePath out{sigma_vertex.at(p.start), {}};
  for (EdgeId e : p.letters) out.letters.push_back(sigma_edge.at(e));
  return out;
}

DoubledSpace build_double(const GluingData& g) {
  if (g.extra_count() == 0) violation("U n V is connected; no doubled space is needed");
  const TwoComplex& x = g.complex;
  const Subcomplex& a0 = g.components.front();
  DoubledSpace d;
  TwoComplex& c = d.complex;
  d.from_v_vertex.assign(x.vertex_count(), kNoVertex);
  d.from_u_vertex.assign(x.vertex_count(), kNoVertex);
  d.from_v_edge.assign(x.edge_count(), kNoEdge);
  d.from_u_edge.assign(x.edge_count(), kNoEdge);

  for (VertexId p = 0; p < x.vertex_count(); ++p) {
    if (!g.v.has_vertex(p)) continue;
    d.from_v_vertex[p] = c.add_vertex(x.vertex_name(p));
    d.sigma_vertex.push_back(p);
  }
  for (VertexId p = 0; p < x.vertex_count(); ++p) {
    if (!g.u.has_vertex(p)) continue;
    if (a0.has_vertex(p)) {
      d.from_u_vertex[p] = d.from_v_vertex[p];
    } else {
      d.from_u_vertex[p] = c.add_vertex("U:" + x.vertex_name(p));
      d.sigma_vertex.push_back(p);
    }
  }

  auto add_edge_copy = [&](EdgeId e, const std::string& name, const std::vector<VertexId>& vmap,
                           std::vector<EdgeId>& emap) {
    const EdgeId id = c.add_edge(name, vmap[x.src(e)], vmap[x.tgt(e)]);
    emap[e] = id;
    emap[reverse_edge(e)] = reverse_edge(id);
    d.sigma_edge.push_back(e);
    d.sigma_edge.push_back(reverse_edge(e));
  };
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (g.v.has_edge(e)) add_edge_copy(e, x.edge_pair_name(pair_of(e)), d.from_v_vertex, d.from_v_edge);
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (!g.u.has_edge(e)) continue;
    if (a0.has_edge(e)) {
      d.from_u_edge[e] = d.from_v_edge[e];
      d.from_u_edge[reverse_edge(e)] = d.from_v_edge[reverse_edge(e)];
    } else {
      add_edge_copy(e, "U:" + x.edge_pair_name(pair_of(e)), d.from_u_vertex, d.from_u_edge);
    }
  }

  auto mapped = [&](CellId f, const std::vector<EdgeId>& emap) {
    std::vector<EdgeId> out;
    for (EdgeId e : x.boundary(f)) out.push_back(emap[e]);
    return out;
  };
  for (CellId f = 0; f < x.cell_count(); ++f) {
    if (g.v.has_cell(f)) c.add_cell(x.cell_name(f), mapped(f, d.from_v_edge));
  }
  for (CellId f = 0; f < x.cell_count(); ++f) {
    if (g.u.has_cell(f) && !a0.has_cell(f)) c.add_cell("U:" + x.cell_name(f), mapped(f, d.from_u_edge));
  }

  d.u_image = Subcomplex::empty(c);
  d.v_image = Subcomplex::empty(c);
  for (VertexId p = 0; p < x.vertex_count(); ++p) {
    if (d.from_u_vertex[p] != kNoVertex) d.u_image.add_vertex(d.from_u_vertex[p]);
    if (d.from_v_vertex[p] != kNoVertex) d.v_image.add_vertex(d.from_v_vertex[p]);
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (d.from_u_edge[e] != kNoEdge) d.u_image.add_edge(c, d.from_u_edge[e]);
    if (d.from_v_edge[e] != kNoEdge) d.v_image.add_edge(c, d.from_v_edge[e]);
  }
  const std::size_t v_cells = g.v.cells().size();
  std::size_t next_copy = v_cells;
  std::size_t next_v = 0;
  for (CellId f = 0; f < x.cell_count(); ++f) {
    const bool in_v = g.v.has_cell(f);
    const CellId v_id = in_v ? static_cast<CellId>(next_v++) : 0;
    if (in_v) d.v_image.add_cell(c, v_id);
    if (!g.u.has_cell(f)) continue;
    if (a0.has_cell(f)) {
      d.u_image.add_cell(c, v_id);
    } else {
      d.u_image.add_cell(c, static_cast<CellId>(next_copy++));
    }
  }

  for (std::size_t k = 1; k < g.components.size(); ++k) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId p : g.components[k].vertices()) pairs.emplace_back(p, d.from_u_vertex[p]);
    d.iota.push_back(std::move(pairs));
  }
  return d;
}

GluedPresentation hnn_presentation(const GluingData& g) {
  const TwoComplex& x = g.complex;
  const VertexId b = g.base();
  const DoubledSpace d = build_double(g);
  const TwoComplex& c = d.complex;
  const Pi1Data pc = pi1_presentation(c, d.from_v_vertex[b]);
  const auto rank_c = static_cast<std::uint32_t>(pc.presentation.rank());

  std::vector<std::string> names;
  for (const std::string& s : pc.presentation.generators()) names.push_back("C." + s);
  for (std::size_t k = 1; k <= g.extra_count(); ++k) names.push_back("t" + std::to_string(k));
  std::vector<Word> relators = pc.presentation.relators();

  for (std::size_t k = 1; k <= g.extra_count(); ++k) {
    const Embedding ea = extract(x, g.components[k]);
    const Pi1Data pa = pi1_presentation(ea.complex, ea.local_vertex(g.points[k]));
    const EdgePath q = d.via_v(g.q_paths[k]);
    const EdgePath p = d.via_u(g.p_paths[k]);
    const Word t{Letter{rank_c + static_cast<std::uint32_t>(k - 1), false}};
    const Word t_inv = inverse(t);
    for (std::size_t a = 0; a < pa.presentation.rank(); ++a) {
      const EdgePath l = ea.to_parent(pa.loop(a));
      const Word theta = pc.rewrite(concat(c, concat(c, q, d.via_v(l)), reverse(c, q)));
      const Word theta_hat = pc.rewrite(concat(c, concat(c, p, d.via_u(l)), reverse(c, p)));
      const Word theta_inv = inverse(theta);
      const Word r = free_reduce(concat({theta_hat, t, theta_inv, t_inv}));
      if (!r.empty()) relators.push_back(r);
    }
  }

  GluedPresentation out{Presentation(std::move(names), std::move(relators)), {},
                        pi1_presentation(x, b)};
  for (std::size_t k = 0; k < rank_c; ++k) out.to_pi1.push_back(out.pi1_x.rewrite(d.fold(pc.loop(k))));
  for (std::size_t k = 1; k <= g.extra_count(); ++k) {
    out.to_pi1.push_back(out.pi1_x.rewrite(concat(x, g.p_paths[k], reverse(x, g.q_paths[k]))));
  }
  return out;
}

HomBijectionReport check_hom_bijection(const GluedPresentation& glued, const FiniteGroup& g,
                                       std::uint64_t budget) {
  if (glued.to_pi1.size() != glued.presentation.rank()) {
    fail(ErrorCode::InvalidArgument, "comparison map needs one word per generator");
  }
  HomBijectionReport r;
  r.built_count = hom_count(glued.presentation, g, budget);
  r.well_defined = true;
  std::set<std::vector<Element>> seen;
  for_each_hom(glued.pi1_x.presentation, g, budget, [&](std::span<const Element> images) {
    ++r.pi1_count;
    std::vector<Element> pulled;
    for (const Word& w : glued.to_pi1) pulled.push_back(evaluate(g, images, w));
    if (!satisfies_relators(glued.presentation, g, pulled)) r.well_defined = false;
    seen.insert(std::move(pulled));
    return true;
  });
  r.injective = seen.size() == r.pi1_count;
  return r;
}

TripleReport verify_triple_description(const GluingData& g, const FiniteGroup& group,
                                       std::uint64_t budget) {
  if (g.extra_count() != 1) violation("the triple description needs U n V with exactly two components");
  const TwoComplex& x = g.complex;
  const VertexId b = g.base();
  const VertexId a = g.points[1];
  const DoubledSpace d = build_double(g);
  const TwoComplex& c = d.complex;
  const VertexId b_c = d.from_v_vertex[b];

  const BasePointFamily fam_q = make_family(c, b_c, {d.from_v_vertex[a]}, {d.via_v(g.q_paths[1])});
  const BasePointFamily fam_p = make_family(c, b_c, {d.from_u_vertex[a]}, {d.via_u(g.p_paths[1])});
  const Embedding ea = extract(x, g.components[1]);
  const VertexId a_l = ea.local_vertex(a);
  const SpanningForest fa = base_forest(ea.complex, {a_l});

  // c . u on A with c(a) = h and 1 elsewhere, re-canonicalized over base {a}.
  auto act_at_a = [&](Element h, const CohomologyClass& cls) {
    ZeroCochain z = identity_cochain(ea.complex, group, {});
    z.values[a_l] = h;
    const Cocycle moved = gauge_act(ea.complex, z, with_base(cls.representative, {}));
    return class_of(ea.complex, with_base(moved, {a_l}), fa);
  };
  auto on_a = [&](const Cocycle& u, const std::vector<EdgeId>& edge_map) {
    return class_of(ea.complex, pull_to(ea, u, edge_map, {a_l}), fa);
  };

  const auto gammas = cohomology_classes(c, {b_c}, group, budget);
  const std::size_t n = group.order();
  // solution[i][g] holds when left(gamma_i) = g . right(gamma_i).
  std::vector<std::vector<char>> solution(gammas.size(), std::vector<char>(n, 0));
  TripleReport r;
  std::set<std::tuple<std::size_t, Element, Element>> triples;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const Cocycle& gam = gammas[i].representative;
    const CohomologyClass left = on_a(eta(c, gam, fam_p).representative, d.from_u_edge);
    const CohomologyClass right = on_a(eta(c, gam, fam_q).representative, d.from_v_edge);
    for (Element h = 0; h < n; ++h) {
      if (act_at_a(h, right) == left) {
        solution[i][h] = 1;
        ++r.pairs;
      }
    }
    for (Element h = 0; h < n; ++h) {
      for (Element k = 0; k < n; ++k) {
        if (solution[i][group.mul(h, group.inv(k))]) triples.insert({i, h, k});
      }
    }
  }
  r.triples = triples.size();

  // Orbits of (gamma, h, k) -> (gamma, h c^-1, k c^-1).
  std::set<std::tuple<std::size_t, Element, Element>> visited;
  std::set<std::pair<std::size_t, Element>> orbit_images;
  r.product_invariant = true;
  for (const auto& t : triples) {
    if (visited.count(t)) continue;
    ++r.orbits;
    const auto [i, h, k] = t;
    const Element prod = group.mul(h, group.inv(k));
    for (Element s = 0; s < n; ++s) {
      const auto moved = std::make_tuple(i, group.mul(h, group.inv(s)), group.mul(k, group.inv(s)));
      visited.insert(moved);
      const Element mp = group.mul(std::get<1>(moved), group.inv(std::get<2>(moved)));
      if (mp != prod || !triples.count(moved)) r.product_invariant = false;
    }
    orbit_images.insert({i, prod});
  }
  std::size_t pairs_hit = 0;
  for (const auto& [i, prod] : orbit_images) pairs_hit += solution[i][prod] ? 1 : 0;
  r.orbits_match_pairs = orbit_images.size() == r.orbits && pairs_hit == r.pairs;

  const BaseSet ab = make_base_set({a, b});
  const auto relative = cohomology_classes(x, ab, group, budget);
  r.relative_classes = relative.size();
  r.absolute_classes = cohomology_classes(x, {b}, group, budget).size();

  // The explicit map H^1(X, {a, b}) -> triples.
  const Embedding eu = extract(x, g.u);
  const Embedding ev = extract(x, g.v);
  const BasePointFamily fam_u = make_family(eu.complex, eu.local_vertex(b), {eu.local_vertex(a)},
                                            {eu.to_local(g.p_paths[1])});
  const BasePointFamily fam_v = make_family(ev.complex, ev.local_vertex(b), {ev.local_vertex(a)},
                                            {ev.to_local(g.q_paths[1])});
  const Embedding cu = extract(c, d.u_image);
  const Embedding cv = extract(c, d.v_image);
  const Embedding cw = extract(c, d.u_image.intersect(d.v_image));
  // U' and V inside C map back onto U and V through sigma.
  auto transported = [&](const Embedding& side_c, const Embedding& side_x, const Cocycle& u) {
    std::vector<Element> values(side_c.complex.edge_count());
    for (EdgeId l = 0; l < values.size(); ++l) {
      values[l] = u[side_x.local_edge(d.sigma_edge[side_c.edge_to_parent[l]])];
    }
    return make_cocycle(side_c.complex, group, std::move(values), {side_c.local_vertex(b_c)});
  };

  r.map_into_solutions = true;
  std::set<std::tuple<std::size_t, Element, Element>> hit;
  for (const CohomologyClass& cls : relative) {
    const auto [alpha, h] =
        split_f(eu.complex, class_of(eu.complex, restrict(cls.representative, eu)), fam_u);
    const auto [beta, k] =
        split_f(ev.complex, class_of(ev.complex, restrict(cls.representative, ev)), fam_v);
    const auto glued = glue_pair(c, cu, cv, cw, transported(cu, eu, alpha.representative),
                                 transported(cv, ev, beta.representative), {b_c});
    if (!glued) {
      r.map_into_solutions = false;
      continue;
    }
    const CohomologyClass gam = class_of(c, *glued);
    const auto it = std::lower_bound(gammas.begin(), gammas.end(), gam);
    const std::size_t i = static_cast<std::size_t>(it - gammas.begin());
    const auto t = std::make_tuple(i, h.values[0], k.values[0]);
    if (it == gammas.end() || *it != gam || !triples.count(t)) r.map_into_solutions = false;
    hit.insert(t);
  }
  r.map_injective = hit.size() == relative.size();
  return r;
}

}  // namespace vkc
