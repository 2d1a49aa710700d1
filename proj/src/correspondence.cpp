#include "vkc/correspondence.hpp"

#include "vkc/error.hpp"

namespace vkc {

EdgePath Pi1Data::loop(std::size_t generator) const {
  const EdgeId e = generator_edges.at(generator);
  EdgePath p = forest.tree_path(complex, complex.src(e));
  p.letters.push_back(e);
  const EdgePath back = reverse(complex, forest.tree_path(complex, complex.tgt(e)));
  p.letters.insert(p.letters.end(), back.letters.begin(), back.letters.end());
  return p;
}

Word Pi1Data::rewrite(const EdgePath& path) const {
  Word w;
  for (EdgeId e : path.letters) {
    const int g = generator_of_pair[pair_of(e)];
    if (g >= 0) w.push_back({static_cast<std::uint32_t>(g), is_reversed(e)});
  }
  return free_reduce(w);
}

Pi1Data pi1_presentation(const TwoComplex& x, VertexId base) {
  if (base >= x.vertex_count()) fail(ErrorCode::InvalidArgument, "base vertex outside the complex");
  if (!is_connected(x)) fail(ErrorCode::NotConnected, "complex has more than one component");
  Pi1Data d;
  d.complex = x;
  d.base = base;
  const VertexId roots[] = {base};
  d.forest = spanning_forest(x, roots);
  d.generator_of_pair.assign(x.edge_pair_count(), -1);
  std::vector<std::string> names;
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (d.forest.is_tree_edge(e)) continue;
    d.generator_of_pair[pair_of(e)] = static_cast<int>(names.size());
    d.generator_edges.push_back(e);
    names.push_back(x.edge_pair_name(pair_of(e)));
  }
  std::vector<Word> relators;
  for (CellId c = 0; c < x.cell_count(); ++c) {
    relators.push_back(d.rewrite(EdgePath{x.src(x.boundary(c).front()), x.boundary(c)}));
  }
  d.presentation = Presentation(std::move(names), std::move(relators));
  return d;
}

Homomorphism rho(const CohomologyClass& c, const Pi1Data& pi1) {
  const Cocycle& u = c.representative;
  if (u.base() != BaseSet{pi1.base} || u.values().size() != pi1.complex.edge_count()) {
    fail(ErrorCode::BaseMismatch, "class is not over (X, {b}) for this presentation");
  }
  Homomorphism h{u.group(), {}};
  for (std::size_t g = 0; g < pi1.presentation.rank(); ++g) h.images.push_back(evaluate(u, pi1.loop(g)));
  return h;
}

CohomologyClass epsilon(const Homomorphism& h, const Pi1Data& pi1) {
  const FiniteGroup& g = h.target;
  if (h.images.size() != pi1.presentation.rank()) {
    fail(ErrorCode::InvalidArgument, "homomorphism has the wrong number of images");
  }
  if (!satisfies_relators(pi1.presentation, g, h.images)) {
    fail(ErrorCode::RelatorViolation, "assignment does not kill every relator");
  }
  std::vector<Element> pairs(pi1.complex.edge_pair_count(), g.identity());
  for (std::size_t k = 0; k < pi1.generator_edges.size(); ++k) {
    pairs[pair_of(pi1.generator_edges[k])] = h.images[k];
  }
  const Cocycle u = cocycle_from_pairs(pi1.complex, g, pairs, {pi1.base});
  return class_of(pi1.complex, u, pi1.forest);
}

Cocycle epsilon_via_forest(const Homomorphism& h, const Pi1Data& pi1, const SpanningForest& forest) {
  const TwoComplex& x = pi1.complex;
  const FiniteGroup& g = h.target;
  std::vector<Element> pairs(x.edge_pair_count());
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    EdgePath l = forest.tree_path(x, x.src(e));
    l.letters.push_back(e);
    l = concat(x, l, reverse(x, forest.tree_path(x, x.tgt(e))));
    pairs[pair_of(e)] = evaluate(g, h.images, pi1.rewrite(l));
  }
  return cocycle_from_pairs(x, g, pairs, {pi1.base});
}

bool epsilon_forest_independence(const Homomorphism& h, const Pi1Data& pi1,
                                 const SpanningForest& forest) {
  if (forest.roots() != std::vector<VertexId>{pi1.base}) {
    fail(ErrorCode::RootNotInBaseSet, "second forest must be rooted at the base point");
  }
  const Cocycle other = epsilon_via_forest(h, pi1, forest);
  return class_of(pi1.complex, other, pi1.forest) == epsilon(h, pi1);
}

Homomorphism BasepointChange::pull_back(const Homomorphism& phi) const {
  Homomorphism out{phi.target, {}};
  for (const Word& w : images) out.images.push_back(evaluate(phi.target, phi.images, w));
  return out;
}

BasepointChange change_basepoint(const Pi1Data& at_b, const Pi1Data& at_a, const EdgePath& p) {
  const TwoComplex& x = at_b.complex;
  if (!is_composable(x, p) || p.start != at_b.base || p.end(x) != at_a.base) {
    fail(ErrorCode::EndpointMismatch, "path must run from " + x.vertex_name(at_b.base) + " to " +
                                          x.vertex_name(at_a.base));
  }
  BasepointChange out;
  const EdgePath back = reverse(x, p);
  for (std::size_t g = 0; g < at_a.presentation.rank(); ++g) {
    out.images.push_back(at_b.rewrite(concat(x, concat(x, p, at_a.loop(g)), back)));
  }
  return out;
}

}  // namespace vkc
