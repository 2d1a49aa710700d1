#pragma once

#include <vector>

#include "vkc/cochain.hpp"
#include "vkc/complex.hpp"
#include "vkc/group.hpp"

namespace vkc {

/// Edge-path presentation of pi_1(X, b) from a breadth-first spanning tree:
/// one generator per non-tree edge pair, one relator per 2-cell.
struct Pi1Data {
  TwoComplex complex;
  VertexId base = 0;
  SpanningForest forest;
  Presentation presentation;
  /// Declared orientation of the edge behind each generator.
  std::vector<EdgeId> generator_edges;
  /// Generator index per edge pair, -1 for tree pairs.
  std::vector<int> generator_of_pair;

  /// tree_path(src e) . e . reverse(tree_path(tgt e)) for the generator's edge.
  EdgePath loop(std::size_t generator) const;
  /// Word read off a path by dropping tree letters. For a loop at the base
  /// this is its class in the presentation.
  Word rewrite(const EdgePath& path) const;
};

/// Throws NotConnected when X is disconnected.
Pi1Data pi1_presentation(const TwoComplex& x, VertexId base);

/// Generator g goes to the class representative's value on loop(g).
/// Throws BaseMismatch unless the class is over (X, {b}).
Homomorphism rho(const CohomologyClass& c, const Pi1Data& pi1);

/// Tree edges go to 1 and each non-tree edge to the image of its generator.
/// Throws RelatorViolation when h is not a homomorphism.
CohomologyClass epsilon(const Homomorphism& h, const Pi1Data& pi1);

/// The cocycle p -> h(l(p)) where l closes p up with tree paths of `forest`
/// instead of the presentation's own tree. Not canonicalized.
Cocycle epsilon_via_forest(const Homomorphism& h, const Pi1Data& pi1, const SpanningForest& forest);

/// Whether the cocycles built from both forests are gauge-equivalent.
bool epsilon_forest_independence(const Homomorphism& h, const Pi1Data& pi1,
                                 const SpanningForest& forest);

/// Conjugation r -> p r p^-1 for a path p from b to a, realized on
/// presentations: each generator of pi_1(X, a) is sent to a word over the
/// generators of pi_1(X, b).
struct BasepointChange {
  std::vector<Word> images;

  /// phi -> phi o pi(p), a map hom(pi_1(X, b), G) -> hom(pi_1(X, a), G).
  Homomorphism pull_back(const Homomorphism& phi) const;
};

/// Throws EndpointMismatch unless p runs from at_b.base to at_a.base.
BasepointChange change_basepoint(const Pi1Data& at_b, const Pi1Data& at_a, const EdgePath& p);

}  // namespace vkc
