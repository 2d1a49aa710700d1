#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "vkc/complex.hpp"

namespace vkc {

using Rng = std::mt19937_64;

struct RandomComplexLimits {
  std::size_t max_vertices = 8;
  std::size_t max_edge_pairs = 12;
  std::size_t max_cells = 5;
  /// Cap on edge pairs minus (vertices - 1), which bounds every tree-slice
  /// enumeration by |G|^max_rank.
  std::size_t max_rank = 6;
};

/// Connected complex: a random spanning tree, extra edges (loops allowed)
/// up to the rank cap, and cells whose boundaries are products of one to
/// three signed basic loops at vertex 0.
TwoComplex random_complex(Rng& rng, const RandomComplexLimits& limits = {});

/// Random forest rooted at `roots`, grown by random edge choice instead of
/// breadth first. Every component must contain a root.
SpanningForest random_forest(const TwoComplex& x, std::span<const VertexId> roots, Rng& rng);

/// Adapted cover with 1..max_elements closed elements.
Cover random_adapted_cover(const TwoComplex& x, Rng& rng, std::size_t max_elements = 4);

/// X = U u V with U, V connected and U n V containing vertex `base`.
/// `want_components` fixes the number of components of U n V. Rejection
/// sampling; nullopt after `attempts` misses.
struct RandomSplit {
  Subcomplex u;
  Subcomplex v;
};
std::optional<RandomSplit> random_split(const TwoComplex& x, VertexId base, std::size_t want_components,
                                        Rng& rng, std::size_t attempts = 2000);

/// `count` distinct vertices other than `base`, in increasing order.
std::vector<VertexId> random_extra_points(const TwoComplex& x, VertexId base, std::size_t count,
                                          Rng& rng);

}  // namespace vkc
