#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vkc/cochain.hpp"
#include "vkc/complex.hpp"
#include "vkc/correspondence.hpp"
#include "vkc/group.hpp"
#include "vkc/relative.hpp"

namespace vkc {

/// X = U u V with W = U n V split into components A_0..A_m, where A_0
/// holds the base point b = a_0. p_k (inside U) and q_k (inside V) connect
/// b to the chosen point a_k of A_k.
struct GluingData {
  TwoComplex complex;
  Subcomplex u;
  Subcomplex v;
  Subcomplex w;
  std::vector<Subcomplex> components;
  std::vector<VertexId> points;
  std::vector<EdgePath> p_paths;
  std::vector<EdgePath> q_paths;

  VertexId base() const { return points.front(); }
  std::size_t extra_count() const { return points.size() - 1; }
};

/// Checks the standing hypotheses and throws HypothesisViolation naming the
/// first one that fails: U u V = X, U and V connected, b in U n V, one
/// chosen point per component, connectors inside U and V. `extras` are
/// a_1..a_m and default to the least vertex of each other component;
/// connectors (one per extra) default to spanning-tree paths of U and V.
GluingData make_gluing(const TwoComplex& x, const Subcomplex& u, const Subcomplex& v, VertexId base,
                       std::vector<VertexId> extras = {}, std::vector<EdgePath> p_paths = {},
                       std::vector<EdgePath> q_paths = {});

struct CartesianReport {
  std::size_t total = 0;     // |H^1(X, Y)|
  std::size_t fibered = 0;   // |H^1(U) x_{H^1(W)} H^1(V)|
  bool commutes = false;     // both restrictions agree on W for every class
  bool injective = false;
  bool witnesses_ok = false; // every fibered pair glues back to a class mapping onto it
  bool bijective() const { return commutes && injective && witnesses_ok && total == fibered; }
};

/// Verifies by enumeration that (r_U, r_V) maps H^1(X, Y) bijectively onto
/// the fibered product over H^1(U n V, Y). Y must put exactly one point in
/// each component of U n V.
CartesianReport check_cartesian_pair(const TwoComplex& x, const Subcomplex& u,
                                     const Subcomplex& v, const BaseSet& y, const FiniteGroup& g,
                                     std::uint64_t budget = kDefaultBudget);

/// Glues u (on U) and v (on V) whose restrictions to W are gauge-equivalent:
/// v is re-gauged by the unique c on W (extended by 1 over the rest of V) and
/// the two pieces are joined. nullopt when the restrictions disagree.
std::optional<Cocycle> glue_pair(const TwoComplex& x, const Embedding& u_part,
                                 const Embedding& v_part, const Embedding& w_part,
                                 const Cocycle& u, const Cocycle& v, const BaseSet& y);

struct FamilyGlueResult {
  std::optional<CohomologyClass> glued;
  /// First pair of elements whose classes disagree on their intersection.
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

/// Checks that every element and pairwise intersection is connected and
/// contains b and that triple intersections are connected.
void check_family_hypotheses(const TwoComplex& x, const Cover& cover, VertexId base);

/// Glues classes h_k in H^1(U_k, b) (over the extracted elements, in cover
/// order) into the unique class of X restricting to each of them.
FamilyGlueResult glue_family_class(const TwoComplex& x, const Cover& cover,
                                   std::span<const CohomologyClass> classes, VertexId base);

/// A presentation built from pieces together with the comparison map
/// sending each of its generators to a word over pi_1(X, b).
struct GluedPresentation {
  Presentation presentation;
  std::vector<Word> to_pi1;
  Pi1Data pi1_x;
};

/// pi_1(U, b) * pi_1(V, b) with i_U(g) = i_V(g) for every generator g of
/// pi_1(W, b). Requires W connected.
GluedPresentation amalgamated_presentation(const GluingData& g);

/// Free product of pi_1(U_k, b) with the two images of every generator of
/// every pairwise intersection identified.
GluedPresentation colimit_presentation(const TwoComplex& x, const Cover& cover, VertexId base);

/// C = U' u V with the copy of A_0 identified with A_0, and the fold map
/// sigma: C -> X. Copies of U-only cells are named "U:<name>".
struct DoubledSpace {
  TwoComplex complex;
  std::vector<VertexId> sigma_vertex;
  std::vector<EdgeId> sigma_edge;
  /// X id -> C id through V (kNoVertex / kNoEdge outside V).
  std::vector<VertexId> from_v_vertex;
  std::vector<EdgeId> from_v_edge;
  /// X id -> C id through the copy U' (A_0 lands on V's cells).
  std::vector<VertexId> from_u_vertex;
  std::vector<EdgeId> from_u_edge;
  /// Images of U and V inside C.
  Subcomplex u_image;
  Subcomplex v_image;
  /// The tautological identification iota_k: A_k -> A'_k, as (vertex of
  /// A_k in X, vertex of A'_k in C) pairs for k = 1..m.
  std::vector<std::vector<std::pair<VertexId, VertexId>>> iota;

  EdgePath via_u(const EdgePath& x_path) const;
  EdgePath via_v(const EdgePath& x_path) const;
  EdgePath fold(const EdgePath& c_path) const;
};

/// Throws HypothesisViolation when W is connected (m = 0).
DoubledSpace build_double(const GluingData& g);

/// pi_1(C, b) * <t_1..t_m> with relators theta_hat_k(a) t_k theta_k(a)^-1
/// t_k^-1 for each generator a of pi_1(A_k, a_k); t_k maps to p_k q_k^-1.
GluedPresentation hnn_presentation(const GluingData& g);

/// Whether phi -> phi o to_pi1 is a bijection hom(pi_1(X, b), G) ->
/// hom(built, G): well defined, injective, and onto by cardinality.
struct HomBijectionReport {
  std::uint64_t built_count = 0;
  std::uint64_t pi1_count = 0;
  bool well_defined = false;
  bool injective = false;
  bool bijective() const { return well_defined && injective && built_count == pi1_count; }
};
HomBijectionReport check_hom_bijection(const GluedPresentation& glued, const FiniteGroup& g,
                                       std::uint64_t budget = kDefaultBudget);

struct TripleReport {
  std::size_t triples = 0;            // solutions (gamma, h, k)
  std::size_t relative_classes = 0;   // |H^1(X, {a, b})|
  std::size_t orbits = 0;             // diagonal-action orbits of solutions
  std::size_t pairs = 0;              // solutions (gamma, g)
  std::size_t absolute_classes = 0;   // |H^1(X, b)|
  bool map_into_solutions = false;    // each class lands on a solution
  bool map_injective = false;
  bool product_invariant = false;     // h k^-1 constant on every orbit
  bool orbits_match_pairs = false;    // (gamma, h, k) -> (gamma, h k^-1) is onto the pairs
  bool triples_bijective() const {
    return map_into_solutions && map_injective && triples == relative_classes;
  }
  bool pairs_bijective() const {
    return product_invariant && orbits_match_pairs && orbits == pairs && pairs == absolute_classes;
  }
};

/// Enumerates the triple description of H^1(X, {a, b}) through the doubled
/// space (m = 1 only) and checks both bijections.
TripleReport verify_triple_description(const GluingData& g, const FiniteGroup& group,
                                       std::uint64_t budget = kDefaultBudget);

}  // namespace vkc
