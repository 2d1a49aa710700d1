#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vkc {

using VertexId = std::uint32_t;
/// Oriented edge. Edges come in pairs: 2k is the declared orientation,
/// 2k + 1 its reverse, so the involution is `e ^ 1`.
using EdgeId = std::uint32_t;
using CellId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

inline constexpr EdgeId reverse_edge(EdgeId e) { return e ^ 1u; }
inline constexpr std::uint32_t pair_of(EdgeId e) { return e >> 1; }
inline constexpr EdgeId forward_edge(std::uint32_t pair) { return pair << 1; }
inline constexpr bool is_reversed(EdgeId e) { return (e & 1u) != 0; }

/// Finite combinatorial 2-complex: vertices, oriented edges closed under
/// reversal, and 2-cells attached along closed edge loops.
class TwoComplex {
 public:
  VertexId add_vertex(std::string name);
  /// Adds the pair (name: src -> tgt, name': tgt -> src); returns the first.
  EdgeId add_edge(std::string name, VertexId src, VertexId tgt);
  /// Boundaries are stored as given; validate_complex reports bad ones.
  CellId add_cell(std::string name, std::vector<EdgeId> boundary);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return src_.size(); }
  std::size_t edge_pair_count() const { return src_.size() / 2; }
  std::size_t cell_count() const { return boundaries_.size(); }

  VertexId src(EdgeId e) const { return src_[e]; }
  VertexId tgt(EdgeId e) const { return src_[reverse_edge(e)]; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  /// Declared name, with a trailing ' for the reverse orientation.
  std::string edge_name(EdgeId e) const;
  const std::string& edge_pair_name(std::uint32_t pair) const { return edge_names_[pair]; }
  const std::string& cell_name(CellId c) const { return cell_names_[c]; }
  const std::vector<EdgeId>& boundary(CellId c) const { return boundaries_[c]; }

  /// Outgoing oriented edges of v in increasing id order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Accepts "e", "e'" and "~e".
  std::optional<EdgeId> find_edge(std::string_view name) const;
  std::optional<CellId> find_cell(std::string_view name) const;

  bool operator==(const TwoComplex&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;  // per pair
  std::vector<VertexId> src_;            // per oriented edge
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::string> cell_names_;
  std::vector<std::vector<EdgeId>> boundaries_;
};

/// Lists every violated invariant (empty when valid).
std::vector<std::string> validate_complex(const TwoComplex& x);

/// Composable edge word starting at `start`; empty means the constant path.
struct EdgePath {
  VertexId start = 0;
  std::vector<EdgeId> letters;

  bool is_constant() const { return letters.empty(); }
  VertexId end(const TwoComplex& x) const { return letters.empty() ? start : x.tgt(letters.back()); }
  bool operator==(const EdgePath&) const = default;
};

/// Checked construction; throws NotComposable.
EdgePath make_path(const TwoComplex& x, VertexId start, std::vector<EdgeId> letters);
bool is_composable(const TwoComplex& x, const EdgePath& p);
EdgePath concat(const TwoComplex& x, const EdgePath& p, const EdgePath& q);
EdgePath reverse(const TwoComplex& x, const EdgePath& p);

/// Membership flags over a parent complex. Edge membership is per pair, so
/// a subcomplex is always closed under reversal.
class Subcomplex {
 public:
  Subcomplex() = default;
  static Subcomplex empty(const TwoComplex& x);
  static Subcomplex whole(const TwoComplex& x);
  /// Smallest closed subcomplex containing the given cells, edges, vertices.
  static Subcomplex closure(const TwoComplex& x, std::span<const VertexId> vertices,
                            std::span<const EdgeId> edges, std::span<const CellId> cells);

  bool has_vertex(VertexId v) const { return vertices_[v] != 0; }
  bool has_edge(EdgeId e) const { return pairs_[pair_of(e)] != 0; }
  bool has_cell(CellId c) const { return cells_[c] != 0; }

  void add_vertex(VertexId v) { vertices_[v] = 1; }
  void add_edge(const TwoComplex& x, EdgeId e);
  void add_cell(const TwoComplex& x, CellId c);

  std::vector<VertexId> vertices() const;
  /// Forward orientation of each member pair.
  std::vector<EdgeId> edges() const;
  std::vector<CellId> cells() const;
  std::size_t vertex_count() const;
  bool is_empty() const { return vertex_count() == 0; }

  /// Endpoints of member edges and boundary edges of member cells are members.
  bool is_closed(const TwoComplex& x) const;

  Subcomplex intersect(const Subcomplex& o) const;
  Subcomplex unite(const Subcomplex& o) const;
  bool contains(const Subcomplex& o) const;
  bool contains_path(const TwoComplex& x, const EdgePath& p) const;

  bool operator==(const Subcomplex&) const = default;

 private:
  std::vector<char> vertices_;
  std::vector<char> pairs_;
  std::vector<char> cells_;
};

/// A subcomplex turned into a standalone complex, with id maps both ways.
/// Local ids follow parent order; local edge orientation matches the parent.
struct Embedding {
  TwoComplex complex;
  Subcomplex members;
  std::vector<VertexId> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
  std::vector<CellId> cell_to_parent;
  std::vector<VertexId> vertex_from_parent;  // kNoVertex when absent
  std::vector<EdgeId> edge_from_parent;      // kNoEdge when absent

  VertexId local_vertex(VertexId parent) const { return vertex_from_parent[parent]; }
  EdgeId local_edge(EdgeId parent) const { return edge_from_parent[parent]; }
  EdgePath to_parent(const EdgePath& local) const;
  /// Requires the path to lie in the subcomplex.
  EdgePath to_local(const EdgePath& parent) const;
};

Embedding extract(const TwoComplex& x, const Subcomplex& s);

/// Connected components of `s` under its member edges, each sorted, ordered
/// by least vertex.
std::vector<std::vector<VertexId>> components(const TwoComplex& x, const Subcomplex& s);
std::vector<std::vector<VertexId>> components(const TwoComplex& x);
/// Components as closed subcomplexes (member edges and cells included).
std::vector<Subcomplex> component_subcomplexes(const TwoComplex& x, const Subcomplex& s);
bool is_connected(const TwoComplex& x, const Subcomplex& s);
bool is_connected(const TwoComplex& x);

/// Breadth-first forest. parent_edge(v) is the tree edge pointing into v.
class SpanningForest {
 public:
  const std::vector<VertexId>& roots() const { return roots_; }
  /// kNoEdge for roots and for vertices no root reaches.
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  VertexId root_of(VertexId v) const { return root_of_[v]; }
  bool covers(VertexId v) const { return root_of_[v] != kNoVertex; }
  bool covers_all() const;
  bool is_tree_edge(EdgeId e) const;
  /// Path root -> v along tree edges; constant at a root.
  EdgePath tree_path(const TwoComplex& x, VertexId v) const;
  /// Vertices in BFS discovery order.
  const std::vector<VertexId>& order() const { return order_; }

 private:
  friend SpanningForest grow_forest(const TwoComplex&, std::span<const VertexId>, bool);
  friend SpanningForest forest_from_parents(const TwoComplex&, std::span<const VertexId>,
                                            std::span<const EdgeId>);
  std::vector<VertexId> roots_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> root_of_;
  std::vector<VertexId> order_;
  std::vector<char> tree_pair_;
};

/// Forest with exactly one root per component that contains a root; throws
/// RootCountMismatch when a component holds two roots. Ties are broken by
/// edge order.
SpanningForest spanning_forest(const TwoComplex& x, std::span<const VertexId> roots);
/// Multi-source variant: several roots may share a component, each growing
/// its own tree. Throws BaseSetMissesComponent if some vertex is unreached.
SpanningForest rooted_forest(const TwoComplex& x, std::span<const VertexId> roots);
SpanningForest grow_forest(const TwoComplex& x, std::span<const VertexId> roots,
                           bool allow_shared_components);
/// A forest given by its parent edges (kNoEdge at roots and at uncovered
/// vertices). parent_edges[v] must end at v and following parents must reach
/// a root; InvalidArgument otherwise.
SpanningForest forest_from_parents(const TwoComplex& x, std::span<const VertexId> roots,
                                   std::span<const EdgeId> parent_edges);

struct Cover {
  std::vector<Subcomplex> elements;
};

/// What `is_adapted` found uncovered first (cells, then edges, then vertices).
struct Orphan {
  enum class Kind { Vertex, Edge, Cell } kind;
  std::uint32_t id;
};

struct AdaptedReport {
  bool adapted = true;
  std::optional<Orphan> witness;
};

AdaptedReport is_adapted(const TwoComplex& x, const Cover& cover);

struct PathSegment {
  EdgePath path;
  std::size_t element = 0;
};

/// Greedy subdivision: each segment takes the first element holding its first
/// letter and extends as far as that element allows. Throws NotAdapted.
std::vector<PathSegment> subdivide_path(const TwoComplex& x, const EdgePath& p,
                                        const Cover& cover);

}  // namespace vkc
