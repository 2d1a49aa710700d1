#include "vkc/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "vkc/error.hpp"

namespace vkc {

VertexId TwoComplex::add_vertex(std::string name) {
  if (find_vertex(name)) fail(ErrorCode::InvalidArgument, "duplicate vertex '" + name + "'");
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  return static_cast<VertexId>(vertex_names_.size() - 1);
}

EdgeId TwoComplex::add_edge(std::string name, VertexId src, VertexId tgt) {
  if (src >= vertex_count() || tgt >= vertex_count()) {
    fail(ErrorCode::InvalidArgument, "edge '" + name + "' has an endpoint outside the complex");
  }
  if (name.empty() || name.back() == '\'' || name.front() == '~') {
    fail(ErrorCode::InvalidArgument, "edge name '" + name + "' is reserved");
  }
  if (find_edge(name)) fail(ErrorCode::InvalidArgument, "duplicate edge '" + name + "'");
  const auto e = static_cast<EdgeId>(src_.size());
  edge_names_.push_back(std::move(name));
  src_.push_back(src);
  src_.push_back(tgt);
  out_[src].push_back(e);
  out_[tgt].push_back(e + 1);
  return e;
}

CellId TwoComplex::add_cell(std::string name, std::vector<EdgeId> boundary) {
  for (EdgeId e : boundary) {
    if (e >= edge_count()) fail(ErrorCode::InvalidArgument, "cell '" + name + "' uses an unknown edge");
  }
  if (find_cell(name)) fail(ErrorCode::InvalidArgument, "duplicate cell '" + name + "'");
  cell_names_.push_back(std::move(name));
  boundaries_.push_back(std::move(boundary));
  return static_cast<CellId>(cell_names_.size() - 1);
}

std::string TwoComplex::edge_name(EdgeId e) const {
  const std::string& base = edge_names_[pair_of(e)];
  return is_reversed(e) ? base + "'" : base;
}

std::optional<VertexId> TwoComplex::find_vertex(std::string_view name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> TwoComplex::find_edge(std::string_view name) const {
  bool reversed = false;
  if (!name.empty() && name.front() == '~') {
    reversed = true;
    name.remove_prefix(1);
  } else if (!name.empty() && name.back() == '\'') {
    reversed = true;
    name.remove_suffix(1);
  }
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end()) return std::nullopt;
  const EdgeId e = forward_edge(static_cast<std::uint32_t>(it - edge_names_.begin()));
  return reversed ? reverse_edge(e) : e;
}

std::optional<CellId> TwoComplex::find_cell(std::string_view name) const {
  auto it = std::find(cell_names_.begin(), cell_names_.end(), name);
  if (it == cell_names_.end()) return std::nullopt;
  return static_cast<CellId>(it - cell_names_.begin());
}

std::vector<std::string> validate_complex(const TwoComplex& x) {
  std::vector<std::string> issues;
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    if (x.src(e) >= x.vertex_count()) {
      issues.push_back("edge " + x.edge_name(e) + ": source outside the complex");
      continue;
    }
    if (reverse_edge(reverse_edge(e)) != e || x.src(reverse_edge(e)) != x.tgt(e) ||
        x.tgt(reverse_edge(e)) != x.src(e)) {
      issues.push_back("edge " + x.edge_name(e) + ": reversal is not an involution");
    }
  }
  for (CellId c = 0; c < x.cell_count(); ++c) {
    const auto& b = x.boundary(c);
    if (b.empty()) {
      issues.push_back("cell " + x.cell_name(c) + ": empty boundary");
      continue;
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      if (x.tgt(b[i]) != x.src(b[i + 1])) {
        issues.push_back("cell " + x.cell_name(c) + ": boundary breaks between " +
                         x.edge_name(b[i]) + " and " + x.edge_name(b[i + 1]));
      }
    }
    if (x.tgt(b.back()) != x.src(b.front())) {
      issues.push_back("cell " + x.cell_name(c) + ": boundary is not closed");
    }
  }
  return issues;
}

bool is_composable(const TwoComplex& x, const EdgePath& p) {
  VertexId at = p.start;
  if (at >= x.vertex_count()) return false;
  for (EdgeId e : p.letters) {
    if (e >= x.edge_count() || x.src(e) != at) return false;
    at = x.tgt(e);
  }
  return true;
}

EdgePath make_path(const TwoComplex& x, VertexId start, std::vector<EdgeId> letters) {
  EdgePath p{start, std::move(letters)};
  if (!is_composable(x, p)) fail(ErrorCode::NotComposable, "edge word is not a path");
  return p;
}

EdgePath concat(const TwoComplex& x, const EdgePath& p, const EdgePath& q) {
  if (p.end(x) != q.start) {
    fail(ErrorCode::NotComposable, "path ends at " + x.vertex_name(p.end(x)) +
                                       " but the next starts at " + x.vertex_name(q.start));
  }
  EdgePath out = p;
  out.letters.insert(out.letters.end(), q.letters.begin(), q.letters.end());
  return out;
}

EdgePath reverse(const TwoComplex& x, const EdgePath& p) {
  EdgePath out{p.end(x), {}};
  out.letters.reserve(p.letters.size());
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) {
    out.letters.push_back(reverse_edge(*it));
  }
  return out;
}

// --- Subcomplex --------------------------------------------------------------

Subcomplex Subcomplex::empty(const TwoComplex& x) {
  Subcomplex s;
  s.vertices_.assign(x.vertex_count(), 0);
  s.pairs_.assign(x.edge_pair_count(), 0);
  s.cells_.assign(x.cell_count(), 0);
  return s;
}

Subcomplex Subcomplex::whole(const TwoComplex& x) {
  Subcomplex s;
  s.vertices_.assign(x.vertex_count(), 1);
  s.pairs_.assign(x.edge_pair_count(), 1);
  s.cells_.assign(x.cell_count(), 1);
  return s;
}

void Subcomplex::add_edge(const TwoComplex& x, EdgeId e) {
  pairs_[pair_of(e)] = 1;
  vertices_[x.src(e)] = 1;
  vertices_[x.tgt(e)] = 1;
}

void Subcomplex::add_cell(const TwoComplex& x, CellId c) {
  cells_[c] = 1;
  for (EdgeId e : x.boundary(c)) add_edge(x, e);
}

Subcomplex Subcomplex::closure(const TwoComplex& x, std::span<const VertexId> vertices,
                               std::span<const EdgeId> edges, std::span<const CellId> cells) {
  Subcomplex s = empty(x);
  for (VertexId v : vertices) s.add_vertex(v);
  for (EdgeId e : edges) s.add_edge(x, e);
  for (CellId c : cells) s.add_cell(x, c);
  return s;
}

std::vector<VertexId> Subcomplex::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> Subcomplex::edges() const {
  std::vector<EdgeId> out;
  for (std::uint32_t k = 0; k < pairs_.size(); ++k) {
    if (pairs_[k]) out.push_back(forward_edge(k));
  }
  return out;
}

std::vector<CellId> Subcomplex::cells() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < cells_.size(); ++c) {
    if (cells_[c]) out.push_back(c);
  }
  return out;
}

std::size_t Subcomplex::vertex_count() const {
  return static_cast<std::size_t>(std::count(vertices_.begin(), vertices_.end(), 1));
}

bool Subcomplex::is_closed(const TwoComplex& x) const {
  for (EdgeId e : edges()) {
    if (!has_vertex(x.src(e)) || !has_vertex(x.tgt(e))) return false;
  }
  for (CellId c : cells()) {
    for (EdgeId e : x.boundary(c)) {
      if (!has_edge(e)) return false;
    }
  }
  return true;
}

namespace {

template <typename Op>
std::vector<char> zip_flags(const std::vector<char>& a, const std::vector<char>& b, Op op) {
  std::vector<char> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i] != 0, b[i] != 0) ? 1 : 0;
  return out;
}

}  // namespace

Subcomplex Subcomplex::intersect(const Subcomplex& o) const {
  Subcomplex s;
  auto both = [](bool a, bool b) { return a && b; };
  s.vertices_ = zip_flags(vertices_, o.vertices_, both);
  s.pairs_ = zip_flags(pairs_, o.pairs_, both);
  s.cells_ = zip_flags(cells_, o.cells_, both);
  return s;
}

Subcomplex Subcomplex::unite(const Subcomplex& o) const {
  Subcomplex s;
  auto either = [](bool a, bool b) { return a || b; };
  s.vertices_ = zip_flags(vertices_, o.vertices_, either);
  s.pairs_ = zip_flags(pairs_, o.pairs_, either);
  s.cells_ = zip_flags(cells_, o.cells_, either);
  return s;
}

bool Subcomplex::contains(const Subcomplex& o) const { return intersect(o) == o; }

bool Subcomplex::contains_path(const TwoComplex& x, const EdgePath& p) const {
  if (!has_vertex(p.start)) return false;
  for (EdgeId e : p.letters) {
    if (!has_edge(e)) return false;
  }
  (void)x;
  return true;
}

// --- Embedding ---------------------------------------------------------------

EdgePath Embedding::to_parent(const EdgePath& local) const {
  EdgePath out{vertex_to_parent[local.start], {}};
  out.letters.reserve(local.letters.size());
  for (EdgeId e : local.letters) out.letters.push_back(edge_to_parent[e]);
  return out;
}

EdgePath Embedding::to_local(const EdgePath& parent) const {
  EdgePath out{local_vertex(parent.start), {}};
  if (out.start == kNoVertex) fail(ErrorCode::InvalidArgument, "path starts outside the subcomplex");
  for (EdgeId e : parent.letters) {
    const EdgeId l = local_edge(e);
    if (l == kNoEdge) fail(ErrorCode::InvalidArgument, "path leaves the subcomplex");
    out.letters.push_back(l);
  }
  return out;
}

Embedding extract(const TwoComplex& x, const Subcomplex& s) {
  if (!s.is_closed(x)) fail(ErrorCode::InvalidArgument, "subcomplex is not closed");
  Embedding m;
  m.members = s;
  m.vertex_from_parent.assign(x.vertex_count(), kNoVertex);
  m.edge_from_parent.assign(x.edge_count(), kNoEdge);
  for (VertexId v : s.vertices()) {
    m.vertex_from_parent[v] = m.complex.add_vertex(x.vertex_name(v));
    m.vertex_to_parent.push_back(v);
  }
  for (EdgeId e : s.edges()) {
    const EdgeId l = m.complex.add_edge(x.edge_pair_name(pair_of(e)), m.vertex_from_parent[x.src(e)],
                                        m.vertex_from_parent[x.tgt(e)]);
    m.edge_from_parent[e] = l;
    m.edge_from_parent[reverse_edge(e)] = reverse_edge(l);
    m.edge_to_parent.push_back(e);
    m.edge_to_parent.push_back(reverse_edge(e));
  }
  for (CellId c : s.cells()) {
    std::vector<EdgeId> b;
    for (EdgeId e : x.boundary(c)) b.push_back(m.edge_from_parent[e]);
    m.complex.add_cell(x.cell_name(c), std::move(b));
    m.cell_to_parent.push_back(c);
  }
  return m;
}

// --- Connectivity ------------------------------------------------------------

std::vector<std::vector<VertexId>> components(const TwoComplex& x, const Subcomplex& s) {
  std::vector<VertexId> label(x.vertex_count(), kNoVertex);
  std::vector<std::vector<VertexId>> out;
  for (VertexId v0 = 0; v0 < x.vertex_count(); ++v0) {
    if (!s.has_vertex(v0) || label[v0] != kNoVertex) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{v0};
    label[v0] = v0;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (EdgeId e : x.out_edges(v)) {
        const VertexId w = x.tgt(e);
        if (s.has_edge(e) && label[w] == kNoVertex) {
          label[w] = v0;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const TwoComplex& x) {
  return components(x, Subcomplex::whole(x));
}

std::vector<Subcomplex> component_subcomplexes(const TwoComplex& x, const Subcomplex& s) {
  std::vector<Subcomplex> out;
  for (const auto& comp : components(x, s)) {
    Subcomplex c = Subcomplex::empty(x);
    for (VertexId v : comp) c.add_vertex(v);
    for (EdgeId e : s.edges()) {
      if (c.has_vertex(x.src(e))) c.add_edge(x, e);
    }
    for (CellId cell : s.cells()) {
      if (c.has_vertex(x.src(x.boundary(cell).front()))) c.add_cell(x, cell);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const TwoComplex& x, const Subcomplex& s) { return components(x, s).size() == 1; }
bool is_connected(const TwoComplex& x) { return components(x).size() == 1; }

// --- Spanning forests --------------------------------------------------------

SpanningForest grow_forest(const TwoComplex& x, std::span<const VertexId> roots,
                           bool allow_shared_components) {
  SpanningForest f;
  f.parent_edge_.assign(x.vertex_count(), kNoEdge);
  f.root_of_.assign(x.vertex_count(), kNoVertex);
  f.tree_pair_.assign(x.edge_pair_count(), 0);
  std::deque<VertexId> queue;
  for (VertexId r : roots) {
    if (r >= x.vertex_count()) fail(ErrorCode::InvalidArgument, "root outside the complex");
    if (f.root_of_[r] != kNoVertex) continue;  // repeated root
    f.roots_.push_back(r);
    f.root_of_[r] = r;
    queue.push_back(r);
    f.order_.push_back(r);
  }
  if (!allow_shared_components) {
    // Every root must lie in its own component.
    std::vector<VertexId> seen(x.vertex_count(), kNoVertex);
    for (VertexId r : f.roots_) {
      std::deque<VertexId> q{r};
      if (seen[r] != kNoVertex) {
        fail(ErrorCode::RootCountMismatch, "roots " + x.vertex_name(seen[r]) + " and " +
                                               x.vertex_name(r) + " share a component");
      }
      seen[r] = r;
      while (!q.empty()) {
        const VertexId v = q.front();
        q.pop_front();
        for (EdgeId e : x.out_edges(v)) {
          const VertexId w = x.tgt(e);
          if (seen[w] == kNoVertex) {
            seen[w] = r;
            q.push_back(w);
          } else if (seen[w] != r) {
            fail(ErrorCode::RootCountMismatch, "roots " + x.vertex_name(seen[w]) + " and " +
                                                   x.vertex_name(r) + " share a component");
          }
        }
      }
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : x.out_edges(v)) {
      const VertexId w = x.tgt(e);
      if (f.root_of_[w] != kNoVertex) continue;
      f.root_of_[w] = f.root_of_[v];
      f.parent_edge_[w] = e;
      f.tree_pair_[pair_of(e)] = 1;
      f.order_.push_back(w);
      queue.push_back(w);
    }
  }
  return f;
}

SpanningForest spanning_forest(const TwoComplex& x, std::span<const VertexId> roots) {
  return grow_forest(x, roots, false);
}

SpanningForest rooted_forest(const TwoComplex& x, std::span<const VertexId> roots) {
  SpanningForest f = grow_forest(x, roots, true);
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (!f.covers(v)) {
      fail(ErrorCode::BaseSetMissesComponent,
           "vertex " + x.vertex_name(v) + " lies in a component without a root");
    }
  }
  return f;
}

bool SpanningForest::covers_all() const {
  return std::none_of(root_of_.begin(), root_of_.end(), [](VertexId r) { return r == kNoVertex; });
}

bool SpanningForest::is_tree_edge(EdgeId e) const { return tree_pair_[pair_of(e)] != 0; }

EdgePath SpanningForest::tree_path(const TwoComplex& x, VertexId v) const {
  if (root_of_[v] == kNoVertex) fail(ErrorCode::InvalidArgument, "vertex not covered by the forest");
  std::vector<EdgeId> rev;
  VertexId at = v;
  while (parent_edge_[at] != kNoEdge) {
    rev.push_back(parent_edge_[at]);
    at = x.src(parent_edge_[at]);
  }
  return EdgePath{at, std::vector<EdgeId>(rev.rbegin(), rev.rend())};
}

// --- Covers ------------------------------------------------------------------

AdaptedReport is_adapted(const TwoComplex& x, const Cover& cover) {
  auto any = [&](auto pred) {
    return std::any_of(cover.elements.begin(), cover.elements.end(), pred);
  };
  for (CellId c = 0; c < x.cell_count(); ++c) {
    if (!any([&](const Subcomplex& s) { return s.has_cell(c); })) {
      return {false, Orphan{Orphan::Kind::Cell, c}};
    }
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (!any([&](const Subcomplex& s) { return s.has_edge(e); })) {
      return {false, Orphan{Orphan::Kind::Edge, e}};
    }
  }
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (!any([&](const Subcomplex& s) { return s.has_vertex(v); })) {
      return {false, Orphan{Orphan::Kind::Vertex, v}};
    }
  }
  return {};
}

std::vector<PathSegment> subdivide_path(const TwoComplex& x, const EdgePath& p,
                                        const Cover& cover) {
  if (!is_adapted(x, cover).adapted) fail(ErrorCode::NotAdapted, "cover is not adapted");
  std::vector<PathSegment> out;
  if (p.letters.empty()) {
    for (std::size_t k = 0; k < cover.elements.size(); ++k) {
      if (cover.elements[k].has_vertex(p.start)) return {{p, k}};
    }
    fail(ErrorCode::NotAdapted, "start vertex lies in no element");
  }
  std::size_t i = 0;
  VertexId at = p.start;
  while (i < p.letters.size()) {
    std::size_t k = 0;
    while (!cover.elements[k].has_edge(p.letters[i])) ++k;  // adapted, so terminates
    PathSegment seg{EdgePath{at, {}}, k};
    while (i < p.letters.size() && cover.elements[k].has_edge(p.letters[i])) {
      seg.path.letters.push_back(p.letters[i]);
      at = x.tgt(p.letters[i]);
      ++i;
    }
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace vkc

namespace vkc {

SpanningForest forest_from_parents(const TwoComplex& x, std::span<const VertexId> roots,
                                   std::span<const EdgeId> parent_edges) {
  const std::size_t n = x.vertex_count();
  if (parent_edges.size() != n) fail(ErrorCode::InvalidArgument, "need one parent entry per vertex");
  SpanningForest f;
  f.parent_edge_.assign(parent_edges.begin(), parent_edges.end());
  f.root_of_.assign(n, kNoVertex);
  f.tree_pair_.assign(x.edge_pair_count(), 0);
  std::vector<std::size_t> depth(n, 0);
  for (VertexId r : roots) {
    if (r >= n || f.root_of_[r] != kNoVertex) fail(ErrorCode::InvalidArgument, "bad or repeated root");
    if (parent_edges[r] != kNoEdge) fail(ErrorCode::InvalidArgument, "a root has a parent edge");
    f.roots_.push_back(r);
    f.root_of_[r] = r;
  }
  for (VertexId v = 0; v < n; ++v) {
    const EdgeId e = parent_edges[v];
    if (e == kNoEdge) continue;
    if (e >= x.edge_count() || x.tgt(e) != v) {
      fail(ErrorCode::InvalidArgument, "parent edge of " + x.vertex_name(v) + " does not end there");
    }
    f.tree_pair_[pair_of(e)] = 1;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (parent_edges[v] == kNoEdge) continue;
    // Walk up; a chain longer than n means a cycle.
    VertexId w = v;
    std::size_t steps = 0;
    while (parent_edges[w] != kNoEdge && steps <= n) {
      w = x.src(parent_edges[w]);
      ++steps;
    }
    if (steps > n || f.root_of_[w] != w) {
      fail(ErrorCode::InvalidArgument, "parents of " + x.vertex_name(v) + " do not lead to a root");
    }
    f.root_of_[v] = w;
    depth[v] = steps;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (f.root_of_[v] != kNoVertex) f.order_.push_back(v);
  }
  std::stable_sort(f.order_.begin(), f.order_.end(),
                   [&](VertexId a, VertexId b) { return depth[a] < depth[b]; });
  return f;
}

}  // namespace vkc
