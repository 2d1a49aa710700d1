#include "vkc/random.hpp"

#include <algorithm>
#include <string>

#include "vkc/error.hpp"

namespace vkc {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

}  // namespace

TwoComplex random_complex(Rng& rng, const RandomComplexLimits& limits) {
  TwoComplex x;
  const std::size_t n = pick(rng, 1, limits.max_vertices);
  for (std::size_t i = 0; i < n; ++i) x.add_vertex("v" + std::to_string(i));

  std::size_t edge_no = 0;
  auto add = [&](VertexId a, VertexId b) { return x.add_edge("e" + std::to_string(edge_no++), a, b); };
  // Tree paths from vertex 0, kept alongside the tree edges.
  std::vector<std::vector<EdgeId>> path(n);
  for (VertexId i = 1; i < n; ++i) {
    const auto j = static_cast<VertexId>(pick(rng, 0, i - 1));
    const EdgeId e = coin(rng) ? add(j, i) : reverse_edge(add(i, j));
    path[i] = path[j];
    path[i].push_back(e);
  }

  const std::size_t room = limits.max_edge_pairs >= n - 1 ? limits.max_edge_pairs - (n - 1) : 0;
  const std::size_t extra = pick(rng, 0, std::min(limits.max_rank, room));
  std::vector<EdgeId> extras;
  for (std::size_t k = 0; k < extra; ++k) {
    extras.push_back(add(static_cast<VertexId>(pick(rng, 0, n - 1)),
                         static_cast<VertexId>(pick(rng, 0, n - 1))));
  }
  if (extras.empty()) return x;

  auto basic_loop = [&](EdgeId e) {
    std::vector<EdgeId> w = path[x.src(e)];
    w.push_back(e);
    const auto& back = path[x.tgt(e)];
    for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back(reverse_edge(*it));
    return w;
  };
  const std::size_t cells = pick(rng, 0, limits.max_cells);
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<EdgeId> boundary;
    const std::size_t factors = pick(rng, 1, 3);
    for (std::size_t f = 0; f < factors; ++f) {
      EdgeId e = extras[pick(rng, 0, extras.size() - 1)];
      if (coin(rng)) e = reverse_edge(e);
      const auto w = basic_loop(e);
      boundary.insert(boundary.end(), w.begin(), w.end());
    }
    x.add_cell("c" + std::to_string(c), std::move(boundary));
  }
  return x;
}

SpanningForest random_forest(const TwoComplex& x, std::span<const VertexId> roots, Rng& rng) {
  std::vector<EdgeId> parent(x.vertex_count(), kNoEdge);
  std::vector<char> covered(x.vertex_count(), 0);
  for (VertexId r : roots) covered.at(r) = 1;
  for (;;) {
    std::vector<EdgeId> frontier;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
      if (covered[x.src(e)] && !covered[x.tgt(e)]) frontier.push_back(e);
    }
    if (frontier.empty()) break;
    const EdgeId e = frontier[pick(rng, 0, frontier.size() - 1)];
    parent[x.tgt(e)] = e;
    covered[x.tgt(e)] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    fail(ErrorCode::BaseSetMissesComponent, "some component has no root");
  }
  return forest_from_parents(x, roots, parent);
}

Cover random_adapted_cover(const TwoComplex& x, Rng& rng, std::size_t max_elements) {
  const std::size_t k = pick(rng, 1, std::max<std::size_t>(1, max_elements));
  std::vector<Subcomplex> els(k, Subcomplex::empty(x));
  auto any = [&](auto has) {
    return std::any_of(els.begin(), els.end(), has);
  };
  for (CellId c = 0; c < x.cell_count(); ++c) {
    els[pick(rng, 0, k - 1)].add_cell(x, c);
    if (coin(rng)) els[pick(rng, 0, k - 1)].add_cell(x, c);
  }
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    if (!any([&](const Subcomplex& s) { return s.has_edge(e); }) || pick(rng, 0, 3) == 0) {
      els[pick(rng, 0, k - 1)].add_edge(x, e);
    }
  }
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (!any([&](const Subcomplex& s) { return s.has_vertex(v); })) els[pick(rng, 0, k - 1)].add_vertex(v);
  }
  Cover cover;
  for (Subcomplex& s : els) {
    if (!s.is_empty()) cover.elements.push_back(std::move(s));
  }
  return cover;
}

std::optional<RandomSplit> random_split(const TwoComplex& x, VertexId base, std::size_t want_components,
                                        Rng& rng, std::size_t attempts) {
  const std::size_t n = x.vertex_count();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    // Vertex sides: SU grown from the base, SV = complement of SU plus extras.
    std::vector<char> su(n, 0), sv(n, 0);
    su[base] = 1;
    const std::size_t target = pick(rng, 1, n);
    for (std::size_t size = 1; size < target;) {
      std::vector<VertexId> next;
      for (EdgeId e = 0; e < x.edge_count(); ++e) {
        if (su[x.src(e)] && !su[x.tgt(e)]) next.push_back(x.tgt(e));
      }
      if (next.empty()) break;
      su[next[pick(rng, 0, next.size() - 1)]] = 1;
      ++size;
    }
    for (VertexId v = 0; v < n; ++v) sv[v] = !su[v] || v == base || pick(rng, 0, 2) == 0;

    Subcomplex u = Subcomplex::empty(x), v = Subcomplex::empty(x);
    bool ok = true;
    for (VertexId p = 0; p < n; ++p) {
      if (su[p]) u.add_vertex(p);
      if (sv[p]) v.add_vertex(p);
    }
    for (EdgeId e = 0; e < x.edge_count() && ok; e += 2) {
      const bool can_u = su[x.src(e)] && su[x.tgt(e)];
      const bool can_v = sv[x.src(e)] && sv[x.tgt(e)];
      if (!can_u && !can_v) ok = false;
      const std::size_t r = pick(rng, 0, 2);
      if (can_u && (!can_v || r != 1)) u.add_edge(x, e);
      if (can_v && (!can_u || r != 0)) v.add_edge(x, e);
    }
    for (CellId c = 0; c < x.cell_count() && ok; ++c) {
      auto fits = [&](const Subcomplex& s) {
        return std::all_of(x.boundary(c).begin(), x.boundary(c).end(),
                           [&](EdgeId e) { return s.has_edge(e); });
      };
      const bool can_u = fits(u), can_v = fits(v);
      if (!can_u && !can_v) ok = false;
      const std::size_t r = pick(rng, 0, 2);
      if (can_u && (!can_v || r != 1)) u.add_cell(x, c);
      if (can_v && (!can_u || r != 0)) v.add_cell(x, c);
    }
    if (!ok || !is_connected(x, u) || !is_connected(x, v)) continue;
    if (components(x, u.intersect(v)).size() != want_components) continue;
    return RandomSplit{std::move(u), std::move(v)};
  }
  return std::nullopt;
}

std::vector<VertexId> random_extra_points(const TwoComplex& x, VertexId base, std::size_t count,
                                          Rng& rng) {
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (v != base) pool.push_back(v);
  }
  if (pool.size() < count) fail(ErrorCode::InvalidArgument, "not enough vertices for extra points");
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace vkc
