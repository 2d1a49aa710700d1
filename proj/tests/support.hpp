#pragma once

// Shared generators and brute-force oracles for the unit tests. Nothing here
// calls into the library's enumeration code; the oracles are deliberately
// naive so they can be trusted on small inputs.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vkc/cochain.hpp"
#include "vkc/complex.hpp"
#include "vkc/error.hpp"
#include "vkc/group.hpp"
#include "vkc/random.hpp"

namespace vkc::test {

/// Code of the vkc::Error thrown by f; records a failure if nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Small complexes for which |G|^(pairs + vertices) stays enumerable.
inline RandomComplexLimits tiny_limits() {
  RandomComplexLimits l;
  l.max_vertices = 4;
  l.max_edge_pairs = 5;
  l.max_cells = 3;
  l.max_rank = 3;
  return l;
}

inline Word random_word(Rng& rng, std::uint32_t gens, std::size_t max_len) {
  Word w(pick(rng, 0, max_len));
  for (Letter& l : w) {
    l.gen = static_cast<std::uint32_t>(pick(rng, 0, gens - 1));
    l.inverse = pick(rng, 0, 1) == 1;
  }
  return w;
}

/// Repeatedly deletes the leftmost adjacent inverse pair until none is left.
inline Word naive_reduce(Word w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].gen == w[i + 1].gen && w[i].inverse != w[i + 1].inverse) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Permutations of {0..n-1} in one-line form, composed as (a*b)(i) = a(b(i)).
using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline Perm invert_perm(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::string perm_name(const Perm& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('1' + v);
  return s;
}

/// Edge values along an edge list, multiplied left to right.
inline Element walk(const FiniteGroup& g, const std::vector<Element>& edge_values,
                    const std::vector<EdgeId>& letters) {
  Element acc = g.identity();
  for (EdgeId e : letters) acc = g.mul(acc, edge_values[e]);
  return acc;
}

/// Every flat assignment, found by trying all |G|^pairs tuples.
inline std::vector<std::vector<Element>> brute_cocycles(const TwoComplex& x, const FiniteGroup& g) {
  const std::size_t pairs = x.edge_pair_count();
  std::vector<std::vector<Element>> out;
  std::vector<Element> digits(pairs, 0);
  for (;;) {
    std::vector<Element> values(x.edge_count());
    for (std::size_t k = 0; k < pairs; ++k) {
      values[2 * k] = digits[k];
      values[2 * k + 1] = g.inv(digits[k]);
    }
    bool flat = true;
    for (CellId c = 0; c < x.cell_count() && flat; ++c) {
      flat = walk(g, values, x.boundary(c)) == g.identity();
    }
    if (flat) out.push_back(values);
    std::size_t k = 0;
    while (k < pairs && ++digits[k] == g.order()) digits[k++] = 0;
    if (k == pairs) break;
  }
  return out;
}

/// All 0-cochains that are 1 on `base`, as full vertex vectors.
inline std::vector<std::vector<Element>> brute_gauges(const TwoComplex& x, const FiniteGroup& g,
                                                      const BaseSet& base) {
  std::vector<VertexId> free;
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (!std::binary_search(base.begin(), base.end(), v)) free.push_back(v);
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> digits(free.size(), 0);
  for (;;) {
    std::vector<Element> c(x.vertex_count(), g.identity());
    for (std::size_t k = 0; k < free.size(); ++k) c[free[k]] = digits[k];
    out.push_back(c);
    std::size_t k = 0;
    while (k < free.size() && ++digits[k] == g.order()) digits[k++] = 0;
    if (k == free.size()) break;
  }
  return out;
}

inline std::vector<Element> brute_act(const TwoComplex& x, const FiniteGroup& g,
                                      const std::vector<Element>& c, const std::vector<Element>& u) {
  std::vector<Element> r(u.size());
  for (EdgeId e = 0; e < u.size(); ++e) r[e] = g.mul(g.mul(c[x.src(e)], u[e]), g.inv(c[x.tgt(e)]));
  return r;
}

/// Gauge orbits of flat assignments, each labelled by its least member.
inline std::set<std::vector<Element>> brute_orbits(const TwoComplex& x, const FiniteGroup& g,
                                                   const BaseSet& base) {
  const auto gauges = brute_gauges(x, g, base);
  std::set<std::vector<Element>> seen, labels;
  for (const auto& u : brute_cocycles(x, g)) {
    if (seen.count(u)) continue;
    std::vector<Element> least = u;
    for (const auto& c : gauges) {
      auto w = brute_act(x, g, c, u);
      least = std::min(least, w);
      seen.insert(std::move(w));
    }
    labels.insert(least);
  }
  return labels;
}

/// Uniformly random 0-cochain that is 1 on `base`.
inline ZeroCochain random_gauge(const TwoComplex& x, const FiniteGroup& g, const BaseSet& base, Rng& rng) {
  std::vector<Element> v(x.vertex_count());
  for (VertexId p = 0; p < v.size(); ++p) {
    v[p] = std::binary_search(base.begin(), base.end(), p)
               ? g.identity()
               : static_cast<Element>(pick(rng, 0, g.order() - 1));
  }
  return make_zero_cochain(x, g, v, base);
}

/// Random element of Z^1, drawn by rejection from uniform edge values and
/// falling back on a random gauge of the trivial cocycle.
inline Cocycle random_cocycle(const TwoComplex& x, const FiniteGroup& g, const BaseSet& base, Rng& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Element> pairs(x.edge_pair_count());
    for (Element& e : pairs) e = static_cast<Element>(pick(rng, 0, g.order() - 1));
    std::vector<Element> values(x.edge_count());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      values[2 * k] = pairs[k];
      values[2 * k + 1] = g.inv(pairs[k]);
    }
    auto report = validate_cocycle(x, g, values, base);
    if (report.ok()) return *report.cocycle;
  }
  return gauge_act(x, random_gauge(x, g, base, rng), trivial_cocycle(x, g, base));
}

/// Random walk of up to `max_len` letters from `start`.
inline EdgePath random_path(const TwoComplex& x, VertexId start, std::size_t max_len, Rng& rng) {
  EdgePath p{start, {}};
  VertexId at = start;
  const std::size_t len = pick(rng, 0, max_len);
  for (std::size_t i = 0; i < len && !x.out_edges(at).empty(); ++i) {
    const auto& out = x.out_edges(at);
    const EdgeId e = out[pick(rng, 0, out.size() - 1)];
    p.letters.push_back(e);
    at = x.tgt(e);
  }
  return p;
}

inline std::vector<FiniteGroup> small_groups() {
  return {make_cyclic(2), make_cyclic(3), make_symmetric(3)};
}

}  // namespace vkc::test
