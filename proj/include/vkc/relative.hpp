#pragma once

#include <utility>
#include <vector>

#include "vkc/cochain.hpp"
#include "vkc/complex.hpp"

namespace vkc {

/// Base point b, extra points a_1..a_m and a connector path b -> a_k for each.
struct BasePointFamily {
  VertexId base = 0;
  std::vector<VertexId> extras;
  std::vector<EdgePath> connectors;

  /// Y = {b, a_1, ..., a_m}.
  BaseSet base_set() const;
};

/// Validates distinctness and connector endpoints (EndpointMismatch).
BasePointFamily make_family(const TwoComplex& x, VertexId base, std::vector<VertexId> extras,
                            std::vector<EdgePath> connectors);
/// Connectors default to tree paths of the spanning tree rooted at b.
BasePointFamily default_family(const TwoComplex& x, VertexId base, std::vector<VertexId> extras);

/// Values at the extra points; the value at b is implicitly 1. For m = 1
/// this is the single group element of the G_a factor.
struct YCochain {
  FiniteGroup group;
  std::vector<Element> values;

  bool operator==(const YCochain& o) const { return values == o.values; }
  bool operator<(const YCochain& o) const { return values < o.values; }
};

YCochain identity_ycochain(const FiniteGroup& g, const BasePointFamily& fam);
YCochain multiply(const YCochain& c, const YCochain& d);
YCochain invert(const YCochain& c);
/// The 0-cochain in C^0(X, b) equal to c at the extra points, 1 elsewhere.
ZeroCochain as_zero_cochain(const TwoComplex& x, const YCochain& c, const BasePointFamily& fam);

/// A class in H^1(X, Y), canonical for a forest rooted at every point of Y.
using RelativeClass = CohomologyClass;

/// a_k -> z(s_k).
YCochain eval_on_connectors(const Cocycle& z, const BasePointFamily& fam);

/// Class in H^1(X, Y) of eval_on_connectors(z) . z. Depends only on the
/// class of z in H^1(X, b).
RelativeClass eta(const TwoComplex& x, const Cocycle& z, const BasePointFamily& fam);

/// H^1(X, Y) -> H^1(X, b): forget the extra base points.
CohomologyClass quotient_q(const TwoComplex& x, const RelativeClass& rc, VertexId base);

/// The action of C^0(Y, b) on H^1(X, Y): class of c . (representative).
RelativeClass act_on_relative(const TwoComplex& x, const YCochain& c, const RelativeClass& rc,
                              const BasePointFamily& fam);

/// rc -> (quotient_q(rc), connector values of rc's representative).
std::pair<CohomologyClass, YCochain> split_f(const TwoComplex& x, const RelativeClass& rc,
                                             const BasePointFamily& fam);

/// (alpha, c) -> c^-1 . eta(alpha); inverse of split_f.
RelativeClass join_g(const TwoComplex& x, const CohomologyClass& alpha, const YCochain& c,
                     const BasePointFamily& fam);

}  // namespace vkc
