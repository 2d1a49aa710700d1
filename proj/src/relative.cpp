#include "vkc/relative.hpp"

#include <algorithm>

#include "vkc/error.hpp"

namespace vkc {

BaseSet BasePointFamily::base_set() const {
  std::vector<VertexId> all = extras;
  all.push_back(base);
  return make_base_set(std::move(all));
}

BasePointFamily make_family(const TwoComplex& x, VertexId base, std::vector<VertexId> extras,
                            std::vector<EdgePath> connectors) {
  if (base >= x.vertex_count()) fail(ErrorCode::InvalidArgument, "base vertex outside the complex");
  if (connectors.size() != extras.size()) {
    fail(ErrorCode::InvalidArgument, "need one connector path per extra point");
  }
  for (std::size_t k = 0; k < extras.size(); ++k) {
    if (extras[k] >= x.vertex_count() || extras[k] == base) {
      fail(ErrorCode::InvalidArgument, "extra points must be vertices distinct from the base");
    }
    if (std::count(extras.begin(), extras.end(), extras[k]) != 1) {
      fail(ErrorCode::InvalidArgument, "extra point " + x.vertex_name(extras[k]) + " repeated");
    }
    const EdgePath& s = connectors[k];
    if (!is_composable(x, s) || s.start != base || s.end(x) != extras[k]) {
      fail(ErrorCode::EndpointMismatch, "connector " + std::to_string(k) + " must run from " +
                                            x.vertex_name(base) + " to " + x.vertex_name(extras[k]));
    }
  }
  return {base, std::move(extras), std::move(connectors)};
}

BasePointFamily default_family(const TwoComplex& x, VertexId base, std::vector<VertexId> extras) {
  const VertexId roots[] = {base};
  const SpanningForest f = spanning_forest(x, roots);
  std::vector<EdgePath> connectors;
  for (VertexId a : extras) {
    if (a >= x.vertex_count() || !f.covers(a)) {
      fail(ErrorCode::NotConnected, "extra point is not reachable from the base");
    }
    connectors.push_back(f.tree_path(x, a));
  }
  return make_family(x, base, std::move(extras), std::move(connectors));
}

YCochain identity_ycochain(const FiniteGroup& g, const BasePointFamily& fam) {
  return {g, std::vector<Element>(fam.extras.size(), g.identity())};
}

YCochain multiply(const YCochain& c, const YCochain& d) {
  YCochain out = c;
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = c.group.mul(c.values[k], d.values[k]);
  return out;
}

YCochain invert(const YCochain& c) {
  YCochain out = c;
  for (Element& v : out.values) v = c.group.inv(v);
  return out;
}

ZeroCochain as_zero_cochain(const TwoComplex& x, const YCochain& c, const BasePointFamily& fam) {
  ZeroCochain z = identity_cochain(x, c.group, {fam.base});
  for (std::size_t k = 0; k < fam.extras.size(); ++k) z.values[fam.extras[k]] = c.values[k];
  return z;
}

YCochain eval_on_connectors(const Cocycle& z, const BasePointFamily& fam) {
  YCochain out{z.group(), {}};
  for (const EdgePath& s : fam.connectors) out.values.push_back(evaluate(z, s));
  return out;
}

namespace {

// c . u where c is supported on the extra points. The action is carried out
// in C^0(X, b) and the result retagged with base Y (all of Y is discrete).
Cocycle act_at_extras(const TwoComplex& x, const YCochain& c, const Cocycle& u,
                      const BasePointFamily& fam) {
  const Cocycle at_b = with_base(u, {fam.base});
  return with_base(gauge_act(x, as_zero_cochain(x, c, fam), at_b), fam.base_set());
}

}  // namespace

RelativeClass eta(const TwoComplex& x, const Cocycle& z, const BasePointFamily& fam) {
  return class_of(x, act_at_extras(x, eval_on_connectors(z, fam), z, fam));
}

CohomologyClass quotient_q(const TwoComplex& x, const RelativeClass& rc, VertexId base) {
  return class_of(x, with_base(rc.representative, {base}));
}

RelativeClass act_on_relative(const TwoComplex& x, const YCochain& c, const RelativeClass& rc,
                              const BasePointFamily& fam) {
  return class_of(x, act_at_extras(x, c, rc.representative, fam));
}

std::pair<CohomologyClass, YCochain> split_f(const TwoComplex& x, const RelativeClass& rc,
                                             const BasePointFamily& fam) {
  return {quotient_q(x, rc, fam.base), eval_on_connectors(rc.representative, fam)};
}

RelativeClass join_g(const TwoComplex& x, const CohomologyClass& alpha, const YCochain& c,
                     const BasePointFamily& fam) {
  if (!alpha.representative.group().same_as(c.group)) {
    fail(ErrorCode::GroupMismatch, "class and cochain use different groups");
  }
  const RelativeClass lifted = eta(x, alpha.representative, fam);
  return act_on_relative(x, invert(c), lifted, fam);
}

}  // namespace vkc
