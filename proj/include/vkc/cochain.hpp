#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vkc/complex.hpp"
#include "vkc/group.hpp"

namespace vkc {

/// Discrete base set Y: sorted, duplicate-free vertex ids.
using BaseSet = std::vector<VertexId>;

BaseSet make_base_set(std::vector<VertexId> vertices);

/// G-valued function on vertices that is the identity on the base set.
struct ZeroCochain {
  FiniteGroup group;
  std::vector<Element> values;
  BaseSet base;
};

ZeroCochain identity_cochain(const TwoComplex& x, const FiniteGroup& g, BaseSet base);
/// Throws InvalidArgument if some base vertex carries a non-identity value.
ZeroCochain make_zero_cochain(const TwoComplex& x, const FiniteGroup& g,
                              std::vector<Element> values, BaseSet base);
/// Pointwise product (c * d)(v) = c(v) d(v).
ZeroCochain multiply(const ZeroCochain& c, const ZeroCochain& d);
ZeroCochain invert(const ZeroCochain& c);

class Cocycle;
namespace detail {
Cocycle unchecked_cocycle(FiniteGroup g, std::vector<Element> values, BaseSet base);
}

/// Flat G-connection: one value per oriented edge, inverse on the reversed
/// edge, with trivial holonomy around every 2-cell.
class Cocycle {
 public:
  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& values() const { return values_; }
  Element operator[](EdgeId e) const { return values_[e]; }
  const BaseSet& base() const { return base_; }

  bool operator==(const Cocycle& o) const { return values_ == o.values_ && base_ == o.base_; }
  bool operator<(const Cocycle& o) const {
    return values_ != o.values_ ? values_ < o.values_ : base_ < o.base_;
  }

 private:
  Cocycle(FiniteGroup g, std::vector<Element> values, BaseSet base)
      : group_(std::move(g)), values_(std::move(values)), base_(std::move(base)) {}
  friend Cocycle detail::unchecked_cocycle(FiniteGroup, std::vector<Element>, BaseSet);

  FiniteGroup group_;
  std::vector<Element> values_;
  BaseSet base_;
};

struct CocycleReport {
  std::optional<Cocycle> cocycle;
  std::vector<std::string> violations;
  bool ok() const { return cocycle.has_value(); }
};

/// Checks reversal compatibility and flatness of a per-oriented-edge
/// assignment.
CocycleReport validate_cocycle(const TwoComplex& x, const FiniteGroup& g,
                               std::vector<Element> edge_values, BaseSet base);
/// Throws NotACocycle listing the first violation.
Cocycle make_cocycle(const TwoComplex& x, const FiniteGroup& g, std::vector<Element> edge_values,
                     BaseSet base);
/// One value per edge pair (declared orientation); reverses are filled in.
Cocycle cocycle_from_pairs(const TwoComplex& x, const FiniteGroup& g,
                           std::span<const Element> pair_values, BaseSet base);
Cocycle trivial_cocycle(const TwoComplex& x, const FiniteGroup& g, BaseSet base);
/// Same edge values over another discrete base set. For discrete Y every
/// cocycle of X is a cocycle of the pair (X, Y).
Cocycle with_base(const Cocycle& u, BaseSet base);

/// Ordered product of the edge values along p; identity on constant paths.
Element evaluate(const Cocycle& u, const EdgePath& p);

/// (c . u)(e) = c(src e) u(e) c(tgt e)^-1. Throws GroupMismatch or
/// BaseMismatch when c and u disagree on group or base set.
Cocycle gauge_act(const TwoComplex& x, const ZeroCochain& c, const Cocycle& u);

/// Visits every flat, reversal-compatible assignment agreeing with `fixed`
/// (indexed by edge pair). Free pairs are enumerated in pair order with the
/// first free pair most significant. Throws BudgetExceeded when
/// |G|^(free pairs) exceeds the budget.
void for_each_flat_assignment(const TwoComplex& x, const FiniteGroup& g,
                              std::span<const std::optional<Element>> fixed,
                              std::uint64_t budget,
                              const std::function<bool(std::span<const Element>)>& visit);

/// All of Z^1(X, Y) (for discrete Y this is all of Z^1(X)).
std::vector<Cocycle> enumerate_cocycles(const TwoComplex& x, const BaseSet& base,
                                        const FiniteGroup& g,
                                        std::uint64_t budget = kDefaultBudget);

/// Forest whose roots are exactly the base vertices. Throws
/// BaseSetMissesComponent when a component has no base vertex.
SpanningForest base_forest(const TwoComplex& x, const BaseSet& base);

/// The 0-cochain v -> u(tree path to v); it is 1 on every root.
ZeroCochain canonicalizing_cochain(const TwoComplex& x, const Cocycle& u,
                                   const SpanningForest& forest);

/// Unique gauge-equivalent cocycle that is 1 on every tree edge. The forest
/// roots must be exactly u's base set (RootNotInBaseSet otherwise).
Cocycle canonical_form(const TwoComplex& x, const Cocycle& u, const SpanningForest& forest);

/// An element of H^1(X, Y), held by its canonical representative.
struct CohomologyClass {
  Cocycle representative;

  bool operator==(const CohomologyClass& o) const { return representative == o.representative; }
  bool operator<(const CohomologyClass& o) const { return representative < o.representative; }
};

CohomologyClass class_of(const TwoComplex& x, const Cocycle& u, const SpanningForest& forest);
CohomologyClass class_of(const TwoComplex& x, const Cocycle& u);

/// H^1(X, Y), enumerated directly on the slice of tree-trivial cocycles,
/// which meets every gauge orbit exactly once. Sorted.
std::vector<CohomologyClass> cohomology_classes(const TwoComplex& x, const BaseSet& base,
                                                const FiniteGroup& g,
                                                const SpanningForest& forest,
                                                std::uint64_t budget = kDefaultBudget);
std::vector<CohomologyClass> cohomology_classes(const TwoComplex& x, const BaseSet& base,
                                                const FiniteGroup& g,
                                                std::uint64_t budget = kDefaultBudget);

bool gauge_equivalent(const TwoComplex& x, const Cocycle& u, const Cocycle& w);

/// The c with c . v = w, computed along the forest (c is 1 on the roots).
/// nullopt when v and w are not gauge-equivalent.
std::optional<ZeroCochain> gauge_between(const TwoComplex& x, const Cocycle& v, const Cocycle& w,
                                         const SpanningForest& forest);

/// Restriction to an extracted subcomplex; the base set becomes Y n A.
Cocycle restrict(const Cocycle& u, const Embedding& a);
/// Restriction from one extracted subcomplex to a smaller one of the same
/// parent.
Cocycle restrict_between(const Cocycle& u, const Embedding& from, const Embedding& to);
ZeroCochain restrict(const ZeroCochain& c, const Embedding& a);
BaseSet restrict(const BaseSet& base, const Embedding& a);
/// Base set of the parent mapped from local ids.
BaseSet lift(const BaseSet& local, const Embedding& a);

/// Cocycle data given separately on each element of an adapted cover,
/// agreeing wherever two elements share an edge.
class ShortCocycle {
 public:
  const Cover& cover() const { return cover_; }
  const std::vector<Embedding>& elements() const { return elements_; }
  const std::vector<Cocycle>& pieces() const { return pieces_; }
  const FiniteGroup& group() const { return group_; }
  const BaseSet& base() const { return base_; }

  bool operator==(const ShortCocycle& o) const { return pieces_ == o.pieces_; }
  bool operator<(const ShortCocycle& o) const { return pieces_ < o.pieces_; }

 private:
  friend ShortCocycle make_short(const TwoComplex&, const Cover&, std::vector<Cocycle>, BaseSet);
  friend ShortCocycle make_short(const TwoComplex&, const Cover&, std::vector<Embedding>,
                                 std::vector<Cocycle>, BaseSet);
  Cover cover_;
  std::vector<Embedding> elements_;
  std::vector<Cocycle> pieces_;
  FiniteGroup group_;
  BaseSet base_;
};

/// Validates adaptedness (NotAdapted) and overlap agreement
/// (InconsistentOverlap). `pieces[k]` lives on the extracted k-th element.
ShortCocycle make_short(const TwoComplex& x, const Cover& cover, std::vector<Cocycle> pieces,
                        BaseSet base);
ShortCocycle make_short(const TwoComplex& x, const Cover& cover, std::vector<Embedding> elements,
                        std::vector<Cocycle> pieces, BaseSet base);

ShortCocycle to_short(const TwoComplex& x, const Cocycle& u, const Cover& cover);
/// Assembles the global cocycle and re-verifies flatness on every cell.
Cocycle extend_short(const TwoComplex& x, const ShortCocycle& s);

/// Ordered product over the greedy subdivision of p, each segment evaluated
/// in its witness element.
Element evaluate_short(const TwoComplex& x, const ShortCocycle& s, const EdgePath& p);
ShortCocycle gauge_act_short(const TwoComplex& x, const ZeroCochain& c, const ShortCocycle& s);
/// Tree gauge fixing computed with evaluate_short only.
ShortCocycle canonical_short(const TwoComplex& x, const ShortCocycle& s,
                             const SpanningForest& forest);

/// Short classes enumerated element by element: each element contributes the
/// flat assignments on its own cells, subject to agreement with the elements
/// before it and to triviality on tree edges. Sorted.
std::vector<ShortCocycle> short_classes(const TwoComplex& x, const BaseSet& base,
                                        const FiniteGroup& g, const Cover& cover,
                                        const SpanningForest& forest,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace vkc
