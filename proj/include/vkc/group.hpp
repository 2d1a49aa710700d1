#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vkc {

/// Index of an element inside a FiniteGroup, in the group's element order.
using Element = std::uint32_t;

/// Default cap on candidate assignments explored by any exhaustive
/// enumeration (homomorphisms, cocycles).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// An explicit finite group given by its multiplication table.
///
/// Copies share the underlying table, so passing groups by value is cheap.
/// Element 0 is not assumed to be the identity; use identity().
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Builds a group from a row-major table (`table[a * n + b] = a * b`) after
  /// checking every group axiom by full scan. Throws NonAssociative,
  /// NoIdentity or NoInverse naming the offending element(s).
  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<Element> table, Element identity,
                                std::string label = "table");

  std::size_t order() const { return data_->names.size(); }
  Element identity() const { return data_->identity; }
  Element mul(Element a, Element b) const {
    return data_->table[static_cast<std::size_t>(a) * order() + b];
  }
  Element inv(Element a) const { return data_->inverse[a]; }

  const std::string& name(Element a) const { return data_->names[a]; }
  std::optional<Element> find(std::string_view name) const;
  const std::string& label() const { return data_->label; }
  std::span<const Element> table() const { return data_->table; }

  /// True when both handles describe the same table (shared or equal).
  bool same_as(const FiniteGroup& other) const;

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<Element> table;
    std::vector<Element> inverse;
    Element identity = 0;
    std::string label;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup trusted(std::vector<std::string> names, std::vector<Element> table,
                             Element identity, std::string label);

  friend FiniteGroup make_cyclic(std::size_t n);
  friend FiniteGroup make_symmetric(std::size_t n);

  std::shared_ptr<const Data> data_;
};

/// Z/n with elements named "0".."n-1" in additive order. n in [1, 1024].
FiniteGroup make_cyclic(std::size_t n);

/// S_n with permutations in lexicographic one-line order (identity first),
/// named by their one-line notation, e.g. "213". n in [1, 5].
/// Composition is (a * b)(i) = a(b(i)).
FiniteGroup make_symmetric(std::size_t n);

/// The standard coefficient battery {Z2, Z3, Z4, Z6, S3, S4}.
std::vector<FiniteGroup> default_battery();

/// Generator symbol or its formal inverse.
struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Unique freely reduced form of `w` (stack-based cancellation).
Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
/// Formal inverse: reversed letters, each inverted.
Word inverse(const Word& w);
/// Concatenation of any number of words.
Word concat(std::initializer_list<std::reference_wrapper<const Word>> parts);

Element evaluate(const FiniteGroup& g, std::span<const Element> images, const Word& w);

/// Finite presentation. Relators may only mention declared generators.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t rank() const { return generators_.size(); }

  /// Human form, e.g. "< a, b | a b a^-1 b^-1 >".
  std::string to_string() const;
  std::string word_to_string(const Word& w) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Assignment of a target element to every generator of a presentation.
struct Homomorphism {
  FiniteGroup target;
  std::vector<Element> images;

  bool operator==(const Homomorphism& o) const { return images == o.images; }
  bool operator<(const Homomorphism& o) const { return images < o.images; }
};

/// Whether every relator evaluates to the identity under `images`.
bool satisfies_relators(const Presentation& p, const FiniteGroup& g,
                        std::span<const Element> images);

/// All homomorphisms p -> g, in lexicographic order of the image vectors
/// (first generator most significant). Throws BudgetExceeded when
/// |g|^rank exceeds `budget`.
std::vector<Homomorphism> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                         std::uint64_t budget = kDefaultBudget);

std::uint64_t hom_count(const Presentation& p, const FiniteGroup& g,
                        std::uint64_t budget = kDefaultBudget);

/// Calls `visit` for each homomorphism in enumeration order. Returning false
/// from the visitor stops the search early.
void for_each_hom(const Presentation& p, const FiniteGroup& g, std::uint64_t budget,
                  const std::function<bool(std::span<const Element>)>& visit);

/// `base^exponent`, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent);

/// Hom counts over a battery; nullopt where the enumeration exceeds budget.
std::vector<std::optional<std::uint64_t>> battery_counts(
    const Presentation& p, std::span<const FiniteGroup> battery,
    std::uint64_t budget = kDefaultBudget);

}  // namespace vkc
