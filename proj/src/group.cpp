#include "vkc/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "vkc/error.hpp"

namespace vkc {

FiniteGroup::FiniteGroup() : FiniteGroup(trusted({"e"}, {0}, 0, "Z1")) {}

FiniteGroup FiniteGroup::trusted(std::vector<std::string> names, std::vector<Element> table,
                                 Element identity, std::string label) {
  auto data = std::make_shared<Data>();
  const std::size_t n = names.size();
  data->names = std::move(names);
  data->table = std::move(table);
  data->identity = identity;
  data->label = std::move(label);
  data->inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (data->table[a * n + b] == identity) {
        data->inverse[a] = b;
        break;
      }
    }
  }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, std::vector<Element> table,
                                    Element identity, std::string label) {
  const std::size_t n = names.size();
  if (n == 0) fail(ErrorCode::NoIdentity, "empty element list");
  if (table.size() != n * n) {
    fail(ErrorCode::InvalidArgument, "table has " + std::to_string(table.size()) +
                                         " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      fail(ErrorCode::InvalidArgument, "table entry out of range at row " +
                                           names[i / n] + ", column " + names[i % n]);
    }
  }
  if (identity >= n) fail(ErrorCode::NoIdentity, "identity index out of range");
  auto at = [&](Element a, Element b) { return table[a * n + b]; };
  for (Element x = 0; x < n; ++x) {
    if (at(identity, x) != x || at(x, identity) != x) {
      fail(ErrorCode::NoIdentity, "'" + names[identity] + "' is not a two-sided identity (fails on '" +
                                      names[x] + "')");
    }
  }
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      found = at(a, b) == identity && at(b, a) == identity;
    }
    if (!found) fail(ErrorCode::NoInverse, "element '" + names[a] + "' has no two-sided inverse");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = at(a, b);
      for (Element c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          fail(ErrorCode::NonAssociative, "(" + names[a] + "*" + names[b] + ")*" + names[c] +
                                              " != " + names[a] + "*(" + names[b] + "*" +
                                              names[c] + ")");
        }
      }
    }
  }
  return trusted(std::move(names), std::move(table), identity, std::move(label));
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Element>(it - names.begin());
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  return data_ == other.data_ ||
         (data_->identity == other.data_->identity && data_->table == other.data_->table);
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n < 1 || n > 1024) {
    fail(ErrorCode::SizeBudgetExceeded, "cyclic order must lie in [1, 1024], got " + std::to_string(n));
  }
  std::vector<std::string> names(n);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::trusted(std::move(names), std::move(table), 0, "Z" + std::to_string(n));
}

FiniteGroup make_symmetric(std::size_t n) {
  if (n < 1 || n > 5) {
    fail(ErrorCode::SizeBudgetExceeded, "symmetric degree must lie in [1, 5], got " + std::to_string(n));
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t order = perms.size();
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (int v : perms[i]) names[i] += static_cast<char>('1' + v);
  }
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Element> table(order * order);
  std::vector<int> composed(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      table[a * order + b] = index_of(composed);
    }
  }
  return FiniteGroup::trusted(std::move(names), std::move(table), 0, "S" + std::to_string(n));
}

std::vector<FiniteGroup> default_battery() {
  return {make_cyclic(2), make_cyclic(3), make_cyclic(4),
          make_cyclic(6), make_symmetric(3), make_symmetric(4)};
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverted()) return false;
  }
  return true;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word concat(std::initializer_list<std::reference_wrapper<const Word>> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Element evaluate(const FiniteGroup& g, std::span<const Element> images, const Word& w) {
  Element acc = g.identity();
  for (const Letter& l : w) {
    const Element x = images[l.gen];
    acc = g.mul(acc, l.inverse ? g.inv(x) : x);
  }
  return acc;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  for (std::size_t r = 0; r < relators_.size(); ++r) {
    for (const Letter& l : relators_[r]) {
      if (l.gen >= generators_.size()) {
        fail(ErrorCode::InvalidArgument, "relator " + std::to_string(r) +
                                             " mentions undeclared generator index " +
                                             std::to_string(l.gen));
      }
    }
  }
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += generators_[w[i].gen];
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i];
  os << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    os << (i ? ", " : "") << word_to_string(relators_[i]);
  }
  os << " >";
  return os.str();
}

bool satisfies_relators(const Presentation& p, const FiniteGroup& g,
                        std::span<const Element> images) {
  for (const Word& r : p.relators()) {
    if (evaluate(g, images, r) != g.identity()) return false;
  }
  return true;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && acc > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    acc *= base;
  }
  return acc;
}

void for_each_hom(const Presentation& p, const FiniteGroup& g, std::uint64_t budget,
                  const std::function<bool(std::span<const Element>)>& visit) {
  const std::size_t k = p.rank();
  const std::uint64_t candidates = saturating_pow(g.order(), k);
  if (candidates > budget) {
    fail(ErrorCode::BudgetExceeded, std::to_string(g.order()) + "^" + std::to_string(k) +
                                        " candidate assignments exceed budget " +
                                        std::to_string(budget));
  }

  // Each relator is checked as soon as its highest generator is assigned.
  std::vector<std::vector<Word>> due(k + 1);
  for (const Word& r : p.relators()) {
    const Word reduced = free_reduce(r);
    if (reduced.empty()) continue;
    std::uint32_t top = 0;
    for (const Letter& l : reduced) top = std::max(top, l.gen);
    due[top].push_back(reduced);
  }
  // Relators over no generators reduce to the empty word and always hold.

  std::vector<Element> images(k, g.identity());
  if (k == 0) {
    visit(images);
    return;
  }
  const Element n = static_cast<Element>(g.order());
  std::size_t depth = 0;
  std::vector<Element> next(k, 0);
  while (true) {
    if (next[depth] == n) {
      if (depth == 0) return;
      next[depth] = 0;
      --depth;
      continue;
    }
    images[depth] = next[depth]++;
    bool ok = true;
    for (const Word& r : due[depth]) {
      if (evaluate(g, images, r) != g.identity()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == k) {
      if (!visit(images)) return;
    } else {
      ++depth;
    }
  }
}

std::vector<Homomorphism> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                         std::uint64_t budget) {
  std::vector<Homomorphism> out;
  for_each_hom(p, g, budget, [&](std::span<const Element> images) {
    out.push_back({g, std::vector<Element>(images.begin(), images.end())});
    return true;
  });
  return out;
}

std::uint64_t hom_count(const Presentation& p, const FiniteGroup& g, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_hom(p, g, budget, [&](std::span<const Element>) {
    ++count;
    return true;
  });
  return count;
}

std::vector<std::optional<std::uint64_t>> battery_counts(const Presentation& p,
                                                         std::span<const FiniteGroup> battery,
                                                         std::uint64_t budget) {
  std::vector<std::optional<std::uint64_t>> out;
  for (const FiniteGroup& g : battery) {
    try {
      out.emplace_back(hom_count(p, g, budget));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace vkc
