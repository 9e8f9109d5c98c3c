#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisym/permutation.hpp"

namespace trisym {

enum class GroupKind { A4, S4, A5, Other };

inline std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::A4: return "a4";
    case GroupKind::S4: return "s4";
    case GroupKind::A5: return "a5";
    default: return "other";
  }
}

inline GroupKind kind_from_string(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "a4") return GroupKind::A4;
  if (lower == "s4") return GroupKind::S4;
  if (lower == "a5") return GroupKind::A5;
  throw std::invalid_argument("unknown group '" + std::string(s) + "' (expected a4, s4 or a5)");
}

/// Labels follow the order+letter scheme: classes are sorted by element order,
/// then by least member index; letters are assigned in that order per element
/// order (2A, 2B, ...). Members ascend.
struct ConjugacyClass {
  std::string label;
  int representative = 0;  // least member index
  std::vector<int> members;
  int element_order = 1;

  int size() const { return static_cast<int>(members.size()); }
};

/// Finite permutation group with complete multiplication and inverse tables.
/// Element 0 is the identity. Immutable after construction; all queries are
/// safe for concurrent use.
class GroupTable {
public:
  static constexpr int kIdentity = 0;

  int size() const { return static_cast<int>(elements_.size()); }

  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * elements_.size() + b]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

  int power(int e, int n) const {
    int base = n >= 0 ? e : inv(e);
    int acc = kIdentity;
    for (int i = n >= 0 ? n : -n; i > 0; --i) acc = mul(acc, base);
    return acc;
  }

  int element_order(int e) const { return orders_[static_cast<std::size_t>(e)]; }

  const Permutation& permutation(int e) const { return elements_[static_cast<std::size_t>(e)]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<int> find(const Permutation& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int index_of(const Permutation& p) const {
    auto idx = find(p);
    if (!idx) throw std::invalid_argument("permutation is not a group element");
    return *idx;
  }

  GroupKind kind() const { return kind_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  int class_of(int e) const { return class_of_[static_cast<std::size_t>(e)]; }

  const std::string& class_label_of(int e) const { return classes_[static_cast<std::size_t>(class_of(e))].label; }

  int class_index(std::string_view label) const {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (classes_[c].label == label) return static_cast<int>(c);
    throw std::invalid_argument("unknown conjugacy class label '" + std::string(label) + "'");
  }

  /// |{x : xe = ex}|. Satisfies |class(e)| * centralizer = |G|.
  int centralizer_order(int e) const {
    int count = 0;
    for (int x = 0; x < size(); ++x)
      if (mul(x, e) == mul(e, x)) ++count;
    return count;
  }

  friend GroupTable build_group(std::vector<Permutation> generators, std::size_t cap);

private:
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  GroupKind kind_ = GroupKind::Other;
};

namespace detail {

inline GroupKind classify_kind(int order, std::vector<int> class_sizes) {
  std::sort(class_sizes.begin(), class_sizes.end());
  if (order == 12 && class_sizes == std::vector<int>{1, 3, 4, 4}) return GroupKind::A4;
  if (order == 24 && class_sizes == std::vector<int>{1, 3, 6, 6, 8}) return GroupKind::S4;
  if (order == 60 && class_sizes == std::vector<int>{1, 12, 12, 15, 20}) return GroupKind::A5;
  return GroupKind::Other;
}

}  // namespace detail

/// Closure of the generators by breadth-first right-multiplication; element 0
/// is the identity and generators get the next indices. Throws once the
/// closure exceeds `cap`, which signals unintended input.
inline GroupTable build_group(std::vector<Permutation> generators, std::size_t cap = 10080) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("degree mismatch among generators");

  GroupTable table;
  auto add = [&](const Permutation& p) -> bool {
    if (table.index_.contains(p.images())) return false;
    if (table.elements_.size() >= cap)
      throw std::runtime_error("group closure exceeded cap of " + std::to_string(cap));
    table.index_.emplace(p.images(), static_cast<int>(table.elements_.size()));
    table.elements_.push_back(p);
    return true;
  };

  add(Permutation::identity(degree));
  for (std::size_t head = 0; head < table.elements_.size(); ++head) {
    const Permutation current = table.elements_[head];
    for (const auto& g : generators) add(compose(current, g));
  }

  const int n = table.size();
  table.mul_.resize(static_cast<std::size_t>(n) * n);
  table.inv_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = table.index_of(compose(table.elements_[static_cast<std::size_t>(a)],
                                            table.elements_[static_cast<std::size_t>(b)]));
      table.mul_[static_cast<std::size_t>(a) * n + b] = ab;
      if (ab == GroupTable::kIdentity) table.inv_[static_cast<std::size_t>(a)] = b;
    }
  }

  table.orders_.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    int ord = 1, acc = e;
    while (acc != GroupTable::kIdentity) { acc = table.mul(acc, e); ++ord; }
    table.orders_[static_cast<std::size_t>(e)] = ord;
  }

  // Conjugation orbits, then order+letter labels.
  table.class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    if (table.class_of_[static_cast<std::size_t>(e)] >= 0) continue;
    ConjugacyClass cls;
    cls.representative = e;
    cls.element_order = table.element_order(e);
    for (int x = 0; x < n; ++x) {
      const int conj = table.mul(table.mul(x, e), table.inv(x));
      if (table.class_of_[static_cast<std::size_t>(conj)] < 0) {
        table.class_of_[static_cast<std::size_t>(conj)] = static_cast<int>(table.classes_.size());
        cls.members.push_back(conj);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    table.classes_.push_back(std::move(cls));
  }
  std::sort(table.classes_.begin(), table.classes_.end(), [](const auto& a, const auto& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    return a.representative < b.representative;
  });
  std::map<int, int> letter_in_order;
  std::vector<int> sizes;
  for (std::size_t c = 0; c < table.classes_.size(); ++c) {
    auto& cls = table.classes_[c];
    cls.label = std::to_string(cls.element_order) +
                static_cast<char>('A' + letter_in_order[cls.element_order]++);
    for (int m : cls.members) table.class_of_[static_cast<std::size_t>(m)] = static_cast<int>(c);
    sizes.push_back(cls.size());
  }

  table.kind_ = detail::classify_kind(n, sizes);
  return table;
}

inline std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g) { return g.classes(); }

}  // namespace trisym
