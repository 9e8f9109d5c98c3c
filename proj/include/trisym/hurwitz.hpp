#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisym/covering.hpp"
#include "trisym/group.hpp"
#include "trisym/lattice.hpp"

namespace trisym {

/// Tuple counts are exact. A length-r sequence over classes of size up to 59
/// can exceed 64 bits (59^11 > 2^64), so counts accumulate in 128 bits; the
/// supported sequence length keeps 128 bits overflow-free.
__extension__ using BigCount = unsigned __int128;
__extension__ using SignedBigCount = __int128;

inline constexpr std::size_t kMaxSequenceLength = 20;  // 60^20 < 2^119

inline std::string to_string(BigCount v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  return std::string(digits.rbegin(), digits.rend());
}

/// Ordered branch classes (c_1, ..., c_r) of a prospective generating vector.
struct ClassSequence {
  std::vector<std::string> labels;

  std::size_t length() const { return labels.size(); }
};

inline ClassSequence make_class_sequence(const GroupTable& g, std::vector<std::string> labels) {
  if (labels.size() > kMaxSequenceLength)
    throw std::invalid_argument("class sequence too long for exact counting");
  for (const auto& label : labels) {
    const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(label))];
    if (cls.element_order == 1)
      throw std::invalid_argument("class sequence entries must be nontrivial");
  }
  return ClassSequence{std::move(labels)};
}

/// Product-one tuple with prescribed classes whose entries generate the group.
struct GeneratingVector {
  std::vector<int> entries;
  std::vector<std::string> class_labels;
};

inline bool product_one(const GroupTable& g, const std::vector<int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty entry list");
  int acc = GroupTable::kIdentity;
  for (int e : entries) acc = g.mul(acc, e);
  return acc == GroupTable::kIdentity;
}

inline bool generates_full(const GroupTable& g, const std::vector<int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty entry list");
  if (g.size() > 64) {
    // closure by explicit BFS for large tables
    GroupTable sub = build_group([&] {
      std::vector<Permutation> gens;
      for (int e : entries) gens.push_back(g.permutation(e));
      return gens;
    }());
    return sub.size() == g.size();
  }
  std::uint64_t seed = 0;
  for (int e : entries) seed |= std::uint64_t{1} << e;
  return std::popcount(subgroup_closure(g, seed)) == g.size();
}

namespace detail {

/// Folds class indicator vectors through the multiplication table, restricted
/// to entries inside `mask`; result[x] counts tuples with product x.
inline std::vector<BigCount> count_vector(const GroupTable& g, const ClassSequence& cs,
                                          std::uint64_t mask) {
  const int n = g.size();
  std::vector<BigCount> counts(static_cast<std::size_t>(n), 0);
  counts[GroupTable::kIdentity] = 1;
  std::vector<BigCount> next(static_cast<std::size_t>(n));
  for (const auto& label : cs.labels) {
    const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(label))];
    std::fill(next.begin(), next.end(), 0);
    for (int p = 0; p < n; ++p) {
      if (counts[static_cast<std::size_t>(p)] == 0) continue;
      for (int x : cls.members) {
        if (!((mask >> x) & 1u)) continue;
        next[static_cast<std::size_t>(g.mul(p, x))] += counts[static_cast<std::size_t>(p)];
      }
    }
    counts.swap(next);
  }
  return counts;
}

inline std::uint64_t full_mask(const GroupTable& g) {
  return g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
}

}  // namespace detail

/// Exact number of tuples (x_1, ..., x_r), x_i in class i, whose ordered
/// product equals `target`. Summed over all targets this is the product of
/// the class sizes.
inline BigCount count_tuples(const GroupTable& g, const ClassSequence& cs, int target) {
  if (cs.length() > kMaxSequenceLength)
    throw std::invalid_argument("class sequence too long for exact counting");
  if (g.size() > 64) throw std::invalid_argument("counting supports order <= 64");
  return detail::count_vector(g, cs, detail::full_mask(g))[static_cast<std::size_t>(target)];
}

/// Product-one tuples whose entries generate the whole group, by Moebius
/// inversion over the subgroup lattice: sum of mu(H,G) * f(H) with f(H) the
/// product-one count restricted to class_i intersect H. Class intersections
/// are recomputed per subgroup; classes split inside subgroups.
inline BigCount count_generating_tuples(const GroupTable& g, const SubgroupLattice& lattice,
                                        const ClassSequence& cs) {
  if (cs.length() > kMaxSequenceLength)
    throw std::invalid_argument("class sequence too long for exact counting");
  SignedBigCount total = 0;
  for (int h = 0; h < lattice.count(); ++h) {
    const int mu = lattice.mu_top[static_cast<std::size_t>(h)];
    if (mu == 0) continue;
    const BigCount f =
        detail::count_vector(g, cs, lattice.masks[static_cast<std::size_t>(h)])[GroupTable::kIdentity];
    total += static_cast<SignedBigCount>(mu) * static_cast<SignedBigCount>(f);
  }
  if (total < 0) throw std::logic_error("Moebius inversion produced a negative count");
  return static_cast<BigCount>(total);
}

inline bool exists_generating_vector(const GroupTable& g, const SubgroupLattice& lattice,
                                     const ClassSequence& cs) {
  return count_generating_tuples(g, lattice, cs) > 0;
}

/// Lexicographically least generating vector in element-index order, or
/// nothing when none exists. The search walks entries ascending and prunes
/// any prefix whose partial product admits zero product-one completions,
/// using precomputed suffix count vectors.
inline std::optional<GeneratingVector> find_witness(const GroupTable& g,
                                                    const SubgroupLattice& lattice,
                                                    const ClassSequence& cs) {
  if (count_generating_tuples(g, lattice, cs) == 0) return std::nullopt;

  const int n = g.size();
  const std::size_t r = cs.length();
  const std::uint64_t everything = detail::full_mask(g);

  std::vector<const ConjugacyClass*> classes;
  for (const auto& label : cs.labels)
    classes.push_back(&g.classes()[static_cast<std::size_t>(g.class_index(label))]);

  // suffix[j][x] = number of ways to fill positions j.. with product x
  std::vector<std::vector<BigCount>> suffix(r + 1,
                                            std::vector<BigCount>(static_cast<std::size_t>(n), 0));
  suffix[r][GroupTable::kIdentity] = 1;
  for (std::size_t j = r; j-- > 0;) {
    for (int x = 0; x < n; ++x) {
      BigCount ways = 0;
      for (int e : classes[j]->members) ways += suffix[j + 1][static_cast<std::size_t>(g.mul(g.inv(e), x))];
      suffix[j][static_cast<std::size_t>(x)] = ways;
    }
  }

  std::vector<int> chosen(r, -1);
  std::vector<std::uint64_t> closure(r + 1);
  closure[0] = 1;  // identity only

  auto search = [&](auto&& self, std::size_t depth, int prefix) -> bool {
    if (depth == r) return closure[r] == everything;
    for (int e : classes[depth]->members) {
      const int product = g.mul(prefix, e);
      if (suffix[depth + 1][static_cast<std::size_t>(g.inv(product))] == 0) continue;
      chosen[depth] = e;
      closure[depth + 1] = subgroup_closure(g, closure[depth] | (std::uint64_t{1} << e));
      if (self(self, depth + 1, product)) return true;
    }
    return false;
  };
  if (!search(search, 0, GroupTable::kIdentity))
    throw std::logic_error("witness search disagrees with the generating count");

  GeneratingVector vec;
  vec.entries = chosen;
  for (int e : chosen) vec.class_labels.push_back(g.class_label_of(e));
  return vec;
}

struct VectorReport {
  bool product_one = false;
  bool generates = false;
  bool classes_match = false;
  std::vector<std::string> class_labels;

  bool all_true() const { return product_one && generates && classes_match; }
};

/// Failures are report content, never exceptions. Class matching compares
/// multisets, so reordered vectors still match their sequence.
inline VectorReport verify_vector(const GroupTable& g, const std::vector<int>& entries,
                                  const std::optional<ClassSequence>& expected = std::nullopt) {
  VectorReport report;
  if (entries.empty()) return report;
  report.product_one = product_one(g, entries);
  report.generates = generates_full(g, entries);
  for (int e : entries) report.class_labels.push_back(g.class_label_of(e));
  if (expected) {
    auto got = report.class_labels;
    auto want = expected->labels;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    report.classes_match = got == want;
  } else {
    report.classes_match = true;
  }
  return report;
}

}  // namespace trisym
