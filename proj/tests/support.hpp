#pragma once

#include <functional>
#include <optional>

#include "trisym/trisym.hpp"

namespace trisym::testing {

inline const SweepContext& ctx(GroupKind kind) {
  static const SweepContext a4(GroupKind::A4);
  static const SweepContext s4(GroupKind::S4);
  static const SweepContext a5(GroupKind::A5);
  switch (kind) {
    case GroupKind::A4: return a4;
    case GroupKind::S4: return s4;
    default: return a5;
  }
}

/// Independent counting oracle: plain enumeration of every tuple. Stays
/// separate from the convolution path it checks.
inline BigCount naive_count(const GroupTable& g, const std::vector<std::string>& labels,
                            int target) {
  std::vector<const std::vector<int>*> members;
  for (const auto& label : labels)
    members.push_back(&g.classes()[static_cast<std::size_t>(g.class_index(label))].members);
  BigCount count = 0;
  std::function<void(std::size_t, int)> walk = [&](std::size_t depth, int product) {
    if (depth == members.size()) {
      if (product == target) ++count;
      return;
    }
    for (int x : *members[depth]) walk(depth + 1, g.mul(product, x));
  };
  walk(0, GroupTable::kIdentity);
  return count;
}

/// Enumeration-based count of product-one tuples generating the full group.
inline BigCount naive_generating_count(const GroupTable& g, const std::vector<std::string>& labels) {
  std::vector<const std::vector<int>*> members;
  for (const auto& label : labels)
    members.push_back(&g.classes()[static_cast<std::size_t>(g.class_index(label))].members);
  BigCount count = 0;
  std::vector<int> chosen;
  std::function<void(std::size_t, int)> walk = [&](std::size_t depth, int product) {
    if (depth == members.size()) {
      if (product == GroupTable::kIdentity && generates_full(g, chosen)) ++count;
      return;
    }
    for (int x : *members[depth]) {
      chosen.push_back(x);
      walk(depth + 1, g.mul(product, x));
      chosen.pop_back();
    }
  };
  walk(0, GroupTable::kIdentity);
  return count;
}

/// First generating product-one tuple in ascending lexicographic order, by
/// unpruned enumeration.
inline std::optional<std::vector<int>> naive_lex_least_witness(const GroupTable& g,
                                                               const std::vector<std::string>& labels) {
  std::vector<const std::vector<int>*> members;
  for (const auto& label : labels)
    members.push_back(&g.classes()[static_cast<std::size_t>(g.class_index(label))].members);
  std::vector<int> chosen;
  std::optional<std::vector<int>> best;
  std::function<bool(std::size_t, int)> walk = [&](std::size_t depth, int product) -> bool {
    if (depth == members.size()) {
      if (product == GroupTable::kIdentity && generates_full(g, chosen)) {
        best = chosen;
        return true;
      }
      return false;
    }
    for (int x : *members[depth]) {
      chosen.push_back(x);
      if (walk(depth + 1, g.mul(product, x))) return true;
      chosen.pop_back();
    }
    return false;
  };
  walk(0, GroupTable::kIdentity);
  return best;
}

/// Every in-lattice tuple passing the numeric feasibility checks.
inline std::vector<ParameterTuple> feasible_tuples(GroupKind kind) {
  std::vector<ParameterTuple> out;
  for (const auto& params : detail::parameter_lattice(kind))
    if (feasibility(kind, params).feasible) out.push_back(params);
  return out;
}

}  // namespace trisym::testing
