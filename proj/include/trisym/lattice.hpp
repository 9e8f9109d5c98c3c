#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "trisym/group.hpp"

namespace trisym {

/// Complete subgroup lattice of a group of order <= 64, each subgroup a
/// bitmask over element indices. Subgroups are sorted by (order, mask), so the
/// trivial subgroup comes first and the whole group last. mu_top[h] is the
/// Moebius value mu(H, G) of the lattice ordered by inclusion.
struct SubgroupLattice {
  std::vector<std::uint64_t> masks;
  std::vector<int> mu_top;

  int count() const { return static_cast<int>(masks.size()); }
  int full_index() const { return count() - 1; }
  int order_of(int h) const { return std::popcount(masks[static_cast<std::size_t>(h)]); }
  bool contains(int h, int element) const {
    return (masks[static_cast<std::size_t>(h)] >> element) & 1u;
  }
  bool leq(int h, int k) const {
    return (masks[static_cast<std::size_t>(h)] & ~masks[static_cast<std::size_t>(k)]) == 0;
  }
};

/// Smallest subgroup containing every set bit of `seed`.
inline std::uint64_t subgroup_closure(const GroupTable& g, std::uint64_t seed) {
  std::uint64_t mask = seed | 1u;  // identity
  std::vector<int> members;
  for (int e = 0; e < g.size(); ++e)
    if ((mask >> e) & 1u) members.push_back(e);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int p = g.mul(members[i], members[j]);
      if (!((mask >> p) & 1u)) {
        mask |= std::uint64_t{1} << p;
        members.push_back(p);
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      const int p = g.mul(members[j], members[i]);
      if (!((mask >> p) & 1u)) {
        mask |= std::uint64_t{1} << p;
        members.push_back(p);
      }
    }
  }
  return mask;
}

/// All subgroups by closing joins of cyclic subgroups until fixpoint, then
/// mu(H,G) top-down: mu(G,G) = 1 and mu(H,G) = -sum of mu(K,G) over H < K <= G.
inline SubgroupLattice build_subgroup_lattice(const GroupTable& g) {
  if (g.size() > 64) throw std::invalid_argument("subgroup lattice supports order <= 64");

  std::set<std::uint64_t> found;
  found.insert(std::uint64_t{1});  // trivial subgroup
  for (int e = 0; e < g.size(); ++e) found.insert(subgroup_closure(g, std::uint64_t{1} << e));

  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<std::uint64_t> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        const std::uint64_t join = subgroup_closure(g, snapshot[i] | snapshot[j]);
        if (found.insert(join).second) grown = true;
      }
  }

  SubgroupLattice lattice;
  lattice.masks.assign(found.begin(), found.end());
  std::sort(lattice.masks.begin(), lattice.masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  const int count = lattice.count();
  lattice.mu_top.assign(static_cast<std::size_t>(count), 0);
  lattice.mu_top[static_cast<std::size_t>(count - 1)] = 1;
  for (int h = count - 2; h >= 0; --h) {
    int sum = 0;
    for (int k = h + 1; k < count; ++k)
      if (lattice.leq(h, k)) sum += lattice.mu_top[static_cast<std::size_t>(k)];
    lattice.mu_top[static_cast<std::size_t>(h)] = -sum;
  }
  return lattice;
}

}  // namespace trisym
