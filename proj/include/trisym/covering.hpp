#pragma once

#include <map>
#include <string>
#include <vector>

#include "trisym/group.hpp"

namespace trisym {

/// Branching data (gamma; m_1, ..., m_r) of a G-cover, with each branch point
/// carrying the conjugacy class of its monodromy. Construct through
/// make_signature, which rejects trivial branch classes and parity-violating
/// data, so downstream genus queries never see half-integers.
struct Signature {
  int gamma = 0;
  std::vector<std::string> branches;
};

namespace detail {

/// 2h-2 as a (checked, even) integer; the Riemann-Hurwitz right-hand side.
inline long long rh_double_genus(const GroupTable& g, const Signature& sig) {
  const long long n = g.size();
  long long total = n * (2 * static_cast<long long>(sig.gamma) - 2);
  for (const auto& label : sig.branches) {
    const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(label))];
    const long long m = cls.element_order;
    total += (n / m) * (m - 1);
  }
  return total;
}

}  // namespace detail

inline Signature make_signature(const GroupTable& g, int gamma, std::vector<std::string> branches) {
  if (gamma < 0) throw std::invalid_argument("quotient genus must be non-negative");
  for (const auto& label : branches) {
    const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(label))];
    if (cls.element_order == 1)
      throw std::invalid_argument("branch monodromy must be nontrivial");
  }
  Signature sig{gamma, std::move(branches)};
  if (detail::rh_double_genus(g, sig) % 2 != 0)
    throw std::invalid_argument("Riemann-Hurwitz parity violation: no such cover exists");
  return sig;
}

/// Genus h of the covering curve: 2h - 2 = |G|(2 gamma - 2) + sum (|G|/m)(m-1).
inline int rh_genus(const GroupTable& g, const Signature& sig) {
  const long long total = detail::rh_double_genus(g, sig);
  if (total % 2 != 0)
    throw std::invalid_argument("Riemann-Hurwitz parity violation: no such cover exists");
  const long long h = total / 2 + 1;
  if (h < 0) throw std::invalid_argument("inadmissible signature: negative genus");
  return static_cast<int>(h);
}

/// Fixed points of a nonidentity element on the cover determined by the
/// signature: for each branch with monodromy class rep c of order m, the
/// orbit over that branch point contributes
///   |C_G(beta)| * #{ j in [1, m) : c^j conjugate to beta } / m,
/// which is always an integer.
inline long long nu_macbeath(const GroupTable& g, const Signature& sig, int beta) {
  if (beta == GroupTable::kIdentity)
    throw std::invalid_argument("fixed-point count undefined for the identity");
  const long long centralizer = g.centralizer_order(beta);
  const int beta_class = g.class_of(beta);
  long long total = 0;
  for (const auto& label : sig.branches) {
    const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(label))];
    const int m = cls.element_order;
    long long hits = 0;
    int p = cls.representative;
    for (int j = 1; j < m; ++j) {
      if (g.class_of(p) == beta_class) ++hits;
      p = g.mul(p, cls.representative);
    }
    const long long contribution = centralizer * hits;
    if (contribution % m != 0)
      throw std::logic_error("fixed-point contribution is not integral");
    total += contribution / m;
  }
  return total;
}

/// Independent brute-force count of the same quantity: over each branch class
/// representative c, the cosets x<c> with x^-1 beta x inside <c> are exactly
/// the fiber points fixed by beta. Must agree with nu_macbeath on every input.
inline long long nu_coset_oracle(const GroupTable& g, const Signature& sig, int beta) {
  if (beta == GroupTable::kIdentity)
    throw std::invalid_argument("fixed-point count undefined for the identity");
  const int n = g.size();
  long long total = 0;
  for (const auto& label : sig.branches) {
    const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(label))];
    const int c = cls.representative;
    std::vector<int> cyclic;
    std::vector<bool> in_cyclic(static_cast<std::size_t>(n), false);
    for (int p = GroupTable::kIdentity;;) {
      cyclic.push_back(p);
      in_cyclic[static_cast<std::size_t>(p)] = true;
      p = g.mul(p, c);
      if (p == GroupTable::kIdentity) break;
    }
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      if (visited[static_cast<std::size_t>(x)]) continue;
      for (int h : cyclic) visited[static_cast<std::size_t>(g.mul(x, h))] = true;
      const int conj = g.mul(g.mul(g.inv(x), beta), x);
      if (in_cyclic[static_cast<std::size_t>(conj)]) ++total;
    }
  }
  return total;
}

/// nu per nonidentity class, computed once per signature. Conjugate elements
/// fix equally many points, so a class-indexed table is the natural cache.
class FixedPointProfile {
public:
  FixedPointProfile(const GroupTable& g, const Signature& sig) {
    nu_by_class_.assign(g.classes().size(), 0);
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
      if (g.classes()[c].element_order == 1) continue;
      nu_by_class_[c] = nu_macbeath(g, sig, g.classes()[c].representative);
      labels_.emplace_back(g.classes()[c].label, nu_by_class_[c]);
    }
  }

  long long at_class(int class_index) const {
    return nu_by_class_[static_cast<std::size_t>(class_index)];
  }

  long long at_element(const GroupTable& g, int element) const {
    if (element == GroupTable::kIdentity)
      throw std::invalid_argument("fixed-point count undefined for the identity");
    return at_class(g.class_of(element));
  }

  /// {class label -> nu} for every nonidentity class.
  const std::vector<std::pair<std::string, long long>>& by_class() const { return labels_; }

private:
  std::vector<long long> nu_by_class_;
  std::vector<std::pair<std::string, long long>> labels_;
};

/// Intersection number of the graphs of two distinct automorphisms:
/// Gamma_a . Gamma_b = nu(a^-1 b).
inline long long graph_intersection(const GroupTable& g, const Signature& sig, int a, int b) {
  if (a == b) throw std::invalid_argument("graph self-intersection is out of scope");
  return nu_macbeath(g, sig, g.mul(g.inv(a), b));
}

/// Per-branch-point contribution of one class to nu of its own representative.
/// Every nu over covers branched only in this class is a multiple of it; e.g.
/// a transposition branch point of S4 contributes 2, so nu(i) is even.
inline long long divisibility_constraint(const GroupTable& g, const std::string& class_label) {
  const auto& cls = g.classes()[static_cast<std::size_t>(g.class_index(class_label))];
  if (cls.element_order == 1) throw std::invalid_argument("class must be nontrivial");
  Signature sig{0, {class_label}};
  return nu_macbeath(g, sig, cls.representative);
}

}  // namespace trisym
