#pragma once

#include <array>
#include <string>
#include <vector>

#include "trisym/covering.hpp"
#include "trisym/group.hpp"

namespace trisym {

/// An action of A4, S4 or A5 generated by an involution i and an order-three
/// element alpha, together with the derived elements the curve invariants
/// depend on. Smaller closures (S3 and below) are rejected: the corresponding
/// diagram of quotient curves completes and defines no degree-three curve.
struct TriangleAction {
  GroupTable group;
  int i = 0;
  int alpha = 0;
  int i_alpha = 0;         // i * alpha
  int i_alpha_sq = 0;      // (i * alpha)^2
  int twist = 0;           // i * alpha^2 * i * alpha

  GroupKind kind() const { return group.kind(); }
  const std::string& label_of(int element) const { return group.class_label_of(element); }
};

/// Fixed-point counts of the action's distinguished elements:
///   s = nu(alpha), t = nu(i), r = nu(i alpha),
///   k = nu((i alpha)^2) - nu(i alpha), e = nu(i alpha^2 i alpha).
struct ParameterTuple {
  int s = 0, t = 0, r = 0, k = 0, e = 0;

  bool operator==(const ParameterTuple&) const = default;
};

enum class BrillNoether { Below, InRange, Above };

inline std::string to_string(BrillNoether status) {
  switch (status) {
    case BrillNoether::Below: return "below";
    case BrillNoether::InRange: return "in_range";
    default: return "above";
  }
}

/// `in_range` iff g < pa < 2g - 1, both sides strict.
inline BrillNoether brill_noether_status(int g, int pa) {
  if (pa <= g) return BrillNoether::Below;
  if (pa >= 2 * g - 1) return BrillNoether::Above;
  return BrillNoether::InRange;
}

/// Invariants of the degree-three curve in C^(2) cut out by the action:
/// h = g(D), g = g(C), b = g(B), pa and node count of the image curve and of
/// its preimage in C x C, and the self-intersection number.
struct CurveInvariants {
  int h = 0, g = 0, b = 0, pa = 0;
  int sing_B = 0, sing_D = 0;
  int bsq = 0;
  BrillNoether bn_status = BrillNoether::Below;
};

inline TriangleAction make_action(GroupKind kind, const Permutation& i, const Permutation& alpha) {
  if (kind == GroupKind::Other) throw std::invalid_argument("kind must be a4, s4 or a5");
  if (i.order() != 2) throw std::invalid_argument("i must have order 2");
  if (alpha.order() != 3) throw std::invalid_argument("alpha must have order 3");

  TriangleAction action;
  action.group = build_group({i, alpha});
  if (action.group.kind() != kind)
    throw std::invalid_argument("unsupported: diagram completes or group mismatch (<i,alpha> is not " +
                                to_string(kind) + ")");
  const auto& g = action.group;
  action.i = g.index_of(i);
  action.alpha = g.index_of(alpha);
  action.i_alpha = g.mul(action.i, action.alpha);
  action.i_alpha_sq = g.mul(action.i_alpha, action.i_alpha);
  const int alpha_sq = g.mul(action.alpha, action.alpha);
  action.twist = g.mul(g.mul(action.i, alpha_sq), action.i_alpha);

  // Facts the downstream parameter relations rest on.
  switch (kind) {
    case GroupKind::A4:
      if (g.class_of(action.twist) != g.class_of(action.i))
        throw std::logic_error("A4: i alpha^2 i alpha is not conjugate to i");
      break;
    case GroupKind::S4:
      if (g.class_of(action.twist) != g.class_of(action.alpha))
        throw std::logic_error("S4: i alpha^2 i alpha is not conjugate to alpha");
      break;
    default:
      if (g.element_order(action.twist) != 5)
        throw std::logic_error("A5: i alpha^2 i alpha does not have order 5");
      break;
  }
  return action;
}

/// The representatives used throughout: determinism requires one fixed choice
/// per group, and any valid pair is conjugate-equivalent to it.
inline TriangleAction canonical_action(GroupKind kind) {
  switch (kind) {
    case GroupKind::A4:
      return make_action(kind, parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 2 3)", 4));
    case GroupKind::S4:
      return make_action(kind, parse_permutation("(1 2)", 4), parse_permutation("(1 4 3)", 4));
    case GroupKind::A5:
      return make_action(kind, parse_permutation("(1 2)(4 5)", 5), parse_permutation("(1 4 3)", 5));
    default:
      throw std::invalid_argument("kind must be a4, s4 or a5");
  }
}

/// Reads (s, t, r, k, e) off a signature and checks the group-specific
/// relations (A4: k=0, r=s, e=t; S4: e=s; A5: k=0, e=r). A violation is an
/// internal-consistency failure, not user error.
inline ParameterTuple params_from_signature(const TriangleAction& action, const Signature& sig) {
  const FixedPointProfile profile(action.group, sig);
  const auto& g = action.group;
  ParameterTuple p;
  p.s = static_cast<int>(profile.at_element(g, action.alpha));
  p.t = static_cast<int>(profile.at_element(g, action.i));
  p.r = static_cast<int>(profile.at_element(g, action.i_alpha));
  p.k = static_cast<int>(profile.at_element(g, action.i_alpha_sq)) - p.r;
  p.e = static_cast<int>(profile.at_element(g, action.twist));

  bool consistent = true;
  switch (action.kind()) {
    case GroupKind::A4: consistent = p.k == 0 && p.r == p.s && p.e == p.t; break;
    case GroupKind::S4: consistent = p.e == p.s; break;
    default: consistent = p.k == 0 && p.e == p.r; break;
  }
  if (!consistent) throw std::logic_error("parameter relations violated for " + to_string(action.kind()));
  return p;
}

namespace detail {

inline void require_divisible(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("divisibility violation: " + what);
}

}  // namespace detail

/// All class multisets whose derived parameters equal the input, as sorted
/// signatures in deterministic (lexicographic) order. For A4 the order-three
/// branch points split freely across the two three-cycle classes; for A5 the
/// order-five ones split across the two five-cycle classes; for S4 the
/// multiset is unique.
inline std::vector<Signature> signatures_from_params(const TriangleAction& action,
                                                     const ParameterTuple& p) {
  const auto& g = action.group;
  if (p.s < 0 || p.t < 0 || p.r < 0 || p.k < 0 || p.e < 0)
    throw std::invalid_argument("parameters must be non-negative");
  detail::require_divisible(p.t % 2 == 0, "t must be even");

  const std::string label_i = action.label_of(action.i);
  const std::string label_a = action.label_of(action.alpha);

  std::vector<std::vector<std::string>> branch_sets;
  switch (action.kind()) {
    case GroupKind::A4: {
      detail::require_divisible(p.k == 0 && p.r == p.s && p.e == p.t, "A4 requires k=0, r=s, e=t");
      const std::string label_a2 = action.label_of(g.inv(action.alpha));
      for (int n_a = p.s; n_a >= 0; --n_a) {
        std::vector<std::string> branches(static_cast<std::size_t>(p.t / 2), label_i);
        branches.insert(branches.end(), static_cast<std::size_t>(n_a), label_a);
        branches.insert(branches.end(), static_cast<std::size_t>(p.s - n_a), label_a2);
        branch_sets.push_back(std::move(branches));
      }
      break;
    }
    case GroupKind::S4: {
      detail::require_divisible(p.s % 2 == 0, "s must be even");
      detail::require_divisible(p.r % 2 == 0, "r must be even");
      detail::require_divisible(p.k % 4 == 0, "k must be a multiple of 4");
      detail::require_divisible(p.e == p.s, "S4 requires e=s");
      std::vector<std::string> branches(static_cast<std::size_t>(p.t / 2), label_i);
      branches.insert(branches.end(), static_cast<std::size_t>(p.s / 2), label_a);
      branches.insert(branches.end(), static_cast<std::size_t>(p.r / 2), action.label_of(action.i_alpha));
      branches.insert(branches.end(), static_cast<std::size_t>(p.k / 4),
                      action.label_of(action.i_alpha_sq));
      branch_sets.push_back(std::move(branches));
      break;
    }
    default: {
      detail::require_divisible(p.s % 2 == 0, "s must be even");
      detail::require_divisible(p.r % 2 == 0, "r must be even");
      detail::require_divisible(p.k == 0 && p.e == p.r, "A5 requires k=0, e=r");
      const std::string label_5a = action.label_of(action.i_alpha);
      const std::string label_5b = action.label_of(action.i_alpha_sq);
      for (int n_5a = p.r / 2; n_5a >= 0; --n_5a) {
        std::vector<std::string> branches(static_cast<std::size_t>(p.t / 2), label_i);
        branches.insert(branches.end(), static_cast<std::size_t>(p.s / 2), label_a);
        branches.insert(branches.end(), static_cast<std::size_t>(n_5a), label_5a);
        branches.insert(branches.end(), static_cast<std::size_t>(p.r / 2 - n_5a), label_5b);
        branch_sets.push_back(std::move(branches));
      }
      break;
    }
  }

  std::vector<Signature> out;
  for (auto& branches : branch_sets) {
    if (branches.empty()) continue;  // the all-zero tuple has no branched cover
    std::sort(branches.begin(), branches.end());
    out.push_back(make_signature(g, 0, std::move(branches)));
  }
  std::sort(out.begin(), out.end(),
            [](const Signature& a, const Signature& b) { return a.branches < b.branches; });
  return out;
}

/// Closed-form genus of D in the gamma = 0 regime:
///   A4: h = 4s + 3t/2 - 11
///   S4: h = -23 + 3t + 4s + 9r/2 + 3k/2
///   A5: h = -59 + 15t/2 + 10s + 12r
/// Must equal rh_genus on every signature realizing the parameters.
inline int closed_form_genus(GroupKind kind, const ParameterTuple& p) {
  long long twice = 0;
  switch (kind) {
    case GroupKind::A4: twice = 8LL * p.s + 3LL * p.t - 22; break;
    case GroupKind::S4: twice = -46 + 6LL * p.t + 8LL * p.s + 9LL * p.r + 3LL * p.k; break;
    case GroupKind::A5: twice = -118 + 15LL * p.t + 20LL * p.s + 24LL * p.r; break;
    default: throw std::invalid_argument("kind must be a4, s4 or a5");
  }
  if (twice % 2 != 0) throw std::invalid_argument("parity violation: genus is not integral");
  return static_cast<int>(twice / 2);
}

inline CurveInvariants curve_invariants(GroupKind kind, const ParameterTuple& p) {
  CurveInvariants inv;
  inv.h = closed_form_genus(kind, p);
  if ((inv.h + 2 - p.s) % 3 != 0) throw std::invalid_argument("g = (h+2-s)/3 is not integral");
  inv.g = (inv.h + 2 - p.s) / 3;
  if ((2 * inv.h + 2 - p.t) % 4 != 0) throw std::invalid_argument("b = (2h+2-t)/4 is not integral");
  inv.b = (2 * inv.h + 2 - p.t) / 4;
  if ((p.e + p.k) % 2 != 0) throw std::invalid_argument("(e+k)/2 is not integral");
  inv.sing_B = (p.e + p.k) / 2;
  inv.sing_D = p.e + p.r + p.k;
  inv.pa = inv.b + inv.sing_B;
  inv.bsq = inv.h - 1 - 3 * (2 * inv.g - 2) + p.e + p.k + p.r;
  inv.bn_status = brill_noether_status(inv.g, inv.pa);
  return inv;
}

struct FeasibilityVerdict {
  bool feasible = false;
  std::string reason;  // divisibility | parity | integrality | genus_bound | positivity_bound
  std::string detail;

  static FeasibilityVerdict ok() { return {true, "", ""}; }
  static FeasibilityVerdict fail(std::string reason, std::string detail) {
    return {false, std::move(reason), std::move(detail)};
  }
};

/// Checks run in a fixed order so reports diff stably:
/// divisibility, parity, integrality, genus bound (g >= 2), positivity bound
/// (self-intersection > 0). The bounds are checked in the equivalent direct
/// forms h - s >= 4 and h <= 2s + e + k + r.
inline FeasibilityVerdict feasibility(GroupKind kind, const ParameterTuple& p) {
  if (p.s < 0 || p.t < 0 || p.r < 0 || p.k < 0 || p.e < 0)
    return FeasibilityVerdict::fail("divisibility", "parameters must be non-negative");
  if (p.t % 2 != 0) return FeasibilityVerdict::fail("divisibility", "t must be even");
  switch (kind) {
    case GroupKind::A4:
      if (p.k != 0 || p.r != p.s || p.e != p.t)
        return FeasibilityVerdict::fail("divisibility", "A4 requires k=0, r=s, e=t");
      break;
    case GroupKind::S4:
      if (p.s % 2 != 0) return FeasibilityVerdict::fail("divisibility", "s must be even");
      if (p.r % 2 != 0) return FeasibilityVerdict::fail("divisibility", "r must be even");
      if (p.k % 4 != 0) return FeasibilityVerdict::fail("divisibility", "k must be a multiple of 4");
      if (p.e != p.s) return FeasibilityVerdict::fail("divisibility", "S4 requires e=s");
      if ((p.t + p.r) % 4 != 0)
        return FeasibilityVerdict::fail("parity", "t+r must be a multiple of 4");
      break;
    case GroupKind::A5:
      if (p.s % 2 != 0) return FeasibilityVerdict::fail("divisibility", "s must be even");
      if (p.r % 2 != 0) return FeasibilityVerdict::fail("divisibility", "r must be even");
      if (p.k != 0 || p.e != p.r)
        return FeasibilityVerdict::fail("divisibility", "A5 requires k=0, e=r");
      break;
    default:
      throw std::invalid_argument("kind must be a4, s4 or a5");
  }

  int h = 0, g = 0, b = 0;
  try {
    h = closed_form_genus(kind, p);
    if ((h + 2 - p.s) % 3 != 0) return FeasibilityVerdict::fail("integrality", "g is not integral");
    g = (h + 2 - p.s) / 3;
    if ((2 * h + 2 - p.t) % 4 != 0) return FeasibilityVerdict::fail("integrality", "b is not integral");
    b = (2 * h + 2 - p.t) / 4;
  } catch (const std::invalid_argument& e) {
    return FeasibilityVerdict::fail("integrality", e.what());
  }
  (void)b;
  if (g < 2 || h - p.s < 4)
    return FeasibilityVerdict::fail("genus_bound", "g(C) >= 2 fails (needs h - s >= 4)");
  if (h > 2 * p.s + p.e + p.k + p.r)
    return FeasibilityVerdict::fail("positivity_bound",
                                    "self-intersection > 0 fails (needs h <= 2s+e+k+r)");
  return FeasibilityVerdict::ok();
}

}  // namespace trisym
