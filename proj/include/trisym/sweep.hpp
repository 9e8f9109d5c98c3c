#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisym/hurwitz.hpp"
#include "trisym/lattice.hpp"
#include "trisym/triangle.hpp"
#include "trisym/word.hpp"

namespace trisym {

enum class RowStatus { Realized, NoVector, Infeasible };

inline std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Realized: return "realized";
    case RowStatus::NoVector: return "no_vector";
    default: return "infeasible";
  }
}

/// One classified parameter tuple. Exactly the realized rows carry a witness,
/// a winning signature split and curve invariants.
struct TableRow {
  GroupKind kind = GroupKind::Other;
  ParameterTuple params;
  RowStatus status = RowStatus::Infeasible;
  std::string reason;                        // infeasible rows: violated constraint
  std::vector<std::string> split;            // realized rows: winning branch classes
  std::optional<GeneratingVector> witness;
  std::optional<CurveInvariants> invariants;
  std::string witness_cycles;                // entries in cycle notation, space-separated
  std::string witness_word;                  // entries as an {i,a}-word
};

/// Everything a sweep or audit needs about one group, built once.
struct SweepContext {
  TriangleAction action;
  SubgroupLattice lattice;
  WordTable words;

  explicit SweepContext(GroupKind kind)
      : action(canonical_action(kind)),
        lattice(build_subgroup_lattice(action.group)),
        words(action.group, action.i, action.alpha) {}
};

namespace detail {

/// Parameter tuples satisfying the kind's divisibility constraints inside the
/// inequality-bounded lattice (the upper bound h <= 2s+e+k+r written in the
/// kind's closed form), ascending lexicographic in (s, t, r, k).
inline std::vector<ParameterTuple> parameter_lattice(GroupKind kind) {
  std::vector<ParameterTuple> tuples;
  switch (kind) {
    case GroupKind::A4:
      // s + t/2 <= 11
      for (int s = 0; s <= 11; ++s)
        for (int t = 0; 2 * s + t <= 22; t += 2)
          tuples.push_back({s, t, s, 0, t});
      break;
    case GroupKind::S4:
      // 3t + s + 7r/2 + k/2 <= 23
      for (int s = 0; s <= 23; s += 2)
        for (int t = 0; 3 * t + s <= 23; t += 2)
          for (int r = 0; 6 * t + 2 * s + 7 * r <= 46; r += 2)
            for (int k = 0; 6 * t + 2 * s + 7 * r + k <= 46; k += 4)
              tuples.push_back({s, t, r, k, s});
      break;
    case GroupKind::A5:
      // 15t/2 + 8s + 10r <= 59
      for (int s = 0; 16 * s <= 118; s += 2)
        for (int t = 0; 16 * s + 15 * t <= 118; t += 2)
          for (int r = 0; 16 * s + 15 * t + 20 * r <= 118; r += 2)
            tuples.push_back({s, t, r, 0, r});
      break;
    default:
      throw std::invalid_argument("kind must be a4, s4 or a5");
  }
  return tuples;
}

}  // namespace detail

/// Classifies one tuple: infeasible by the numeric constraints, realized by
/// the first signature split admitting a generating vector (with the
/// lexicographically least witness), or no_vector after exhausting all splits.
inline TableRow classify_tuple(const SweepContext& ctx, const ParameterTuple& params) {
  TableRow row;
  row.kind = ctx.action.kind();
  row.params = params;

  const FeasibilityVerdict verdict = feasibility(row.kind, params);
  if (!verdict.feasible) {
    row.status = RowStatus::Infeasible;
    row.reason = verdict.reason;
    return row;
  }

  for (const Signature& sig : signatures_from_params(ctx.action, params)) {
    const ClassSequence cs = make_class_sequence(ctx.action.group, sig.branches);
    auto witness = find_witness(ctx.action.group, ctx.lattice, cs);
    if (!witness) continue;
    row.status = RowStatus::Realized;
    row.split = sig.branches;
    row.invariants = curve_invariants(row.kind, params);
    row.witness_word = ctx.words.vector_word(ctx.action.group, witness->entries);
    for (std::size_t j = 0; j < witness->entries.size(); ++j) {
      if (j) row.witness_cycles += ' ';
      row.witness_cycles += render_cycles(ctx.action.group.permutation(witness->entries[j]));
    }
    row.witness = std::move(witness);
    return row;
  }
  row.status = RowStatus::NoVector;
  return row;
}

/// Full classification of the kind's parameter lattice in deterministic order.
inline std::vector<TableRow> sweep(const SweepContext& ctx) {
  std::vector<TableRow> rows;
  for (const ParameterTuple& params : detail::parameter_lattice(ctx.action.kind()))
    rows.push_back(classify_tuple(ctx, params));
  return rows;
}

inline std::vector<TableRow> sweep(GroupKind kind) { return sweep(SweepContext(kind)); }

/// Exact generating-vector count summed over every signature split, for audit
/// reports. Valid whenever the divisibility constraints hold, whether or not
/// the tuple is feasible.
inline BigCount generating_count_over_splits(const SweepContext& ctx, const ParameterTuple& params) {
  BigCount total = 0;
  for (const Signature& sig : signatures_from_params(ctx.action, params)) {
    const ClassSequence cs = make_class_sequence(ctx.action.group, sig.branches);
    total += count_generating_tuples(ctx.action.group, ctx.lattice, cs);
  }
  return total;
}

}  // namespace trisym
