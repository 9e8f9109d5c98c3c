#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisym/sweep.hpp"

namespace trisym {

using Json = nlohmann::ordered_json;

/// One reference table row: parameters, the published branching-data word and
/// the published invariants.
struct FixtureRow {
  GroupKind kind = GroupKind::Other;
  ParameterTuple params;
  std::string word;
  int h = 0, g = 0, b = 0, pa = 0, bsq = 0;
};

/// A claim that a parameter pattern admits no curve. Absent fields match any
/// value; `reason` is one of inequality, parity, count_zero.
struct DiscardPattern {
  GroupKind kind = GroupKind::Other;
  std::optional<int> s, t, r, k;
  std::string reason;

  bool matches(const ParameterTuple& p) const {
    return (!s || *s == p.s) && (!t || *t == p.t) && (!r || *r == p.r) && (!k || *k == p.k);
  }

  std::string pattern_text() const {
    std::string out;
    auto add = [&](const char* name, const std::optional<int>& v) {
      if (!v) return;
      if (!out.empty()) out += ',';
      out += name;
      out += '=';
      out += std::to_string(*v);
    };
    add("s", s); add("t", t); add("r", r); add("k", k);
    return out;
  }
};

struct FixtureSet {
  std::vector<FixtureRow> rows;
  std::vector<DiscardPattern> discards;

  std::vector<FixtureRow> rows_for(GroupKind kind) const {
    std::vector<FixtureRow> out;
    for (const auto& row : rows)
      if (row.kind == kind) out.push_back(row);
    return out;
  }

  std::vector<DiscardPattern> discards_for(GroupKind kind) const {
    std::vector<DiscardPattern> out;
    for (const auto& d : discards)
      if (d.kind == kind) out.push_back(d);
    return out;
  }
};

namespace detail {

inline int derived_e(GroupKind kind, int s, int t, int r) {
  switch (kind) {
    case GroupKind::A4: return t;
    case GroupKind::S4: return s;
    default: return r;
  }
}

}  // namespace detail

/// Fixture files are a JSON array mixing row objects
///   {"group","s","t","r","k","word","h","g","b","pa","bsq"}
/// and per-group discard objects {"group","discards":[{"params":{...},"reason"}]}.
/// Unknown keys are ignored, so engine JSON output loads back unchanged.
inline FixtureSet parse_fixtures(const Json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("fixture document must be a JSON array");
  FixtureSet set;
  for (const auto& item : doc) {
    if (!item.is_object()) throw std::invalid_argument("fixture entries must be JSON objects");
    const GroupKind kind = kind_from_string(item.at("group").get<std::string>());
    if (item.contains("discards")) {
      for (const auto& claim : item.at("discards")) {
        DiscardPattern pattern;
        pattern.kind = kind;
        pattern.reason = claim.at("reason").get<std::string>();
        const auto& params = claim.at("params");
        if (params.contains("s")) pattern.s = params.at("s").get<int>();
        if (params.contains("t")) pattern.t = params.at("t").get<int>();
        if (params.contains("r")) pattern.r = params.at("r").get<int>();
        if (params.contains("k")) pattern.k = params.at("k").get<int>();
        set.discards.push_back(std::move(pattern));
      }
      continue;
    }
    if (item.value("status", "realized") != "realized") continue;
    FixtureRow row;
    row.kind = kind;
    row.params.s = item.at("s").get<int>();
    row.params.t = item.at("t").get<int>();
    row.params.r = item.at("r").get<int>();
    row.params.k = item.at("k").get<int>();
    row.params.e = detail::derived_e(kind, row.params.s, row.params.t, row.params.r);
    row.word = item.value("word", "");
    row.h = item.at("h").get<int>();
    row.g = item.at("g").get<int>();
    row.b = item.at("b").get<int>();
    row.pa = item.at("pa").get<int>();
    row.bsq = item.at("bsq").get<int>();
    set.rows.push_back(std::move(row));
  }
  return set;
}

inline FixtureSet load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read fixture file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw std::runtime_error("fixture file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_fixtures(doc);
}

struct ValueMismatch {
  ParameterTuple params;
  std::string field;
  long long fixture_value = 0;
  long long engine_value = 0;
};

struct StatusMismatch {
  ParameterTuple params;
  std::string detail;
};

/// Outcome of checking engine rows against a fixture set. Matched plus the
/// distinct mismatched rows covers every fixture row; beyond_fixture lists
/// engine-realized tuples the fixtures do not mention and never affects the
/// fixture comparisons.
struct DiffReport {
  GroupKind kind = GroupKind::Other;
  int fixture_rows = 0;
  int matched = 0;
  std::vector<ValueMismatch> value_mismatches;
  std::vector<StatusMismatch> status_mismatches;
  std::vector<TableRow> beyond_fixture;

  bool clean() const { return value_mismatches.empty() && status_mismatches.empty(); }

  std::vector<ParameterTuple> mismatched_rows() const {
    std::vector<ParameterTuple> out;
    auto add = [&](const ParameterTuple& p) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    };
    for (const auto& m : value_mismatches) add(m.params);
    for (const auto& m : status_mismatches) add(m.params);
    return out;
  }
};

/// Compares engine rows to fixture rows field by field and re-verifies every
/// fixture word with the canonical representatives: the word must be
/// product-one, generate the group, and induce exactly the fixture's
/// parameters. Discrepancies are reported, never patched.
inline DiffReport verify_fixtures(const SweepContext& ctx, const std::vector<TableRow>& rows,
                                  const FixtureSet& fixtures) {
  const GroupKind kind = ctx.action.kind();
  DiffReport report;
  report.kind = kind;

  const auto fixture_rows = fixtures.rows_for(kind);
  report.fixture_rows = static_cast<int>(fixture_rows.size());
  std::set<std::array<int, 4>> fixture_keys;
  for (const auto& f : fixture_rows)
    fixture_keys.insert({f.params.s, f.params.t, f.params.r, f.params.k});

  const WordBinding binding{ctx.action.group.permutation(ctx.action.i),
                            ctx.action.group.permutation(ctx.action.alpha)};

  for (const auto& fixture : fixture_rows) {
    bool row_ok = true;

    const TableRow* engine = nullptr;
    for (const auto& row : rows)
      if (row.params == fixture.params) { engine = &row; break; }

    if (!engine || engine->status != RowStatus::Realized) {
      report.status_mismatches.push_back(
          {fixture.params, engine ? "engine classifies this tuple as " + to_string(engine->status) +
                                        (engine->reason.empty() ? "" : " (" + engine->reason + ")")
                                  : "tuple lies outside the engine lattice"});
      row_ok = false;
    } else {
      const CurveInvariants& inv = *engine->invariants;
      const std::pair<const char*, std::pair<int, int>> fields[] = {
          {"h", {fixture.h, inv.h}},   {"g", {fixture.g, inv.g}},   {"b", {fixture.b, inv.b}},
          {"pa", {fixture.pa, inv.pa}}, {"bsq", {fixture.bsq, inv.bsq}}};
      for (const auto& [name, values] : fields) {
        if (values.first != values.second) {
          report.value_mismatches.push_back({fixture.params, name, values.first, values.second});
          row_ok = false;
        }
      }
    }

    if (fixture.word.empty()) {
      report.status_mismatches.push_back({fixture.params, "fixture row has no branching-data word"});
      row_ok = false;
    } else {
      try {
        const auto perms = word_entries(fixture.word, binding);
        std::vector<int> entries;
        for (const auto& p : perms) entries.push_back(ctx.action.group.index_of(p));
        const VectorReport vr = verify_vector(ctx.action.group, entries);
        if (!vr.product_one || !vr.generates) {
          report.status_mismatches.push_back(
              {fixture.params, std::string("fixture word fails verification: ") +
                                   (!vr.product_one ? "product is not one" : "does not generate")});
          row_ok = false;
        } else {
          auto labels = vr.class_labels;
          std::sort(labels.begin(), labels.end());
          const Signature sig = make_signature(ctx.action.group, 0, labels);
          const ParameterTuple derived = params_from_signature(ctx.action, sig);
          if (!(derived == fixture.params)) {
            std::ostringstream os;
            os << "fixture word induces (s,t,r,k,e)=(" << derived.s << ',' << derived.t << ','
               << derived.r << ',' << derived.k << ',' << derived.e << ") instead of the row's";
            report.status_mismatches.push_back({fixture.params, os.str()});
            row_ok = false;
          }
        }
      } catch (const std::exception& e) {
        report.status_mismatches.push_back(
            {fixture.params, std::string("fixture word does not evaluate: ") + e.what()});
        row_ok = false;
      }
    }

    if (row_ok) ++report.matched;
  }

  for (const auto& row : rows)
    if (row.status == RowStatus::Realized &&
        !fixture_keys.contains({row.params.s, row.params.t, row.params.r, row.params.k}))
      report.beyond_fixture.push_back(row);

  return report;
}

/// One audited discard tuple: the engine classification plus, whenever the
/// divisibility constraints allow building the signature splits, the exact
/// generating-vector count summed over splits.
struct DiscardFinding {
  ParameterTuple params;
  std::string claimed;
  RowStatus engine_status = RowStatus::Infeasible;
  std::string engine_reason;
  bool has_count = false;
  BigCount count = 0;
  bool ok = false;
  std::string note;
};

struct DiscardReport {
  GroupKind kind = GroupKind::Other;
  std::vector<DiscardFinding> findings;

  bool all_ok() const {
    return std::all_of(findings.begin(), findings.end(), [](const auto& f) { return f.ok; });
  }
  int realized_count() const {
    return static_cast<int>(std::count_if(findings.begin(), findings.end(), [](const auto& f) {
      return f.engine_status == RowStatus::Realized;
    }));
  }
};

/// Expands each discard pattern over the swept lattice and checks the claim:
/// inequality and parity discards must be infeasible for that reason, and
/// count_zero discards must admit no generating vector. Any realized tuple
/// refutes the claim.
inline DiscardReport verify_discards(const SweepContext& ctx, const std::vector<TableRow>& rows,
                                     const FixtureSet& fixtures) {
  DiscardReport report;
  report.kind = ctx.action.kind();
  for (const auto& pattern : fixtures.discards_for(report.kind)) {
    bool any = false;
    for (const auto& row : rows) {
      if (!pattern.matches(row.params)) continue;
      any = true;
      DiscardFinding finding;
      finding.params = row.params;
      finding.claimed = pattern.reason;
      finding.engine_status = row.status;
      finding.engine_reason = row.reason;
      try {
        finding.count = generating_count_over_splits(ctx, row.params);
        finding.has_count = true;
      } catch (const std::invalid_argument&) {
        // divisibility fails; no splits to count over
      }
      if (row.status == RowStatus::Realized) {
        finding.ok = false;
        finding.note = "claim refuted: tuple is realized";
      } else if (pattern.reason == "inequality") {
        finding.ok = row.status == RowStatus::Infeasible &&
                     (row.reason == "genus_bound" || row.reason == "positivity_bound");
        if (!finding.ok) finding.note = "expected an inequality violation";
      } else if (pattern.reason == "parity") {
        finding.ok = row.status == RowStatus::Infeasible && row.reason == "parity";
        if (!finding.ok) finding.note = "expected a parity violation";
      } else if (pattern.reason == "count_zero") {
        finding.ok = finding.has_count ? finding.count == 0 : row.status != RowStatus::Realized;
        if (!finding.ok) finding.note = "expected generating-vector count 0";
      } else {
        finding.ok = false;
        finding.note = "unknown claim category '" + pattern.reason + "'";
      }
      report.findings.push_back(std::move(finding));
    }
    if (!any) {
      DiscardFinding finding;
      finding.claimed = pattern.reason;
      finding.ok = false;
      finding.note = "pattern " + pattern.pattern_text() + " matches no swept tuples";
      report.findings.push_back(std::move(finding));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

inline Json row_to_json(const TableRow& row) {
  Json j;
  j["group"] = to_string(row.kind);
  j["s"] = row.params.s;
  j["t"] = row.params.t;
  j["r"] = row.params.r;
  j["k"] = row.params.k;
  j["e"] = row.params.e;
  j["status"] = to_string(row.status);
  if (row.status == RowStatus::Infeasible) j["reason"] = row.reason;
  if (row.status == RowStatus::Realized) {
    j["split"] = row.split;
    j["word"] = row.witness_word;
    j["witness"] = row.witness_cycles;
    const CurveInvariants& inv = *row.invariants;
    j["h"] = inv.h;
    j["g"] = inv.g;
    j["b"] = inv.b;
    j["pa"] = inv.pa;
    j["sing_B"] = inv.sing_B;
    j["sing_D"] = inv.sing_D;
    j["bsq"] = inv.bsq;
    j["bn_status"] = to_string(inv.bn_status);
  }
  return j;
}

inline Json rows_to_json(const std::vector<TableRow>& rows, bool include_all) {
  Json out = Json::array();
  for (const auto& row : rows)
    if (include_all || row.status == RowStatus::Realized) out.push_back(row_to_json(row));
  return out;
}

/// Fixed column order: group,s,t,r,k,h,g,b,pa,bsq,status,witness.
inline std::string rows_to_csv(const std::vector<TableRow>& rows, bool include_all) {
  std::ostringstream os;
  os << "group,s,t,r,k,h,g,b,pa,bsq,status,witness\n";
  for (const auto& row : rows) {
    if (!include_all && row.status != RowStatus::Realized) continue;
    os << to_string(row.kind) << ',' << row.params.s << ',' << row.params.t << ','
       << row.params.r << ',' << row.params.k << ',';
    if (row.invariants) {
      const auto& inv = *row.invariants;
      os << inv.h << ',' << inv.g << ',' << inv.b << ',' << inv.pa << ',' << inv.bsq;
    } else {
      os << ",,,,";
    }
    os << ',' << to_string(row.status) << ',' << row.witness_cycles << '\n';
  }
  return os.str();
}

inline std::string rows_to_text(const std::vector<TableRow>& rows, bool include_all) {
  std::ostringstream os;
  os << "  s   t   r   k |  h   g   b  pa bsq | status\n";
  for (const auto& row : rows) {
    if (!include_all && row.status != RowStatus::Realized) continue;
    char buf[128];
    if (row.invariants) {
      const auto& inv = *row.invariants;
      std::snprintf(buf, sizeof buf, "%3d %3d %3d %3d |%3d %3d %3d %3d %3d | %s", row.params.s,
                    row.params.t, row.params.r, row.params.k, inv.h, inv.g, inv.b, inv.pa, inv.bsq,
                    to_string(row.status).c_str());
      os << buf;
      if (!row.witness_word.empty()) os << "  " << row.witness_word;
    } else {
      std::snprintf(buf, sizeof buf, "%3d %3d %3d %3d |                    | %s", row.params.s,
                    row.params.t, row.params.r, row.params.k, to_string(row.status).c_str());
      os << buf << (row.reason.empty() ? "" : " (" + row.reason + ")");
    }
    os << '\n';
  }
  return os.str();
}

inline Json params_to_json(const ParameterTuple& p) {
  return Json{{"s", p.s}, {"t", p.t}, {"r", p.r}, {"k", p.k}, {"e", p.e}};
}

inline Json diff_to_json(const DiffReport& report) {
  Json j;
  j["group"] = to_string(report.kind);
  j["fixture_rows"] = report.fixture_rows;
  j["matched"] = report.matched;
  j["value_mismatches"] = Json::array();
  for (const auto& m : report.value_mismatches)
    j["value_mismatches"].push_back(Json{{"params", params_to_json(m.params)},
                                         {"field", m.field},
                                         {"fixture", m.fixture_value},
                                         {"engine", m.engine_value}});
  j["status_mismatches"] = Json::array();
  for (const auto& m : report.status_mismatches)
    j["status_mismatches"].push_back(Json{{"params", params_to_json(m.params)}, {"detail", m.detail}});
  j["beyond_fixture"] = Json::array();
  for (const auto& row : report.beyond_fixture) j["beyond_fixture"].push_back(row_to_json(row));
  return j;
}

inline Json discards_to_json(const DiscardReport& report) {
  Json j;
  j["group"] = to_string(report.kind);
  j["all_ok"] = report.all_ok();
  j["findings"] = Json::array();
  for (const auto& f : report.findings) {
    Json item;
    item["params"] = params_to_json(f.params);
    item["claimed"] = f.claimed;
    item["status"] = to_string(f.engine_status);
    if (!f.engine_reason.empty()) item["reason"] = f.engine_reason;
    if (f.has_count) item["generating_vectors"] = to_string(f.count);
    item["ok"] = f.ok;
    if (!f.note.empty()) item["note"] = f.note;
    j["findings"].push_back(std::move(item));
  }
  return j;
}

inline std::string diff_to_text(const DiffReport& report) {
  std::ostringstream os;
  os << "group " << to_string(report.kind) << ": " << report.fixture_rows << " fixture rows, "
     << report.matched << " matched, " << report.value_mismatches.size() << " value mismatches, "
     << report.status_mismatches.size() << " status mismatches, " << report.beyond_fixture.size()
     << " beyond-fixture rows\n";
  for (const auto& m : report.value_mismatches)
    os << "  value mismatch (s=" << m.params.s << ",t=" << m.params.t << ",r=" << m.params.r
       << ",k=" << m.params.k << ") " << m.field << ": fixture " << m.fixture_value << ", engine "
       << m.engine_value << '\n';
  for (const auto& m : report.status_mismatches)
    os << "  status mismatch (s=" << m.params.s << ",t=" << m.params.t << ",r=" << m.params.r
       << ",k=" << m.params.k << "): " << m.detail << '\n';
  for (const auto& row : report.beyond_fixture) {
    os << "  beyond fixture (s=" << row.params.s << ",t=" << row.params.t << ",r=" << row.params.r
       << ",k=" << row.params.k << "): realized";
    if (row.invariants)
      os << " with (h,g,b,pa,bsq)=(" << row.invariants->h << ',' << row.invariants->g << ','
         << row.invariants->b << ',' << row.invariants->pa << ',' << row.invariants->bsq << ")";
    os << '\n';
  }
  return os.str();
}

inline std::string discards_to_text(const DiscardReport& report) {
  std::ostringstream os;
  os << "group " << to_string(report.kind) << " discards: " << report.findings.size()
     << " tuples audited, " << (report.all_ok() ? "all claims confirmed" : "CLAIMS REFUTED") << '\n';
  for (const auto& f : report.findings) {
    os << "  (s=" << f.params.s << ",t=" << f.params.t << ",r=" << f.params.r << ",k=" << f.params.k
       << ") claimed " << f.claimed << " -> " << to_string(f.engine_status);
    if (!f.engine_reason.empty()) os << " (" << f.engine_reason << ")";
    if (f.has_count) os << ", vectors " << to_string(f.count);
    os << (f.ok ? "" : "  ** " + (f.note.empty() ? std::string("claim not confirmed") : f.note));
    os << '\n';
  }
  return os.str();
}

}  // namespace trisym
