// Command-line front end: enumerate parameter lattices, verify reference
// tables, search generating vectors, and evaluate curve invariants and
// fixed-point profiles. Exit codes: 0 success, 1 usage error, 2 audit
// mismatches found by `verify`.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trisym/trisym.hpp"

namespace {

using namespace trisym;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(0, 1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "s=2,t=6" -> tuple; unspecified fields are zero, then the kind's derived
/// fields (r, k, e) are filled in unless given explicitly.
ParameterTuple parse_params(GroupKind kind, const std::string& text) {
  std::map<std::string, int> values;
  for (const auto& part : split_csv(text)) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed params: '" + part + "'");
    const std::string key = part.substr(0, eq);
    if (key != "s" && key != "t" && key != "r" && key != "k" && key != "e")
      throw std::invalid_argument("unknown parameter '" + key + "'");
    if (values.contains(key)) throw std::invalid_argument("duplicate parameter '" + key + "'");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(part.substr(eq + 1), &used);
      if (used != part.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed params: '" + part + "'");
    }
    values[key] = value;
  }
  ParameterTuple p;
  p.s = values.count("s") ? values["s"] : 0;
  p.t = values.count("t") ? values["t"] : 0;
  switch (kind) {
    case GroupKind::A4:
      p.r = values.count("r") ? values["r"] : p.s;
      p.k = values.count("k") ? values["k"] : 0;
      p.e = values.count("e") ? values["e"] : p.t;
      break;
    case GroupKind::S4:
      p.r = values.count("r") ? values["r"] : 0;
      p.k = values.count("k") ? values["k"] : 0;
      p.e = values.count("e") ? values["e"] : p.s;
      break;
    default:
      p.r = values.count("r") ? values["r"] : 0;
      p.k = values.count("k") ? values["k"] : 0;
      p.e = values.count("e") ? values["e"] : p.r;
      break;
  }
  return p;
}

int run_enumerate(const std::string& group, const std::string& format, bool all) {
  const GroupKind kind = kind_from_string(group);
  SweepContext ctx(kind);
  const auto rows = sweep(ctx);
  if (format == "json")
    std::cout << rows_to_json(rows, all).dump(2) << "\n";
  else if (format == "csv")
    std::cout << rows_to_csv(rows, all);
  else
    std::cout << rows_to_text(rows, all);
  return 0;
}

int run_verify(const std::string& group, const std::string& fixtures_path,
               const std::string& format) {
  const GroupKind kind = kind_from_string(group);
  const FixtureSet fixtures = load_fixtures(fixtures_path);
  SweepContext ctx(kind);
  const auto rows = sweep(ctx);
  const DiffReport diff = verify_fixtures(ctx, rows, fixtures);
  const DiscardReport discards = verify_discards(ctx, rows, fixtures);
  if (format == "json") {
    Json out;
    out["tables"] = diff_to_json(diff);
    out["discards"] = discards_to_json(discards);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << diff_to_text(diff) << discards_to_text(discards);
  }
  return diff.clean() && discards.all_ok() ? 0 : 2;
}

int run_witness(const std::string& group, const std::string& classes) {
  const GroupKind kind = kind_from_string(group);
  SweepContext ctx(kind);
  const ClassSequence cs = make_class_sequence(ctx.action.group, split_csv(classes));
  const auto witness = find_witness(ctx.action.group, ctx.lattice, cs);
  Json out;
  out["group"] = to_string(kind);
  out["classes"] = cs.labels;
  out["count"] = to_string(count_generating_tuples(ctx.action.group, ctx.lattice, cs));
  if (witness) {
    out["exists"] = true;
    Json cycles = Json::array();
    for (int e : witness->entries) cycles.push_back(render_cycles(ctx.action.group.permutation(e)));
    out["witness"] = cycles;
    out["word"] = ctx.words.vector_word(ctx.action.group, witness->entries);
    const VectorReport report = verify_vector(ctx.action.group, witness->entries, cs);
    out["report"] = Json{{"product_one", report.product_one},
                         {"generates", report.generates},
                         {"classes_match", report.classes_match}};
  } else {
    out["exists"] = false;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_invariants(const std::string& group, const std::string& params_text) {
  const GroupKind kind = kind_from_string(group);
  const ParameterTuple p = parse_params(kind, params_text);
  const FeasibilityVerdict verdict = feasibility(kind, p);
  Json out;
  out["group"] = to_string(kind);
  out["params"] = params_to_json(p);
  if (!verdict.feasible) {
    out["feasible"] = false;
    out["reason"] = verdict.reason;
    out["detail"] = verdict.detail;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const CurveInvariants inv = curve_invariants(kind, p);
  out["feasible"] = true;
  out["h"] = inv.h;
  out["g"] = inv.g;
  out["b"] = inv.b;
  out["pa"] = inv.pa;
  out["sing_B"] = inv.sing_B;
  out["sing_D"] = inv.sing_D;
  out["bsq"] = inv.bsq;
  out["bn_status"] = to_string(inv.bn_status);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_nu(const std::string& group, const std::string& signature_text, int gamma,
           const std::string& element_word, bool verify) {
  const GroupKind kind = kind_from_string(group);
  SweepContext ctx(kind);
  const auto& g = ctx.action.group;
  const Signature sig = make_signature(g, gamma, split_csv(signature_text));
  if (verify) {
    for (int e = 1; e < g.size(); ++e)
      if (nu_macbeath(g, sig, e) != nu_coset_oracle(g, sig, e))
        throw std::logic_error("fixed-point count and coset oracle disagree");
  }
  if (!element_word.empty()) {
    const WordBinding binding{g.permutation(ctx.action.i), g.permutation(ctx.action.alpha)};
    const Permutation value = evaluate_word(element_word, binding);
    const int index = g.index_of(value);
    if (index == GroupTable::kIdentity)
      throw std::invalid_argument("element word evaluates to the identity");
    Json out;
    out["element"] = render_cycles(value);
    out["class"] = g.class_label_of(index);
    out["nu"] = nu_macbeath(g, sig, index);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  const FixedPointProfile profile(g, sig);
  Json out;
  for (const auto& [label, nu] : profile.by_class()) out[label] = nu;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-three curves in the symmetric square from A4/S4/A5 actions"};
  app.require_subcommand(1);

  std::string group, format = "text", fixtures_path, classes, params_text;
  std::string signature_text, element_word;
  int gamma = 0;
  bool all = false, verify_nu = false;

  auto* enumerate = app.add_subcommand("enumerate", "sweep and classify the parameter lattice");
  enumerate->add_option("--group", group, "a4, s4 or a5")->required();
  enumerate->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  enumerate->add_flag("--all", all, "include infeasible and no-vector tuples");

  auto* verify = app.add_subcommand("verify", "diff the sweep against a fixture file");
  verify->add_option("--group", group, "a4, s4 or a5")->required();
  verify->add_option("--fixtures", fixtures_path, "fixture JSON file")->required();
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* witness = app.add_subcommand("witness", "search a generating vector for given classes");
  witness->add_option("--group", group, "a4, s4 or a5")->required();
  witness->add_option("--classes", classes, "comma-separated class labels, e.g. 2A,2A,3A,2B,2B")
      ->required();

  auto* invariants = app.add_subcommand("invariants", "curve invariants of a parameter tuple");
  invariants->add_option("--group", group, "a4, s4 or a5")->required();
  invariants->add_option("--params", params_text, "e.g. s=2,t=6 or r=2,t=2,s=2,k=4")->required();

  auto* nu = app.add_subcommand("nu", "fixed-point profile of a signature");
  nu->add_option("--group", group, "a4, s4 or a5")->required();
  nu->add_option("--signature", signature_text, "comma-separated branch classes")->required();
  nu->add_option("--gamma", gamma, "quotient genus (default 0)");
  nu->add_option("--element", element_word, "word over i, a, a2: report nu of this element");
  nu->add_flag("--verify", verify_nu, "cross-check against the coset oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(group, format, all);
    if (verify->parsed()) return run_verify(group, fixtures_path, format);
    if (witness->parsed()) return run_witness(group, classes);
    if (invariants->parsed()) return run_invariants(group, params_text);
    if (nu->parsed()) return run_nu(group, signature_text, gamma, element_word, verify_nu);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
