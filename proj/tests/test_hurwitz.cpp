#include <catch2/catch_amalgamated.hpp>

#include <future>

#include "support.hpp"

using namespace trisym;
using trisym::testing::ctx;
using trisym::testing::naive_count;
using trisym::testing::naive_generating_count;
using trisym::testing::naive_lex_least_witness;

namespace {

std::vector<std::vector<std::string>> all_sequences(const GroupTable& g, std::size_t max_len) {
  std::vector<std::string> labels;
  for (const auto& cls : g.classes())
    if (cls.element_order > 1) labels.push_back(cls.label);
  std::vector<std::vector<std::string>> out;
  std::vector<std::vector<std::string>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : frontier)
      for (const auto& label : labels) {
        auto seq = prefix;
        seq.push_back(label);
        next.push_back(seq);
        out.push_back(std::move(seq));
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("product one") {
  const auto& c = ctx(GroupKind::A4);
  const auto& g = c.action.group;
  const WordBinding bind{g.permutation(c.action.i), g.permutation(c.action.alpha)};
  std::vector<int> entries;
  for (const auto& p : word_entries("[i]^2 [a i a2] [a i a] [a]", bind))
    entries.push_back(g.index_of(p));
  CHECK(product_one(g, entries));

  for (int x = 1; x < g.size(); ++x) CHECK(product_one(g, {x, g.inv(x)}));

  const auto& s4 = ctx(GroupKind::S4).action.group;
  CHECK_FALSE(product_one(s4, {s4.index_of(parse_permutation("(1 2)", 4)),
                               s4.index_of(parse_permutation("(1 4 3)", 4))}));
}

TEST_CASE("generation") {
  const auto& a5 = ctx(GroupKind::A5).action.group;
  CHECK(generates_full(a5, {a5.index_of(parse_permutation("(1 2 3 4 5)", 5)),
                            a5.index_of(parse_permutation("(1 3)(2 4)", 5))}));

  const auto& s4 = ctx(GroupKind::S4).action.group;
  CHECK_FALSE(generates_full(s4, {s4.index_of(parse_permutation("(1 2 3 4)", 4)),
                                  s4.index_of(parse_permutation("(1 3)(2 4)", 4))}));

  CHECK_FALSE(generates_full(s4, {GroupTable::kIdentity}));
}

TEST_CASE("tuple counting matches plain enumeration") {
  const auto& a4 = ctx(GroupKind::A4).action.group;
  for (const auto& labels : all_sequences(a4, 4)) {
    const ClassSequence cs = make_class_sequence(a4, labels);
    for (int target = 0; target < a4.size(); ++target)
      REQUIRE(count_tuples(a4, cs, target) == naive_count(a4, labels, target));
  }

  const auto& s4 = ctx(GroupKind::S4).action.group;
  for (const auto& labels : all_sequences(s4, 3)) {
    const ClassSequence cs = make_class_sequence(s4, labels);
    for (int target = 0; target < s4.size(); ++target)
      REQUIRE(count_tuples(s4, cs, target) == naive_count(s4, labels, target));
  }
}

TEST_CASE("counts over all targets multiply out to the class sizes") {
  for (GroupKind kind : {GroupKind::A4, GroupKind::S4, GroupKind::A5}) {
    const auto& g = ctx(kind).action.group;
    for (const auto& labels : all_sequences(g, 2)) {
      const ClassSequence cs = make_class_sequence(g, labels);
      BigCount total = 0, expected = 1;
      for (int target = 0; target < g.size(); ++target) total += count_tuples(g, cs, target);
      for (const auto& label : labels)
        expected *= static_cast<BigCount>(
            g.classes()[static_cast<std::size_t>(g.class_index(label))].size());
      REQUIRE(total == expected);
    }
  }
}

TEST_CASE("specific tuple counts") {
  const auto& s4 = ctx(GroupKind::S4).action.group;
  CHECK(count_tuples(s4, make_class_sequence(s4, {"4A", "4A"}), GroupTable::kIdentity) == 6);

  const auto& a4 = ctx(GroupKind::A4).action.group;
  CHECK(count_tuples(a4, make_class_sequence(a4, {"3A", "3A"}), GroupTable::kIdentity) == 0);

  CHECK(count_tuples(a4, ClassSequence{}, GroupTable::kIdentity) == 1);
  CHECK(count_tuples(a4, ClassSequence{}, 3) == 0);

  CHECK_THROWS_AS(make_class_sequence(a4, {"1A"}), std::invalid_argument);
  CHECK_THROWS_AS(make_class_sequence(a4, {"7C"}), std::invalid_argument);
}

TEST_CASE("exact-generation counts") {
  const auto& s4 = ctx(GroupKind::S4);
  CHECK(count_generating_tuples(s4.action.group, s4.lattice,
                                make_class_sequence(s4.action.group, {"4A", "4A"})) == 0);
  // two four-cycles multiply into the double-transposition class only when
  // they coincide, so nothing here generates past a cyclic group
  CHECK(count_generating_tuples(s4.action.group, s4.lattice,
                                make_class_sequence(s4.action.group, {"4A", "4A", "2B"})) == 0);
  CHECK(count_generating_tuples(s4.action.group, s4.lattice,
                                make_class_sequence(s4.action.group, {"2A", "2A", "3A", "2B", "2B"})) > 0);

  // the empty tuple generates only the trivial subgroup
  CHECK(count_generating_tuples(s4.action.group, s4.lattice, ClassSequence{}) == 0);
  const GroupTable trivial = build_group({Permutation::identity(2)});
  const SubgroupLattice trivial_lattice = build_subgroup_lattice(trivial);
  CHECK(count_generating_tuples(trivial, trivial_lattice, ClassSequence{}) == 1);
}

TEST_CASE("Moebius counting agrees with direct filtering") {
  const auto& a4 = ctx(GroupKind::A4);
  for (const auto& labels : all_sequences(a4.action.group, 3)) {
    const ClassSequence cs = make_class_sequence(a4.action.group, labels);
    REQUIRE(count_generating_tuples(a4.action.group, a4.lattice, cs) ==
            naive_generating_count(a4.action.group, labels));
  }
  const auto& s4 = ctx(GroupKind::S4);
  for (const auto& labels :
       {std::vector<std::string>{"2A", "2A", "3A"}, std::vector<std::string>{"4A", "4A", "2B"},
        std::vector<std::string>{"2A", "4A", "3A"}, std::vector<std::string>{"2B", "2B", "2B"}}) {
    const ClassSequence cs = make_class_sequence(s4.action.group, labels);
    REQUIRE(count_generating_tuples(s4.action.group, s4.lattice, cs) ==
            naive_generating_count(s4.action.group, labels));
  }
}

TEST_CASE("existence decisions") {
  const auto& s4 = ctx(GroupKind::S4);
  CHECK_FALSE(exists_generating_vector(s4.action.group, s4.lattice,
                                       make_class_sequence(s4.action.group, {"2A", "2A", "2B", "2B", "2B"})));
  CHECK_FALSE(exists_generating_vector(s4.action.group, s4.lattice,
                                       make_class_sequence(s4.action.group, {"2A"})));

  const auto& a5 = ctx(GroupKind::A5);
  CHECK(exists_generating_vector(a5.action.group, a5.lattice,
                                 make_class_sequence(a5.action.group, {"5A", "2A", "5B"})));
}

TEST_CASE("witness search") {
  const auto& s4 = ctx(GroupKind::S4);
  const ClassSequence cs = make_class_sequence(s4.action.group, {"2A", "2A", "3A", "2B", "2B"});
  const auto witness = find_witness(s4.action.group, s4.lattice, cs);
  REQUIRE(witness.has_value());
  const VectorReport report = verify_vector(s4.action.group, witness->entries, cs);
  CHECK(report.product_one);
  CHECK(report.generates);
  CHECK(report.classes_match);

  CHECK_FALSE(find_witness(s4.action.group, s4.lattice,
                           make_class_sequence(s4.action.group, {"4A", "4A"})));

  const auto& a4 = ctx(GroupKind::A4);
  CHECK_FALSE(find_witness(a4.action.group, a4.lattice,
                           make_class_sequence(a4.action.group, {"2A", "2A"})));
}

TEST_CASE("witness search is deterministic and lexicographically least") {
  const auto& s4 = ctx(GroupKind::S4);
  const ClassSequence cs = make_class_sequence(s4.action.group, {"2A", "2A", "3A", "2B", "2B"});
  const auto first = find_witness(s4.action.group, s4.lattice, cs);
  const auto second = find_witness(s4.action.group, s4.lattice, cs);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->entries == second->entries);

  const auto brute = naive_lex_least_witness(s4.action.group, {"2A", "2A", "3A", "2B", "2B"});
  REQUIRE(brute.has_value());
  CHECK(first->entries == *brute);

  const auto& a4 = ctx(GroupKind::A4);
  const auto engine = find_witness(a4.action.group, a4.lattice,
                                   make_class_sequence(a4.action.group, {"2A", "3A", "3A", "3A"}));
  const auto naive = naive_lex_least_witness(a4.action.group, {"2A", "3A", "3A", "3A"});
  REQUIRE(engine.has_value() == naive.has_value());
  if (engine) CHECK(engine->entries == *naive);
}

TEST_CASE("vector reports") {
  const auto& c = ctx(GroupKind::S4);
  const auto& g = c.action.group;
  const WordBinding bind{g.permutation(c.action.i), g.permutation(c.action.alpha)};

  std::vector<int> entries;
  for (const auto& p : word_entries("[i a] [i] [a] [(i a)^2]", bind))
    entries.push_back(g.index_of(p));
  const ClassSequence cs = make_class_sequence(g, {"4A", "2A", "3A", "2B"});
  const VectorReport report = verify_vector(g, entries, cs);
  CHECK(report.product_one);
  CHECK(report.generates);
  CHECK(report.classes_match);

  // Reversal flips the composition order: the reversed tuple multiplies to
  // one under the opposite (leftmost-first) convention, and its class
  // multiset is unchanged. Under the library convention the product moves.
  std::vector<int> reversed(entries.rbegin(), entries.rend());
  int opposite = GroupTable::kIdentity;
  for (int e : reversed) opposite = g.mul(e, opposite);
  CHECK(opposite == GroupTable::kIdentity);
  const VectorReport reversed_report = verify_vector(g, reversed, cs);
  CHECK(reversed_report.classes_match);
  CHECK_FALSE(reversed_report.product_one);

  // odd power of an involution cannot close up
  const auto& a4 = ctx(GroupKind::A4);
  const VectorReport bad =
      verify_vector(a4.action.group, {a4.action.i, a4.action.i, a4.action.i});
  CHECK_FALSE(bad.product_one);
  CHECK(bad.classes_match);
}

TEST_CASE("counting is safe for concurrent readers") {
  const auto& c = ctx(GroupKind::S4);
  const std::vector<std::vector<std::string>> sequences = {
      {"2A", "2A", "3A", "2B", "2B"}, {"4A", "4A"},       {"2A", "4A", "3A"},
      {"3A", "3A", "3A", "3A"},       {"2B", "2B", "2B"}, {"2A", "2A", "2A", "2A"}};

  std::vector<BigCount> sequential;
  for (const auto& labels : sequences)
    sequential.push_back(count_generating_tuples(c.action.group, c.lattice,
                                                 make_class_sequence(c.action.group, labels)));

  std::vector<std::future<BigCount>> futures;
  for (int worker = 0; worker < 4; ++worker)
    for (const auto& labels : sequences)
      futures.push_back(std::async(std::launch::async, [&c, labels] {
        return count_generating_tuples(c.action.group, c.lattice,
                                       make_class_sequence(c.action.group, labels));
      }));
  for (std::size_t n = 0; n < futures.size(); ++n)
    REQUIRE(futures[n].get() == sequential[n % sequences.size()]);
}

TEST_CASE("reversing and inverting a vector yields a vector again") {
  // the mirror map (x1,...,xr) -> (xr^-1,...,x1^-1) preserves product-one,
  // generation and the fixed-point data, so verification verdicts do not
  // depend on which composition convention a vector was written in
  const auto& c = ctx(GroupKind::S4);
  const auto& g = c.action.group;
  const ClassSequence cs = make_class_sequence(g, {"2A", "2A", "3A", "2B", "2B"});
  const auto witness = find_witness(g, c.lattice, cs);
  REQUIRE(witness.has_value());

  std::vector<int> mirrored;
  for (auto it = witness->entries.rbegin(); it != witness->entries.rend(); ++it)
    mirrored.push_back(g.inv(*it));
  const VectorReport report = verify_vector(g, mirrored, cs);
  CHECK(report.product_one);
  CHECK(report.generates);
  CHECK(report.classes_match);
}
