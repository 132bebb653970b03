#include "doctest.h"
#include "rab/predicates.hpp"

using namespace rab;

namespace {
const int inf = Diagram::kInf;

Diagram tree(int q1 = 3, int q2 = 3) {
  return Diagram({"1", "2"}, {{1, inf}, {inf, 1}}, {q1, q2});
}

Diagram path333() {
  return Diagram({"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, {3, 3, 3});
}

PermGroup swap01_on3() { return PermGroup(3, {Perm::from_cycles("(0 1)", 3)}); }
}  // namespace

TEST_CASE("discreteness") {
  LocalData cyclic{{PermGroup::cyclic(3), PermGroup::cyclic(3)}};
  CHECK(verdict_discrete(tree(), cyclic).value == Truth::kTrue);

  LocalData sym{{PermGroup::symmetric(3), PermGroup::symmetric(3)}};
  Verdict v = verdict_discrete(tree(), sym);
  CHECK(v.value == Truth::kFalse);
  bool witness = false;
  for (const Reason& r : v.reasons) {
    if (!r.witness.empty()) witness = true;
  }
  CHECK(witness);

  LocalData trivial{{PermGroup::trivial(3), PermGroup::trivial(3)}};
  CHECK(verdict_discrete(tree(), trivial).value == Truth::kTrue);
}

TEST_CASE("local compactness") {
  LocalData sym{{PermGroup::symmetric(3), PermGroup::symmetric(3)}};
  Verdict v = verdict_locally_compact(tree(), sym);
  CHECK(v.value == Truth::kTrue);
  CHECK(v.reasons.size() == 2);
  CHECK(v.citation.find("point stabiliser") != std::string::npos);
}

TEST_CASE("orbit counts") {
  LocalData sym{{PermGroup::symmetric(3), PermGroup::symmetric(3)}};
  CHECK(orbit_count(sym).count == 1);
  CHECK(orbit_count(sym).transitive);

  LocalData mixed{{swap01_on3(), PermGroup::symmetric(3)}};
  CHECK(orbit_count(mixed).count == 2);

  LocalData trivial22{{PermGroup::trivial(2), PermGroup::trivial(2)}};
  CHECK(orbit_count(trivial22).count == 4);
}

TEST_CASE("generation by chamber stabilisers") {
  // path with a transitive plus-closed middle group covering both bonds
  LocalData covered{{swap01_on3(), PermGroup::symmetric(3), swap01_on3()}};
  CHECK(verdict_u_eq_uplus(path333(), covered).value == Truth::kTrue);

  // the swap groups fix no transitive vertex cover on the tree
  LocalData swaps{{swap01_on3(), swap01_on3()}};
  Verdict v = verdict_u_eq_uplus(tree(), swaps);
  CHECK(v.value == Truth::kFalse);
  bool has_edge_witness = false;
  for (const Reason& r : v.reasons) {
    if (r.witness.find("uncovered infinite bond") != std::string::npos) has_edge_witness = true;
  }
  CHECK(has_edge_witness);

  // a nontrivial regular group is not plus-closed
  LocalData regular{{PermGroup::cyclic(3), PermGroup::symmetric(3)}};
  CHECK(verdict_u_eq_uplus(tree(), regular).value == Truth::kFalse);
}

TEST_CASE("simplicity") {
  LocalData sym{{PermGroup::symmetric(3), PermGroup::symmetric(3)}};
  CHECK(verdict_simple(tree(), sym).value == Truth::kTrue);

  // not thick
  LocalData thin{{PermGroup::symmetric(2), PermGroup::symmetric(3)}};
  Verdict v = verdict_simple(tree(2, 3), thin);
  CHECK(v.value == Truth::kFalse);
  bool gate = false;
  for (const Reason& r : v.reasons) {
    if (r.condition.find("thick") != std::string::npos && r.outcome == "fails") gate = true;
  }
  CHECK(gate);

  // reducible diagram
  Diagram commuting({"1", "2"}, {{1, 2}, {2, 1}}, {3, 3});
  Verdict v2 = verdict_simple(commuting, sym);
  CHECK(v2.value == Truth::kFalse);

  // simplicity implies generation by chamber stabilisers
  LocalData swaps{{swap01_on3(), swap01_on3()}};
  Verdict simple = verdict_simple(tree(), swaps);
  Verdict uplus = verdict_u_eq_uplus(tree(), swaps);
  CHECK((simple.value != Truth::kTrue || uplus.value == Truth::kTrue));
}

TEST_CASE("compact generation, finite case") {
  LocalData sym{{PermGroup::symmetric(3), PermGroup::symmetric(3)}};
  Verdict v = verdict_compactly_generated(tree(), sym);
  CHECK(v.value == Truth::kTrue);
  bool summary = false;
  for (const Reason& r : v.reasons) {
    if (r.witness.find("|B|=") != std::string::npos) summary = true;
  }
  CHECK(summary);
}

TEST_CASE("compact generation, described local groups") {
  // infinitely many orbits exclude compact generation
  std::vector<LocalDescriptor> infinite_orbits{{{}, false}, {true, true}};
  CHECK(verdict_compactly_generated(tree(), infinite_orbits).value == Truth::kFalse);

  // finite orbits with unknown local compact generation stays open
  std::vector<LocalDescriptor> open_branch{{std::nullopt, true}, {true, true}};
  CHECK(verdict_compactly_generated(tree(), open_branch).value == Truth::kUnknown);

  std::vector<LocalDescriptor> definite{{true, true}, {true, true}};
  CHECK(verdict_compactly_generated(tree(), definite).value == Truth::kTrue);
}

TEST_CASE("primitivity on residues") {
  // the co-rank-1 complement must be primitive and non-regular; commuting
  // neighbours are exempt from transitivity
  LocalData data{{PermGroup::trivial(3), PermGroup::cyclic(3), PermGroup::symmetric(3)}};
  Verdict v = verdict_primitive_on_residues(path333(), data, {0, 1});
  CHECK(v.value == Truth::kTrue);

  // larger complements build blocks
  Verdict v2 = verdict_primitive_on_residues(path333(), data, {0});
  CHECK(v2.value == Truth::kFalse);
  CHECK(v2.reasons.front().outcome == "fails");

  // a regular complement fails
  LocalData regular{{PermGroup::trivial(3), PermGroup::symmetric(3), PermGroup::cyclic(3)}};
  Verdict v3 = verdict_primitive_on_residues(path333(), regular, {0, 1});
  CHECK(v3.value == Truth::kFalse);

  // an intransitive neighbour across an infinite bond fails
  LocalData intrans{{PermGroup::trivial(3), swap01_on3(), PermGroup::symmetric(3)}};
  Verdict v4 = verdict_primitive_on_residues(path333(), intrans, {0, 1});
  CHECK(v4.value == Truth::kFalse);

  // J must be a proper subset
  CHECK_THROWS_AS((void)verdict_primitive_on_residues(path333(), data, {0, 1, 2}), Error);
}
