#include <set>

#include "doctest.h"
#include "rab/implosion.hpp"

using namespace rab;

namespace {
const int inf = Diagram::kInf;

Universe tree_universe(const char* kind = "swap") {
  Diagram d({"1", "2"}, {{1, inf}, {inf, 1}}, {3, 3});
  LocalData local;
  if (std::string(kind) == "sym") {
    local.groups = {PermGroup::symmetric(3), PermGroup::symmetric(3)};
  } else {
    PermGroup swap(3, {Perm::from_cycles("(0 1)", 3)});
    local.groups = {swap, swap};
  }
  return Universe(std::move(d), std::move(local));
}

std::vector<std::vector<std::vector<int>>> equality_classes(const Diagram& d) {
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(d.rank()));
  for (int i = 0; i < d.rank(); ++i) {
    for (int x = 0; x < d.q(i); ++x) out[static_cast<std::size_t>(i)].push_back({x});
  }
  return out;
}
}  // namespace

TEST_CASE("equality classes collapse nothing") {
  Universe u = tree_universe();
  Implosion imp(u, equality_classes(u.diagram()));
  CHECK(imp.target_diagram().rank() == 2);
  std::set<Chamber> images;
  auto ball = u.building().ball(u.building().base(), 2);
  for (const Chamber& c : ball) images.insert(imp.tau(c));
  CHECK(images.size() == ball.size());
}

TEST_CASE("universal classes collapse everything") {
  Universe u = tree_universe();
  std::vector<std::vector<std::vector<int>>> classes{{{0, 1, 2}}, {{0, 1, 2}}};
  Implosion imp(u, classes);
  CHECK(imp.target_diagram().rank() == 0);
  for (const Chamber& c : u.building().ball(u.building().base(), 3)) {
    CHECK(imp.tau(c).is_base());
  }
}

TEST_CASE("one collapsed type leaves a single panel") {
  Universe u = tree_universe();
  std::vector<std::vector<std::vector<int>>> classes{{{0, 1}, {2}}, {{0, 1, 2}}};
  Implosion imp(u, classes);
  const Diagram& target = imp.target_diagram();
  CHECK(target.rank() == 1);
  CHECK(target.q(0) == 2);
  CHECK(imp.tau(u.building().base()).is_base());
  // the whole radius-3 ball lands inside one panel of two chambers
  std::set<Chamber> images;
  for (const Chamber& c : u.building().ball(u.building().base(), 3)) images.insert(imp.tau(c));
  CHECK(images.size() == 2);
}

TEST_CASE("collapsing steps and class-crossing steps") {
  Universe u = tree_universe();
  Implosion imp(u, {Implosion::orbit_classes(u.local().at(0)),
                    Implosion::orbit_classes(u.local().at(1))});
  const Building& b = u.building();
  LegalColouring& colouring = u.colouring();
  // equivalent colours collapse
  Chamber same_class = colouring.move_to_colour(b.base(), 0, 1);
  CHECK(imp.tau(same_class) == imp.tau(b.base()));
  // crossing into another class moves to the class-coloured neighbour
  Chamber other_class = colouring.move_to_colour(b.base(), 0, 2);
  CHECK(imp.tau(other_class) != imp.tau(b.base()));
  CHECK(imp.target_building().adjacency(imp.tau(other_class), imp.tau(b.base())).has_value());
}

TEST_CASE("verification report") {
  Universe u = tree_universe();
  Implosion imp(u, {Implosion::orbit_classes(u.local().at(0)),
                    Implosion::orbit_classes(u.local().at(1))});
  ImplosionReport report = imp.verify(3);
  CHECK(report.passed);
  // colour compatibility, nonexpansiveness, surjectivity
  CHECK(report.checks.size() == 3);
}

TEST_CASE("fibre stability under chamber-stabilising generators") {
  Universe u = tree_universe();
  Implosion imp(u, {Implosion::orbit_classes(u.local().at(0)),
                    Implosion::orbit_classes(u.local().at(1))});
  std::vector<Automorphism> gens = uplus_generators(u, 4, 50);
  CHECK(imp.fibre_stability(gens, 4).passed);

  // bounded closure orbits stay inside fibres
  for (const Chamber& c : u.building().ball(u.building().base(), 2)) {
    for (const Chamber& x : uplus_orbit_on_ball(u, c, 2)) {
      CHECK(imp.tau(x) == imp.tau(c));
    }
  }
}

TEST_CASE("negative control: a class-crossing map moves fibres") {
  Universe u = tree_universe();
  Implosion imp(u, {Implosion::orbit_classes(u.local().at(0)),
                    Implosion::orbit_classes(u.local().at(1))});
  // swap colours 0 and 2 at type 1: crosses the orbit classes, so it cannot
  // lie in the universal group's stabiliser subgroup
  std::vector<Perm> f{Perm::from_cycles("(0 2)", 3), Perm(3)};
  Chamber dst = u.colouring().move_to_colour(u.building().base(), 0, 2);
  Automorphism crossing = recolouring_with_seed(u, f, u.building().base(), dst, false);
  ImplosionReport report = imp.fibre_stability({crossing}, 2);
  CHECK_FALSE(report.passed);
}

TEST_CASE("pushing automorphisms through the collapse") {
  Universe u = tree_universe();
  Implosion imp(u, {Implosion::orbit_classes(u.local().at(0)),
                    Implosion::orbit_classes(u.local().at(1))});
  // members of the universal group descend to the target building
  Automorphism g = extend_local(u, u.building().panel(u.building().base(), 0),
                                Perm::from_cycles("(0 1)", 3));
  auto table = imp.induced_map(g, 3);
  CHECK_FALSE(table.empty());
  // a chamber stabiliser induces the identity on fibres
  for (const auto& [from, to] : table) CHECK(from == to);

  // a class-crossing map splits a fibre and is rejected
  std::vector<Perm> f{Perm::from_cycles("(0 2)", 3), Perm(3)};
  Chamber dst = u.colouring().move_to_colour(u.building().base(), 0, 2);
  Automorphism crossing = recolouring_with_seed(u, f, u.building().base(), dst, false);
  CHECK_THROWS_AS((void)imp.induced_map(crossing, 2), Error);
}

TEST_CASE("invalid partitions are rejected") {
  Universe u = tree_universe();
  // colour out of range
  CHECK_THROWS_AS(Implosion(u, {{{0, 1, 3}}, {{0, 1, 2}}}), Error);
  // missing colour
  CHECK_THROWS_AS(Implosion(u, {{{0, 1}}, {{0, 1, 2}}}), Error);
  // duplicated colour
  CHECK_THROWS_AS(Implosion(u, {{{0, 1}, {1, 2}}, {{0, 1, 2}}}), Error);
  // wrong arity
  CHECK_THROWS_AS(Implosion(u, {{{0, 1, 2}}}), Error);
}

TEST_CASE("tau is nonexpansive and colour-compatible on samples") {
  Universe u = tree_universe();
  Implosion imp(u, {Implosion::orbit_classes(u.local().at(0)),
                    Implosion::orbit_classes(u.local().at(1))});
  const Building& b = u.building();
  auto ball = b.ball(b.base(), 3);
  for (std::size_t i = 0; i < ball.size(); i += 5) {
    for (std::size_t j = 0; j < ball.size(); j += 7) {
      CHECK(dist(imp.target_building(), imp.tau(ball[i]), imp.tau(ball[j])) <=
            dist(b, ball[i], ball[j]));
    }
    for (int t : imp.retained_types()) {
      CHECK(imp.target_colouring().colour(imp.tau(ball[i]), imp.target_type(t)) ==
            imp.class_index(t, u.colouring().colour(ball[i], t)));
    }
  }
}
