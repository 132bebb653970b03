#include <random>
#include <set>

#include "doctest.h"
#include "rab/universal.hpp"

using namespace rab;

namespace {
const int inf = Diagram::kInf;

Universe tree_universe(const char* kind = "sym") {
  Diagram d({"1", "2"}, {{1, inf}, {inf, 1}}, {3, 3});
  LocalData local;
  if (std::string(kind) == "sym") {
    local.groups = {PermGroup::symmetric(3), PermGroup::symmetric(3)};
  } else if (std::string(kind) == "swap") {
    PermGroup swap(3, {Perm::from_cycles("(0 1)", 3)});
    local.groups = {swap, swap};
  } else {
    local.groups = {PermGroup::trivial(3), PermGroup::trivial(3)};
  }
  return Universe(std::move(d), std::move(local));
}
}  // namespace

TEST_CASE("local data validation") {
  Diagram d({"1", "2"}, {{1, inf}, {inf, 1}}, {3, 3});
  LocalData bad{{PermGroup::symmetric(2), PermGroup::symmetric(3)}};
  CHECK_THROWS_AS(Universe(d, bad), Error);
}

TEST_CASE("identity extension") {
  Universe u = tree_universe();
  Automorphism g = extend_local(u, u.building().panel(u.building().base(), 0), Perm(3));
  for (const Chamber& c : u.building().ball(u.building().base(), 3)) {
    CHECK(g.apply(c) == c);
  }
}

TEST_CASE("extension contract at the base panel") {
  Universe u = tree_universe();
  const Building& b = u.building();
  Panel p0 = b.panel(b.base(), 0);
  Perm f0 = Perm::from_cycles("(0 1)", 3);
  Automorphism g = extend_local(u, p0, f0);

  // stabilises the panel and acts on it by f0
  std::set<Chamber> members;
  for (const Chamber& m : b.panel_members(p0)) members.insert(m);
  for (const Chamber& m : members) CHECK(members.contains(g.apply(m)));
  CHECK(g.local_action(p0) == f0);

  // fixes the wing behind the fixed colour 2
  for (const Chamber& c : b.ball(b.base(), 3)) {
    Chamber proj = proj_panel(b, p0, c);
    if (u.colouring().colour(proj, 0) == 2) CHECK(g.apply(c) == c);
  }

  // all local actions inside the ball lie in the local groups
  CHECK(g.local_actions_within(3));

  Universe trivial = tree_universe("trivial");
  CHECK_THROWS_AS(
      extend_local(trivial, trivial.building().panel(trivial.building().base(), 0), f0), Error);
}

TEST_CASE("extension preserves distances") {
  Universe u = tree_universe();
  const Building& b = u.building();
  Automorphism g = extend_local(u, b.panel(b.parse_word("2:1"), 0), Perm::from_cycles("(0 1 2)", 3));
  auto ball = b.ball(b.base(), 2);
  for (std::size_t i = 0; i < ball.size(); i += 2) {
    for (std::size_t j = i; j < ball.size(); j += 3) {
      CHECK(dist(b, g.apply(ball[i]), g.apply(ball[j])) == dist(b, ball[i], ball[j]));
    }
  }
}

TEST_CASE("recolouring automorphisms") {
  Universe u = tree_universe();
  const Building& b = u.building();
  std::vector<Perm> identity{Perm(3), Perm(3)};
  Automorphism id = recolouring_aut(u, identity);
  CHECK(id.apply(b.parse_word("1:1,2:2")) == b.parse_word("1:1,2:2"));

  std::vector<Perm> f{Perm::from_cycles("(0 1)", 3), Perm(3)};
  Automorphism g = recolouring_aut(u, f);
  // the base chamber moves to the 1-panel member with colour 1
  CHECK(u.colouring().colour(g.apply(b.base()), 0) == 1);
  // lambda(g . c) = phi(lambda(c)) on the radius-3 ball
  for (const Chamber& c : b.ball(b.base(), 3)) {
    std::vector<int> expected = u.colouring().colour_vector(c);
    expected[0] = f[0](expected[0]);
    CHECK(u.colouring().colour_vector(g.apply(c)) == expected);
  }

  // membership is enforced
  Universe swap = tree_universe("swap");
  std::vector<Perm> outside{Perm::from_cycles("(0 2)", 3), Perm(3)};
  CHECK_THROWS_AS(recolouring_aut(swap, outside), Error);
}

TEST_CASE("apply, compose, invert") {
  Universe u = tree_universe();
  const Building& b = u.building();
  Automorphism g = extend_local(u, b.panel(b.base(), 0), Perm::from_cycles("(0 1 2)", 3));
  Automorphism h = recolouring_aut(u, {Perm::from_cycles("(0 2)", 3), Perm::from_cycles("(0 1)", 3)});

  Automorphism gh = compose(g, h);
  Automorphism g_inv = g.inverse();
  Automorphism h_inv = h.inverse();

  std::mt19937 rng(3);
  auto ball = b.ball(b.base(), 3);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int round = 0; round < 100; ++round) {
    const Chamber& c = ball[pick(rng)];
    CHECK(gh.apply(c) == g.apply(h.apply(c)));
    CHECK(g_inv.apply(g.apply(c)) == c);
    CHECK(h_inv.apply(h.apply(c)) == c);
  }
  CHECK(g.inverse().inverse().apply(ball[1]) == g.apply(ball[1]));
}

TEST_CASE("local actions") {
  Universe u = tree_universe();
  const Building& b = u.building();
  Automorphism id = Automorphism::identity(u);
  CHECK(id.local_action(b.panel(b.base(), 1)).is_identity());

  Perm f0 = Perm::from_cycles("(1 2)", 3);
  Panel p0 = b.panel(b.base(), 1);
  Automorphism g = extend_local(u, p0, f0);
  CHECK(g.local_action(p0) == f0);
}

TEST_CASE("parallel panels carry the same local action") {
  Diagram d({"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, {3, 3, 3});
  LocalData local{{PermGroup::symmetric(3), PermGroup::symmetric(3), PermGroup::symmetric(3)}};
  Universe u(std::move(d), std::move(local));
  const Building& b = u.building();
  Panel p = b.panel(b.base(), 0);
  Panel q = b.panel(b.parse_word("3:1"), 0);
  REQUIRE(are_parallel(b, p, q));
  Automorphism g = extend_local(u, b.panel(b.parse_word("2:1"), 1), Perm::from_cycles("(0 1)", 3));
  CHECK(g.local_action(p) == g.local_action(q));
  Automorphism r = recolouring_aut(u, {Perm::from_cycles("(0 1 2)", 3), Perm(3), Perm(3)});
  CHECK(r.local_action(p) == r.local_action(q));
}

TEST_CASE("orbit witnesses") {
  Universe u = tree_universe();
  const Building& b = u.building();
  auto self = u_orbit_check(u, b.base(), b.base());
  REQUIRE(self.has_value());
  CHECK(self->apply(b.base()) == b.base());

  // full symmetric local groups: everything within radius 2 is one orbit
  auto ball = b.ball(b.base(), 2);
  for (const Chamber& c : ball) {
    for (const Chamber& d : ball) {
      auto witness = u_orbit_check(u, c, d);
      REQUIRE(witness.has_value());
      CHECK(witness->apply(c) == d);
    }
  }

  Universe trivial = tree_universe("trivial");
  const Building& tb = trivial.building();
  CHECK_FALSE(u_orbit_check(trivial, tb.base(), tb.parse_word("1:1")).has_value());
}

TEST_CASE("chamber-stabiliser closures") {
  Universe u = tree_universe();
  const Building& b = u.building();
  CHECK(uplus_orbit_on_ball(u, b.base(), 0) == std::vector<Chamber>{b.base()});

  // transitive plus-closed local groups: the closure realises the harmony class
  auto orbit = uplus_orbit_on_ball(u, b.base(), 2);
  CHECK(orbit.size() == b.ball(b.base(), 2).size());

  // intransitive swap groups: the distance-4 alternating pair stays separated
  Universe swap = tree_universe("swap");
  const Building& sb = swap.building();
  LegalColouring& colouring = swap.colouring();
  Chamber c1 = colouring.move_to_colour(sb.base(), 0, 2);
  Chamber c2 = colouring.move_to_colour(c1, 1, 2);
  Chamber c3 = colouring.move_to_colour(c2, 0, 0);
  Chamber c4 = colouring.move_to_colour(c3, 1, 0);
  REQUIRE(dist(sb, sb.base(), c4) == 4);
  REQUIRE(harmonious(colouring, sb.base(), c4, swap.local()));
  auto closure = uplus_orbit_on_ball(swap, sb.base(), 4);
  CHECK(std::find(closure.begin(), closure.end(), c4) == closure.end());

  // every generator has local actions inside the plus subgroups
  std::vector<PermGroup> plus;
  for (const PermGroup& g : swap.local().groups) plus.push_back(g.plus_subgroup());
  auto gens = uplus_generators(swap, 2, 10);
  for (const Automorphism& g : gens) {
    CHECK(g.local_actions_within(2));
    for (int t = 0; t < 2; ++t) {
      Panel p = sb.panel(sb.base(), t);
      CHECK(plus[static_cast<std::size_t>(t)].contains(g.local_action(p)));
    }
  }
}

TEST_CASE("compact generation sets") {
  Universe u = tree_universe();
  CompgenSets sets = compgen_sets(u);
  CHECK(sets.transversals == std::vector<std::vector<int>>{{0}, {0}});
  CHECK(sets.c == u.building().base());
  CHECK(sets.b_set == std::vector<Chamber>{u.building().base()});
  CHECK(sets.d_set.empty());
  CHECK(sets.s_panels.size() == 2);
  CHECK(sets.steps_passed());

  // two orbits at type 1: B is exactly the transversal-coloured part of the ball
  Universe swap = tree_universe("swap");
  CompgenSets sw = compgen_sets(swap);
  int expected = 0;
  for (const Chamber& c : swap.building().ball(swap.building().base(), 2)) {
    bool in = true;
    for (int i = 0; i < 2; ++i) {
      int colour = swap.colouring().colour(c, i);
      if (colour != 0 && colour != 2) in = false;
    }
    if (in) ++expected;
  }
  CHECK(static_cast<int>(sw.b_set.size()) == expected);
  CHECK(sw.steps_passed());

  // rank-1 instances are rejected
  Diagram rank1({"1"}, {{1}}, {3});
  LocalData single{{PermGroup::symmetric(3)}};
  Universe u1(std::move(rank1), std::move(single));
  CHECK_THROWS_AS(compgen_sets(u1), Error);
}
