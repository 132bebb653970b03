#include <set>

#include "doctest.h"
#include "rab/colouring.hpp"
#include "rab/geometry.hpp"

using namespace rab;

namespace {
const int inf = Diagram::kInf;

Building path_building(std::vector<int> q = {2, 2, 2}) {
  return Building(Diagram({"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, std::move(q)));
}

Building tree_building() { return Building(Diagram({"1", "2"}, {{1, inf}, {inf, 1}}, {3, 3})); }

Letter L(int t, int c) { return Letter{static_cast<std::int8_t>(t), static_cast<std::int8_t>(c)}; }
}  // namespace

TEST_CASE("gallery reduction examples") {
  Building b = path_building({3, 3, 3});
  // backtracking cancels
  Gallery g1 = make_gallery(b, b.base(), std::vector<Letter>{L(0, 1), L(0, 0)});
  Gallery r1 = reduce_gallery(b, g1);
  CHECK(r1.length() == 0);
  CHECK(r1.back() == b.base());

  // the two routes around a closed square both have length 2
  Gallery g2 = make_gallery(b, b.base(), std::vector<Letter>{L(0, 1), L(2, 1)});
  Gallery r2 = reduce_gallery(b, g2);
  CHECK(r2.length() == 2);
  std::set<std::vector<int>> allowed{{0, 2}, {2, 0}};
  CHECK(allowed.contains(r2.types));

  // two steps in one panel contract to one
  Gallery g3 = make_gallery(b, b.base(), std::vector<Letter>{L(0, 1), L(0, 2)});
  Gallery r3 = reduce_gallery(b, g3);
  CHECK(r3.length() == 1);
  CHECK(r3.back() == b.parse_word("1:2"));
}

TEST_CASE("distance and delta") {
  Building tree = tree_building();
  CHECK(dist(tree, tree.base(), tree.parse_word("1:2")) == 1);
  CHECK(weyl_delta(tree, tree.base(), tree.parse_word("1:2")) == std::vector<int>{0});

  CHECK(dist(tree, tree.parse_word("1:1"), tree.parse_word("2:1,1:1")) == 3);
  CHECK(weyl_delta(tree, tree.parse_word("1:1"), tree.parse_word("2:1,1:1")) ==
        (std::vector<int>{0, 1, 0}));

  Building path = path_building({3, 3, 3});
  CHECK(dist(path, path.parse_word("1:1,3:1"), path.parse_word("3:1")) == 1);
}

TEST_CASE("distance agrees with breadth-first search") {
  Building b = path_building({2, 3, 2});
  auto ball = b.ball(b.base(), 2);
  for (const Chamber& c : ball) {
    for (const Chamber& d : ball) {
      CHECK(dist(b, c, d) == bfs_dist(b, c, d));
    }
  }
}

TEST_CASE("projections") {
  Building tree = tree_building();
  Panel p1 = tree.panel(tree.base(), 0);
  CHECK(proj_panel(tree, p1, tree.parse_word("1:2,2:1")) == tree.parse_word("1:2"));
  // a panel containing c projects c to itself
  CHECK(proj_panel(tree, p1, tree.parse_word("1:1")) == tree.parse_word("1:1"));

  Building path = path_building({3, 3, 3});
  Panel q1 = path.panel(path.base(), 0);
  CHECK(proj_panel(path, q1, path.parse_word("3:1")) == path.base());

  // greedy residue descent matches the distance-minimal member
  Residue r = path.residue(path.base(), {0, 1});
  Chamber far = path.parse_word("2:1,1:1,3:1");
  Chamber gate = proj_residue(path, r, far);
  for (const Chamber& x : path.ball(path.base(), 3)) {
    if (!path.residue_contains(r, x)) continue;
    CHECK(dist(path, far, gate) <= dist(path, far, x));
  }
}

TEST_CASE("parallelism") {
  Building path = path_building({3, 3, 3});
  Panel p = path.panel(path.base(), 0);
  CHECK(are_parallel(path, p, p));
  Panel p_shift = path.panel(path.parse_word("3:1"), 0);
  CHECK(are_parallel(path, p, p_shift));
  CHECK(parallel_by_projection(path, p, p_shift));

  Building tree = tree_building();
  Panel t0 = tree.panel(tree.base(), 0);
  Panel t_far = tree.panel(tree.parse_word("2:1"), 0);
  CHECK_FALSE(are_parallel(tree, t0, t_far));
  CHECK_FALSE(parallel_by_projection(tree, t0, t_far));
}

TEST_CASE("closing squares") {
  Building b = path_building({2, 2, 2});
  Chamber c0 = b.base();
  Chamber d1 = b.parse_word("1:1");
  Chamber d2 = b.parse_word("3:1");
  Chamber c = b.parse_word("1:1,3:1");
  CHECK(close_square_down(b, c0, c, d1, d2) == b.base());

  // both neighbours in the same panel: the adjacency types coincide
  Building tree = tree_building();
  Chamber e1 = tree.parse_word("1:1");
  Chamber e2 = tree.parse_word("1:2");
  Chamber mid = tree.base();
  CHECK_THROWS_AS(close_square_down(tree, tree.parse_word("2:1"), mid, e1, e2), Error);

  // side case on the {1,3}-square, centred at the base chamber
  Building wide = path_building({3, 3, 3});
  Chamber s_d1 = wide.parse_word("1:1");
  Chamber s_c1 = wide.parse_word("1:1,3:1");
  Chamber s_c2 = wide.parse_word("1:2,3:1");
  Chamber s_d2 = close_square_side(wide, wide.base(), s_d1, s_c1, s_c2);
  CHECK(s_d2 == wide.parse_word("1:2"));

  // violated distance hypotheses are reported
  CHECK_THROWS_AS(close_square_down(b, c0, d1, c, d2), Error);
}

TEST_CASE("convexity") {
  Building b = path_building({2, 2, 2});
  CHECK(is_convex(b, {b.base()}));
  CHECK(is_convex(b, b.panel_members(b.panel(b.base(), 0))));

  std::vector<Chamber> corners{b.base(), b.parse_word("1:1,3:1")};
  std::vector<Chamber> closure = convex_closure(b, corners);
  CHECK(closure.size() == 4);
  std::set<Chamber> expected{b.base(), b.parse_word("1:1"), b.parse_word("3:1"),
                             b.parse_word("1:1,3:1")};
  CHECK(std::set<Chamber>(closure.begin(), closure.end()) == expected);
  CHECK(is_convex(b, closure));

  std::vector<Chamber> not_convex{b.base(), b.parse_word("1:1,3:1")};
  CHECK_FALSE(is_convex(b, not_convex));
}

TEST_CASE("gate property on a small ball") {
  Building b = tree_building();
  Panel p = b.panel(b.parse_word("1:1,2:1"), 0);
  for (const Chamber& c : b.ball(b.base(), 2)) {
    Chamber gate = proj_panel(b, p, c);
    for (const Chamber& m : b.panel_members(p)) {
      CHECK(dist(b, c, m) == dist(b, c, gate) + dist(b, gate, m));
    }
  }
}

TEST_CASE("minimal gallery type words are reduced") {
  Building b = path_building({2, 3, 2});
  auto ball = b.ball(b.base(), 2);
  for (std::size_t i = 0; i < ball.size(); i += 3) {
    for (std::size_t j = 0; j < ball.size(); j += 2) {
      std::vector<int> delta = weyl_delta(b, ball[i], ball[j]);
      for (std::size_t x = 0; x < delta.size(); ++x) {
        for (std::size_t y = x + 1; y < delta.size(); ++y) {
          if (delta[y] == delta[x]) {
            bool blocked = false;
            for (std::size_t z = x + 1; z < y; ++z) {
              if (!b.diagram().commutes(delta[z], delta[x])) blocked = true;
            }
            CHECK(blocked);
          }
        }
      }
    }
  }
}

TEST_CASE("wing panels") {
  Building tree = tree_building();
  LegalColouring colouring(tree);
  SUBCASE("base colour target") {
    auto [panel, chamber] = find_wing_panel(tree, colouring, {tree.base()}, 0, 0);
    CHECK(colouring.colour(chamber, 0) == 0);
    CHECK(proj_panel(tree, panel, tree.base()) == chamber);
    CHECK(dist(tree, tree.base(), chamber) >= 1);
  }
  SUBCASE("nonzero colour target") {
    auto [panel, chamber] = find_wing_panel(tree, colouring, {tree.base()}, 0, 2);
    CHECK(colouring.colour(chamber, 0) == 2);
    CHECK(proj_panel(tree, panel, tree.base()) == chamber);
  }
  SUBCASE("several chambers") {
    std::vector<Chamber> phi{tree.base(), tree.parse_word("1:1,2:2"), tree.parse_word("2:1")};
    auto [panel, chamber] = find_wing_panel(tree, colouring, phi, 1, 1);
    CHECK(colouring.colour(chamber, 1) == 1);
    for (const Chamber& f : phi) CHECK(proj_panel(tree, panel, f) == chamber);
  }
  SUBCASE("isolated node is rejected") {
    Building commuting(Diagram({"1", "2"}, {{1, 2}, {2, 1}}, {2, 2}));
    LegalColouring c2(commuting);
    CHECK_THROWS_AS(find_wing_panel(commuting, c2, {commuting.base()}, 0, 0), Error);
  }
}

TEST_CASE("gallery cap is an error, not truncation") {
  Limits tight;
  tight.gallery_bound = 1;
  Building capped(
      Diagram({"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, {2, 2, 2}, tight), tight);
  // the closed square has two minimal galleries between opposite corners
  Chamber far = capped.parse_word("1:1,3:1");
  CHECK_THROWS_AS(minimal_galleries(capped, capped.base(), far), Error);
}
