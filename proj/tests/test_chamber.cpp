#include <random>
#include <set>

#include "doctest.h"
#include "rab/chamber.hpp"

using namespace rab;

namespace {
const int inf = Diagram::kInf;

Building path_building(std::vector<int> q = {2, 2, 2}) {
  return Building(Diagram({"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, std::move(q)));
}

Building tree_building(int q1 = 3, int q2 = 3) {
  return Building(Diagram({"1", "2"}, {{1, inf}, {inf, 1}}, {q1, q2}));
}

Letter L(int t, int c) { return Letter{static_cast<std::int8_t>(t), static_cast<std::int8_t>(c)}; }

// All words obtainable from w by adjacent commuting swaps.
std::vector<std::vector<Letter>> commutation_class(const Diagram& d, const std::vector<Letter>& w) {
  std::set<std::vector<Letter>> seen{w};
  std::vector<std::vector<Letter>> frontier{w};
  while (!frontier.empty()) {
    std::vector<std::vector<Letter>> next;
    for (const auto& v : frontier) {
      for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        if (v[p].type == v[p + 1].type || !d.commutes(v[p].type, v[p + 1].type)) continue;
        std::vector<Letter> s = v;
        std::swap(s[p], s[p + 1]);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// One random rewrite schedule: repeatedly apply a random applicable reduction
// (overwrite of an adjacent same-type pair by its later letter, or deletion
// of a colour-0 letter no same-type letter can reach) anywhere in the
// commutation class. Independent of the production normal form.
std::vector<Letter> random_schedule(const Diagram& d, std::vector<Letter> w, std::mt19937& rng) {
  for (;;) {
    std::vector<std::vector<Letter>> results;
    for (const auto& v : commutation_class(d, w)) {
      for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        if (v[p].type != v[p + 1].type) continue;
        // the later letter overwrites the earlier one, colour 0 included
        std::vector<Letter> s = v;
        s.erase(s.begin() + static_cast<long>(p));
        results.push_back(std::move(s));
      }
      for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].colour != 0) continue;
        bool stuck = true;
        for (std::size_t q = p; q-- > 0;) {
          if (v[q].type == v[p].type) {
            stuck = false;
            break;
          }
          if (!d.commutes(v[q].type, v[p].type)) break;
        }
        if (stuck) {
          std::vector<Letter> s = v;
          s.erase(s.begin() + static_cast<long>(p));
          results.push_back(std::move(s));
        }
      }
    }
    if (results.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, results.size() - 1);
    w = results[pick(rng)];
  }
}

// Least word of the commutation class.
std::vector<Letter> lex_least_of_class(const Diagram& d, const std::vector<Letter>& w) {
  std::vector<Letter> best = w;
  for (const auto& v : commutation_class(d, w)) {
    if (v < best) best = v;
  }
  return best;
}
}  // namespace

TEST_CASE("normal form examples") {
  Building b = path_building({3, 3, 3});
  // commutation + canonical ordering
  std::vector<Letter> w1{L(2, 1), L(0, 1)};
  CHECK(b.normal_form(w1).word() == std::vector<Letter>{L(0, 1), L(2, 1)});
  // later same-type letter overwrites
  std::vector<Letter> w2{L(0, 1), L(0, 2)};
  CHECK(b.normal_form(w2).word() == std::vector<Letter>{L(0, 2)});
  // already reduced across an infinite bond
  std::vector<Letter> w3{L(0, 1), L(1, 1), L(0, 2)};
  CHECK(b.normal_form(w3).word() == w3);
  // transient zero colours cancel
  std::vector<Letter> w4{L(0, 1), L(0, 0)};
  CHECK(b.normal_form(w4).is_base());
  std::vector<Letter> w5{L(0, 0)};
  CHECK(b.normal_form(w5).is_base());
}

// On zero-free words the rewrite system (overwrite merges across commuting
// swaps, then the canonical order) is confluent; interior colour-0 letters
// are walk steps whose effect depends on the already-reduced prefix, so they
// are exercised by the walk-semantics cases instead.
TEST_CASE("normal form against random rewrite schedules") {
  Building tree = tree_building();
  Building path = path_building({2, 3, 2});
  std::mt19937 rng(7);
  for (int round = 0; round < 10000; ++round) {
    const Building& b = (round % 2 == 0) ? tree : path;
    const Diagram& d = b.diagram();
    std::uniform_int_distribution<int> len_dist(0, 8);
    int len = len_dist(rng);
    std::vector<Letter> w;
    for (int k = 0; k < len; ++k) {
      std::uniform_int_distribution<int> type_dist(0, d.rank() - 1);
      int t = type_dist(rng);
      std::uniform_int_distribution<int> colour_dist(1, d.q(t) - 1);
      w.push_back(L(t, colour_dist(rng)));
    }
    Chamber produced = b.normal_form(w);
    std::vector<Letter> reduced = random_schedule(d, w, rng);
    CHECK(lex_least_of_class(d, reduced) == produced.word());
    // idempotent
    CHECK(b.normal_form(produced.word()) == produced);
  }
}

TEST_CASE("walk semantics of transient zero colours") {
  Building b = tree_building();
  // a zero step crosses to the gate of the current panel, so it undoes
  // whatever same-type letter the reduced prefix carries
  std::vector<Letter> w{L(0, 1), L(0, 2), L(0, 1), L(0, 0)};
  CHECK(b.normal_form(w).is_base());
  std::vector<Letter> noop{L(0, 2), L(1, 0), L(1, 0), L(0, 0), L(1, 0)};
  CHECK(b.normal_form(noop).is_base());
  // prefix compositionality: appending one letter equals one step
  std::vector<Letter> word{L(0, 2), L(1, 1), L(0, 0), L(1, 2)};
  Chamber acc = b.base();
  for (std::size_t k = 0; k < word.size(); ++k) {
    acc = b.step(acc, word[k].type, word[k].colour);
    CHECK(acc == b.normal_form(std::span<const Letter>(word.data(), k + 1)));
  }
}

TEST_CASE("panels") {
  Building b = tree_building();
  Panel base_panel = b.panel(b.base(), 0);
  auto members = b.panel_members(base_panel);
  REQUIRE(members.size() == 3);
  CHECK(members[0] == b.base());
  CHECK(members[1].word() == std::vector<Letter>{L(0, 1)});
  CHECK(members[2].word() == std::vector<Letter>{L(0, 2)});

  // no movable letter of the panel type: the chamber is its own gate
  Chamber c = b.normal_form(std::vector<Letter>{L(1, 1)});
  Panel p = b.panel(c, 0);
  CHECK(p.gate == c);
  CHECK(b.panel_members(p).size() == 3);

  // a non-gate member names the same panel
  Chamber m = b.normal_form(std::vector<Letter>{L(0, 2)});
  CHECK(b.panel(m, 0) == base_panel);

  // partition: d in panel(c,i) iff c in panel(d,i); exactly q_i members
  for (const Chamber& x : b.ball(b.base(), 2)) {
    for (int t = 0; t < 2; ++t) {
      auto mem = b.panel_members(b.panel(x, t));
      CHECK(static_cast<int>(mem.size()) == b.diagram().q(t));
      bool found = false;
      for (const Chamber& y : mem) {
        CHECK(b.panel(y, t) == b.panel(x, t));
        if (y == x) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("adjacency") {
  Building b = tree_building();
  Chamber c1 = b.normal_form(std::vector<Letter>{L(0, 2)});
  CHECK(b.adjacency(b.base(), c1) == std::optional<int>(0));
  Chamber c2 = b.normal_form(std::vector<Letter>{L(0, 1), L(1, 1)});
  CHECK_FALSE(b.adjacency(b.base(), c2).has_value());
  CHECK_FALSE(b.adjacency(c1, c1).has_value());
}

TEST_CASE("balls") {
  Building tree = tree_building();
  CHECK(tree.ball(tree.base(), 0) == std::vector<Chamber>{tree.base()});
  CHECK(tree.ball(tree.base(), 1).size() == 5);

  // the m13 = 2 square collapses two of the length-2 words
  Building path = path_building({2, 2, 2});
  CHECK(path.ball(path.base(), 2).size() == 9);

  // semiregular with equal q: ball sizes do not depend on the centre
  std::size_t reference = tree.ball(tree.base(), 2).size();
  for (const Chamber& c : tree.ball(tree.base(), 2)) {
    CHECK(tree.ball(c, 2).size() == reference);
  }

  CHECK_THROWS_AS(tree.ball(tree.base(), 99), Error);
}

TEST_CASE("word literals") {
  Building b = tree_building();
  Chamber c = b.parse_word("1:2,2:1");
  CHECK(c.word() == (std::vector<Letter>{L(0, 2), L(1, 1)}));
  CHECK(b.format_word(c) == "1:2,2:1");
  CHECK(b.parse_word("e").is_base());
  CHECK(b.parse_word("").is_base());
  CHECK(b.format_word(b.base()) == "e");
  CHECK_THROWS_AS(b.parse_word("1:9"), Error);
  CHECK_THROWS_AS(b.parse_word("7:1"), Error);
  CHECK_THROWS_AS(b.parse_word("nonsense"), Error);
}
