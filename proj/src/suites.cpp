#include "rab/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rab {

namespace {

void add(std::vector<CheckLine>& lines, const std::string& name, bool passed,
         const std::string& detail) {
  lines.push_back({name, passed, detail});
}

std::set<Panel> panels_in_ball(const Building& b, int radius) {
  std::set<Panel> panels;
  for (const Chamber& c : b.ball(b.base(), radius)) {
    for (int t = 0; t < b.diagram().rank(); ++t) {
      Panel p = b.panel(c, t);
      if (p.gate.length() + 1 <= radius) panels.insert(std::move(p));
    }
  }
  return panels;
}

// orbit signature: the least element of the orbit of each colour
std::vector<int> orbit_signature(Universe& u, const Chamber& c) {
  std::vector<int> sig;
  for (int i = 0; i < u.diagram().rank(); ++i) {
    sig.push_back(u.local().at(i).orbit_of(u.colouring().colour(c, i)).front());
  }
  return sig;
}

Gallery random_minimal_gallery_from_base(const Building& b, const Chamber& c, std::mt19937& rng) {
  std::vector<Chamber> down{c};
  std::vector<int> types_down;
  Chamber cur = c;
  while (!cur.is_base()) {
    std::vector<std::pair<int, Chamber>> preds;
    for (const auto& [t, n] : b.neighbours(cur)) {
      if (n.length() == cur.length() - 1) preds.emplace_back(t, n);
    }
    std::uniform_int_distribution<std::size_t> pick(0, preds.size() - 1);
    auto [t, n] = preds[pick(rng)];
    types_down.push_back(t);
    down.push_back(n);
    cur = n;
  }
  Gallery g;
  g.chambers.assign(down.rbegin(), down.rend());
  g.types.assign(types_down.rbegin(), types_down.rend());
  return g;
}

// A deterministic pool of automorphisms: extension seeds near the base,
// recolourings, one composition and one inverse.
std::vector<Automorphism> automorphism_pool(Universe& u, unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::vector<Automorphism> pool;
  std::vector<Automorphism> primitives;
  for (const Panel& p : panels_in_ball(u.building(), 2)) {
    for (const Perm& f : u.local().at(p.type).elements()) {
      if (f.is_identity()) continue;
      primitives.push_back(extend_local(u, p, f));
    }
  }
  {
    std::vector<Perm> identity;
    for (int i = 0; i < u.diagram().rank(); ++i) identity.emplace_back(u.diagram().q(i));
    for (int round = 0; round < 8; ++round) {
      std::vector<Perm> f = identity;
      bool nontrivial = false;
      for (int i = 0; i < u.diagram().rank(); ++i) {
        const auto& elements = u.local().at(i).elements();
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        f[static_cast<std::size_t>(i)] = elements[pick(rng)];
        nontrivial = nontrivial || !f[static_cast<std::size_t>(i)].is_identity();
      }
      if (nontrivial) primitives.push_back(recolouring_aut(u, f));
    }
  }
  if (primitives.empty()) {
    pool.push_back(Automorphism::identity(u));
    return pool;
  }
  std::uniform_int_distribution<std::size_t> pick(0, primitives.size() - 1);
  while (pool.size() < count) {
    std::size_t roll = pool.size() % 4;
    if (roll == 3 && primitives.size() >= 2) {
      pool.push_back(compose(primitives[pick(rng)], primitives[pick(rng)]));
    } else if (roll == 2) {
      pool.push_back(primitives[pick(rng)].inverse());
    } else {
      pool.push_back(primitives[pick(rng)]);
    }
  }
  return pool;
}

}  // namespace

std::vector<CheckLine> check_colouring(Universe& u, int radius, unsigned seed) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  LegalColouring& colouring = u.colouring();

  LegalityReport legality = colouring.verify_legal(radius);
  add(lines, "legality", legality.passed,
      legality.passed ? std::to_string(legality.panels_checked) + " panels checked"
                      : legality.violations.front().detail);

  // path independence: lambda re-derived along random minimal galleries
  std::mt19937 rng(seed);
  int galleries = 0;
  bool independent = true;
  std::vector<Chamber> ball3 = b.ball(b.base(), std::min(radius, 3));
  for (const Chamber& c : ball3) {
    std::vector<int> expected = colouring.colour_vector(c);
    for (int round = 0; round < 3; ++round) {
      Gallery g = random_minimal_gallery_from_base(b, c, rng);
      ++galleries;
      if (colouring.derive_along_gallery(g) != expected) independent = false;
    }
  }
  for (int extra = 0; extra < 100; ++extra) {
    std::uniform_int_distribution<std::size_t> pick(0, ball3.size() - 1);
    const Chamber& c = ball3[pick(rng)];
    Gallery g = random_minimal_gallery_from_base(b, c, rng);
    ++galleries;
    if (colouring.derive_along_gallery(g) != colouring.colour_vector(c)) independent = false;
  }
  add(lines, "path-independence", independent, std::to_string(galleries) + " galleries re-derived");

  // wall constancy: parallel panels carry the same colours under projection
  bool wall_ok = true;
  int wall_pairs = 0;
  std::set<Panel> panel_set = panels_in_ball(b, std::min(radius, 3));
  std::vector<Panel> panels(panel_set.begin(), panel_set.end());
  for (std::size_t a = 0; a < panels.size(); ++a) {
    for (std::size_t c = a + 1; c < panels.size(); ++c) {
      if (!are_parallel(b, panels[a], panels[c])) continue;
      ++wall_pairs;
      for (const Chamber& m : b.panel_members(panels[a])) {
        Chamber image = proj_panel(b, panels[c], m);
        if (colouring.colour(m, panels[a].type) != colouring.colour(image, panels[c].type)) {
          wall_ok = false;
        }
      }
    }
  }
  add(lines, "wall-constancy", wall_ok, std::to_string(wall_pairs) + " parallel pairs");

  // harmony is an equivalence with one class per colour-orbit combination
  OrbitCount expected = orbit_count(u.local());
  std::set<std::vector<int>> signatures;
  std::vector<Chamber> cobounded_ball = b.ball(b.base(), u.diagram().rank());
  for (const Chamber& c : cobounded_ball) signatures.insert(orbit_signature(u, c));
  bool classes_ok = signatures.size() == expected.count;
  add(lines, "harmony-classes", classes_ok,
      std::to_string(signatures.size()) + " classes in the rank-radius ball, expected " +
          std::to_string(expected.count));

  // representatives of every class in a ball around an off-base chamber too
  bool rep_ok = true;
  if (cobounded_ball.size() > 1) {
    const Chamber& center = cobounded_ball.back();
    std::set<std::vector<int>> shifted;
    for (const Chamber& c : b.ball(center, u.diagram().rank())) {
      shifted.insert(orbit_signature(u, c));
    }
    rep_ok = shifted.size() == expected.count;
  }
  add(lines, "cobounded-representatives", rep_ok, "every class meets the shifted rank-radius ball");
  return lines;
}

std::vector<CheckLine> check_squares(Universe& u, int radius) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  const Chamber base = b.base();

  bool down_ok = true;
  int down_count = 0;
  std::string down_detail;
  bool side_ok = true;
  int side_count = 0;
  std::string side_detail;
  for (const Chamber& c : b.ball(base, radius)) {
    std::vector<std::pair<int, Chamber>> closer;
    std::vector<std::pair<int, Chamber>> same_level;
    for (const auto& [t, n] : b.neighbours(c)) {
      if (n.length() == c.length() - 1) closer.emplace_back(t, n);
      if (n.length() == c.length()) same_level.emplace_back(t, n);
    }
    if (c.length() >= 2) {
      for (std::size_t x = 0; x < closer.size(); ++x) {
        for (std::size_t y = x + 1; y < closer.size(); ++y) {
          ++down_count;
          try {
            close_square_down(b, base, c, closer[x].second, closer[y].second);
          } catch (const Error& e) {
            down_ok = false;
            down_detail = e.what();
          }
        }
      }
    }
    for (const auto& [i, d1] : closer) {
      for (const auto& [j, c2] : same_level) {
        if (i == j) continue;
        ++side_count;
        try {
          close_square_side(b, base, d1, c, c2);
        } catch (const Error& e) {
          side_ok = false;
          side_detail = e.what();
        }
      }
    }
  }
  add(lines, "closing-squares-down", down_ok,
      down_ok ? std::to_string(down_count) + " configurations closed" : down_detail);
  add(lines, "closing-squares-side", side_ok,
      side_ok ? std::to_string(side_count) + " configurations closed" : side_detail);
  return lines;
}

std::vector<CheckLine> check_geometry(Universe& u, int radius, unsigned seed) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  const Chamber base = b.base();
  std::mt19937 rng(seed);

  // distance oracle: gallery reduction vs breadth-first search
  std::vector<Chamber> ball3 = b.ball(base, std::min(radius, 3));
  std::map<Chamber, std::size_t> index;
  for (std::size_t i = 0; i < ball3.size(); ++i) index.emplace(ball3[i], i);
  std::vector<std::vector<int>> dist_matrix(ball3.size(), std::vector<int>(ball3.size(), -1));
  bool oracle_ok = true;
  int oracle_pairs = 0;
  for (std::size_t i = 0; i < ball3.size(); ++i) {
    // one BFS per source covers every target
    std::size_t found = 1;
    dist_matrix[i][i] = 0;
    std::set<Chamber> seen{ball3[i]};
    std::vector<Chamber> frontier{ball3[i]};
    for (int depth = 1; found < ball3.size() && depth <= 2 * std::min(radius, 3); ++depth) {
      std::vector<Chamber> next;
      for (const Chamber& x : frontier) {
        for (const auto& [t, n] : b.neighbours(x)) {
          (void)t;
          if (!seen.insert(n).second) continue;
          next.push_back(n);
          auto it = index.find(n);
          if (it != index.end()) {
            dist_matrix[i][it->second] = depth;
            ++found;
          }
        }
      }
      frontier = std::move(next);
    }
    for (std::size_t j = 0; j < ball3.size(); ++j) {
      ++oracle_pairs;
      if (dist_matrix[i][j] < 0 ||
          dist_matrix[i][j] != dist(b, ball3[i], ball3[j])) {
        oracle_ok = false;
      }
    }
  }
  add(lines, "distance-oracle", oracle_ok,
      std::to_string(oracle_pairs) + " pairs, reduction == BFS");

  // metric axioms on the matrix
  bool metric_ok = true;
  for (std::size_t i = 0; i < ball3.size() && metric_ok; ++i) {
    for (std::size_t j = 0; j < ball3.size() && metric_ok; ++j) {
      if (dist_matrix[i][j] != dist_matrix[j][i]) metric_ok = false;
      if ((dist_matrix[i][j] == 0) != (i == j)) metric_ok = false;
      for (std::size_t k = 0; k < ball3.size(); ++k) {
        if (dist_matrix[i][j] > dist_matrix[i][k] + dist_matrix[k][j]) {
          metric_ok = false;
          break;
        }
      }
    }
  }
  add(lines, "metric-axioms", metric_ok, "symmetry and triangle inequality on the ball");

  // a reduced delta word has no equal types separated by commuting ones
  bool delta_ok = true;
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<std::size_t> pick(0, ball3.size() - 1);
    const Chamber& c = ball3[pick(rng)];
    const Chamber& d = ball3[pick(rng)];
    std::vector<int> delta = weyl_delta(b, c, d);
    if (static_cast<int>(delta.size()) != dist(b, c, d)) delta_ok = false;
    for (std::size_t x = 0; x < delta.size() && delta_ok; ++x) {
      for (std::size_t y = x + 1; y < delta.size(); ++y) {
        if (delta[y] == delta[x]) {
          delta_ok = false;
          break;
        }
        if (!b.diagram().commutes(delta[y], delta[x])) break;
      }
    }
  }
  add(lines, "reduced-delta-words", delta_ok, "50 sampled pairs");

  // gate property for panels and small residues
  bool gate_ok = true;
  int gate_checked = 0;
  std::vector<Chamber> ball2 = b.ball(base, std::min(radius, 2));
  for (const Panel& p : panels_in_ball(b, std::min(radius, 2))) {
    for (const Chamber& c : ball2) {
      Chamber gate = proj_panel(b, p, c);
      for (const Chamber& m : b.panel_members(p)) {
        ++gate_checked;
        if (dist(b, c, m) != dist(b, c, gate) + dist(b, gate, m)) gate_ok = false;
      }
    }
  }
  for (int t1 = 0; t1 < u.diagram().rank() && gate_ok; ++t1) {
    for (int t2 = t1 + 1; t2 < u.diagram().rank(); ++t2) {
      Residue r = b.residue(base, {t1, t2});
      std::vector<Chamber> members;
      for (const Chamber& x : b.ball(base, std::min(radius, 3))) {
        if (b.residue_contains(r, x)) members.push_back(x);
      }
      for (const Chamber& c : ball2) {
        Chamber gate = proj_residue(b, r, c);
        for (const Chamber& m : members) {
          ++gate_checked;
          if (dist(b, c, m) != dist(b, c, gate) + dist(b, gate, m)) gate_ok = false;
        }
      }
    }
  }
  add(lines, "gate-property", gate_ok, std::to_string(gate_checked) + " chamber/member pairs");

  // parallelism: residue criterion vs projection definition
  bool parallel_ok = true;
  int parallel_pairs = 0;
  int parallel_true = 0;
  std::set<Panel> panel_set = panels_in_ball(b, std::min(radius, 3));
  std::vector<Panel> panels(panel_set.begin(), panel_set.end());
  for (std::size_t a = 0; a < panels.size(); ++a) {
    for (std::size_t c = a; c < panels.size(); ++c) {
      if (panels[a].type != panels[c].type) continue;
      ++parallel_pairs;
      bool via_residue = are_parallel(b, panels[a], panels[c]);
      bool via_projection = parallel_by_projection(b, panels[a], panels[c]);
      if (via_residue != via_projection) parallel_ok = false;
      if (via_residue) {
        ++parallel_true;
        // mutually inverse projection bijections
        for (const Chamber& m : b.panel_members(panels[a])) {
          if (proj_panel(b, panels[a], proj_panel(b, panels[c], m)) != m) parallel_ok = false;
        }
      }
    }
  }
  add(lines, "parallelism-criteria", parallel_ok,
      std::to_string(parallel_pairs) + " same-type pairs, " + std::to_string(parallel_true) +
          " parallel");

  // convexity: panels are convex; closures of small sets are convex
  bool convex_ok = true;
  {
    Panel p0 = b.panel(base, 0);
    if (!is_convex(b, b.panel_members(p0))) convex_ok = false;
    std::uniform_int_distribution<std::size_t> pick(0, ball2.size() - 1);
    for (int round = 0; round < 5; ++round) {
      std::vector<Chamber> sample{ball2[pick(rng)], ball2[pick(rng)], ball2[pick(rng)]};
      std::vector<Chamber> closure = convex_closure(b, sample);
      if (!is_convex(b, closure)) convex_ok = false;
      for (const Chamber& s : sample) {
        if (std::find(closure.begin(), closure.end(), s) == closure.end()) convex_ok = false;
      }
    }
  }
  add(lines, "convex-closure", convex_ok, "panels and closures of sampled triples");

  // wing panels, when the diagram allows them
  bool wing_ok = true;
  int wing_checked = 0;
  std::string wing_detail;
  for (int i = 0; i < u.diagram().rank(); ++i) {
    bool has_infinite_bond = false;
    for (int j = 0; j < u.diagram().rank(); ++j) {
      if (j != i && u.diagram().bond(i, j) == Diagram::kInf) has_infinite_bond = true;
    }
    if (!has_infinite_bond) continue;
    std::vector<Chamber> phi{base, ball2.back()};
    for (int x = 0; x < u.diagram().q(i); ++x) {
      ++wing_checked;
      try {
        auto [panel, chamber] = find_wing_panel(b, u.colouring(), phi, i, x);
        if (u.colouring().colour(chamber, i) != x) wing_ok = false;
        for (const Chamber& f : phi) {
          if (proj_panel(b, panel, f) != chamber) wing_ok = false;
        }
      } catch (const Error& e) {
        wing_ok = false;
        wing_detail = e.what();
      }
    }
  }
  add(lines, "wing-panels", wing_ok,
      wing_ok ? std::to_string(wing_checked) + " (type, colour) targets" : wing_detail);
  return lines;
}

std::vector<CheckLine> check_extension(Universe& u, int radius) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  const Chamber base = b.base();

  bool stabilises_ok = true;
  bool sigma_ok = true;
  bool wing_ok = true;
  bool membership_ok = true;
  bool distance_ok = true;
  int seeds = 0;
  std::vector<Chamber> ball = b.ball(base, radius);
  // every panel meeting ball(1), with every element of the local group
  for (const Panel& p0 : panels_in_ball(b, std::min(radius, 2))) {
    for (const Perm& f0 : u.local().at(p0.type).elements()) {
      ++seeds;
      Automorphism g = extend_local(u, p0, f0);
      // (i) the panel is stabilised
      std::set<Chamber> members;
      for (const Chamber& m : b.panel_members(p0)) members.insert(m);
      for (const Chamber& m : members) {
        if (!members.contains(g.apply(m))) stabilises_ok = false;
      }
      // (ii) the local action at the panel is f0
      if (g.local_action(p0) != f0) sigma_ok = false;
      // (iii) chambers projecting to f0-fixed colours are fixed
      for (const Chamber& c : ball) {
        Chamber proj = proj_panel(b, p0, c);
        int x = u.colouring().colour(proj, p0.type);
        if (f0(x) == x && g.apply(c) != c) wing_ok = false;
      }
      // membership: every evaluated local action lies in the local groups
      if (!g.local_actions_within(std::min(radius, 3))) membership_ok = false;
      // distance preservation on a few pairs
      for (std::size_t step = 1; step < ball.size(); step += ball.size() / 7 + 1) {
        if (dist(b, g.apply(ball[0]), g.apply(ball[step])) != dist(b, ball[0], ball[step])) {
          distance_ok = false;
        }
      }
    }
  }
  add(lines, "extension-stabilises-panel", stabilises_ok, std::to_string(seeds) + " seeds");
  add(lines, "extension-local-action", sigma_ok, "sigma(g, P0) == f0 for every seed");
  add(lines, "extension-wing-fixed", wing_ok, "chambers behind fixed colours stay fixed");
  add(lines, "extension-membership", membership_ok, "all local actions inside the local groups");
  add(lines, "extension-preserves-distance", distance_ok, "sampled pairs");
  return lines;
}

std::vector<CheckLine> check_parallel_actions(Universe& u, int radius, unsigned seed, int samples) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  std::vector<std::pair<Panel, Panel>> parallel_pairs;
  std::set<Panel> panel_set = panels_in_ball(b, std::min(radius, 3));
  std::vector<Panel> panels(panel_set.begin(), panel_set.end());
  for (std::size_t a = 0; a < panels.size(); ++a) {
    for (std::size_t c = a + 1; c < panels.size(); ++c) {
      if (are_parallel(b, panels[a], panels[c])) parallel_pairs.emplace_back(panels[a], panels[c]);
    }
  }
  bool ok = true;
  std::vector<Automorphism> pool =
      automorphism_pool(u, seed, static_cast<std::size_t>(samples));
  for (const Automorphism& g : pool) {
    for (const auto& [p, q] : parallel_pairs) {
      if (g.local_action(p) != g.local_action(q)) ok = false;
    }
  }
  add(lines, "parallel-local-actions", ok,
      std::to_string(pool.size()) + " automorphisms x " + std::to_string(parallel_pairs.size()) +
          " parallel pairs");
  return lines;
}

std::vector<CheckLine> check_orbits(Universe& u, unsigned seed) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  std::vector<Chamber> ball2 = b.ball(b.base(), 2);

  bool witness_ok = true;
  bool negative_ok = true;
  std::vector<Automorphism> constructed;
  int harmonious_pairs = 0;
  for (const Chamber& c : ball2) {
    for (const Chamber& d : ball2) {
      auto witness = u_orbit_check(u, c, d);
      bool expected = harmonious(u.colouring(), c, d, u.local());
      if (witness.has_value() != expected) witness_ok = false;
      if (witness.has_value()) {
        ++harmonious_pairs;
        if (witness->apply(c) != d) witness_ok = false;
        if (constructed.size() < 40) constructed.push_back(*witness);
      }
    }
  }
  add(lines, "harmony-witnesses", witness_ok,
      std::to_string(harmonious_pairs) + " harmonious pairs realised by witnesses");

  // no constructed automorphism ever joins non-harmonious chambers
  for (const Automorphism& g : automorphism_pool(u, seed, 10)) constructed.push_back(g);
  for (const Automorphism& g : constructed) {
    for (std::size_t i = 0; i < ball2.size(); i += 3) {
      Chamber image = g.apply(ball2[i]);
      if (!harmonious(u.colouring(), ball2[i], image, u.local())) negative_ok = false;
    }
  }
  add(lines, "harmony-preserved", negative_ok,
      std::to_string(constructed.size()) + " automorphisms audited");

  // orbit count: product formula, with representatives in the rank ball
  OrbitCount expected = orbit_count(u.local());
  std::set<std::vector<int>> signatures;
  for (const Chamber& c : b.ball(b.base(), u.diagram().rank())) {
    signatures.insert(orbit_signature(u, c));
  }
  add(lines, "orbit-count", signatures.size() == expected.count,
      std::to_string(signatures.size()) + " classes, expected " + std::to_string(expected.count));

  // membership audit over the witnesses
  bool membership_ok = true;
  for (std::size_t i = 0; i < constructed.size(); i += 5) {
    if (!constructed[i].local_actions_within(2)) membership_ok = false;
  }
  add(lines, "witness-membership", membership_ok, "local actions inside the local groups");

  // chamber-stabilising generators act by plus-subgroup permutations
  bool plus_ok = true;
  int plus_checked = 0;
  {
    std::vector<PermGroup> plus;
    for (const PermGroup& g : u.local().groups) plus.push_back(g.plus_subgroup());
    std::set<Panel> panels = panels_in_ball(b, 2);
    for (const Automorphism& g : uplus_generators(u, 2, 12)) {
      for (const Panel& p : panels) {
        ++plus_checked;
        if (!plus[static_cast<std::size_t>(p.type)].contains(g.local_action(p))) plus_ok = false;
      }
    }
  }
  add(lines, "stabiliser-locals-in-plus", plus_ok,
      std::to_string(plus_checked) + " local actions inside the plus subgroups");

  for (CheckLine& line : check_uplus_separation(u)) lines.push_back(std::move(line));
  return lines;
}

std::vector<CheckLine> check_uplus_separation(Universe& u) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  const Diagram& d = u.diagram();
  LegalColouring& colouring = u.colouring();

  // an uncovered infinite bond with intransitive ends separates the orbits of
  // the chamber-stabiliser subgroup along the alternating apartment
  int tj = -1;
  int tk = -1;
  for (int i = 0; i < d.rank() && tj < 0; ++i) {
    for (int j = i + 1; j < d.rank(); ++j) {
      if (d.bond(i, j) == Diagram::kInf && !u.local().at(i).is_transitive() &&
          !u.local().at(j).is_transitive()) {
        tj = i;
        tk = j;
        break;
      }
    }
  }
  if (tj >= 0) {
    auto other_orbit_colour = [&](int type) {
      for (int x = 1; x < d.q(type); ++x) {
        if (!u.local().at(type).same_orbit(0, x)) return x;
      }
      fail(ErrorKind::kInternal, "separation: no second orbit");
    };
    int xj = other_orbit_colour(tj);
    int xk = other_orbit_colour(tk);
    Chamber c0 = b.base();
    Chamber c1 = colouring.move_to_colour(c0, tj, xj);
    Chamber c2 = colouring.move_to_colour(c1, tk, xk);
    Chamber c3 = colouring.move_to_colour(c2, tj, 0);
    Chamber c4 = colouring.move_to_colour(c3, tk, 0);
    bool setup_ok = dist(b, c0, c4) == 4 && harmonious(colouring, c0, c4, u.local());
    add(lines, "separation-pair", setup_ok,
        "harmonious distance-4 pair on the alternating apartment at types {" + d.label(tj) + "," +
            d.label(tk) + "}");

    std::vector<std::vector<std::vector<int>>> classes;
    for (int i = 0; i < d.rank(); ++i) classes.push_back(Implosion::orbit_classes(u.local().at(i)));
    Implosion imp(u, classes);
    bool fibres_ok = imp.tau(c0) != imp.tau(c4);
    add(lines, "separation-fibres", fibres_ok, "the pair lies in distinct collapse fibres");

    std::vector<Chamber> orbit = uplus_orbit_on_ball(u, c0, 4);
    bool closure_ok = std::find(orbit.begin(), orbit.end(), c4) == orbit.end();
    add(lines, "separation-closure", closure_ok,
        "chamber-stabiliser closure of size " + std::to_string(orbit.size()) +
            " does not reach the partner");
  } else {
    add(lines, "separation-pair", true, "not applicable: no uncovered intransitive bond");
  }

  // when the group is generated by chamber stabilisers, the bounded closure
  // must realise the full harmony classes
  Verdict v = verdict_u_eq_uplus(d, u.local());
  if (v.value == Truth::kTrue) {
    bool closure_matches = true;
    std::vector<Chamber> ball2 = b.ball(b.base(), 2);
    std::map<std::vector<int>, std::set<Chamber>> classes;
    for (const Chamber& c : ball2) classes[orbit_signature(u, c)].insert(c);
    std::set<Chamber> done;
    for (const Chamber& c : ball2) {
      if (done.contains(c)) continue;
      std::vector<Chamber> orbit = uplus_orbit_on_ball(u, c, 2);
      std::set<Chamber> orbit_set(orbit.begin(), orbit.end());
      if (orbit_set != classes[orbit_signature(u, c)]) closure_matches = false;
      for (const Chamber& x : orbit) done.insert(x);
    }
    add(lines, "closure-equals-harmony", closure_matches,
        "chamber-stabiliser closure matches harmony classes on the radius-2 ball");
  }
  return lines;
}

std::vector<CheckLine> check_implosion(Universe& u, int radius) {
  std::vector<CheckLine> lines;
  const Building& b = u.building();
  const Diagram& d = u.diagram();

  std::vector<std::vector<std::vector<int>>> orbit_classes;
  for (int i = 0; i < d.rank(); ++i) {
    orbit_classes.push_back(Implosion::orbit_classes(u.local().at(i)));
  }
  Implosion imp(u, orbit_classes);
  ImplosionReport report = imp.verify(std::min(radius, 3));
  for (const ImplosionCheck& check : report.checks) {
    add(lines, "implosion-" + check.name, check.passed, check.detail);
  }

  std::vector<Automorphism> gens = uplus_generators(u, std::min(radius + 1, 4), 50);
  ImplosionReport stability = imp.fibre_stability(gens, std::min(radius + 1, 4));
  for (const ImplosionCheck& check : stability.checks) {
    add(lines, "implosion-" + check.name, check.passed, check.detail);
  }

  // fibres contain the bounded chamber-stabiliser orbits
  bool containment_ok = true;
  for (const Chamber& c : b.ball(b.base(), 2)) {
    for (const Chamber& x : uplus_orbit_on_ball(u, c, 2)) {
      if (imp.tau(x) != imp.tau(c)) containment_ok = false;
    }
  }
  add(lines, "implosion-orbits-in-fibres", containment_ok,
      "bounded closure orbits stay inside fibres");

  // equality partitions: nothing collapses
  {
    std::vector<std::vector<std::vector<int>>> equality(static_cast<std::size_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i) {
      for (int x = 0; x < d.q(i); ++x) equality[static_cast<std::size_t>(i)].push_back({x});
    }
    Implosion identity_imp(u, equality);
    bool injective = true;
    std::set<Chamber> images;
    std::vector<Chamber> ball2 = b.ball(b.base(), 2);
    for (const Chamber& c : ball2) images.insert(identity_imp.tau(c));
    if (images.size() != ball2.size()) injective = false;
    add(lines, "implosion-identity-bijective", injective,
        "equality classes collapse nothing on the radius-2 ball");
  }

  // universal partitions: everything collapses
  {
    std::vector<std::vector<std::vector<int>>> universal(static_cast<std::size_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i) {
      std::vector<int> all;
      for (int x = 0; x < d.q(i); ++x) all.push_back(x);
      universal[static_cast<std::size_t>(i)].push_back(std::move(all));
    }
    Implosion constant_imp(u, universal);
    bool constant = constant_imp.target_diagram().rank() == 0;
    for (const Chamber& c : b.ball(b.base(), 2)) {
      if (!constant_imp.tau(c).is_base()) constant = false;
    }
    add(lines, "implosion-universal-constant", constant, "universal classes collapse everything");
  }

  // negative control: a colour-swapping map across classes moves fibres
  {
    int swap_type = -1;
    for (int i = 0; i < d.rank() && swap_type < 0; ++i) {
      if (!u.local().at(i).is_transitive()) swap_type = i;
    }
    if (swap_type >= 0) {
      int other = -1;
      for (int x = 1; x < d.q(swap_type); ++x) {
        if (!u.local().at(swap_type).same_orbit(0, x)) other = x;
      }
      std::vector<Perm> f;
      for (int i = 0; i < d.rank(); ++i) {
        if (i == swap_type) {
          std::vector<int> images(static_cast<std::size_t>(d.q(i)));
          for (int x = 0; x < d.q(i); ++x) images[static_cast<std::size_t>(x)] = x;
          std::swap(images[0], images[static_cast<std::size_t>(other)]);
          f.emplace_back(std::move(images));
        } else {
          f.emplace_back(d.q(i));
        }
      }
      Chamber dst = u.colouring().move_to_colour(b.base(), swap_type, other);
      Automorphism crossing = recolouring_with_seed(u, f, b.base(), dst, false);
      ImplosionReport moved = imp.fibre_stability({crossing}, 2);
      add(lines, "implosion-negative-control", !moved.passed,
          !moved.passed ? "class-crossing map correctly reported: " + moved.checks.front().detail
                        : "class-crossing map was not detected");
    } else {
      add(lines, "implosion-negative-control", true,
          "not applicable: all local groups transitive, orbit collapse is total");
    }
  }
  return lines;
}

std::vector<CheckLine> check_compgen(Universe& u) {
  std::vector<CheckLine> lines;
  if (u.diagram().rank() < 2) {
    add(lines, "compgen-sets", true, "not applicable below rank 2");
    return lines;
  }
  CompgenSets sets = compgen_sets(u);
  std::string summary = "|B|=" + std::to_string(sets.b_set.size()) +
                        ", |D|=" + std::to_string(sets.d_set.size()) +
                        ", |T|=" + std::to_string(sets.t_pairs.size()) + ", S over " +
                        std::to_string(sets.s_panels.size()) + " panels";
  add(lines, "compgen-sets", true, summary);
  add(lines, "compgen-step1", sets.step1_passed, "transversal ball reached from B under S");
  add(lines, "compgen-step2", sets.step2_passed, "boundary set reached from B under S and T");
  add(lines, "compgen-step3", sets.step3_passed,
      "every chamber of the rank+2 ball reached from B");
  return lines;
}

namespace {

// All subgroups of the symmetric group of the given degree, via closures of
// generator pairs (every subgroup at degree <= 4 is 2-generated).
std::vector<PermGroup> all_subgroups(int degree) {
  std::vector<Perm> sym = PermGroup::symmetric(degree).elements();
  std::set<std::vector<Perm>> element_sets;
  std::vector<PermGroup> out;
  for (const Perm& a : sym) {
    for (const Perm& b : sym) {
      PermGroup g(degree, {a, b});
      if (element_sets.insert(g.elements()).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<CheckLine> check_primitivity(Universe& u) {
  std::vector<CheckLine> lines;
  const Diagram& d = u.diagram();

  // exhaustive agreement of the two primitivity routes at degree <= 4
  bool routes_ok = true;
  int transitive_count = 0;
  for (int degree = 2; degree <= 4; ++degree) {
    for (const PermGroup& g : all_subgroups(degree)) {
      if (!g.is_transitive()) continue;
      ++transitive_count;
      if (g.is_primitive_blocks() != g.is_primitive_higman()) routes_ok = false;
    }
  }
  add(lines, "primitivity-routes-agree", routes_ok,
      std::to_string(transitive_count) + " transitive groups of degree <= 4");

  // permutation-group oracles by element enumeration
  bool oracle_ok = true;
  std::vector<PermGroup> samples{PermGroup::symmetric(3), PermGroup::cyclic(3),
                                 PermGroup::cyclic(4), PermGroup::symmetric(4),
                                 PermGroup::trivial(3)};
  for (const PermGroup& g : u.local().groups) samples.push_back(g);
  for (const PermGroup& g : samples) {
    // regular iff transitive of order equal to the degree
    bool regular_formula = g.is_transitive() && g.order() == static_cast<std::size_t>(g.degree());
    if (g.is_regular() != regular_formula) oracle_ok = false;
    // the plus subgroup is normal and generated by stabilising elements
    PermGroup plus = g.plus_subgroup();
    for (const Perm& x : g.elements()) {
      for (const Perm& h : plus.elements()) {
        if (!plus.contains(x * h * x.inverse())) oracle_ok = false;
      }
    }
    // fix-move witnesses exist exactly for primitive non-regular groups
    if (g.is_primitive() && !g.is_regular()) {
      for (int x = 0; x < g.degree(); ++x) {
        for (int y = 0; y < g.degree(); ++y) {
          if (x == y) continue;
          Perm w = g.fix_move_witness(x, y);
          if (w(x) != x || w(y) == y || !g.contains(w)) oracle_ok = false;
        }
      }
    }
  }
  add(lines, "permgroup-oracles", oracle_ok,
      std::to_string(samples.size()) + " groups checked by enumeration");

  // verdict clauses agree with the permutation-group computations
  for (CheckLine& line : check_verdict_consistency(u)) lines.push_back(std::move(line));
  (void)d;
  return lines;
}

std::vector<CheckLine> check_verdict_consistency(Universe& u) {
  std::vector<CheckLine> lines;
  const Diagram& d = u.diagram();
  const LocalData& local = u.local();

  Verdict simple = verdict_simple(d, local);
  Verdict uplus = verdict_u_eq_uplus(d, local);
  bool implication_ok = simple.value != Truth::kTrue || uplus.value == Truth::kTrue;
  add(lines, "verdict-simple-implies-uplus", implication_ok,
      "simple=" + to_string(simple.value) + ", u=u+ " + to_string(uplus.value));

  bool clause_ok = true;
  for (int k = 0; k < d.rank(); ++k) {
    std::vector<int> J;
    for (int i = 0; i < d.rank(); ++i) {
      if (i != k) J.push_back(i);
    }
    if (J.empty()) continue;
    Verdict v = verdict_primitive_on_residues(d, local, J);
    bool expected = local.at(k).is_primitive() && !local.at(k).is_regular();
    for (int i = 0; i < d.rank(); ++i) {
      if (i != k && d.bond(i, k) == Diagram::kInf && !local.at(i).is_transitive()) {
        expected = false;
      }
    }
    if ((v.value == Truth::kTrue) != expected) clause_ok = false;
  }
  add(lines, "verdict-primitivity-clauses", clause_ok,
      "clauses match the permutation-group computations for every co-rank-1 type set");

  Verdict discrete = verdict_discrete(d, local);
  bool discrete_expected = true;
  for (const PermGroup& g : local.groups) {
    if (!g.is_free()) discrete_expected = false;
  }
  bool discrete_ok = (discrete.value == Truth::kTrue) == discrete_expected;
  if (discrete.value == Truth::kFalse) {
    // the attached witness must re-check
    bool witness_found = false;
    for (const Reason& r : discrete.reasons) {
      if (!r.witness.empty()) witness_found = true;
    }
    discrete_ok = discrete_ok && witness_found;
  }
  add(lines, "verdict-discrete-witness", discrete_ok,
      "discrete=" + to_string(discrete.value) + " agrees with the freeness computation");

  Verdict lc = verdict_locally_compact(d, local);
  Verdict cg = verdict_compactly_generated(d, local);
  add(lines, "verdict-finite-case", lc.value == Truth::kTrue && cg.value == Truth::kTrue,
      "finite local data is locally compact and compactly generated");

  OrbitCount orbits = orbit_count(local);
  std::set<std::vector<int>> signatures;
  for (const Chamber& c : u.building().ball(u.building().base(), d.rank())) {
    signatures.insert(orbit_signature(u, c));
  }
  add(lines, "verdict-orbit-count", signatures.size() == orbits.count,
      "orbit product " + std::to_string(orbits.count) + " matches the realised classes");
  return lines;
}

std::vector<std::string> suite_names() {
  return {"colouring", "squares",   "geometry", "extension",   "orbits",
          "implosion", "compgen",   "primitivity", "all"};
}

bool is_suite_name(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteReport> run_suite(const std::string& name, const Config& cfg,
                                   const SuiteOptions& options) {
  if (!is_suite_name(name)) {
    fail(ErrorKind::kUsage, "unknown suite '" + name + "'; expected one of: colouring, squares, "
                            "geometry, extension, orbits, implosion, compgen, primitivity, all");
  }
  Universe u(cfg.diagram(), cfg.local_data(), cfg.limits);
  int radius = std::min(options.radius, cfg.limits.max_radius);

  auto run_one = [&](const std::string& suite) {
    SuiteReport report;
    report.suite = suite;
    report.config_name = cfg.name;
    if (suite == "colouring") {
      report.checks = check_colouring(u, radius, options.seed);
    } else if (suite == "squares") {
      report.checks = check_squares(u, std::min(radius + 1, cfg.limits.max_radius));
    } else if (suite == "geometry") {
      report.checks = check_geometry(u, radius, options.seed);
    } else if (suite == "extension") {
      report.checks = check_extension(u, radius);
      for (CheckLine& line : check_parallel_actions(u, radius, options.seed, 20)) {
        report.checks.push_back(std::move(line));
      }
    } else if (suite == "orbits") {
      report.checks = check_orbits(u, options.seed);
    } else if (suite == "implosion") {
      report.checks = check_implosion(u, radius);
    } else if (suite == "compgen") {
      report.checks = check_compgen(u);
    } else if (suite == "primitivity") {
      report.checks = check_primitivity(u);
    }
    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckLine& line) { return line.passed; });
    return report;
  };

  std::vector<SuiteReport> reports;
  if (name == "all") {
    for (const std::string& suite : suite_names()) {
      if (suite != "all") reports.push_back(run_one(suite));
    }
  } else {
    reports.push_back(run_one(name));
  }
  return reports;
}

namespace {

Config make_config(std::string name, std::vector<std::string> types,
                   std::vector<std::vector<int>> m, std::vector<int> q,
                   std::vector<std::vector<Perm>> generators) {
  Config cfg;
  cfg.name = std::move(name);
  cfg.types = std::move(types);
  cfg.m = std::move(m);
  cfg.q = std::move(q);
  cfg.generators = std::move(generators);
  return cfg;
}

std::vector<Perm> gens_of(const PermGroup& g) { return g.generators(); }

}  // namespace

std::vector<Config> default_matrix() {
  const int inf = Diagram::kInf;
  std::vector<Config> matrix;
  matrix.push_back(make_config("tree22-trivial", {"1", "2"}, {{1, inf}, {inf, 1}}, {2, 2},
                               {{}, {}}));
  matrix.push_back(make_config("tree33-sym", {"1", "2"}, {{1, inf}, {inf, 1}}, {3, 3},
                               {gens_of(PermGroup::symmetric(3)), gens_of(PermGroup::symmetric(3))}));
  Perm swap01 = Perm::from_cycles("(0 1)", 3);
  matrix.push_back(make_config("tree33-swap", {"1", "2"}, {{1, inf}, {inf, 1}}, {3, 3},
                               {{swap01}, {swap01}}));
  matrix.push_back(make_config(
      "path232-mixed", {"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, {2, 3, 2},
      {gens_of(PermGroup::symmetric(2)), gens_of(PermGroup::cyclic(3)), {}}));
  matrix.push_back(make_config(
      "path333-cover", {"1", "2", "3"}, {{1, inf, 2}, {inf, 1, inf}, {2, inf, 1}}, {3, 3, 3},
      {{swap01}, gens_of(PermGroup::symmetric(3)), {swap01}}));
  matrix.push_back(make_config(
      "tri333-sym", {"1", "2", "3"}, {{1, inf, inf}, {inf, 1, inf}, {inf, inf, 1}}, {3, 3, 3},
      {gens_of(PermGroup::symmetric(3)), gens_of(PermGroup::symmetric(3)),
       gens_of(PermGroup::symmetric(3))}));
  return matrix;
}

bool all_passed(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SuiteReport& r) { return r.passed; });
}

std::string render_reports_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const SuiteReport& report : reports) {
    out << "== suite " << report.suite << " on " << report.config_name << ": "
        << (report.passed ? "PASS" : "FAIL") << "\n";
    for (const CheckLine& line : report.checks) {
      out << "   " << (line.passed ? "ok   " : "FAIL ") << line.name;
      if (!line.detail.empty()) out << ": " << line.detail;
      out << "\n";
    }
  }
  out << (all_passed(reports) ? "VERIFY PASS" : "VERIFY FAIL") << " (" << reports.size()
      << " suite runs)\n";
  return out.str();
}

std::string render_reports_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json root = nlohmann::json::array();
  for (const SuiteReport& report : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckLine& line : report.checks) {
      checks.push_back({{"name", line.name}, {"passed", line.passed}, {"detail", line.detail}});
    }
    root.push_back({{"suite", report.suite},
                    {"config", report.config_name},
                    {"passed", report.passed},
                    {"checks", checks}});
  }
  return root.dump(2) + "\n";
}

}  // namespace rab
