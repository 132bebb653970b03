#include "rab/geometry.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rab/colouring.hpp"

namespace rab {

Gallery make_gallery(const Building& b, const Chamber& start, std::span<const Letter> steps) {
  Gallery g;
  g.chambers.push_back(start);
  for (const Letter& l : steps) {
    Chamber next = b.step(g.chambers.back(), l.type, l.colour);
    if (next == g.chambers.back()) {
      fail(ErrorKind::kValidate, "degenerate gallery step (no move) at letter of type '" +
                                     b.diagram().label(l.type) + "'");
    }
    g.types.push_back(l.type);
    g.chambers.push_back(std::move(next));
  }
  return g;
}

void validate_gallery(const Building& b, const Gallery& g) {
  if (g.chambers.empty()) fail(ErrorKind::kValidate, "gallery must contain at least one chamber");
  if (g.types.size() + 1 != g.chambers.size()) {
    fail(ErrorKind::kValidate, "gallery type word length must be one less than chamber count");
  }
  for (std::size_t s = 0; s < g.types.size(); ++s) {
    auto t = b.adjacency(g.chambers[s], g.chambers[s + 1]);
    if (!t.has_value() || *t != g.types[s]) {
      fail(ErrorKind::kValidate, "gallery step " + std::to_string(s) +
                                     " does not match its declared type");
    }
  }
}

namespace {

// Swaps steps s and s+1 (commuting types), recomputing the middle chamber as
// the fourth corner of the square.
void homotopy_swap(const Building& b, Gallery& g, std::size_t s) {
  const Chamber& lo = g.chambers[s];
  const Chamber& mid = g.chambers[s + 1];
  const Chamber& hi = g.chambers[s + 2];
  Chamber replacement = b.fourth_corner(mid, lo, hi);
  g.chambers[s + 1] = replacement;
  std::swap(g.types[s], g.types[s + 1]);
}

// Contracts the same-type steps s and s+1: cancel if the endpoints agree,
// merge into one panel step otherwise.
void contract(Gallery& g, std::size_t s) {
  if (g.chambers[s] == g.chambers[s + 2]) {
    g.chambers.erase(g.chambers.begin() + static_cast<long>(s) + 1,
                     g.chambers.begin() + static_cast<long>(s) + 3);
    g.types.erase(g.types.begin() + static_cast<long>(s), g.types.begin() + static_cast<long>(s) + 2);
  } else {
    g.chambers.erase(g.chambers.begin() + static_cast<long>(s) + 1);
    g.types.erase(g.types.begin() + static_cast<long>(s) + 1);
  }
}

}  // namespace

Gallery reduce_gallery(const Building& b, Gallery g) {
  validate_gallery(b, g);
  const Diagram& d = b.diagram();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s + 1 < g.types.size(); ++s) {
      if (g.types[s] == g.types[s + 1]) {
        contract(g, s);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // A type word is reduced in the right-angled Coxeter group iff no two
    // equal types are separated only by commuting ones; bubble the later
    // occurrence leftwards and contract.
    for (std::size_t j = 0; j < g.types.size() && !changed; ++j) {
      for (std::size_t k = j + 1; k < g.types.size(); ++k) {
        if (g.types[k] == g.types[j]) {
          for (std::size_t l = k; l > j + 1; --l) homotopy_swap(b, g, l - 1);
          contract(g, j);
          changed = true;
          break;
        }
        if (!d.commutes(g.types[k], g.types[j])) break;
      }
    }
  }
  return g;
}

Gallery reduced_gallery_between(const Building& b, const Chamber& c, const Chamber& d) {
  Gallery g;
  g.chambers.push_back(c);
  Chamber cur = c;
  while (!cur.is_base()) {
    Letter last = cur.word().back();
    Chamber next = b.step(cur, last.type, 0);
    g.types.push_back(last.type);
    g.chambers.push_back(next);
    cur = std::move(next);
  }
  for (const Letter& l : d.word()) {
    Chamber next = b.step(cur, l.type, l.colour);
    require_internal(next != cur, "walk along a reduced word must move");
    g.types.push_back(l.type);
    g.chambers.push_back(next);
    cur = std::move(next);
  }
  require_internal(g.chambers.back() == d, "walk did not reach the target chamber");
  return reduce_gallery(b, std::move(g));
}

int dist(const Building& b, const Chamber& c, const Chamber& d) {
  if (c == d) return 0;
  if (c.is_base()) return d.length();
  if (d.is_base()) return c.length();
  return reduced_gallery_between(b, c, d).length();
}

std::vector<int> weyl_delta(const Building& b, const Chamber& c, const Chamber& d) {
  return reduced_gallery_between(b, c, d).types;
}

int bfs_dist(const Building& b, const Chamber& c, const Chamber& d) {
  if (c == d) return 0;
  const int cap = 2 * b.limits().max_radius + 2;
  std::unordered_set<Chamber, ChamberHash> seen{c};
  std::vector<Chamber> frontier{c};
  for (int depth = 1; depth <= cap; ++depth) {
    std::vector<Chamber> next;
    for (const Chamber& x : frontier) {
      for (const auto& [t, n] : b.neighbours(x)) {
        (void)t;
        if (n == d) return depth;
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  fail(ErrorKind::kLimit, "bfs_dist: chambers farther apart than the search cap");
}

Chamber proj_panel(const Building& b, const Panel& p, const Chamber& c) {
  std::vector<Chamber> members = b.panel_members(p);
  int best = -1;
  int best_dist = 0;
  bool tie = false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    int di = dist(b, c, members[i]);
    if (best < 0 || di < best_dist) {
      best = static_cast<int>(i);
      best_dist = di;
      tie = false;
    } else if (di == best_dist) {
      tie = true;
    }
  }
  require_internal(!tie, "proj_panel: gate is not unique");
  return members[static_cast<std::size_t>(best)];
}

int dist_to_panel(const Building& b, const Chamber& c, const Panel& p) {
  return dist(b, c, proj_panel(b, p, c));
}

Chamber proj_residue(const Building& b, const Residue& r, const Chamber& c) {
  // greedy descent: each non-gate member has a strictly closer neighbour
  // inside the residue
  Chamber current = r.gate;
  int current_dist = dist(b, c, current);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int t : r.types) {
      for (const Chamber& m : b.panel_members(b.panel(current, t))) {
        if (m == current) continue;
        int dm = dist(b, c, m);
        if (dm < current_dist) {
          current = m;
          current_dist = dm;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }
  return current;
}

Residue wall(const Building& b, const Panel& p) {
  std::vector<int> types = b.diagram().perp(p.type);
  types.push_back(p.type);
  return b.residue(p.gate, std::move(types));
}

bool are_parallel(const Building& b, const Panel& p, const Panel& q) {
  return p.type == q.type && wall(b, p).gate == wall(b, q).gate;
}

bool parallel_by_projection(const Building& b, const Panel& p, const Panel& q) {
  std::set<Chamber> p_members;
  for (auto& m : b.panel_members(p)) p_members.insert(m);
  std::set<Chamber> q_members;
  for (auto& m : b.panel_members(q)) q_members.insert(m);
  std::set<Chamber> p_images;
  for (const Chamber& m : q_members) p_images.insert(proj_panel(b, p, m));
  if (p_images != p_members) return false;
  std::set<Chamber> q_images;
  for (const Chamber& m : p_members) q_images.insert(proj_panel(b, q, m));
  return q_images == q_members;
}

namespace {

void check_dist(const Building& b, const Chamber& c0, const Chamber& x, const char* name,
                int expected) {
  int actual = dist(b, c0, x);
  if (actual != expected) {
    fail(ErrorKind::kPrecondition, std::string("close_square: dist(c0,") + name + ") is " +
                                       std::to_string(actual) + ", expected " +
                                       std::to_string(expected));
  }
}

std::pair<int, int> square_types(const Building& b, const Chamber& mid, const Chamber& first,
                                 const Chamber& second) {
  auto i = b.adjacency(first, mid);
  auto j = b.adjacency(mid, second);
  if (!i.has_value() || !j.has_value()) {
    fail(ErrorKind::kPrecondition, "close_square: chambers are not adjacent as required");
  }
  if (*i == *j) {
    fail(ErrorKind::kPrecondition, "close_square: the two adjacency types must differ");
  }
  return {*i, *j};
}

}  // namespace

Chamber close_square_down(const Building& b, const Chamber& c0, const Chamber& c,
                          const Chamber& d1, const Chamber& d2) {
  auto [i, j] = square_types(b, c, d1, d2);
  int n = dist(b, c0, c) - 1;
  if (n < 1) {
    fail(ErrorKind::kPrecondition, "close_square: dist(c0,c) must be at least 2");
  }
  check_dist(b, c0, d1, "d1", n);
  check_dist(b, c0, d2, "d2", n);
  require_internal(b.diagram().commutes(i, j), "close_square: m_ij must be 2");
  Chamber e = b.fourth_corner(c, d1, d2);
  check_dist(b, c0, e, "e", n - 1);
  require_internal(b.adjacency(d1, e) == std::optional<int>(j) &&
                       b.adjacency(e, d2) == std::optional<int>(i),
                   "close_square: fourth corner has wrong adjacencies");
  return e;
}

Chamber close_square_side(const Building& b, const Chamber& c0, const Chamber& d1,
                          const Chamber& c1, const Chamber& c2) {
  auto [i, j] = square_types(b, c1, d1, c2);
  int n = dist(b, c0, c1) - 1;
  if (n < 0) {
    fail(ErrorKind::kPrecondition, "close_square: dist(c0,c1) must be at least 1");
  }
  check_dist(b, c0, c2, "c2", n + 1);
  check_dist(b, c0, d1, "d1", n);
  require_internal(b.diagram().commutes(i, j), "close_square: m_ij must be 2");
  Chamber d2 = b.fourth_corner(c1, d1, c2);
  check_dist(b, c0, d2, "d2", n);
  require_internal(b.adjacency(d1, d2) == std::optional<int>(j) &&
                       b.adjacency(d2, c2) == std::optional<int>(i),
                   "close_square: fourth corner has wrong adjacencies");
  return d2;
}

namespace {

void enumerate_minimal(const Building& b, const Chamber& cur, const Chamber& target,
                       std::unordered_map<Chamber, int, ChamberHash>& dist_memo,
                       Gallery& partial, std::vector<Gallery>& out, std::size_t cap) {
  if (cur == target) {
    if (out.size() >= cap) {
      fail(ErrorKind::kLimit, "minimal gallery count exceeds the cap of " + std::to_string(cap));
    }
    out.push_back(partial);
    return;
  }
  auto dist_to_target = [&](const Chamber& x) {
    auto it = dist_memo.find(x);
    if (it != dist_memo.end()) return it->second;
    int dx = dist(b, x, target);
    dist_memo.emplace(x, dx);
    return dx;
  };
  int here = dist_to_target(cur);
  for (const auto& [t, n] : b.neighbours(cur)) {
    if (dist_to_target(n) != here - 1) continue;
    partial.types.push_back(t);
    partial.chambers.push_back(n);
    enumerate_minimal(b, n, target, dist_memo, partial, out, cap);
    partial.types.pop_back();
    partial.chambers.pop_back();
  }
}

}  // namespace

std::vector<Gallery> minimal_galleries(const Building& b, const Chamber& c, const Chamber& d) {
  std::vector<Gallery> out;
  std::unordered_map<Chamber, int, ChamberHash> dist_memo;
  Gallery partial;
  partial.chambers.push_back(c);
  enumerate_minimal(b, c, d, dist_memo, partial, out, b.limits().gallery_bound);
  return out;
}

bool is_convex(const Building& b, const std::vector<Chamber>& set) {
  std::unordered_set<Chamber, ChamberHash> members(set.begin(), set.end());
  for (const Chamber& c : set) {
    for (const Chamber& d : set) {
      if (!(c < d)) continue;
      for (const Gallery& g : minimal_galleries(b, c, d)) {
        for (const Chamber& x : g.chambers) {
          if (!members.contains(x)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Chamber> convex_closure(const Building& b, std::vector<Chamber> set) {
  std::set<Chamber> closure(set.begin(), set.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Chamber> snapshot(closure.begin(), closure.end());
    for (const Chamber& c : snapshot) {
      for (const Chamber& d : snapshot) {
        if (!(c < d)) continue;
        for (const Gallery& g : minimal_galleries(b, c, d)) {
          for (const Chamber& x : g.chambers) {
            if (closure.insert(x).second) grew = true;
          }
        }
      }
    }
    if (closure.size() > b.limits().element_bound) {
      fail(ErrorKind::kLimit, "convex closure exceeds the element bound");
    }
  }
  return {closure.begin(), closure.end()};
}

std::pair<Panel, Chamber> find_wing_panel(const Building& b, LegalColouring& colouring,
                                          const std::vector<Chamber>& phi, int type, int colour) {
  const Diagram& d = b.diagram();
  if (phi.empty()) fail(ErrorKind::kValidate, "find_wing_panel: Phi must be non-empty");
  int j = -1;
  for (int t = 0; t < d.rank(); ++t) {
    if (t != type && d.bond(type, t) == Diagram::kInf) {
      j = t;
      break;
    }
  }
  if (j < 0) {
    fail(ErrorKind::kPrecondition, "find_wing_panel: type '" + d.label(type) +
                                       "' has no infinite bond (isolated node)");
  }

  Residue tree = b.residue(b.base(), {type, j});
  std::vector<Chamber> projected;
  int enclosing = 0;
  for (const Chamber& f : phi) {
    Chamber p = proj_residue(b, tree, f);
    enclosing = std::max(enclosing, dist(b, tree.gate, p));
    projected.push_back(std::move(p));
  }

  for (int attempt = 0; attempt < 3; ++attempt) {
    // Walk out along the {type,j}-tree past the enclosing ball; the final
    // j-step leaves the candidate i-panel gated at the walk's end.
    int walk_length = 2 * (enclosing + 1) + 2 * attempt;
    Chamber z = tree.gate;
    for (int s = 0; s < walk_length; ++s) {
      z = b.step(z, s % 2 == 0 ? j : type, 1);
    }
    Panel p0 = b.panel(z, type);
    Chamber c_proj = proj_panel(b, p0, projected.front());
    bool single = true;
    for (const Chamber& p : projected) {
      if (proj_panel(b, p0, p) != c_proj) single = false;
    }
    if (!single) continue;

    Chamber c = c_proj;
    if (colouring.colour(c_proj, type) != colour) {
      Chamber with_colour = colouring.move_to_colour(c_proj, type, colour);
      std::vector<Chamber> options = b.panel_members(b.panel(with_colour, j));
      Chamber pick;
      bool found = false;
      for (auto it = options.rbegin(); it != options.rend(); ++it) {
        if (*it != with_colour) {
          pick = *it;
          found = true;
          break;
        }
      }
      require_internal(found, "find_wing_panel: no j-adjacent chamber");
      c = pick;
    }
    Panel p = b.panel(c, type);
    bool ok = colouring.colour(c, type) == colour;
    for (const Chamber& f : phi) {
      if (!ok) break;
      if (proj_panel(b, p, f) != c) ok = false;
    }
    if (ok) return {p, c};
  }
  fail(ErrorKind::kInternal, "find_wing_panel: construction did not converge");
}

}  // namespace rab
