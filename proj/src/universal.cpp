#include "rab/universal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace rab {

void validate_local_data(const Diagram& d, const LocalData& local) {
  if (local.rank() != d.rank()) {
    fail(ErrorKind::kValidate, "local data must prescribe one group per type");
  }
  for (int i = 0; i < d.rank(); ++i) {
    if (local.at(i).degree() != d.q(i)) {
      fail(ErrorKind::kValidate, "local group for type '" + d.label(i) + "' has degree " +
                                     std::to_string(local.at(i).degree()) + ", expected q = " +
                                     std::to_string(d.q(i)));
    }
  }
}

Universe::Universe(Diagram diagram, LocalData local, Limits limits)
    : building_(std::move(diagram), limits), local_(std::move(local)), colouring_(building_) {
  validate_local_data(building_.diagram(), local_);
}

int Universe::cached_dist(const Chamber& a, const Chamber& b) {
  if (a == b) return 0;
  std::pair<Chamber, Chamber> key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = dist_cache_.find(key);
  if (it != dist_cache_.end()) return it->second;
  int d = dist(building_, key.first, key.second);
  dist_cache_.emplace(std::move(key), d);
  return d;
}

int Universe::cached_panel_dist(const Chamber& c, const Panel& p) {
  int best = -1;
  for (const Chamber& m : building_.panel_members(p)) {
    int d = cached_dist(c, m);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

struct Automorphism::Node {
  enum class Kind { kIdentity, kSeed, kRecolour, kCompose, kInverse };

  Kind kind = Kind::kIdentity;
  Universe* universe = nullptr;

  // seed
  Panel p0;
  Perm f0;

  // recolour
  std::vector<Perm> f;
  Chamber seed_src;
  Chamber seed_dst;

  // compose (outer after inner) / inverse (of inner)
  std::shared_ptr<Node> outer;
  std::shared_ptr<Node> inner;

  mutable std::unordered_map<Chamber, Chamber, ChamberHash> memo;
  // weak: the inverse node points back at this one, a strong cache would
  // keep the pair alive forever
  mutable std::weak_ptr<Node> inverse_cache;
};

namespace {

Chamber apply_node(const std::shared_ptr<Automorphism::Node>& node, const Chamber& c);

int seed_panel_dist(const std::shared_ptr<Automorphism::Node>& node, const Chamber& c) {
  return node->universe->cached_panel_dist(c, node->p0);
}

Chamber apply_seed(const std::shared_ptr<Automorphism::Node>& node, const Chamber& c) {
  auto hit = node->memo.find(c);
  if (hit != node->memo.end()) return hit->second;

  Universe& u = *node->universe;
  const Building& b = u.building();
  LegalColouring& colouring = u.colouring();
  const int k = node->p0.type;

  Chamber image;
  int n = seed_panel_dist(node, c);
  if (n == 0) {
    image = colouring.move_to_colour(c, k, node->f0(colouring.colour(c, k)));
  } else {
    // the closer neighbours of c; their types are pairwise distinct
    std::vector<std::pair<int, Chamber>> closer;
    for (const auto& [t, d] : b.neighbours(c)) {
      if (seed_panel_dist(node, d) == n - 1) closer.emplace_back(t, d);
    }
    require_internal(!closer.empty(), "extension: no neighbour closer to the panel");
    if (closer.size() == 1) {
      auto [i, d] = closer.front();
      int x = colouring.colour(d, i);
      Chamber gd = apply_seed(node, d);
      int y = colouring.colour(gd, i);
      Perm phi = u.local().at(i).transversal(x, y);
      image = colouring.move_to_colour(gd, i, phi(colouring.colour(c, i)));
    } else {
      // with two closer neighbours the image is determined by the square
      const Chamber& d1 = closer[0].second;
      const Chamber& d2 = closer[1].second;
      Chamber e = b.fourth_corner(c, d1, d2);
      Chamber ge = apply_seed(node, e);
      Chamber gd1 = apply_seed(node, d1);
      Chamber gd2 = apply_seed(node, d2);
      image = b.fourth_corner(ge, gd1, gd2);
      for (std::size_t extra = 2; extra < closer.size(); ++extra) {
        require_internal(b.adjacency(image, apply_seed(node, closer[extra].second)) ==
                             std::optional<int>(closer[extra].first),
                         "extension: square images are inconsistent");
      }
    }
  }
  node->memo.emplace(c, image);
  return image;
}

Chamber apply_recolour(const std::shared_ptr<Automorphism::Node>& node, const Chamber& c) {
  auto hit = node->memo.find(c);
  if (hit != node->memo.end()) return hit->second;
  Universe& u = *node->universe;
  const Building& b = u.building();
  LegalColouring& colouring = u.colouring();
  if (c == node->seed_src) {
    node->memo.emplace(c, node->seed_dst);
    return node->seed_dst;
  }
  // derive from every neighbour closer to the seed; all must agree
  int here = u.cached_dist(node->seed_src, c);
  bool have = false;
  Chamber image;
  for (const auto& [t, p] : b.neighbours(c)) {
    if (u.cached_dist(node->seed_src, p) != here - 1) continue;
    Chamber gp = apply_recolour(node, p);
    Chamber candidate = colouring.move_to_colour(
        gp, t, node->f[static_cast<std::size_t>(t)](colouring.colour(c, t)));
    if (!have) {
      image = std::move(candidate);
      have = true;
    } else {
      require_internal(candidate == image, "recolouring: predecessor derivations disagree");
    }
  }
  require_internal(have, "recolouring: chamber without predecessor");
  node->memo.emplace(c, image);
  return image;
}

std::shared_ptr<Automorphism::Node> make_inverse_node(
    const std::shared_ptr<Automorphism::Node>& node);

Chamber apply_inverse(const std::shared_ptr<Automorphism::Node>& node, const Chamber& c) {
  // node->inner is the automorphism being inverted
  auto hit = node->memo.find(c);
  if (hit != node->memo.end()) return hit->second;
  const auto& inner = node->inner;
  Universe& u = *node->universe;
  const Building& b = u.building();
  Chamber preimage;
  switch (inner->kind) {
    case Automorphism::Node::Kind::kIdentity:
      preimage = c;
      break;
    case Automorphism::Node::Kind::kSeed: {
      // the seed preserves distance to p0 and commutes with the projection,
      // so the preimage projects onto the f0-preimage of proj(c) and sits on
      // the sphere of the same radius around it
      LegalColouring& colouring = u.colouring();
      int n = seed_panel_dist(inner, c);
      Chamber proj_c;
      int best = -1;
      for (const Chamber& m : b.panel_members(inner->p0)) {
        int dm = u.cached_dist(c, m);
        if (best < 0 || dm < best) {
          best = dm;
          proj_c = m;
        }
      }
      Chamber p = colouring.move_to_colour(
          proj_c, inner->p0.type,
          inner->f0.inverse()(colouring.colour(proj_c, inner->p0.type)));
      bool found = false;
      auto layers = b.ball_layers_unbounded(p, n);
      if (static_cast<int>(layers.size()) > n) {
        for (const Chamber& d : layers[static_cast<std::size_t>(n)]) {
          if (seed_panel_dist(inner, d) != n) continue;
          if (apply_seed(inner, d) == c) {
            preimage = d;
            found = true;
            break;
          }
        }
      }
      require_internal(found, "inverse: no preimage in the distance-preserving ball");
      break;
    }
    case Automorphism::Node::Kind::kRecolour: {
      require_internal(false, "inverse of a recolouring is built directly");
      break;
    }
    case Automorphism::Node::Kind::kCompose: {
      require_internal(false, "inverse of a composition is built directly");
      break;
    }
    case Automorphism::Node::Kind::kInverse:
      preimage = apply_node(inner->inner, c);
      break;
  }
  node->memo.emplace(c, preimage);
  return preimage;
}

Chamber apply_node(const std::shared_ptr<Automorphism::Node>& node, const Chamber& c) {
  switch (node->kind) {
    case Automorphism::Node::Kind::kIdentity:
      return c;
    case Automorphism::Node::Kind::kSeed:
      return apply_seed(node, c);
    case Automorphism::Node::Kind::kRecolour:
      return apply_recolour(node, c);
    case Automorphism::Node::Kind::kCompose:
      return apply_node(node->outer, apply_node(node->inner, c));
    case Automorphism::Node::Kind::kInverse:
      return apply_inverse(node, c);
  }
  fail(ErrorKind::kInternal, "apply_node: unknown node kind");
}

std::shared_ptr<Automorphism::Node> make_inverse_node(
    const std::shared_ptr<Automorphism::Node>& node) {
  if (auto cached = node->inverse_cache.lock()) return cached;
  auto inv = std::make_shared<Automorphism::Node>();
  inv->universe = node->universe;
  switch (node->kind) {
    case Automorphism::Node::Kind::kIdentity:
      inv->kind = Automorphism::Node::Kind::kIdentity;
      break;
    case Automorphism::Node::Kind::kSeed:
      inv->kind = Automorphism::Node::Kind::kInverse;
      inv->inner = node;
      break;
    case Automorphism::Node::Kind::kRecolour: {
      inv->kind = Automorphism::Node::Kind::kRecolour;
      inv->f.reserve(node->f.size());
      for (const Perm& p : node->f) inv->f.push_back(p.inverse());
      inv->seed_src = node->seed_dst;
      inv->seed_dst = node->seed_src;
      break;
    }
    case Automorphism::Node::Kind::kCompose: {
      inv->kind = Automorphism::Node::Kind::kCompose;
      inv->outer = make_inverse_node(node->inner);
      inv->inner = make_inverse_node(node->outer);
      break;
    }
    case Automorphism::Node::Kind::kInverse:
      node->inverse_cache = node->inner;
      return node->inner;
  }
  node->inverse_cache = inv;
  return inv;
}

}  // namespace

Automorphism Automorphism::identity(Universe& u) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kIdentity;
  node->universe = &u;
  return Automorphism(std::move(node));
}

Chamber Automorphism::apply(const Chamber& c) const { return apply_node(node_, c); }

Automorphism Automorphism::inverse() const { return Automorphism(make_inverse_node(node_)); }

Automorphism compose(const Automorphism& g, const Automorphism& h) {
  require_internal(g.node_->universe == h.node_->universe,
                   "compose: automorphisms live in different universes");
  auto node = std::make_shared<Automorphism::Node>();
  node->kind = Automorphism::Node::Kind::kCompose;
  node->universe = g.node_->universe;
  node->outer = g.node_;
  node->inner = h.node_;
  return Automorphism(std::move(node));
}

Universe& Automorphism::universe() const { return *node_->universe; }

std::string Automorphism::describe() const {
  Universe& u = *node_->universe;
  switch (node_->kind) {
    case Node::Kind::kIdentity:
      return "id";
    case Node::Kind::kSeed:
      return "extend[" + u.building().format_word(node_->p0.gate) + ":" +
             u.diagram().label(node_->p0.type) + ", " + node_->f0.to_string() + "]";
    case Node::Kind::kRecolour: {
      std::string out = "recolour[";
      for (int i = 0; i < u.diagram().rank(); ++i) {
        if (i > 0) out += ",";
        out += u.diagram().label(i) + ":" + node_->f[static_cast<std::size_t>(i)].to_string();
      }
      return out + "; " + u.building().format_word(node_->seed_src) + "->" +
             u.building().format_word(node_->seed_dst) + "]";
    }
    case Node::Kind::kCompose:
      return Automorphism(node_->outer).describe() + " * " + Automorphism(node_->inner).describe();
    case Node::Kind::kInverse:
      return "(" + Automorphism(node_->inner).describe() + ")^-1";
  }
  return "?";
}

Perm Automorphism::local_action(const Panel& p) const {
  Universe& u = *node_->universe;
  LegalColouring& colouring = u.colouring();
  std::vector<int> images(static_cast<std::size_t>(u.diagram().q(p.type)), -1);
  for (const Chamber& m : u.building().panel_members(p)) {
    int from = colouring.colour(m, p.type);
    int to = colouring.colour(apply(m), p.type);
    require_internal(images[static_cast<std::size_t>(from)] < 0,
                     "local_action: repeated source colour");
    images[static_cast<std::size_t>(from)] = to;
  }
  return Perm(std::move(images));
}

bool Automorphism::local_actions_within(int radius) const {
  Universe& u = *node_->universe;
  std::set<Panel> panels;
  for (const Chamber& c : u.building().ball(u.building().base(), radius)) {
    for (int t = 0; t < u.diagram().rank(); ++t) {
      Panel p = u.building().panel(c, t);
      if (p.gate.length() + 1 <= radius) panels.insert(std::move(p));
    }
  }
  for (const Panel& p : panels) {
    if (!u.local().at(p.type).contains(local_action(p))) return false;
  }
  return true;
}

Automorphism extend_local(Universe& u, const Panel& p0, const Perm& f0) {
  if (p0.type < 0 || p0.type >= u.diagram().rank()) {
    fail(ErrorKind::kValidate, "extend_local: panel type out of range");
  }
  if (!u.local().at(p0.type).contains(f0)) {
    fail(ErrorKind::kValidate, "extend_local: permutation is not in the local group for type '" +
                                   u.diagram().label(p0.type) + "'");
  }
  auto node = std::make_shared<Automorphism::Node>();
  node->kind = Automorphism::Node::Kind::kSeed;
  node->universe = &u;
  node->p0 = p0;
  node->f0 = f0;
  return Automorphism(std::move(node));
}

Automorphism recolouring_with_seed(Universe& u, const std::vector<Perm>& f, const Chamber& src,
                                   const Chamber& dst, bool require_membership) {
  if (static_cast<int>(f.size()) != u.diagram().rank()) {
    fail(ErrorKind::kValidate, "recolouring: need one permutation per type");
  }
  for (int i = 0; i < u.diagram().rank(); ++i) {
    const Perm& fi = f[static_cast<std::size_t>(i)];
    if (fi.degree() != u.diagram().q(i)) {
      fail(ErrorKind::kValidate, "recolouring: permutation degree mismatch at type '" +
                                     u.diagram().label(i) + "'");
    }
    if (require_membership && !u.local().at(i).contains(fi)) {
      fail(ErrorKind::kValidate, "recolouring: permutation at type '" + u.diagram().label(i) +
                                     "' is not in the local group");
    }
  }
  std::vector<int> expected = u.colouring().colour_vector(src);
  for (int i = 0; i < u.diagram().rank(); ++i) {
    expected[static_cast<std::size_t>(i)] =
        f[static_cast<std::size_t>(i)](expected[static_cast<std::size_t>(i)]);
  }
  if (u.colouring().colour_vector(dst) != expected) {
    fail(ErrorKind::kValidate, "recolouring: seed pair colours do not match the permutations");
  }
  auto node = std::make_shared<Automorphism::Node>();
  node->kind = Automorphism::Node::Kind::kRecolour;
  node->universe = &u;
  node->f = f;
  node->seed_src = src;
  node->seed_dst = dst;
  return Automorphism(std::move(node));
}

Automorphism recolouring_aut(Universe& u, const std::vector<Perm>& f) {
  // the target chamber is reached by crossing one panel per type whose base
  // colour moves, in canonical order
  Chamber dst = u.building().base();
  for (int i = 0; i < u.diagram().rank(); ++i) {
    int target = f.at(static_cast<std::size_t>(i))(0);
    if (target != 0) dst = u.colouring().move_to_colour(dst, i, target);
  }
  return recolouring_with_seed(u, f, u.building().base(), dst);
}

std::optional<Automorphism> u_orbit_check(Universe& u, const Chamber& c, const Chamber& d) {
  if (!harmonious(u.colouring(), c, d, u.local())) return std::nullopt;
  std::vector<Perm> f;
  for (int i = 0; i < u.diagram().rank(); ++i) {
    f.push_back(u.local().at(i).transversal(u.colouring().colour(c, i), u.colouring().colour(d, i)));
  }
  Automorphism witness = recolouring_with_seed(u, f, c, d);
  require_internal(witness.apply(c) == d, "u_orbit_check: witness does not map c to d");
  return witness;
}

std::vector<Automorphism> uplus_generators(Universe& u, int radius, std::size_t max_count) {
  std::vector<Automorphism> out;
  std::set<std::pair<Panel, std::vector<int>>> seen;
  for (const Chamber& b : u.building().ball(u.building().base(), radius)) {
    for (int i = 0; i < u.diagram().rank(); ++i) {
      PermGroup stab = u.local().at(i).point_stabilizer(u.colouring().colour(b, i));
      Panel p = u.building().panel(b, i);
      for (const Perm& f : stab.elements()) {
        if (f.is_identity()) continue;
        if (!seen.emplace(p, f.images()).second) continue;
        out.push_back(extend_local(u, p, f));
        if (out.size() >= max_count) return out;
      }
    }
  }
  return out;
}

namespace {

// Undirected reachability closure of `start` inside `window` under the
// partial maps given by the generators.
std::vector<Chamber> closure_in_window(const std::vector<Chamber>& window,
                                       const std::vector<Chamber>& start,
                                       const std::vector<Automorphism>& gens) {
  std::map<Chamber, int> index;
  for (std::size_t i = 0; i < window.size(); ++i) index.emplace(window[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(window.size());
  for (const Automorphism& g : gens) {
    for (std::size_t i = 0; i < window.size(); ++i) {
      Chamber image = g.apply(window[i]);
      auto it = index.find(image);
      if (it == index.end()) continue;
      adj[i].push_back(it->second);
      adj[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
  }
  std::vector<bool> reached(window.size(), false);
  std::vector<int> stack;
  for (const Chamber& c : start) {
    auto it = index.find(c);
    if (it == index.end()) continue;
    if (!reached[static_cast<std::size_t>(it->second)]) {
      reached[static_cast<std::size_t>(it->second)] = true;
      stack.push_back(it->second);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Chamber> out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (reached[i]) out.push_back(window[i]);
  }
  return out;
}

}  // namespace

std::vector<Chamber> uplus_orbit_on_ball(Universe& u, const Chamber& c, int radius) {
  std::vector<Chamber> window = u.building().ball(u.building().base(), radius);
  if (std::find(window.begin(), window.end(), c) == window.end()) {
    fail(ErrorKind::kPrecondition, "uplus_orbit_on_ball: chamber lies outside the ball");
  }
  std::vector<Automorphism> gens = uplus_generators(u, radius);
  return closure_in_window(window, {c}, gens);
}

CompgenSets compgen_sets(Universe& u) {
  const Diagram& d = u.diagram();
  if (d.rank() < 2) {
    fail(ErrorKind::kPrecondition, "compgen_sets: rank must be at least 2");
  }
  const Building& b = u.building();
  LegalColouring& colouring = u.colouring();
  CompgenSets out;
  for (int i = 0; i < d.rank(); ++i) {
    out.transversals.push_back(u.local().at(i).orbit_representatives());
  }
  // the base chamber carries colour 0 at every type, and 0 is always the
  // least representative of its orbit
  out.c = b.base();

  auto coloured_in_transversal = [&](const Chamber& x) {
    for (int i = 0; i < d.rank(); ++i) {
      const auto& reps = out.transversals[static_cast<std::size_t>(i)];
      if (std::find(reps.begin(), reps.end(), colouring.colour(x, i)) == reps.end()) return false;
    }
    return true;
  };

  const int rank = d.rank();
  auto layers = b.ball_layers(out.c, rank + 1);
  std::vector<Chamber> b_tilde;
  for (int l = 0; l <= rank && l < static_cast<int>(layers.size()); ++l) {
    for (const Chamber& x : layers[static_cast<std::size_t>(l)]) b_tilde.push_back(x);
  }
  for (const Chamber& x : b_tilde) {
    if (coloured_in_transversal(x)) out.b_set.push_back(x);
  }
  std::set<Chamber> b_lookup(out.b_set.begin(), out.b_set.end());

  std::vector<Chamber> d_tilde;
  if (static_cast<int>(layers.size()) > rank + 1) {
    for (const Chamber& x : layers[static_cast<std::size_t>(rank + 1)]) {
      bool adjacent_to_b = false;
      for (const auto& [t, n] : b.neighbours(x)) {
        (void)t;
        if (b_lookup.contains(n)) {
          adjacent_to_b = true;
          break;
        }
      }
      if (adjacent_to_b) d_tilde.push_back(x);
    }
  }
  for (const Chamber& x : d_tilde) {
    if (coloured_in_transversal(x)) out.d_set.push_back(x);
  }

  // T: one element per equally coloured pair in B x (B u D)
  std::vector<Automorphism> t_autos;
  std::vector<Chamber> b_and_d = out.b_set;
  b_and_d.insert(b_and_d.end(), out.d_set.begin(), out.d_set.end());
  std::vector<Perm> identity_f;
  for (int i = 0; i < rank; ++i) identity_f.emplace_back(d.q(i));
  for (const Chamber& from : out.b_set) {
    for (const Chamber& to : b_and_d) {
      if (from == to) continue;
      if (colouring.colour_vector(from) != colouring.colour_vector(to)) continue;
      out.t_pairs.emplace_back(from, to);
      t_autos.push_back(recolouring_with_seed(u, identity_f, from, to));
    }
  }

  // S: extensions of the local generators through every panel meeting B
  std::set<Panel> panels;
  for (const Chamber& x : out.b_set) {
    for (int i = 0; i < rank; ++i) panels.insert(b.panel(x, i));
  }
  out.s_panels.assign(panels.begin(), panels.end());
  std::vector<Automorphism> s_autos;
  for (const Panel& p : out.s_panels) {
    for (const Perm& g : u.local().at(p.type).generators()) {
      s_autos.push_back(extend_local(u, p, g));
    }
  }

  std::vector<Chamber> window = b.ball(out.c, rank + 2);
  std::vector<Chamber> step1_reach = closure_in_window(window, out.b_set, s_autos);
  std::set<Chamber> step1(step1_reach.begin(), step1_reach.end());
  out.step1_passed =
      std::all_of(b_tilde.begin(), b_tilde.end(), [&](const Chamber& x) { return step1.contains(x); });

  std::vector<Automorphism> st_autos = s_autos;
  st_autos.insert(st_autos.end(), t_autos.begin(), t_autos.end());
  std::vector<Chamber> step23_reach = closure_in_window(window, out.b_set, st_autos);
  std::set<Chamber> step23(step23_reach.begin(), step23_reach.end());
  out.step2_passed = std::all_of(d_tilde.begin(), d_tilde.end(),
                                 [&](const Chamber& x) { return step23.contains(x); });
  out.step3_passed = std::all_of(window.begin(), window.end(),
                                 [&](const Chamber& x) { return step23.contains(x); });
  return out;
}

}  // namespace rab
