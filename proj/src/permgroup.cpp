#include "rab/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rab {

Perm::Perm(int degree) : images_(static_cast<std::size_t>(degree)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[static_cast<std::size_t>(x)]) {
      fail(ErrorKind::kValidate, "permutation image array is not a bijection");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  std::string trimmed = first == std::string::npos ? "" : text.substr(first, last - first + 1);
  if (trimmed.empty() || trimmed == "id" || trimmed == "e" || trimmed == "()") {
    return Perm(std::move(images));
  }
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    if (std::isspace(static_cast<unsigned char>(trimmed[pos]))) {
      ++pos;
      continue;
    }
    if (trimmed[pos] != '(') {
      fail(ErrorKind::kParse, "cycle notation: expected '(' in '" + text + "'");
    }
    auto close = trimmed.find(')', pos);
    if (close == std::string::npos) {
      fail(ErrorKind::kParse, "cycle notation: missing ')' in '" + text + "'");
    }
    std::string body = trimmed.substr(pos + 1, close - pos - 1);
    for (char& ch : body) {
      if (ch == ',') ch = ' ';
    }
    std::stringstream ss(body);
    std::vector<int> cycle;
    int value = 0;
    while (ss >> value) cycle.push_back(value);
    if (!ss.eof()) fail(ErrorKind::kParse, "cycle notation: bad point in '" + text + "'");
    for (int x : cycle) {
      if (x < 0 || x >= degree) {
        fail(ErrorKind::kParse, "cycle notation: point " + std::to_string(x) +
                                    " out of range for degree " + std::to_string(degree));
      }
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k])] = cycle[k + 1];
    }
    if (cycle.size() >= 2) images[static_cast<std::size_t>(cycle.back())] = cycle.front();
    pos = close + 1;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  }
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  require_internal(a.degree() == b.degree(), "perm product: degree mismatch");
  std::vector<int> images(a.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = a.images_[static_cast<std::size_t>(b.images_[x])];
  }
  return Perm(std::move(images));
}

std::string Perm::to_string() const {
  if (is_identity()) return "id";
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = static_cast<std::size_t>(images_[x]);
    }
    out += ")";
  }
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t element_bound)
    : degree_(degree), element_bound_(element_bound) {
  if (degree < 1) fail(ErrorKind::kValidate, "permutation group degree must be at least 1");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorKind::kValidate, "generator degree " + std::to_string(g.degree()) +
                                     " does not match group degree " + std::to_string(degree));
    }
    if (!g.is_identity()) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::cyclic(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) images[static_cast<std::size_t>(x)] = (x + 1) % degree;
  return PermGroup(degree, {Perm(std::move(images))});
}

PermGroup PermGroup::symmetric(int degree) {
  if (degree < 2) return trivial(degree);
  std::vector<Perm> gens;
  std::vector<int> swap01(static_cast<std::size_t>(degree));
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  gens.emplace_back(std::move(swap01));
  if (degree > 2) {
    std::vector<int> cycle(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) cycle[static_cast<std::size_t>(x)] = (x + 1) % degree;
    gens.emplace_back(std::move(cycle));
  }
  return PermGroup(degree, std::move(gens));
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!elements_.empty()) return elements_;
  std::set<Perm> closed;
  closed.insert(Perm(degree_));
  std::vector<Perm> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& g : generators_) {
        Perm p = g * e;
        if (closed.insert(p).second) {
          if (closed.size() > element_bound_) {
            fail(ErrorKind::kLimit, "permutation group order exceeds the element bound of " +
                                        std::to_string(element_bound_));
          }
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(closed.begin(), closed.end());
  return elements_;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(static_cast<std::size_t>(degree_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const Perm& g : generators_) {
    for (int x = 0; x < degree_; ++x) unite(x, g(x));
  }
  std::vector<std::vector<int>> out;
  for (int root = 0; root < degree_; ++root) {
    if (find(root) != root) continue;
    std::vector<int> orbit;
    for (int x = 0; x < degree_; ++x) {
      if (find(x) == root) orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> PermGroup::orbit_of(int x) const {
  for (auto& orbit : orbits()) {
    if (std::find(orbit.begin(), orbit.end(), x) != orbit.end()) return orbit;
  }
  fail(ErrorKind::kValidate, "orbit_of: point out of range");
}

bool PermGroup::same_orbit(int x, int y) const {
  auto orbit = orbit_of(x);
  return std::find(orbit.begin(), orbit.end(), y) != orbit.end();
}

std::vector<int> PermGroup::orbit_representatives() const {
  std::vector<int> reps;
  for (auto& orbit : orbits()) reps.push_back(orbit.front());
  return reps;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

PermGroup PermGroup::point_stabilizer(int x) const {
  if (x < 0 || x >= degree_) fail(ErrorKind::kValidate, "point_stabilizer: point out of range");
  std::vector<Perm> fixing;
  for (const Perm& g : elements()) {
    if (g(x) == x) fixing.push_back(g);
  }
  return PermGroup(degree_, std::move(fixing), element_bound_);
}

PermGroup PermGroup::plus_subgroup() const {
  std::vector<Perm> gens;
  for (const Perm& g : elements()) {
    for (int x = 0; x < degree_; ++x) {
      if (g(x) == x) {
        gens.push_back(g);
        break;
      }
    }
  }
  return PermGroup(degree_, std::move(gens), element_bound_);
}

std::optional<std::pair<Perm, int>> PermGroup::free_violation() const {
  for (const Perm& g : elements()) {
    if (g.is_identity()) continue;
    for (int x = 0; x < degree_; ++x) {
      if (g(x) == x) return std::make_pair(g, x);
    }
  }
  return std::nullopt;
}

bool PermGroup::is_free() const { return !free_violation().has_value(); }

bool PermGroup::is_regular() const { return is_free() && is_transitive(); }

std::vector<std::vector<int>> PermGroup::minimal_blocks(int x, int y) const {
  // closure of the seed identification x ~ y under all generators
  std::vector<int> parent(static_cast<std::size_t>(degree_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& g : generators_) {
      for (int a = 0; a < degree_; ++a) {
        for (int b = a + 1; b < degree_; ++b) {
          if (find(a) != find(b)) continue;
          if (find(g(a)) != find(g(b))) {
            unite(g(a), g(b));
            changed = true;
          }
        }
      }
    }
  }
  std::vector<std::vector<int>> blocks;
  for (int root = 0; root < degree_; ++root) {
    if (find(root) != root) continue;
    std::vector<int> block;
    for (int a = 0; a < degree_; ++a) {
      if (find(a) == root) block.push_back(a);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool PermGroup::is_primitive_blocks() const {
  if (!is_transitive()) return false;
  if (degree_ == 1) return true;
  for (int y = 1; y < degree_; ++y) {
    if (minimal_blocks(0, y).size() != 1) return false;
  }
  return true;
}

std::optional<std::vector<std::vector<int>>> PermGroup::nontrivial_blocks() const {
  if (!is_transitive()) return std::nullopt;
  for (int y = 1; y < degree_; ++y) {
    auto blocks = minimal_blocks(0, y);
    if (blocks.size() > 1) return blocks;
  }
  return std::nullopt;
}

std::vector<std::vector<std::pair<int, int>>> PermGroup::orbitals() const {
  std::vector<std::vector<int>> orbital_id(static_cast<std::size_t>(degree_),
                                           std::vector<int>(static_cast<std::size_t>(degree_), -1));
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int x = 0; x < degree_; ++x) {
    for (int y = 0; y < degree_; ++y) {
      if (orbital_id[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] >= 0) continue;
      int id = static_cast<int>(out.size());
      std::vector<std::pair<int, int>> orbit;
      std::vector<std::pair<int, int>> frontier{{x, y}};
      orbital_id[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = id;
      while (!frontier.empty()) {
        auto [a, b] = frontier.back();
        frontier.pop_back();
        orbit.emplace_back(a, b);
        for (const Perm& g : generators_) {
          int ga = g(a);
          int gb = g(b);
          if (orbital_id[static_cast<std::size_t>(ga)][static_cast<std::size_t>(gb)] < 0) {
            orbital_id[static_cast<std::size_t>(ga)][static_cast<std::size_t>(gb)] = id;
            frontier.emplace_back(ga, gb);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

bool PermGroup::is_primitive_higman() const {
  if (!is_transitive()) return false;
  if (degree_ == 1) return true;
  for (const auto& orbital : orbitals()) {
    if (orbital.front().first == orbital.front().second) continue;  // diagonal
    // weak connectivity of the orbital graph
    std::vector<int> parent(static_cast<std::size_t>(degree_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
      }
      return a;
    };
    for (auto [a, b] : orbital) {
      int ra = find(a);
      int rb = find(b);
      if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    for (int a = 0; a < degree_; ++a) {
      if (find(a) != find(0)) return false;
    }
  }
  return true;
}

bool PermGroup::is_primitive() const {
  bool via_blocks = is_primitive_blocks();
  bool via_higman = is_primitive_higman();
  require_internal(via_blocks == via_higman,
                   "primitivity routes disagree (blocks vs orbital graphs)");
  return via_blocks;
}

Perm PermGroup::transversal(int x, int y) const {
  for (const Perm& g : elements()) {
    if (g(x) == y) return g;
  }
  fail(ErrorKind::kPrecondition, "transversal: " + std::to_string(x) + " and " +
                                     std::to_string(y) + " are not in one orbit");
}

Perm PermGroup::fix_move_witness(int x, int y) const {
  if (x == y) fail(ErrorKind::kPrecondition, "fix_move_witness: points must differ");
  if (!is_primitive()) fail(ErrorKind::kPrecondition, "fix_move_witness: group is not primitive");
  if (is_regular()) fail(ErrorKind::kPrecondition, "fix_move_witness: group is regular");
  for (const Perm& g : elements()) {
    if (g(x) == x && g(y) != y) return g;
  }
  fail(ErrorKind::kInternal, "fix_move_witness: no witness found");
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.elements() == b.elements();
}

}  // namespace rab
