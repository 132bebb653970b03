#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rab/error.hpp"

namespace rab {

// A permutation of {0,...,n-1}, stored as its image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x)); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Perm inverse() const;
  std::string to_string() const;  // cycle notation; "id" for the identity

  // (a*b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  // lexicographic by image array
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// A finite permutation group given by generators, with a lazily computed
// element cache (plain closure; degrees here are tiny, so no stabiliser
// chains).
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators, std::size_t element_bound = 10000);
  static PermGroup trivial(int degree);
  static PermGroup cyclic(int degree);
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const;  // sorted
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;

  std::vector<std::vector<int>> orbits() const;  // sorted partition
  std::vector<int> orbit_of(int x) const;
  bool same_orbit(int x, int y) const;
  std::vector<int> orbit_representatives() const;  // least point per orbit
  bool is_transitive() const;

  PermGroup point_stabilizer(int x) const;
  // The subgroup generated by all point stabilisers.
  PermGroup plus_subgroup() const;

  bool is_free() const;
  bool is_regular() const;
  // A non-identity element with a fixed point, if one exists.
  std::optional<std::pair<Perm, int>> free_violation() const;

  // Both routes must agree: minimal-block search and connectivity of all
  // non-diagonal orbital graphs. Intransitive groups are not primitive.
  bool is_primitive() const;
  bool is_primitive_blocks() const;
  bool is_primitive_higman() const;
  // The minimal block system whose block contains {x,y}.
  std::vector<std::vector<int>> minimal_blocks(int x, int y) const;
  // One nontrivial block system if the group is transitive and imprimitive.
  std::optional<std::vector<std::vector<int>>> nontrivial_blocks() const;
  // Orbits on ordered pairs, as sorted edge lists (diagonal included).
  std::vector<std::vector<std::pair<int, int>>> orbitals() const;

  // Lexicographically least element mapping x to y; identity when x == y.
  Perm transversal(int x, int y) const;
  // For a primitive non-regular group: an element fixing x and moving y.
  Perm fix_move_witness(int x, int y) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  int degree_;
  std::vector<Perm> generators_;
  std::size_t element_bound_;
  mutable std::vector<Perm> elements_;  // filled once, single-threaded
};

// The prescribed local groups, indexed by type.
struct LocalData {
  std::vector<PermGroup> groups;

  const PermGroup& at(int type) const { return groups.at(static_cast<std::size_t>(type)); }
  int rank() const { return static_cast<int>(groups.size()); }
};

}  // namespace rab
