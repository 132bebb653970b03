#pragma once

#include <unordered_map>
#include <vector>

#include "rab/universal.hpp"

namespace rab {

struct ImplosionCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ImplosionReport {
  bool passed = true;
  std::vector<ImplosionCheck> checks;
};

// The collapse tau of the coloured building along per-type equivalence
// relations on the colour sets. Types with the universal relation drop out;
// the target building lives over the remaining types with q' = the number of
// classes. tau is pinned by mapping base to base (the compatible pair), built
// outward by BFS: steps between equivalent colours collapse, the others move
// to the class-coloured neighbour.
class Implosion {
 public:
  // classes[i] lists the classes of the relation on X_i; each colour of X_i
  // must appear in exactly one class.
  Implosion(Universe& source, std::vector<std::vector<std::vector<int>>> classes);

  // The orbit partition of a local group, the relation behind the subgroup
  // generated by chamber stabilisers.
  static std::vector<std::vector<int>> orbit_classes(const PermGroup& g);

  const std::vector<int>& retained_types() const { return retained_; }
  bool is_retained(int type) const { return target_index_.at(static_cast<std::size_t>(type)) >= 0; }
  int target_type(int type) const;
  // [x]_i as a target colour (classes are ordered by least member).
  int class_index(int type, int colour) const;

  const Diagram& target_diagram() const { return target_building_.diagram(); }
  const Building& target_building() const { return target_building_; }
  LegalColouring& target_colouring() { return target_colouring_; }

  Chamber tau(const Chamber& c);

  // Colour compatibility, nonexpansiveness and ball surjectivity via lifted
  // galleries, on balls of the given radius.
  ImplosionReport verify(int radius);
  // tau(g . d) = tau(d) for every generator and every d in the ball.
  ImplosionReport fibre_stability(const std::vector<Automorphism>& gens, int radius);

  // Pushes an automorphism through tau on a ball: the induced action on
  // target chambers, asserting well-definedness on fibres. Errors out when
  // two chambers of one fibre land in different fibres.
  std::vector<std::pair<Chamber, Chamber>> induced_map(const Automorphism& g, int radius);

 private:
  static Diagram build_target_diagram(const Universe& source,
                                      const std::vector<std::vector<std::vector<int>>>& classes);

  Universe* source_;
  std::vector<std::vector<int>> class_of_;  // per type: colour -> class index
  std::vector<int> class_count_;
  std::vector<int> retained_;
  std::vector<int> target_index_;  // source type -> target type, or -1
  std::vector<std::vector<int>> class_rep_;  // per type: class -> least colour
  Building target_building_;
  LegalColouring target_colouring_;
  std::unordered_map<Chamber, Chamber, ChamberHash> tau_;
};

}  // namespace rab
