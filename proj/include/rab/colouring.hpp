#pragma once

#include <unordered_map>
#include <vector>

#include "rab/geometry.hpp"
#include "rab/permgroup.hpp"

namespace rab {

struct LegalityViolation {
  Panel panel;
  std::string condition;
  std::string detail;
};

struct LegalityReport {
  bool passed = true;
  int panels_checked = 0;
  std::vector<LegalityViolation> violations;
};

// The canonical legal colouring of the building.
//
// Every i-panel lies in a unique tree wall (the (i u i^perp)-residue
// containing it) and the intrinsic colour of a chamber is invariant along
// that wall, so a legal colouring is one bijection per wall from intrinsic
// to external colours. The defining construction builds these charts along
// a canonical BFS from the base chamber: crossing a j-panel preserves every
// other coordinate, crossing an i-panel consults or extends the chart of
// that panel's wall, seeding the predecessor's entry and assigning the
// least unused external colour to new intrinsic values.
//
// Because the canonical BFS meets each wall at its gate first and then
// meets the nonzero intrinsic colours in ascending order, the chart of a
// wall is determined by the gate colour alone: chart(0) = lambda(gate), and
// intrinsic x >= 1 gets the x-th smallest remaining colour. colour() uses
// this closed form, recursing to the wall gate; verify_legal() replays the
// literal BFS construction with all-predecessor assertions and checks that
// both routes agree on the ball.
class LegalColouring {
 public:
  explicit LegalColouring(const Building& building);

  const Building& building() const { return *building_; }

  // lambda_i(c), by the closed-form chart recursion
  int colour(const Chamber& c, int type);
  std::vector<int> colour_vector(const Chamber& c);
  // the well-defined colours of a J-residue at the types outside J
  int residue_colour(const Residue& r, int type);

  // The member of c's panel with the given external colour.
  Chamber move_to_colour(const Chamber& c, int type, int external);

  // Re-derives lambda along the given minimal gallery from the base chamber
  // using only the charts built by the BFS construction.
  std::vector<int> derive_along_gallery(const Gallery& g);

  // Checks bijectivity per panel and constancy of the other coordinates on
  // every panel fully contained in ball(base, radius), replays the BFS
  // construction with multi-predecessor assertions, and checks it against
  // the closed form.
  LegalityReport verify_legal(int radius);

  // Test hook: overwrite one memoised colour to exercise verify_legal.
  void corrupt_colour_for_testing(const Chamber& c, int type, int value);

 private:
  struct WallKey {
    Chamber gate;
    int type;
    friend bool operator==(const WallKey&, const WallKey&) = default;
  };
  struct WallKeyHash {
    std::size_t operator()(const WallKey& k) const {
      return ChamberHash{}(k.gate) * 131u + static_cast<std::size_t>(k.type);
    }
  };
  struct Chart {
    std::unordered_map<int, int> to_external;
    std::vector<bool> used_external;
  };

  int colour_uncached(const Chamber& c, int type);

  // the literal canonical-BFS construction, kept as the verification route
  void construct_ball(int max_length);
  std::vector<int> construct_derive(const Chamber& pred, const Chamber& next, int step_type,
                                    bool allow_extend);
  int transport(const Panel& p, int pred_intrinsic, int pred_external, int next_intrinsic,
                bool allow_extend);

  const Building* building_;
  std::unordered_map<Chamber, std::vector<int>, ChamberHash> memo_;
  // construction state
  std::unordered_map<Chamber, std::vector<int>, ChamberHash> constructed_;
  std::unordered_map<WallKey, Chart, WallKeyHash> charts_;
  std::vector<std::vector<Chamber>> layers_;
};

// Chambers (or same-type residues) are harmonious when their colours lie in
// one orbit of the corresponding local group, at every relevant type.
bool harmonious(LegalColouring& colouring, const Chamber& a, const Chamber& b,
                const LocalData& local);
bool harmonious(LegalColouring& colouring, const Residue& a, const Residue& b,
                const LocalData& local);

}  // namespace rab
