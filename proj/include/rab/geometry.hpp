#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rab/chamber.hpp"

namespace rab {

class LegalColouring;

// A walk of pairwise-adjacent chambers together with its type word.
struct Gallery {
  std::vector<Chamber> chambers;  // k+1 chambers
  std::vector<int> types;         // k step types

  int length() const { return static_cast<int>(types.size()); }
  const Chamber& front() const { return chambers.front(); }
  const Chamber& back() const { return chambers.back(); }
};

// Walks from `start` along the given panel crossings; colour 0 steps move
// toward the gate. A step that does not move is rejected.
Gallery make_gallery(const Building& b, const Chamber& start, std::span<const Letter> steps);
void validate_gallery(const Building& b, const Gallery& g);

// A minimal gallery with the same endpoints, obtained by elementary
// homotopies (swapping commuting steps across a square) and elementary
// contractions (merging or cancelling consecutive steps in one panel).
// The result's type word is reduced in the right-angled Coxeter group.
Gallery reduce_gallery(const Building& b, Gallery g);

// Gallery distance, computed by reducing the concatenation
// (reverse walk c -> base) ++ (walk base -> d). The BFS route below is the
// independent oracle; tests and the verify suites force agreement.
int dist(const Building& b, const Chamber& c, const Chamber& d);
std::vector<int> weyl_delta(const Building& b, const Chamber& c, const Chamber& d);
Gallery reduced_gallery_between(const Building& b, const Chamber& c, const Chamber& d);

// Breadth-first distance; deliberately independent of gallery reduction.
int bfs_dist(const Building& b, const Chamber& c, const Chamber& d);

int dist_to_panel(const Building& b, const Chamber& c, const Panel& p);

// The gate: the unique member of the panel/residue closest to c.
Chamber proj_panel(const Building& b, const Panel& p, const Chamber& c);
Chamber proj_residue(const Building& b, const Residue& r, const Chamber& c);

// The tree wall of a panel: the residue of type {k} u k^perp containing it.
Residue wall(const Building& b, const Panel& p);
// Residue criterion: same type and same wall.
bool are_parallel(const Building& b, const Panel& p, const Panel& q);
// Projection criterion (the definition); used as a cross-check.
bool parallel_by_projection(const Building& b, const Panel& p, const Panel& q);

// Closing squares. Case "down": d1 ~_i c ~_j d2 with dist(c0,c) = n+1 and
// dist(c0,d1) = dist(c0,d2) = n; returns e at distance n-1 with
// d1 ~_j e ~_i d2. Case "side": d1 ~_i c1 ~_j c2 with dist(c0,c1) =
// dist(c0,c2) = n+1 and dist(c0,d1) = n; returns d2 at distance n with
// d1 ~_j d2 ~_i c2. Both verify every distance hypothesis and that m_ij = 2.
Chamber close_square_down(const Building& b, const Chamber& c0, const Chamber& c,
                          const Chamber& d1, const Chamber& d2);
Chamber close_square_side(const Building& b, const Chamber& c0, const Chamber& d1,
                          const Chamber& c1, const Chamber& c2);

// All minimal galleries from c to d; errors out past the gallery cap.
std::vector<Gallery> minimal_galleries(const Building& b, const Chamber& c, const Chamber& d);

bool is_convex(const Building& b, const std::vector<Chamber>& set);
std::vector<Chamber> convex_closure(const Building& b, std::vector<Chamber> set);

// An i-panel P and chamber c with proj_P(phi) = c for every phi in Phi and
// lambda_i(c) = colour. Requires a type j with m_ij infinite.
std::pair<Panel, Chamber> find_wing_panel(const Building& b, LegalColouring& colouring,
                                          const std::vector<Chamber>& phi, int type, int colour);

}  // namespace rab
