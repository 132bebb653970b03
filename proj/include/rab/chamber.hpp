#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rab/diagram.hpp"

namespace rab {

// One panel crossing: a type index and an intrinsic colour. Normal-form words
// never store colour 0; it means "toward the base chamber" and cancels out.
struct Letter {
  std::int8_t type = 0;
  std::int8_t colour = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A chamber of the building: the canonical reduced coloured word relative to
// the base chamber. Canonical means lexicographically least over the
// commutation class, comparing letters by (type order, colour).
class Chamber {
 public:
  Chamber() = default;
  explicit Chamber(std::vector<Letter> word) : word_(std::move(word)) {}

  const std::vector<Letter>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_base() const { return word_.empty(); }

  friend bool operator==(const Chamber&, const Chamber&) = default;
  // Canonical total order: shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const Chamber& a, const Chamber& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Letter> word_;
};

struct ChamberHash {
  std::size_t operator()(const Chamber& c) const {
    std::size_t h = 1469598103934665603ull;
    for (const Letter& l : c.word()) {
      h = (h ^ static_cast<std::size_t>(l.type)) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(l.colour)) * 1099511628211ull;
    }
    return h;
  }
};

// An i-panel, identified by its type and its gate (the unique minimal-length
// member). Members are the gate plus one chamber per nonzero intrinsic colour.
struct Panel {
  int type = 0;
  Chamber gate;

  friend bool operator==(const Panel&, const Panel&) = default;
  friend std::strong_ordering operator<=>(const Panel&, const Panel&) = default;
};

struct PanelHash {
  std::size_t operator()(const Panel& p) const {
    return ChamberHash{}(p.gate) * 31u + static_cast<std::size_t>(p.type);
  }
};

// A J-residue, identified by its sorted type set and its gate.
struct Residue {
  std::vector<int> types;
  Chamber gate;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend std::strong_ordering operator<=>(const Residue&, const Residue&) = default;
};

// The word model of the (unique) semiregular right-angled building with the
// given diagram. Chambers are generated on demand; there is no global storage.
class Building {
 public:
  explicit Building(Diagram diagram, Limits limits = {});

  const Diagram& diagram() const { return diagram_; }
  const Limits& limits() const { return limits_; }

  Chamber base() const { return {}; }

  // Normal form of an arbitrary well-typed letter sequence. Colour 0 is
  // allowed as transient input and merges-and-deletes.
  Chamber normal_form(std::span<const Letter> letters) const;

  // The member of c's `type`-panel with the given intrinsic colour
  // (colour 0 = the gate).
  Chamber step(const Chamber& c, int type, int colour) const;

  // Trailing `type`-letter colour, or 0 when c is the gate of its panel.
  int intrinsic_colour(const Chamber& c, int type) const;

  Panel panel(const Chamber& c, int type) const;
  // Gate first, then intrinsic colours ascending; exactly q_i members.
  std::vector<Chamber> panel_members(const Panel& p) const;
  bool panel_contains(const Panel& p, const Chamber& c) const;

  // The adjacency type of two distinct chambers in a common panel, if any.
  std::optional<int> adjacency(const Chamber& c, const Chamber& d) const;
  // All (type, chamber) pairs adjacent to c, in canonical order.
  std::vector<std::pair<int, Chamber>> neighbours(const Chamber& c) const;

  // Chambers at gallery distance <= r from c, BFS layer by layer, each layer
  // in canonical order.
  std::vector<Chamber> ball(const Chamber& c, int r) const;
  std::vector<std::vector<Chamber>> ball_layers(const Chamber& c, int r) const;
  // Without the safety cap; for internal lazy evaluation that follows
  // automorphism images wherever they land.
  std::vector<std::vector<Chamber>> ball_layers_unbounded(const Chamber& c, int r) const;

  // The J-residue containing c; the gate is the minimal-length member.
  Residue residue(const Chamber& c, std::vector<int> types) const;
  bool residue_contains(const Residue& r, const Chamber& c) const;

  // Fourth corner of a square: given q ~_a p ~_b r with a != b and m_ab = 2,
  // returns s with s ~_b q and s ~_a r.
  Chamber fourth_corner(const Chamber& p, const Chamber& q, const Chamber& r) const;

  // Word literal syntax: "1:2,2:1" means [(1,2),(2,1)]; the base chamber is
  // written "e".
  std::vector<Letter> parse_letters(const std::string& text) const;
  Chamber parse_word(const std::string& text) const;
  std::string format_word(const Chamber& c) const;

 private:
  int movable_position(const std::vector<Letter>& word, int type) const;
  std::vector<Letter> canonicalize(std::vector<Letter> word) const;
  void check_letter(int type, int colour) const;

  Diagram diagram_;
  Limits limits_;
};

}  // namespace rab
