#include "rab/chamber.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace rab {

namespace {
constexpr std::size_t kMaxInputWord = 256;
}

Building::Building(Diagram diagram, Limits limits)
    : diagram_(std::move(diagram)), limits_(limits) {}

void Building::check_letter(int type, int colour) const {
  if (type < 0 || type >= diagram_.rank()) {
    fail(ErrorKind::kValidate, "letter type index " + std::to_string(type) + " out of range");
  }
  if (colour < 0 || colour >= diagram_.q(type)) {
    fail(ErrorKind::kValidate, "colour " + std::to_string(colour) + " out of range for type '" +
                                   diagram_.label(type) + "' (q=" + std::to_string(diagram_.q(type)) + ")");
  }
}

// Rightmost letter of `type` that commutes past everything after it, or -1.
int Building::movable_position(const std::vector<Letter>& word, int type) const {
  for (int p = static_cast<int>(word.size()) - 1; p >= 0; --p) {
    int t = word[static_cast<std::size_t>(p)].type;
    if (t == type) return p;
    if (!diagram_.commutes(t, type)) return -1;
  }
  return -1;
}

// Greedy stable topological sort: repeatedly emit the least available letter.
// Same-type letters never commute, so their relative order is fixed and the
// result is the lexicographically least word in the commutation class.
std::vector<Letter> Building::canonicalize(std::vector<Letter> word) const {
  const std::size_t n = word.size();
  std::vector<Letter> out;
  out.reserve(n);
  std::vector<bool> used(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    int best = -1;
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p]) continue;
      bool available = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (used[q]) continue;
        if (!diagram_.commutes(word[q].type, word[p].type)) {
          available = false;
          break;
        }
      }
      if (!available) continue;
      if (best < 0 || word[p] < word[static_cast<std::size_t>(best)]) {
        best = static_cast<int>(p);
      }
    }
    require_internal(best >= 0, "canonicalize: no available letter");
    out.push_back(word[static_cast<std::size_t>(best)]);
    used[static_cast<std::size_t>(best)] = true;
  }
  return out;
}

Chamber Building::step(const Chamber& c, int type, int colour) const {
  check_letter(type, colour);
  std::vector<Letter> w = c.word();
  int p = movable_position(w, type);
  if (p >= 0) {
    if (colour == 0) {
      w.erase(w.begin() + p);
    } else {
      w[static_cast<std::size_t>(p)].colour = static_cast<std::int8_t>(colour);
    }
  } else {
    if (colour == 0) return c;
    w.push_back(Letter{static_cast<std::int8_t>(type), static_cast<std::int8_t>(colour)});
  }
  return Chamber(canonicalize(std::move(w)));
}

Chamber Building::normal_form(std::span<const Letter> letters) const {
  if (letters.size() > kMaxInputWord) {
    fail(ErrorKind::kLimit, "input word longer than " + std::to_string(kMaxInputWord) + " letters");
  }
  Chamber c;
  for (const Letter& l : letters) {
    c = step(c, l.type, l.colour);
  }
  return c;
}

int Building::intrinsic_colour(const Chamber& c, int type) const {
  check_letter(type, 0);
  int p = movable_position(c.word(), type);
  return p < 0 ? 0 : c.word()[static_cast<std::size_t>(p)].colour;
}

Panel Building::panel(const Chamber& c, int type) const {
  return Panel{type, step(c, type, 0)};
}

std::vector<Chamber> Building::panel_members(const Panel& p) const {
  std::vector<Chamber> members;
  members.reserve(static_cast<std::size_t>(diagram_.q(p.type)));
  members.push_back(p.gate);
  for (int colour = 1; colour < diagram_.q(p.type); ++colour) {
    members.push_back(step(p.gate, p.type, colour));
  }
  return members;
}

bool Building::panel_contains(const Panel& p, const Chamber& c) const {
  return step(c, p.type, 0) == p.gate;
}

std::optional<int> Building::adjacency(const Chamber& c, const Chamber& d) const {
  if (c == d) return std::nullopt;
  for (int t = 0; t < diagram_.rank(); ++t) {
    if (step(c, t, 0) == step(d, t, 0)) return t;
  }
  return std::nullopt;
}

std::vector<std::pair<int, Chamber>> Building::neighbours(const Chamber& c) const {
  std::vector<std::pair<int, Chamber>> out;
  for (int t = 0; t < diagram_.rank(); ++t) {
    Chamber gate = step(c, t, 0);
    if (gate != c) out.emplace_back(t, gate);
    for (int colour = 1; colour < diagram_.q(t); ++colour) {
      Chamber m = step(gate, t, colour);
      if (m != c) out.emplace_back(t, m);
    }
  }
  return out;
}

std::vector<std::vector<Chamber>> Building::ball_layers(const Chamber& c, int r) const {
  limits_.check_radius(r);
  return ball_layers_unbounded(c, r);
}

std::vector<std::vector<Chamber>> Building::ball_layers_unbounded(const Chamber& c, int r) const {
  std::vector<std::vector<Chamber>> layers;
  std::unordered_set<Chamber, ChamberHash> seen;
  layers.push_back({c});
  seen.insert(c);
  for (int depth = 0; depth < r; ++depth) {
    std::vector<Chamber> next;
    for (const Chamber& d : layers.back()) {
      for (const auto& [t, n] : neighbours(d)) {
        (void)t;
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<Chamber> Building::ball(const Chamber& c, int r) const {
  std::vector<Chamber> out;
  for (auto& layer : ball_layers(c, r)) {
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Residue Building::residue(const Chamber& c, std::vector<int> types) const {
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  for (int t : types) check_letter(t, 0);
  std::vector<Letter> w = c.word();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int t : types) {
      int p = movable_position(w, t);
      if (p >= 0) {
        w.erase(w.begin() + p);
        stripped = true;
      }
    }
  }
  return Residue{std::move(types), Chamber(canonicalize(std::move(w)))};
}

bool Building::residue_contains(const Residue& r, const Chamber& c) const {
  return residue(c, r.types).gate == r.gate;
}

Chamber Building::fourth_corner(const Chamber& p, const Chamber& q, const Chamber& r) const {
  auto a = adjacency(p, q);
  auto b = adjacency(p, r);
  require_internal(a.has_value() && b.has_value(), "fourth_corner: inputs not adjacent to p");
  require_internal(*a != *b, "fourth_corner: equal adjacency types");
  require_internal(diagram_.commutes(*a, *b), "fourth_corner: types do not commute");
  Chamber s = step(q, *b, intrinsic_colour(r, *b));
  require_internal(adjacency(s, q) == *b && adjacency(s, r) == *a,
                   "fourth_corner: square does not close");
  return s;
}

std::vector<Letter> Building::parse_letters(const std::string& text) const {
  std::vector<Letter> letters;
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
  }
  if (trimmed.empty() || trimmed == "e") return letters;
  std::stringstream ss(trimmed);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= item.size()) {
      fail(ErrorKind::kParse, "word literal: expected type:colour, got '" + item + "'");
    }
    int type = diagram_.index_of(item.substr(0, colon));
    int colour = 0;
    try {
      colour = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::kParse, "word literal: bad colour in '" + item + "'");
    }
    check_letter(type, colour);
    letters.push_back(Letter{static_cast<std::int8_t>(type), static_cast<std::int8_t>(colour)});
  }
  return letters;
}

Chamber Building::parse_word(const std::string& text) const {
  auto letters = parse_letters(text);
  return normal_form(letters);
}

std::string Building::format_word(const Chamber& c) const {
  if (c.is_base()) return "e";
  std::string out;
  for (std::size_t i = 0; i < c.word().size(); ++i) {
    if (i > 0) out += ",";
    const Letter& l = c.word()[i];
    out += diagram_.label(l.type) + ":" + std::to_string(l.colour);
  }
  return out;
}

}  // namespace rab
