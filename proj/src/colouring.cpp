#include "rab/colouring.hpp"

#include <algorithm>
#include <set>

namespace rab {

namespace {

// chart(0) = gate colour; intrinsic x >= 1 gets the x-th smallest colour
// different from it
int chart_form(int gate_colour, int intrinsic) {
  if (intrinsic == 0) return gate_colour;
  return intrinsic - 1 < gate_colour ? intrinsic - 1 : intrinsic;
}

}  // namespace

LegalColouring::LegalColouring(const Building& building) : building_(&building) {
  std::vector<int> zeros(static_cast<std::size_t>(building_->diagram().rank()), 0);
  memo_.emplace(building_->base(), zeros);
  constructed_.emplace(building_->base(), zeros);
  layers_.push_back({building_->base()});
}

int LegalColouring::colour_uncached(const Chamber& c, int type) {
  require_internal(!c.is_base(), "colour: base chamber must be memoised");
  int intrinsic = building_->intrinsic_colour(c, type);
  if (intrinsic != 0) {
    Residue w = wall(*building_, building_->panel(c, type));
    return chart_form(colour(w.gate, type), intrinsic);
  }
  // c is the gate of its own panel; crossing back along the last letter
  // keeps this coordinate
  Letter last = c.word().back();
  require_internal(last.type != type, "colour: panel gate ends in its own type");
  return colour(building_->step(c, last.type, 0), type);
}

int LegalColouring::colour(const Chamber& c, int type) {
  {
    auto it = memo_.find(c);
    if (it != memo_.end() && it->second[static_cast<std::size_t>(type)] >= 0) {
      return it->second[static_cast<std::size_t>(type)];
    }
  }
  int value = colour_uncached(c, type);  // may grow the memo
  auto [it, inserted] = memo_.try_emplace(
      c, std::vector<int>(static_cast<std::size_t>(building_->diagram().rank()), -1));
  (void)inserted;
  it->second[static_cast<std::size_t>(type)] = value;
  return value;
}

std::vector<int> LegalColouring::colour_vector(const Chamber& c) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(building_->diagram().rank()));
  for (int i = 0; i < building_->diagram().rank(); ++i) out.push_back(colour(c, i));
  return out;
}

int LegalColouring::residue_colour(const Residue& r, int type) {
  if (std::find(r.types.begin(), r.types.end(), type) != r.types.end()) {
    fail(ErrorKind::kPrecondition,
         "residue_colour: colour is only well-defined outside the residue's types");
  }
  return colour(r.gate, type);
}

Chamber LegalColouring::move_to_colour(const Chamber& c, int type, int external) {
  for (const Chamber& m : building_->panel_members(building_->panel(c, type))) {
    if (colour(m, type) == external) return m;
  }
  fail(ErrorKind::kInternal, "move_to_colour: no panel member carries colour " +
                                 std::to_string(external));
}

int LegalColouring::transport(const Panel& p, int pred_intrinsic, int pred_external,
                              int next_intrinsic, bool allow_extend) {
  WallKey key{wall(*building_, p).gate, p.type};
  auto [it, created] = charts_.try_emplace(key);
  Chart& chart = it->second;
  if (created) {
    chart.used_external.assign(static_cast<std::size_t>(building_->diagram().q(p.type)), false);
  }
  auto seed = chart.to_external.find(pred_intrinsic);
  if (seed == chart.to_external.end()) {
    require_internal(allow_extend, "colour chart is missing a seed entry");
    require_internal(!chart.used_external[static_cast<std::size_t>(pred_external)],
                     "colour chart seed would break bijectivity");
    chart.to_external.emplace(pred_intrinsic, pred_external);
    chart.used_external[static_cast<std::size_t>(pred_external)] = true;
  } else {
    require_internal(seed->second == pred_external, "colour chart disagrees across galleries");
  }
  auto hit = chart.to_external.find(next_intrinsic);
  if (hit != chart.to_external.end()) return hit->second;
  require_internal(allow_extend, "colour chart is missing an entry");
  int external = 0;
  while (chart.used_external[static_cast<std::size_t>(external)]) ++external;
  chart.to_external.emplace(next_intrinsic, external);
  chart.used_external[static_cast<std::size_t>(external)] = true;
  return external;
}

std::vector<int> LegalColouring::construct_derive(const Chamber& pred, const Chamber& next,
                                                  int step_type, bool allow_extend) {
  std::vector<int> value = constructed_.at(pred);
  Panel p = building_->panel(next, step_type);
  value[static_cast<std::size_t>(step_type)] =
      transport(p, building_->intrinsic_colour(pred, step_type),
                value[static_cast<std::size_t>(step_type)],
                building_->intrinsic_colour(next, step_type), allow_extend);
  return value;
}

void LegalColouring::construct_ball(int max_length) {
  while (static_cast<int>(layers_.size()) <= max_length) {
    const std::vector<Chamber>& last = layers_.back();
    std::set<Chamber> next;
    for (const Chamber& c : last) {
      for (const auto& [t, n] : building_->neighbours(c)) {
        (void)t;
        if (n.length() == c.length() + 1) next.insert(n);
      }
    }
    if (next.empty()) break;
    std::vector<Chamber> layer(next.begin(), next.end());
    for (const Chamber& c : layer) {
      bool have_value = false;
      std::vector<int> value;
      // every neighbour one step closer to the base is a predecessor; all
      // derivations must agree
      for (const auto& [t, p] : building_->neighbours(c)) {
        if (p.length() != c.length() - 1) continue;
        std::vector<int> candidate = construct_derive(p, c, t, true);
        if (!have_value) {
          value = std::move(candidate);
          have_value = true;
        } else {
          require_internal(candidate == value,
                           "legal colouring: predecessor derivations disagree");
        }
      }
      require_internal(have_value, "legal colouring: chamber without predecessor");
      constructed_.emplace(c, std::move(value));
    }
    layers_.push_back(std::move(layer));
  }
}

std::vector<int> LegalColouring::derive_along_gallery(const Gallery& g) {
  validate_gallery(*building_, g);
  if (g.front() != building_->base()) {
    fail(ErrorKind::kValidate, "derive_along_gallery: gallery must start at the base chamber");
  }
  construct_ball(g.back().length());
  std::vector<int> value(static_cast<std::size_t>(building_->diagram().rank()), 0);
  for (std::size_t s = 0; s < g.types.size(); ++s) {
    const Chamber& pred = g.chambers[s];
    const Chamber& next = g.chambers[s + 1];
    if (next.length() != pred.length() + 1) {
      fail(ErrorKind::kValidate, "derive_along_gallery: gallery is not minimal from the base");
    }
    int t = g.types[s];
    Panel p = building_->panel(next, t);
    value[static_cast<std::size_t>(t)] =
        transport(p, building_->intrinsic_colour(pred, t), value[static_cast<std::size_t>(t)],
                  building_->intrinsic_colour(next, t), false);
  }
  return value;
}

LegalityReport LegalColouring::verify_legal(int radius) {
  construct_ball(radius);
  LegalityReport report;

  // the BFS construction and the closed form must agree on the ball
  for (const auto& layer : layers_) {
    if (layer.empty() || layer.front().length() > radius) break;
    for (const Chamber& c : layer) {
      if (colour_vector(c) != constructed_.at(c)) {
        report.violations.push_back({building_->panel(c, 0), "construction",
                                     "closed-form colours disagree with the BFS construction at " +
                                         building_->format_word(c)});
      }
    }
  }

  std::set<Panel> panels;
  for (const auto& layer : layers_) {
    if (layer.empty() || layer.front().length() > radius) break;
    for (const Chamber& c : layer) {
      for (int t = 0; t < building_->diagram().rank(); ++t) {
        Panel p = building_->panel(c, t);
        if (p.gate.length() + 1 <= radius) panels.insert(std::move(p));
      }
    }
  }
  for (const Panel& p : panels) {
    ++report.panels_checked;
    std::vector<Chamber> members = building_->panel_members(p);
    std::set<int> seen;
    for (const Chamber& m : members) seen.insert(colour(m, p.type));
    if (static_cast<int>(seen.size()) != building_->diagram().q(p.type)) {
      report.violations.push_back(
          {p, "bijective", "colours at type '" + building_->diagram().label(p.type) +
                               "' do not exhaust the colour set on panel at " +
                               building_->format_word(p.gate)});
    }
    for (int j = 0; j < building_->diagram().rank(); ++j) {
      if (j == p.type) continue;
      int first = colour(members.front(), j);
      for (const Chamber& m : members) {
        if (colour(m, j) != first) {
          report.violations.push_back(
              {p, "constant", "colour at type '" + building_->diagram().label(j) +
                                  "' varies on the " + building_->diagram().label(p.type) +
                                  "-panel at " + building_->format_word(p.gate)});
          break;
        }
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

void LegalColouring::corrupt_colour_for_testing(const Chamber& c, int type, int value) {
  colour_vector(c);
  memo_.at(c).at(static_cast<std::size_t>(type)) = value;
}

bool harmonious(LegalColouring& colouring, const Chamber& a, const Chamber& b,
                const LocalData& local) {
  const Diagram& d = colouring.building().diagram();
  if (local.rank() != d.rank()) {
    fail(ErrorKind::kValidate, "harmonious: local data rank does not match the diagram");
  }
  std::vector<int> ca = colouring.colour_vector(a);
  std::vector<int> cb = colouring.colour_vector(b);
  for (int i = 0; i < d.rank(); ++i) {
    if (!local.at(i).same_orbit(ca[static_cast<std::size_t>(i)], cb[static_cast<std::size_t>(i)])) {
      return false;
    }
  }
  return true;
}

bool harmonious(LegalColouring& colouring, const Residue& a, const Residue& b,
                const LocalData& local) {
  if (a.types != b.types) {
    fail(ErrorKind::kPrecondition, "harmonious: residues must have the same type set");
  }
  const Diagram& d = colouring.building().diagram();
  for (int i = 0; i < d.rank(); ++i) {
    if (std::find(a.types.begin(), a.types.end(), i) != a.types.end()) continue;
    if (!local.at(i).same_orbit(colouring.residue_colour(a, i), colouring.residue_colour(b, i))) {
      return false;
    }
  }
  return true;
}

}  // namespace rab
