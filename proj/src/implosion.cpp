#include "rab/implosion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rab {

namespace {

void validate_classes(const Diagram& d, const std::vector<std::vector<std::vector<int>>>& classes) {
  if (static_cast<int>(classes.size()) != d.rank()) {
    fail(ErrorKind::kValidate, "implosion: need one partition per type");
  }
  for (int i = 0; i < d.rank(); ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(d.q(i)), false);
    for (const auto& cls : classes[static_cast<std::size_t>(i)]) {
      if (cls.empty()) fail(ErrorKind::kValidate, "implosion: empty class at type '" + d.label(i) + "'");
      for (int x : cls) {
        if (x < 0 || x >= d.q(i) || seen[static_cast<std::size_t>(x)]) {
          fail(ErrorKind::kValidate, "implosion: classes at type '" + d.label(i) +
                                         "' must partition the colour set");
        }
        seen[static_cast<std::size_t>(x)] = true;
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      fail(ErrorKind::kValidate, "implosion: classes at type '" + d.label(i) +
                                     "' do not cover the colour set");
    }
  }
}

}  // namespace

Diagram Implosion::build_target_diagram(const Universe& source,
                                        const std::vector<std::vector<std::vector<int>>>& classes) {
  const Diagram& d = source.diagram();
  validate_classes(d, classes);
  std::vector<int> retained;
  for (int i = 0; i < d.rank(); ++i) {
    if (classes[static_cast<std::size_t>(i)].size() >= 2) retained.push_back(i);
  }
  std::vector<std::string> types;
  std::vector<int> q;
  for (int i : retained) {
    types.push_back(d.label(i));
    q.push_back(static_cast<int>(classes[static_cast<std::size_t>(i)].size()));
  }
  std::vector<std::vector<int>> m(retained.size(), std::vector<int>(retained.size(), 1));
  for (std::size_t a = 0; a < retained.size(); ++a) {
    for (std::size_t c = 0; c < retained.size(); ++c) {
      if (a != c) m[a][c] = d.bond(retained[a], retained[c]);
    }
  }
  return Diagram(std::move(types), std::move(m), std::move(q), source.limits());
}

Implosion::Implosion(Universe& source, std::vector<std::vector<std::vector<int>>> classes)
    : source_(&source),
      target_building_(build_target_diagram(source, classes), source.limits()),
      target_colouring_(target_building_) {
  const Diagram& d = source_->diagram();
  target_index_.assign(static_cast<std::size_t>(d.rank()), -1);
  for (int i = 0; i < d.rank(); ++i) {
    auto& cls = classes[static_cast<std::size_t>(i)];
    // classes ordered by least member; class 0 contains colour 0
    for (auto& c : cls) std::sort(c.begin(), c.end());
    std::sort(cls.begin(), cls.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> of(static_cast<std::size_t>(d.q(i)), -1);
    std::vector<int> reps;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      reps.push_back(cls[k].front());
      for (int x : cls[k]) of[static_cast<std::size_t>(x)] = static_cast<int>(k);
    }
    class_of_.push_back(std::move(of));
    class_rep_.push_back(std::move(reps));
    class_count_.push_back(static_cast<int>(cls.size()));
    if (cls.size() >= 2) {
      target_index_[static_cast<std::size_t>(i)] = static_cast<int>(retained_.size());
      retained_.push_back(i);
    }
  }
  tau_.emplace(source_->building().base(), target_building_.base());
}

std::vector<std::vector<int>> Implosion::orbit_classes(const PermGroup& g) { return g.orbits(); }

int Implosion::target_type(int type) const {
  int t = target_index_.at(static_cast<std::size_t>(type));
  if (t < 0) fail(ErrorKind::kValidate, "implosion: type is collapsed away");
  return t;
}

int Implosion::class_index(int type, int colour) const {
  return class_of_.at(static_cast<std::size_t>(type)).at(static_cast<std::size_t>(colour));
}

Chamber Implosion::tau(const Chamber& c) {
  auto hit = tau_.find(c);
  if (hit != tau_.end()) return hit->second;
  const Building& b = source_->building();
  LegalColouring& colouring = source_->colouring();
  // derive from every predecessor; the derivations must agree (squares close)
  bool have = false;
  Chamber image;
  for (const auto& [t, p] : b.neighbours(c)) {
    if (p.length() != c.length() - 1) continue;
    Chamber tp = tau(p);
    Chamber candidate;
    if (!is_retained(t) ||
        class_index(t, colouring.colour(c, t)) == class_index(t, colouring.colour(p, t))) {
      candidate = tp;
    } else {
      candidate = target_colouring_.move_to_colour(tp, target_type(t),
                                                   class_index(t, colouring.colour(c, t)));
    }
    if (!have) {
      image = std::move(candidate);
      have = true;
    } else {
      require_internal(candidate == image, "implosion: predecessor derivations disagree");
    }
  }
  require_internal(have, "implosion: chamber without predecessor");
  tau_.emplace(c, image);
  return image;
}

ImplosionReport Implosion::verify(int radius) {
  ImplosionReport report;
  const Building& b = source_->building();
  LegalColouring& colouring = source_->colouring();
  std::vector<Chamber> ball = b.ball(b.base(), radius);

  ImplosionCheck compat{"colour-compatibility", true, ""};
  int checked = 0;
  for (const Chamber& c : ball) {
    Chamber tc = tau(c);
    for (int i : retained_) {
      ++checked;
      if (target_colouring_.colour(tc, target_type(i)) != class_index(i, colouring.colour(c, i))) {
        compat.passed = false;
        compat.detail = "violated at " + b.format_word(c) + " type '" +
                        source_->diagram().label(i) + "'";
      }
    }
  }
  if (compat.passed) compat.detail = std::to_string(checked) + " chamber/type pairs";
  report.checks.push_back(compat);

  ImplosionCheck nonexp{"nonexpansive", true, ""};
  int pairs = 0;
  for (std::size_t a = 0; a < ball.size(); ++a) {
    for (std::size_t c = a + 1; c < ball.size(); ++c) {
      ++pairs;
      int source_dist = dist(b, ball[a], ball[c]);
      int target_dist = dist(target_building_, tau(ball[a]), tau(ball[c]));
      if (target_dist > source_dist) {
        nonexp.passed = false;
        nonexp.detail = "expanded pair " + b.format_word(ball[a]) + " , " + b.format_word(ball[c]);
      }
    }
  }
  if (nonexp.passed) nonexp.detail = std::to_string(pairs) + " pairs";
  report.checks.push_back(nonexp);

  ImplosionCheck surj{"ball-surjectivity", true, ""};
  int lifted = 0;
  for (const Chamber& target : target_building_.ball(target_building_.base(), radius)) {
    ++lifted;
    // lift the gallery given by the target word, step by step
    Chamber cur = b.base();
    Chamber cur_target = target_building_.base();
    bool ok = tau(cur) == cur_target;
    for (const Letter& l : target.word()) {
      if (!ok) break;
      cur_target = target_building_.step(cur_target, l.type, l.colour);
      int i = retained_.at(static_cast<std::size_t>(l.type));
      int cls = target_colouring_.colour(cur_target, l.type);
      int rep = class_rep_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(cls));
      cur = colouring.move_to_colour(cur, i, rep);
      ok = tau(cur) == cur_target;
    }
    if (!ok) {
      surj.passed = false;
      surj.detail = "no lift found for " + target_building_.format_word(target);
      break;
    }
  }
  if (surj.passed) surj.detail = std::to_string(lifted) + " target chambers lifted";
  report.checks.push_back(surj);

  report.passed = compat.passed && nonexp.passed && surj.passed;
  return report;
}

std::vector<std::pair<Chamber, Chamber>> Implosion::induced_map(const Automorphism& g,
                                                                int radius) {
  const Building& b = source_->building();
  std::map<Chamber, Chamber> images;
  for (const Chamber& c : b.ball(b.base(), radius)) {
    Chamber from = tau(c);
    Chamber to = tau(g.apply(c));
    auto [it, inserted] = images.emplace(from, to);
    if (!inserted && it->second != to) {
      fail(ErrorKind::kPrecondition,
           "induced_map: the automorphism is not well-defined on fibres (fibre of " +
               target_building_.format_word(from) + " splits)");
    }
  }
  return {images.begin(), images.end()};
}

ImplosionReport Implosion::fibre_stability(const std::vector<Automorphism>& gens, int radius) {
  ImplosionReport report;
  const Building& b = source_->building();
  std::vector<Chamber> ball = b.ball(b.base(), radius);
  ImplosionCheck check{"fibre-stability", true, ""};
  int evaluated = 0;
  for (const Automorphism& g : gens) {
    for (const Chamber& c : ball) {
      ++evaluated;
      Chamber image = g.apply(c);
      if (tau(image) != tau(c)) {
        check.passed = false;
        check.detail = "fibre moved: " + b.format_word(c) + " -> " + b.format_word(image) +
                       " under " + g.describe();
        break;
      }
    }
    if (!check.passed) break;
  }
  if (check.passed) {
    check.detail = std::to_string(gens.size()) + " generators, " + std::to_string(evaluated) +
                   " evaluations";
  }
  report.checks.push_back(check);
  report.passed = check.passed;
  return report;
}

}  // namespace rab
