#include "rabkit.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rab/config.hpp"
#include "rab/implosion.hpp"
#include "rab/predicates.hpp"
#include "rab/suites.hpp"

using nlohmann::json;

struct rab_universe {
  rab::Config config;
  std::unique_ptr<rab::Universe> universe;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rab_status status_of(const rab::Error& e) {
  switch (e.kind()) {
    case rab::ErrorKind::kUsage:
      return RAB_E_USAGE;
    case rab::ErrorKind::kParse:
      return RAB_E_PARSE;
    case rab::ErrorKind::kValidate:
    case rab::ErrorKind::kPrecondition:
      return RAB_E_VALIDATE;
    case rab::ErrorKind::kLimit:
      return RAB_E_LIMIT;
    case rab::ErrorKind::kInternal:
      return RAB_E_INTERNAL;
  }
  return RAB_E_INTERNAL;
}

template <typename Fn>
rab_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const rab::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RAB_E_INTERNAL;
  }
}

json verdict_json(const rab::Verdict& v) {
  json reasons = json::array();
  for (const rab::Reason& r : v.reasons) {
    reasons.push_back({{"condition", r.condition}, {"outcome", r.outcome}, {"witness", r.witness}});
  }
  return {{"name", v.name},
          {"value", rab::to_string(v.value)},
          {"reasons", reasons},
          {"citation", v.citation}};
}

void verdict_text(std::ostringstream& out, const rab::Verdict& v) {
  out << "verdict " << v.name << ": " << rab::to_string(v.value) << "\n";
  for (const rab::Reason& r : v.reasons) {
    out << "  - " << r.condition << ": " << r.outcome;
    if (!r.witness.empty()) out << " [" << r.witness << "]";
    out << "\n";
  }
  out << "  [criterion: " << v.citation << "]\n";
}

std::vector<rab::Verdict> all_verdicts(const rab::Diagram& d, const rab::LocalData& local) {
  std::vector<rab::Verdict> verdicts;
  verdicts.push_back(rab::verdict_discrete(d, local));
  verdicts.push_back(rab::verdict_locally_compact(d, local));
  verdicts.push_back(rab::verdict_compactly_generated(d, local));
  verdicts.push_back(rab::verdict_u_eq_uplus(d, local));
  verdicts.push_back(rab::verdict_simple(d, local));
  for (int k = 0; k < d.rank() && d.rank() >= 2; ++k) {
    std::vector<int> J;
    for (int i = 0; i < d.rank(); ++i) {
      if (i != k) J.push_back(i);
    }
    rab::Verdict v = rab::verdict_primitive_on_residues(d, local, J);
    std::string labels;
    for (int i : J) labels += (labels.empty() ? "" : ",") + d.label(i);
    v.name += "[J={" + labels + "}]";
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

}  // namespace

extern "C" {

const char* rab_version(void) { return "0.1.0"; }

const char* rab_last_error(void) { return g_last_error.c_str(); }

void rab_string_free(char* s) { std::free(s); }

rab_universe* rab_universe_create(const char* config_json, const char* origin) {
  rab_universe* out = nullptr;
  guarded([&]() -> rab_status {
    if (config_json == nullptr) rab::fail(rab::ErrorKind::kUsage, "config text is null");
    auto handle = std::make_unique<rab_universe>();
    handle->config = rab::parse_config_text(config_json, origin ? origin : "<string>");
    handle->universe = std::make_unique<rab::Universe>(
        handle->config.diagram(), handle->config.local_data(), handle->config.limits);
    out = handle.release();
    return RAB_OK;
  });
  return out;
}

rab_universe* rab_universe_create_from_file(const char* path) {
  rab_universe* out = nullptr;
  guarded([&]() -> rab_status {
    if (path == nullptr) rab::fail(rab::ErrorKind::kUsage, "config path is null");
    auto handle = std::make_unique<rab_universe>();
    handle->config = rab::parse_config_file(path);
    handle->universe = std::make_unique<rab::Universe>(
        handle->config.diagram(), handle->config.local_data(), handle->config.limits);
    out = handle.release();
    return RAB_OK;
  });
  return out;
}

void rab_universe_destroy(rab_universe* u) { delete u; }

rab_status rab_info(rab_universe* u, int as_json, char** out) {
  return guarded([&]() -> rab_status {
    if (u == nullptr || out == nullptr) rab::fail(rab::ErrorKind::kUsage, "null argument");
    const rab::Diagram& d = u->universe->diagram();
    const rab::LocalData& local = u->universe->local();
    rab::OrbitCount orbits = rab::orbit_count(local);
    std::vector<rab::Verdict> verdicts = all_verdicts(d, local);
    if (as_json) {
      json per_type = json::array();
      for (int i = 0; i < d.rank(); ++i) {
        per_type.push_back({{"type", d.label(i)},
                            {"q", d.q(i)},
                            {"order", local.at(i).order()},
                            {"orbits", orbits.per_type[static_cast<std::size_t>(i)]}});
      }
      json verdicts_json = json::array();
      for (const rab::Verdict& v : verdicts) verdicts_json.push_back(verdict_json(v));
      json root = {{"instance", u->config.name},
                   {"rank", d.rank()},
                   {"thick", d.thick()},
                   {"irreducible", d.is_irreducible()},
                   {"local", per_type},
                   {"orbit_count", orbits.count},
                   {"transitive", orbits.transitive},
                   {"verdicts", verdicts_json}};
      *out = dup_string(root.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "instance: " << u->config.name << "\n";
      text << "rank " << d.rank() << ", thick: " << (d.thick() ? "yes" : "no")
           << ", irreducible: " << (d.is_irreducible() ? "yes" : "no") << "\n";
      for (int i = 0; i < d.rank(); ++i) {
        text << "  type " << d.label(i) << ": q=" << d.q(i) << ", |F|=" << local.at(i).order()
             << ", orbits=" << orbits.per_type[static_cast<std::size_t>(i)] << "\n";
      }
      text << "chamber orbits: " << orbits.count
           << (orbits.transitive ? " (transitive)" : " (not transitive)") << "\n";
      for (const rab::Verdict& v : verdicts) verdict_text(text, v);
      *out = dup_string(text.str());
    }
    return RAB_OK;
  });
}

rab_status rab_colour(rab_universe* u, const char* word, int as_json, char** out) {
  return guarded([&]() -> rab_status {
    if (u == nullptr || word == nullptr || out == nullptr) {
      rab::fail(rab::ErrorKind::kUsage, "null argument");
    }
    const rab::Building& b = u->universe->building();
    rab::Chamber c = b.parse_word(word);
    std::vector<int> colours = u->universe->colouring().colour_vector(c);
    if (as_json) {
      json map = json::object();
      for (int i = 0; i < b.diagram().rank(); ++i) {
        map[b.diagram().label(i)] = colours[static_cast<std::size_t>(i)];
      }
      json root = {{"chamber", b.format_word(c)}, {"colours", map}};
      *out = dup_string(root.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "chamber " << b.format_word(c) << "\nlambda =";
      for (int i = 0; i < b.diagram().rank(); ++i) {
        text << " " << b.diagram().label(i) << ":" << colours[static_cast<std::size_t>(i)];
      }
      text << "\n";
      *out = dup_string(text.str());
    }
    return RAB_OK;
  });
}

rab_status rab_reduce(rab_universe* u, const char* gallery, int as_json, char** out) {
  return guarded([&]() -> rab_status {
    if (u == nullptr || gallery == nullptr || out == nullptr) {
      rab::fail(rab::ErrorKind::kUsage, "null argument");
    }
    const rab::Building& b = u->universe->building();
    std::vector<rab::Letter> letters = b.parse_letters(gallery);
    rab::Gallery walk = rab::make_gallery(b, b.base(), letters);
    rab::Gallery reduced = rab::reduce_gallery(b, walk);
    std::string delta;
    for (std::size_t s = 0; s < reduced.types.size(); ++s) {
      delta += (s == 0 ? "" : " ") + b.diagram().label(reduced.types[s]);
    }
    if (as_json) {
      json chambers = json::array();
      for (const rab::Chamber& c : reduced.chambers) chambers.push_back(b.format_word(c));
      json root = {{"endpoint", b.format_word(reduced.back())},
                   {"distance", reduced.length()},
                   {"delta", delta},
                   {"gallery", chambers}};
      *out = dup_string(root.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "reduced gallery:";
      for (const rab::Chamber& c : reduced.chambers) text << " " << b.format_word(c);
      text << "\ndistance " << reduced.length() << ", delta \"" << delta << "\"\n";
      *out = dup_string(text.str());
    }
    return RAB_OK;
  });
}

rab_status rab_extend(rab_universe* u, const char* panel, const char* perm, int radius,
                      int as_json, char** out) {
  return guarded([&]() -> rab_status {
    if (u == nullptr || panel == nullptr || perm == nullptr || out == nullptr) {
      rab::fail(rab::ErrorKind::kUsage, "null argument");
    }
    const rab::Building& b = u->universe->building();
    std::string spec(panel);
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) {
      rab::fail(rab::ErrorKind::kParse, "panel spec must be '<word>:<type>'");
    }
    rab::Chamber gate_member = b.parse_word(spec.substr(0, colon));
    int type = b.diagram().index_of(spec.substr(colon + 1));
    rab::Panel p0 = b.panel(gate_member, type);
    rab::Perm f0 = rab::Perm::from_cycles(perm, b.diagram().q(type));
    rab::Automorphism g = rab::extend_local(*u->universe, p0, f0);

    std::vector<std::pair<std::string, std::string>> table;
    for (const rab::Chamber& c : b.ball(b.base(), radius)) {
      table.emplace_back(b.format_word(c), b.format_word(g.apply(c)));
    }
    rab::Perm sigma = g.local_action(p0);
    if (as_json) {
      json rows = json::array();
      for (const auto& [from, to] : table) rows.push_back({{"chamber", from}, {"image", to}});
      json root = {{"panel", b.format_word(p0.gate) + ":" + b.diagram().label(type)},
                   {"local_action", sigma.to_string()},
                   {"radius", radius},
                   {"action", rows}};
      *out = dup_string(root.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "extension at panel " << b.format_word(p0.gate) << ":" << b.diagram().label(type)
           << ", local action " << sigma.to_string() << "\n";
      for (const auto& [from, to] : table) text << "  " << from << " -> " << to << "\n";
      *out = dup_string(text.str());
    }
    return RAB_OK;
  });
}

rab_status rab_orbits(rab_universe* u, int radius, int as_json, char** out) {
  return guarded([&]() -> rab_status {
    if (u == nullptr || out == nullptr) rab::fail(rab::ErrorKind::kUsage, "null argument");
    rab::Universe& universe = *u->universe;
    const rab::Building& b = universe.building();
    std::vector<rab::Chamber> ball = b.ball(b.base(), radius);

    // harmony classes
    std::map<std::vector<int>, std::vector<rab::Chamber>> classes;
    for (const rab::Chamber& c : ball) {
      std::vector<int> sig;
      for (int i = 0; i < b.diagram().rank(); ++i) {
        sig.push_back(universe.local().at(i).orbit_of(universe.colouring().colour(c, i)).front());
      }
      classes[sig].push_back(c);
    }
    // bounded chamber-stabiliser closures
    std::vector<std::vector<rab::Chamber>> closures;
    {
      std::set<rab::Chamber> done;
      for (const rab::Chamber& c : ball) {
        if (done.contains(c)) continue;
        std::vector<rab::Chamber> orbit = rab::uplus_orbit_on_ball(universe, c, radius);
        for (const rab::Chamber& x : orbit) done.insert(x);
        closures.push_back(std::move(orbit));
      }
    }
    if (as_json) {
      json classes_json = json::array();
      for (const auto& [sig, members] : classes) {
        json m = json::array();
        for (const rab::Chamber& c : members) m.push_back(b.format_word(c));
        classes_json.push_back({{"representative", b.format_word(members.front())},
                                {"size", members.size()},
                                {"members", m}});
      }
      json closures_json = json::array();
      for (const auto& orbit : closures) {
        json m = json::array();
        for (const rab::Chamber& c : orbit) m.push_back(b.format_word(c));
        closures_json.push_back({{"representative", b.format_word(orbit.front())},
                                 {"size", orbit.size()},
                                 {"members", m}});
      }
      json root = {{"radius", radius},
                   {"chambers", ball.size()},
                   {"harmony_classes", classes_json},
                   {"stabiliser_closures", closures_json}};
      *out = dup_string(root.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "ball radius " << radius << ": " << ball.size() << " chambers\n";
      text << "harmony classes (" << classes.size() << "):\n";
      for (const auto& [sig, members] : classes) {
        text << "  [" << b.format_word(members.front()) << "] size " << members.size() << "\n";
      }
      text << "chamber-stabiliser closures (" << closures.size() << "):\n";
      for (const auto& orbit : closures) {
        text << "  [" << b.format_word(orbit.front()) << "] size " << orbit.size() << "\n";
      }
      *out = dup_string(text.str());
    }
    return RAB_OK;
  });
}

rab_status rab_implode(rab_universe* u, const char* classes, int as_json, char** out) {
  return guarded([&]() -> rab_status {
    if (u == nullptr || classes == nullptr || out == nullptr) {
      rab::fail(rab::ErrorKind::kUsage, "null argument");
    }
    rab::Universe& universe = *u->universe;
    const rab::Building& b = universe.building();
    auto partitions = rab::parse_class_spec(b.diagram(), classes);
    rab::Implosion imp(universe, partitions);
    const rab::Diagram& target = imp.target_diagram();
    std::vector<std::pair<std::string, std::string>> samples;
    for (const rab::Chamber& c : b.ball(b.base(), 2)) {
      samples.emplace_back(b.format_word(c), imp.target_building().format_word(imp.tau(c)));
    }
    if (as_json) {
      json q = json::object();
      for (int i = 0; i < target.rank(); ++i) q[target.label(i)] = target.q(i);
      json rows = json::array();
      for (const auto& [from, to] : samples) rows.push_back({{"chamber", from}, {"image", to}});
      json root = {{"retained_types", target.types()}, {"target_q", q}, {"tau", rows}};
      *out = dup_string(root.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << "target diagram: rank " << target.rank();
      for (int i = 0; i < target.rank(); ++i) {
        text << " " << target.label(i) << ":q'=" << target.q(i);
      }
      text << "\nsample images:\n";
      for (const auto& [from, to] : samples) text << "  tau(" << from << ") = " << to << "\n";
      *out = dup_string(text.str());
    }
    return RAB_OK;
  });
}

rab_status rab_verify(rab_universe* u, const char* suite, int radius, unsigned seed, int as_json,
                      char** out) {
  return guarded([&]() -> rab_status {
    if (suite == nullptr || out == nullptr) rab::fail(rab::ErrorKind::kUsage, "null argument");
    rab::SuiteOptions options;
    options.radius = radius;
    options.seed = seed;
    std::vector<rab::SuiteReport> reports;
    if (u != nullptr) {
      reports = rab::run_suite(suite, u->config, options);
    } else {
      for (const rab::Config& cfg : rab::default_matrix()) {
        for (rab::SuiteReport& report : rab::run_suite(suite, cfg, options)) {
          reports.push_back(std::move(report));
        }
      }
    }
    *out = dup_string(as_json ? rab::render_reports_json(reports)
                              : rab::render_reports_text(reports));
    return rab::all_passed(reports) ? RAB_OK : RAB_E_CHECK;
  });
}

}  // extern "C"
