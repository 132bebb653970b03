#include "rab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rab {

using nlohmann::json;

LocalData Config::local_data() const {
  LocalData local;
  for (std::size_t i = 0; i < types.size(); ++i) {
    local.groups.emplace_back(q[i], generators[i], limits.element_bound);
  }
  return local;
}

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& key, const std::string& what) {
  fail(ErrorKind::kValidate, origin + ": key '" + key + "': " + what);
}

int parse_m_entry(const json& entry, const std::string& origin) {
  if (entry.is_string()) {
    if (entry.get<std::string>() == "inf") return Diagram::kInf;
    bad(origin, "m", "string entries must be \"inf\", got '" + entry.get<std::string>() + "'");
  }
  if (entry.is_number_integer()) return entry.get<int>();
  bad(origin, "m", "entries must be 2, \"inf\", or 1 on the diagonal");
}

}  // namespace

Config parse_config_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kParse, origin + ": " + e.what());
  }
  if (!root.is_object()) fail(ErrorKind::kValidate, origin + ": top level must be an object");

  Config cfg;
  cfg.name = root.value("name", origin);

  if (!root.contains("types") || !root["types"].is_array() || root["types"].empty()) {
    bad(origin, "types", "expected a non-empty array of type labels");
  }
  for (const auto& t : root["types"]) {
    if (!t.is_string()) bad(origin, "types", "labels must be strings");
    cfg.types.push_back(t.get<std::string>());
  }
  const std::size_t n = cfg.types.size();

  if (!root.contains("m") || !root["m"].is_array() || root["m"].size() != n) {
    bad(origin, "m", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  for (const auto& row : root["m"]) {
    if (!row.is_array() || row.size() != n) {
      bad(origin, "m", "each row must have " + std::to_string(n) + " entries");
    }
    std::vector<int> out_row;
    for (const auto& entry : row) out_row.push_back(parse_m_entry(entry, origin));
    cfg.m.push_back(std::move(out_row));
  }

  if (!root.contains("q") || !root["q"].is_object()) {
    bad(origin, "q", "expected an object mapping type labels to panel sizes");
  }
  for (const std::string& label : cfg.types) {
    if (!root["q"].contains(label) || !root["q"][label].is_number_integer()) {
      bad(origin, "q", "missing integer entry for type '" + label + "'");
    }
    cfg.q.push_back(root["q"][label].get<int>());
  }

  if (root.contains("limits")) {
    const json& lim = root["limits"];
    if (!lim.is_object()) bad(origin, "limits", "expected an object");
    cfg.limits.max_radius = lim.value("radius", cfg.limits.max_radius);
    cfg.limits.max_q = lim.value("q", cfg.limits.max_q);
    cfg.limits.max_rank = lim.value("rank", cfg.limits.max_rank);
    cfg.limits.element_bound = lim.value("elements", cfg.limits.element_bound);
    cfg.limits.gallery_bound = lim.value("galleries", cfg.limits.gallery_bound);
  }
  cfg.limits.apply_env();

  cfg.generators.assign(n, {});
  if (root.contains("groups")) {
    if (!root["groups"].is_object()) bad(origin, "groups", "expected an object");
    for (const auto& [label, gens] : root["groups"].items()) {
      auto it = std::find(cfg.types.begin(), cfg.types.end(), label);
      if (it == cfg.types.end()) bad(origin, "groups", "unknown type label '" + label + "'");
      std::size_t i = static_cast<std::size_t>(it - cfg.types.begin());
      if (!gens.is_array()) bad(origin, "groups", "generators for '" + label + "' must be an array");
      for (const auto& gen : gens) {
        if (!gen.is_array()) {
          bad(origin, "groups", "each generator for '" + label + "' must be an image array");
        }
        std::vector<int> images;
        for (const auto& x : gen) {
          if (!x.is_number_integer()) bad(origin, "groups", "image arrays hold integers");
          images.push_back(x.get<int>());
        }
        if (static_cast<int>(images.size()) != cfg.q[i]) {
          bad(origin, "groups", "generator degree " + std::to_string(images.size()) +
                                    " for type '" + label + "' does not match q = " +
                                    std::to_string(cfg.q[i]));
        }
        try {
          cfg.generators[i].emplace_back(std::move(images));
        } catch (const Error& e) {
          bad(origin, "groups", std::string(e.what()) + " (type '" + label + "')");
        }
      }
    }
  }

  cfg.radius = root.value("radius", cfg.radius);
  cfg.seed = root.value("seed", cfg.seed);
  if (root.contains("suites")) {
    if (!root["suites"].is_array()) bad(origin, "suites", "expected an array of suite names");
    for (const auto& s : root["suites"]) cfg.suites.push_back(s.get<std::string>());
  }

  // validate the diagram and groups eagerly so errors surface here
  (void)cfg.diagram();
  (void)cfg.local_data();
  return cfg;
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kUsage, "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Config cfg = parse_config_text(buffer.str(), path);
  if (cfg.name == path) {
    auto slash = path.find_last_of('/');
    cfg.name = slash == std::string::npos ? path : path.substr(slash + 1);
  }
  return cfg;
}

std::vector<std::vector<std::vector<int>>> parse_class_spec(const Diagram& d,
                                                            const std::string& spec) {
  std::vector<std::vector<std::vector<int>>> classes(static_cast<std::size_t>(d.rank()));
  // default: equality relation
  for (int i = 0; i < d.rank(); ++i) {
    for (int x = 0; x < d.q(i); ++x) classes[static_cast<std::size_t>(i)].push_back({x});
  }
  std::string stripped;
  for (char ch : spec) {
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
  }
  if (stripped.empty()) return classes;
  std::stringstream ss(stripped);
  std::string per_type;
  while (std::getline(ss, per_type, ';')) {
    auto colon = per_type.find(':');
    if (colon == std::string::npos) {
      fail(ErrorKind::kParse, "class spec: expected 'type:classes', got '" + per_type + "'");
    }
    int type = d.index_of(per_type.substr(0, colon));
    std::string body = per_type.substr(colon + 1);
    auto& slot = classes[static_cast<std::size_t>(type)];
    slot.clear();
    if (body == "*") {
      std::vector<int> all;
      for (int x = 0; x < d.q(type); ++x) all.push_back(x);
      slot.push_back(std::move(all));
      continue;
    }
    std::stringstream cs(body);
    std::string cls;
    while (std::getline(cs, cls, '|')) {
      std::vector<int> members;
      std::stringstream ms(cls);
      std::string item;
      while (std::getline(ms, item, ',')) {
        try {
          members.push_back(std::stoi(item));
        } catch (const std::exception&) {
          fail(ErrorKind::kParse, "class spec: bad colour '" + item + "'");
        }
      }
      if (members.empty()) fail(ErrorKind::kParse, "class spec: empty class");
      slot.push_back(std::move(members));
    }
  }
  return classes;
}

}  // namespace rab
