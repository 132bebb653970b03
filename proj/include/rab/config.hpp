#pragma once

#include <string>
#include <vector>

#include "rab/diagram.hpp"
#include "rab/limits.hpp"
#include "rab/permgroup.hpp"

namespace rab {

// A run configuration: the diagram, the local groups (as image arrays), the
// safety limits and default run parameters. RABKIT_LIMITS overrides the caps.
struct Config {
  std::string name = "config";
  std::vector<std::string> types;
  std::vector<std::vector<int>> m;
  std::vector<int> q;
  std::vector<std::vector<Perm>> generators;  // per type
  Limits limits;
  int radius = 3;
  unsigned seed = 0;
  std::vector<std::string> suites;

  Diagram diagram() const { return Diagram(types, m, q, limits); }
  LocalData local_data() const;
};

Config parse_config_text(const std::string& text, const std::string& origin = "<string>");
Config parse_config_file(const std::string& path);

// Implosion class syntax: "1:0|1,2;2:*" (| separates classes, * = universal,
// unmentioned types keep the equality relation). Colour classes are returned
// per type in declaration order.
std::vector<std::vector<std::vector<int>>> parse_class_spec(const Diagram& d,
                                                            const std::string& spec);

}  // namespace rab
