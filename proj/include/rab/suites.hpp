#pragma once

#include <string>
#include <vector>

#include "rab/config.hpp"
#include "rab/implosion.hpp"
#include "rab/predicates.hpp"
#include "rab/universal.hpp"

namespace rab {

struct CheckLine {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string config_name;
  bool passed = true;
  std::vector<CheckLine> checks;
};

struct SuiteOptions {
  int radius = 3;
  unsigned seed = 0;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite (or "all") against a config. Deterministic given the
// config and seed.
std::vector<SuiteReport> run_suite(const std::string& name, const Config& cfg,
                                   const SuiteOptions& options);

// The built-in instance matrix used when no config is given.
std::vector<Config> default_matrix();

std::string render_reports_text(const std::vector<SuiteReport>& reports);
std::string render_reports_json(const std::vector<SuiteReport>& reports);

bool all_passed(const std::vector<SuiteReport>& reports);

// The individual check batteries, reusable by the acceptance tests.
std::vector<CheckLine> check_colouring(Universe& u, int radius, unsigned seed);
std::vector<CheckLine> check_squares(Universe& u, int radius);
std::vector<CheckLine> check_geometry(Universe& u, int radius, unsigned seed);
std::vector<CheckLine> check_extension(Universe& u, int radius);
std::vector<CheckLine> check_orbits(Universe& u, unsigned seed);
std::vector<CheckLine> check_implosion(Universe& u, int radius);
std::vector<CheckLine> check_compgen(Universe& u);
std::vector<CheckLine> check_primitivity(Universe& u);
std::vector<CheckLine> check_parallel_actions(Universe& u, int radius, unsigned seed, int samples);
std::vector<CheckLine> check_uplus_separation(Universe& u);
std::vector<CheckLine> check_verdict_consistency(Universe& u);

}  // namespace rab
