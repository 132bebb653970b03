// rabkit command line: thin front-end over the shared C API.

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "rabkit.h"

namespace {

struct UniverseDeleter {
  void operator()(rab_universe* u) const { rab_universe_destroy(u); }
};
using UniversePtr = std::unique_ptr<rab_universe, UniverseDeleter>;

int exit_code(rab_status status) {
  switch (status) {
    case RAB_OK:
      return 0;
    case RAB_E_CHECK:
      return 1;
    default:
      return 2;
  }
}

int finish(rab_status status, char* out) {
  if (out != nullptr) {
    std::fputs(out, stdout);
    rab_string_free(out);
  }
  if (status != RAB_OK && status != RAB_E_CHECK) {
    std::fprintf(stderr, "rabkit: %s\n", rab_last_error());
  }
  return exit_code(status);
}

UniversePtr open_universe(const std::string& path) {
  UniversePtr u(rab_universe_create_from_file(path.c_str()));
  if (!u) std::fprintf(stderr, "rabkit: %s\n", rab_last_error());
  return u;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational kernel for right-angled buildings and their universal groups"};
  app.require_subcommand(1);

  std::string config_path;
  std::string word = "e";
  std::string gallery;
  std::string panel = "e:1";
  std::string perm = "id";
  std::string classes;
  std::string suite = "all";
  int radius = 2;
  unsigned seed = 0;
  bool as_json = false;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit JSON"); };

  CLI::App* info = app.add_subcommand("info", "verdicts for an instance");
  info->add_option("config", config_path, "config file")->required();
  add_json(info);

  CLI::App* colour = app.add_subcommand("colour", "colour vector of a chamber");
  colour->add_option("config", config_path, "config file")->required();
  colour->add_option("--chamber", word, "word literal, e.g. \"1:2,2:1\"");
  add_json(colour);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a gallery from the base chamber");
  reduce->add_option("config", config_path, "config file")->required();
  reduce->add_option("--gallery", gallery, "letters walked from the base chamber")->required();
  add_json(reduce);

  CLI::App* extend = app.add_subcommand("extend", "extend a local permutation along a panel");
  extend->add_option("config", config_path, "config file")->required();
  extend->add_option("--panel", panel, "panel spec '<word>:<type>'")->required();
  extend->add_option("--perm", perm, "permutation in cycle notation")->required();
  extend->add_option("--radius", radius, "action table radius");
  add_json(extend);

  CLI::App* orbits = app.add_subcommand("orbits", "orbit classes on a ball");
  orbits->add_option("config", config_path, "config file")->required();
  orbits->add_option("--radius", radius, "ball radius");
  add_json(orbits);

  CLI::App* implode = app.add_subcommand("implode", "collapse colour classes");
  implode->add_option("config", config_path, "config file")->required();
  implode->add_option("--classes", classes, "class spec, e.g. \"1:0|1,2;2:*\"")->required();
  add_json(implode);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("config", config_path, "config file (omit for the built-in matrix)");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--radius", radius, "check radius")->default_val(3);
  verify->add_option("--seed", seed, "seed for sampled checks");
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  char* out = nullptr;
  if (info->parsed()) {
    UniversePtr u = open_universe(config_path);
    if (!u) return 2;
    rab_status status = rab_info(u.get(), as_json, &out);
    return finish(status, out);
  }
  if (colour->parsed()) {
    UniversePtr u = open_universe(config_path);
    if (!u) return 2;
    rab_status status = rab_colour(u.get(), word.c_str(), as_json, &out);
    return finish(status, out);
  }
  if (reduce->parsed()) {
    UniversePtr u = open_universe(config_path);
    if (!u) return 2;
    rab_status status = rab_reduce(u.get(), gallery.c_str(), as_json, &out);
    return finish(status, out);
  }
  if (extend->parsed()) {
    UniversePtr u = open_universe(config_path);
    if (!u) return 2;
    rab_status status = rab_extend(u.get(), panel.c_str(), perm.c_str(), radius, as_json, &out);
    return finish(status, out);
  }
  if (orbits->parsed()) {
    UniversePtr u = open_universe(config_path);
    if (!u) return 2;
    rab_status status = rab_orbits(u.get(), radius, as_json, &out);
    return finish(status, out);
  }
  if (implode->parsed()) {
    UniversePtr u = open_universe(config_path);
    if (!u) return 2;
    rab_status status = rab_implode(u.get(), classes.c_str(), as_json, &out);
    return finish(status, out);
  }
  if (verify->parsed()) {
    UniversePtr u;
    if (!config_path.empty()) {
      u = open_universe(config_path);
      if (!u) return 2;
    }
    rab_status status = rab_verify(u.get(), suite.c_str(), radius, seed, as_json, &out);
    return finish(status, out);
  }
  return 2;
}
