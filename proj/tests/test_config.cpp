#include <cstdlib>

#include "doctest.h"
#include "rab/config.hpp"
#include "rab/suites.hpp"

using namespace rab;

TEST_CASE("minimal config parses") {
  Config cfg = parse_config_text(R"({
    "types": ["1", "2"],
    "m": [[1, "inf"], ["inf", 1]],
    "q": {"1": 3, "2": 3},
    "groups": {"1": [[1, 0, 2], [1, 2, 0]], "2": [[1, 0, 2], [1, 2, 0]]}
  })");
  CHECK(cfg.types.size() == 2);
  Diagram d = cfg.diagram();
  CHECK(d.q(0) == 3);
  LocalData local = cfg.local_data();
  CHECK(local.at(0).order() == 6);
}

TEST_CASE("validation errors name the offending key") {
  // generator degree mismatch names the type
  try {
    parse_config_text(R"({
      "types": ["1", "2"],
      "m": [[1, "inf"], ["inf", 1]],
      "q": {"1": 3, "2": 3},
      "groups": {"2": [[1, 0]]}
    })");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'2'") != std::string::npos);
  }

  // right-angled only
  CHECK_THROWS_AS(parse_config_text(R"({
    "types": ["1", "2"],
    "m": [[1, 3], [3, 1]],
    "q": {"1": 2, "2": 2}
  })"),
                  Error);

  // malformed JSON is a parse error
  try {
    parse_config_text("{nope");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
  }

  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.json"), Error);
}

TEST_CASE("class spec parsing") {
  Config cfg = parse_config_text(R"({
    "types": ["1", "2"],
    "m": [[1, "inf"], ["inf", 1]],
    "q": {"1": 3, "2": 3}
  })");
  Diagram d = cfg.diagram();
  auto classes = parse_class_spec(d, "1:0|1,2;2:*");
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(classes[1] == std::vector<std::vector<int>>{{0, 1, 2}});
  // unmentioned types keep the equality relation
  auto equality = parse_class_spec(d, "1:0,1|2");
  CHECK(equality[1] == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK_THROWS_AS(parse_class_spec(d, "junk"), Error);
}

TEST_CASE("limits from the environment") {
  setenv("RABKIT_LIMITS", "radius=8,elements=20000", 1);
  Limits lim;
  lim.apply_env();
  CHECK(lim.max_radius == 8);
  CHECK(lim.element_bound == 20000);
  setenv("RABKIT_LIMITS", "bogus=1", 1);
  Limits bad;
  CHECK_THROWS_AS(bad.apply_env(), Error);
  unsetenv("RABKIT_LIMITS");
}

TEST_CASE("suites are named and dispatched") {
  CHECK(is_suite_name("colouring"));
  CHECK(is_suite_name("all"));
  CHECK_FALSE(is_suite_name("nonsense"));
  Config cfg = default_matrix().front();
  CHECK_THROWS_AS(run_suite("nonsense", cfg, SuiteOptions{}), Error);
}

TEST_CASE("default matrix covers the three diagrams") {
  auto matrix = default_matrix();
  CHECK(matrix.size() == 6);
  int rank2 = 0;
  int rank3 = 0;
  for (const Config& cfg : matrix) {
    Diagram d = cfg.diagram();
    (d.rank() == 2 ? rank2 : rank3)++;
    (void)cfg.local_data();  // validates degrees
  }
  CHECK(rank2 == 3);
  CHECK(rank3 == 3);
}

TEST_CASE("suite reports are byte-stable") {
  Config cfg = default_matrix()[0];  // the thin tree is cheap
  SuiteOptions opt;
  opt.radius = 2;
  auto r1 = run_suite("colouring", cfg, opt);
  auto r2 = run_suite("colouring", cfg, opt);
  CHECK(render_reports_text(r1) == render_reports_text(r2));
  CHECK(render_reports_json(r1) == render_reports_json(r2));
}
