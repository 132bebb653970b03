// Exercises the shared C API surface the way the CLI does.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "rabkit.h"

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "FAIL: %s (last error: %s)\n", what, rab_last_error());
    ++failures;
  }
}

const char* kTreeConfig = R"({
  "name": "tree33-sym",
  "types": ["1", "2"],
  "m": [[1, "inf"], ["inf", 1]],
  "q": {"1": 3, "2": 3},
  "groups": {"1": [[1,0,2],[1,2,0]], "2": [[1,0,2],[1,2,0]]}
})";

}  // namespace

int main() {
  expect(std::strlen(rab_version()) > 0, "version string");

  // creation failures leave an error message and no handle
  rab_universe* bad = rab_universe_create("{not json", "inline");
  expect(bad == nullptr, "malformed config rejected");
  expect(std::strlen(rab_last_error()) > 0, "error message populated");

  rab_universe* u = rab_universe_create(kTreeConfig, "inline");
  expect(u != nullptr, "universe created");
  if (u == nullptr) return 1;

  char* out = nullptr;
  expect(rab_info(u, 0, &out) == RAB_OK, "info text");
  expect(out != nullptr && std::strstr(out, "verdict simple: true") != nullptr,
         "simplicity verdict shown");
  rab_string_free(out);
  out = nullptr;

  expect(rab_info(u, 1, &out) == RAB_OK, "info json");
  expect(out != nullptr && std::strstr(out, "\"verdicts\"") != nullptr, "json verdict list");
  rab_string_free(out);
  out = nullptr;

  expect(rab_colour(u, "1:2", 0, &out) == RAB_OK, "colour");
  expect(out != nullptr && std::strstr(out, "1:2") != nullptr, "colour output names chamber");
  rab_string_free(out);
  out = nullptr;

  expect(rab_colour(u, "1:9", 0, &out) == RAB_E_VALIDATE, "out-of-range colour rejected");
  expect(out == nullptr, "no output on failure");

  expect(rab_reduce(u, "1:1,1:0,2:1", 0, &out) == RAB_OK, "reduce");
  expect(out != nullptr && std::strstr(out, "distance 1") != nullptr, "reduced to one step");
  rab_string_free(out);
  out = nullptr;

  expect(rab_extend(u, "e:1", "(0 1)", 1, 0, &out) == RAB_OK, "extend");
  expect(out != nullptr && std::strstr(out, "local action (0 1)") != nullptr, "local action shown");
  rab_string_free(out);
  out = nullptr;

  expect(rab_extend(u, "e:1", "(0 9)", 1, 0, &out) == RAB_E_PARSE, "bad cycle rejected");

  expect(rab_orbits(u, 2, 1, &out) == RAB_OK, "orbits json");
  expect(out != nullptr && std::strstr(out, "harmony_classes") != nullptr, "classes listed");
  rab_string_free(out);
  out = nullptr;

  expect(rab_implode(u, "1:0,1|2;2:*", 0, &out) == RAB_OK, "implode");
  expect(out != nullptr && std::strstr(out, "rank 1") != nullptr, "collapsed rank shown");
  rab_string_free(out);
  out = nullptr;

  expect(rab_verify(u, "squares", 3, 0, 0, &out) == RAB_OK, "verify squares");
  expect(out != nullptr && std::strstr(out, "VERIFY PASS") != nullptr, "verify report");
  rab_string_free(out);
  out = nullptr;

  expect(rab_verify(u, "nonsense", 3, 0, 0, &out) == RAB_E_USAGE, "unknown suite is usage error");

  rab_universe_destroy(u);
  rab_universe_destroy(nullptr);  // must be a no-op

  if (failures == 0) std::printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
