/* rabkit — computational kernel for semiregular right-angled buildings and
 * their universal groups.
 *
 * All functions return a rab_status; outputs are heap-allocated strings that
 * the caller releases with rab_string_free. On failure, rab_last_error()
 * returns a human-readable message for the calling thread.
 */
#ifndef RABKIT_H
#define RABKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rab_universe rab_universe;

typedef enum rab_status {
  RAB_OK = 0,
  RAB_E_CHECK = 1,    /* a verification suite reported failures */
  RAB_E_USAGE = 2,    /* bad arguments (unknown suite, missing file, ...) */
  RAB_E_PARSE = 3,    /* malformed config, word, permutation or class spec */
  RAB_E_VALIDATE = 4, /* well-formed input violating a contract */
  RAB_E_LIMIT = 5,    /* a safety cap was exceeded */
  RAB_E_INTERNAL = 6  /* internal consistency failure */
} rab_status;

const char* rab_version(void);
const char* rab_last_error(void);
void rab_string_free(char* s);

/* Creates a universe (building + colouring + local groups) from a JSON
 * config; NULL on failure. */
rab_universe* rab_universe_create(const char* config_json, const char* origin);
rab_universe* rab_universe_create_from_file(const char* path);
void rab_universe_destroy(rab_universe* u);

/* Verdict report for the instance. */
rab_status rab_info(rab_universe* u, int as_json, char** out);

/* Colour vector of the chamber given as a word literal ("1:2,2:1"; "e" is
 * the base chamber). */
rab_status rab_colour(rab_universe* u, const char* word, int as_json, char** out);

/* Reduces the gallery walked from the base chamber along the given letters
 * (colour 0 steps toward the gate are allowed); prints the reduced gallery,
 * the distance and the delta word. */
rab_status rab_reduce(rab_universe* u, const char* gallery, int as_json, char** out);

/* Extends the permutation (cycle notation) along the panel "word:type" and
 * prints the action table on ball(base, radius). */
rab_status rab_extend(rab_universe* u, const char* panel, const char* perm, int radius,
                      int as_json, char** out);

/* Orbit classes (harmony) and the bounded chamber-stabiliser closures on
 * ball(base, radius). */
rab_status rab_orbits(rab_universe* u, int radius, int as_json, char** out);

/* Implosion along the class spec ("1:0|1,2;2:*"); prints the target
 * parameters and sample images. */
rab_status rab_implode(rab_universe* u, const char* classes, int as_json, char** out);

/* Runs a verification suite ("colouring", "squares", "geometry",
 * "extension", "orbits", "implosion", "compgen", "primitivity" or "all").
 * With a NULL universe the built-in instance matrix is used. Returns
 * RAB_E_CHECK when checks fail. */
rab_status rab_verify(rab_universe* u, const char* suite, int radius, unsigned seed, int as_json,
                      char** out);

#ifdef __cplusplus
}
#endif

#endif /* RABKIT_H */
