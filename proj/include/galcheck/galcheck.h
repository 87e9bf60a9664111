// Copyright 2026 The galcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GALCHECK_GALCHECK_H_
#define GALCHECK_GALCHECK_H_

/* C interface to the galcheck model checker. Handles are opaque. Every
 * fallible call returns a status; on failure galcheck_last_error() holds a
 * message for the calling thread. Strings returned through `char**` are
 * owned by the caller and released with galcheck_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(GALCHECK_BUILDING)
#define GALCHECK_API __attribute__((visibility("default")))
#else
#define GALCHECK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum galcheck_status {
  GALCHECK_OK = 0,
  GALCHECK_E_PARSE = 1,
  GALCHECK_E_SORT = 2,
  GALCHECK_E_UNKNOWN_IDENTIFIER = 3,
  GALCHECK_E_VALIDATION = 4,
  GALCHECK_E_SCHEMA = 5,
  GALCHECK_E_BINDING = 6,
  GALCHECK_E_INTERPRETATION = 7,
  GALCHECK_E_INVALID_ARGUMENT = 8,
  GALCHECK_E_LIMIT = 9,
  GALCHECK_E_IO = 10,
  GALCHECK_E_INTERNAL = 11
} galcheck_status;

typedef enum galcheck_concept {
  GALCHECK_NE = 0,
  GALCHECK_SPE = 1
} galcheck_concept;

typedef struct galcheck_structure galcheck_structure;
typedef struct galcheck_game galcheck_game;

/* Assigns the element labelled `element` to the free variable `variable`. */
typedef struct galcheck_binding {
  const char* variable;
  const char* element;
} galcheck_binding;

GALCHECK_API const char* galcheck_version(void);
GALCHECK_API const char* galcheck_status_name(galcheck_status status);
/* Message of the last failure on this thread; "" if none. */
GALCHECK_API const char* galcheck_last_error(void);
GALCHECK_API void galcheck_string_free(char* s);

/* Structures */
GALCHECK_API galcheck_status galcheck_structure_load(const char* json, size_t length,
                                                     galcheck_structure** out);
GALCHECK_API galcheck_status galcheck_structure_load_file(const char* path,
                                                          galcheck_structure** out);
GALCHECK_API galcheck_status galcheck_structure_dump(const galcheck_structure* s, char** out_json);
GALCHECK_API void galcheck_structure_free(galcheck_structure* s);
GALCHECK_API size_t galcheck_structure_state_count(const galcheck_structure* s);
GALCHECK_API size_t galcheck_structure_action_count(const galcheck_structure* s);

/* Evaluates `formula` and writes the result object. `all_initial` (may be
 * NULL) is set to 1 iff every initial state satisfies the formula. Every
 * free variable needs a binding and every binding must name one. */
GALCHECK_API galcheck_status galcheck_check(const galcheck_structure* s, const char* formula,
                                            const galcheck_binding* bindings,
                                            size_t binding_count, char** out_json,
                                            int* all_initial);

/* Games */
GALCHECK_API galcheck_status galcheck_game_load(const char* json, size_t length,
                                                galcheck_game** out);
GALCHECK_API galcheck_status galcheck_game_load_file(const char* path, galcheck_game** out);
GALCHECK_API void galcheck_game_free(galcheck_game* g);
/* Saturates at UINT64_MAX. */
GALCHECK_API uint64_t galcheck_game_profile_count(const galcheck_game* g);
GALCHECK_API galcheck_status galcheck_game_to_structure(const galcheck_game* g,
                                                        galcheck_structure** out);
/* Enumerates equilibria through the logic and through the direct oracle.
 * `threads` = 0 picks the default. `oracle_agrees` (may be NULL) reports
 * whether both lists match; the JSON lists the logic result. */
GALCHECK_API galcheck_status galcheck_equilibria(const galcheck_game* g, galcheck_concept c,
                                                 unsigned threads, char** out_json,
                                                 int* oracle_agrees);

/* Generators. Policies are "all", "first" or "minimax:<depth>". */
GALCHECK_API galcheck_status galcheck_gen_tictactoe(const char* policy_x, const char* policy_o,
                                                    galcheck_structure** out);
GALCHECK_API galcheck_status galcheck_gen_bimatrix(uint32_t m, uint32_t n, int64_t payoff_bound,
                                                   uint64_t seed, char** out_json);
/* Pure-equilibrium timing over m = n in [min_size, max_size]; bound 0
 * selects constant payoffs. Writes the bench CSV. */
GALCHECK_API galcheck_status galcheck_bench_bimatrix(uint32_t min_size, uint32_t max_size,
                                                     uint32_t trials, int64_t payoff_bound,
                                                     uint64_t seed, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* GALCHECK_GALCHECK_H_ */
