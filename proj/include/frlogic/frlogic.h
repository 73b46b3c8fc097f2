/* Copyright 2026 The frlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the frlogic core.
 *
 * Every function returning frl_status leaves a message for frl_last_error()
 * on failure. Strings returned through char** are owned by the caller and
 * released with frl_string_free(). Handles are released with their _free
 * function; passing NULL to a _free function is a no-op.
 */

#ifndef FRLOGIC_FRLOGIC_H
#define FRLOGIC_FRLOGIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(FRLOGIC_BUILDING)
#define FRL_API __attribute__((visibility("default")))
#else
#define FRL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frl_status {
  FRL_OK = 0,
  FRL_ERR_PARSE = 1,         /* malformed formula or trace */
  FRL_ERR_ARG = 2,           /* bad argument, NULL pointer, unknown name */
  FRL_NOT_DERIVABLE = 3,     /* search reached its fixpoint without the goal */
  FRL_ERR_ABORTED = 4,       /* search hit its resource cap */
  FRL_CHECK_FAILED = 5,      /* a trace or identity did not verify */
  FRL_ERR_INTERNAL = 6
} frl_status;

typedef enum frl_format { FRL_FORMAT_TEXT = 0, FRL_FORMAT_JSON = 1 } frl_format;
typedef enum frl_mode { FRL_MODE_NAIVE = 0, FRL_MODE_CONTEXTUAL = 1 } frl_mode;

typedef struct frl_formula frl_formula;
typedef struct frl_trace frl_trace;
typedef struct frl_sim frl_sim;

FRL_API const char* frl_version(void);
/* Message of the last failure on the calling thread, "" if none. */
FRL_API const char* frl_last_error(void);
FRL_API void frl_string_free(char* s);

/* One of trace, debug, info, warn, error, critical, off. Logs go to stderr;
 * the default level is warn. */
FRL_API frl_status frl_set_log_level(const char* level);

/* ---- formulas ---- */

FRL_API frl_status frl_formula_parse(const char* text, frl_formula** out);
FRL_API void frl_formula_free(frl_formula* f);
/* Canonical text; parse(text(f)) == f. */
FRL_API frl_status frl_formula_text(const frl_formula* f, char** out);
FRL_API frl_status frl_formula_size(const frl_formula* f, size_t* out);
/* Same formula with context tags removed. */
FRL_API frl_status frl_formula_erase_contexts(const frl_formula* f, frl_formula** out);

/* ---- derivations ---- */

/* Naive-trust contradiction for agent "W2", "F1", "F2" or "W1". With
 * direct == 0 the search is staged through the agent's intermediate
 * conclusion; otherwise a single unrestricted search is run. depth <= 0
 * selects the default. */
FRL_API frl_status frl_derive_contradiction(const char* agent, int depth, int direct, frl_trace** out);
FRL_API void frl_trace_free(frl_trace* t);
FRL_API size_t frl_trace_length(const frl_trace* t);
/* Text: numbered steps. JSON: one record per step. */
FRL_API frl_status frl_trace_format(const frl_trace* t, frl_format fmt, char** out);
/* Conclusion of step n (1-based). */
FRL_API frl_status frl_trace_step(const frl_trace* t, size_t n, frl_formula** out);
FRL_API frl_status frl_trace_parse_jsonl(const char* text, frl_trace** out);
/* Replays every step against the premises and run facts of `mode`. Returns
 * FRL_CHECK_FAILED with *failed_step set (1-based) when a step is invalid. */
FRL_API frl_status frl_trace_check(const frl_trace* t, frl_mode mode, size_t* failed_step);

typedef struct frl_block_info {
  size_t fixpoint_size;
  int depth;
  int rounds;
  int fixpoint;
} frl_block_info;

/* Depth the contextual search uses by default. */
FRL_API frl_status frl_block_depth(int* out);
/* Contextual search to fixpoint. FRL_OK when no contradiction is derivable,
 * FRL_CHECK_FAILED when one is, FRL_ERR_ABORTED on the resource cap.
 * depth <= 0 selects frl_block_depth(). */
FRL_API frl_status frl_certify_block(int depth, frl_block_info* out);
FRL_API frl_status frl_block_format(const frl_block_info* info, frl_format fmt, char** out);

/* ---- checks and report ---- */

/* Exact quantum identities and derivation checks, one line each.
 * *all_pass is 1 when every check passes. */
FRL_API frl_status frl_run_checks(frl_format fmt, char** out, int* all_pass);
FRL_API frl_status frl_report(frl_format fmt, char** out);

/* ---- simulation ---- */

typedef struct frl_trial {
  uint64_t trial_index; /* 1-based */
  int f1;               /* 0 phi, 1 psi */
  int f2;
  int w1;               /* 0 nonnull, 1 null */
  int w2;
  int halted;           /* both nonnull */
  char probability[32]; /* exact, e.g. "1/12" */
} frl_trial;

FRL_API frl_status frl_sim_create(uint64_t seed, frl_sim** out);
FRL_API void frl_sim_free(frl_sim* s);
FRL_API frl_status frl_sim_step(frl_sim* s, frl_trial* out);
/* Text record or JSON line for one trial, without the newline. */
FRL_API frl_status frl_trial_format(const frl_trial* t, frl_format fmt, char** out);
/* The eight scenarios with exact probabilities. */
FRL_API frl_status frl_scenario_table(frl_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FRLOGIC_FRLOGIC_H */
