// Copyright 2026 The emck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the emck model checker. Every function returns an
 * emck_status; strings handed out through `char**` belong to the caller and
 * are released with emck_string_free. The last error message is kept per
 * thread. */

#ifndef EMCK_EMCK_H_
#define EMCK_EMCK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EMCK_API __declspec(dllexport)
#else
#define EMCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes for the command-line tool. */
typedef enum emck_status {
  EMCK_OK = 0,
  EMCK_FAILED = 1,     /* a check failed or a claim was falsified */
  EMCK_PARSE = 2,      /* malformed input */
  EMCK_INVARIANT = 3,  /* well-formed input that violates a model invariant */
  EMCK_HYPOTHESIS = 4, /* a claim's hypotheses do not hold */
  EMCK_USAGE = 64,     /* bad arguments, unreadable files, exhausted budgets */
  EMCK_INTERNAL = 70
} emck_status;

typedef enum emck_format { EMCK_TEXT = 0, EMCK_JSON = 1 } emck_format;

/* emck_model_parse / emck_model_load flags */
#define EMCK_ALLOW_NULL_CELLS 0x1u /* accept P-cells of prior measure zero */

typedef struct emck_model emck_model;

EMCK_API const char* emck_version(void);

/* Message of the last failing call on this thread, "" if none. */
EMCK_API const char* emck_last_error(void);
/* Error kind name of the last failing call ("Syntax", "NotMeasurable", ...). */
EMCK_API const char* emck_last_error_kind(void);
/* 1-based source position of the last error, 0 when it has none. */
EMCK_API int emck_last_error_line(void);
EMCK_API int emck_last_error_column(void);
EMCK_API void emck_string_free(char* s);

/* Caps the atom count of enumerated algebras; values outside [1, 24] are rejected. */
EMCK_API emck_status emck_set_max_atoms(int cap);

EMCK_API emck_status emck_model_parse(const char* text, size_t length, unsigned flags, emck_model** out);
EMCK_API emck_status emck_model_load(const char* path, unsigned flags, emck_model** out);
EMCK_API void emck_model_free(emck_model* model);

/* Summary of a model that passed every structural check. */
EMCK_API emck_status emck_validate(const emck_model* model, emck_format format, char** report);

/* `axioms` is a comma-separated list of checker names or "all"; `agent` is a
 * name or "all". EMCK_FAILED when any check fails. */
EMCK_API emck_status emck_check(const emck_model* model, const char* axioms, const char* agent, emck_format format,
                                char** report);

/* EMCK_OK when the claim holds, EMCK_FAILED when falsified and
 * EMCK_HYPOTHESIS when its hypotheses fail. With `diagnostic` set, unmet
 * hypotheses do not stop the run and only the stated conclusion decides.
 * Single-agent claims run for `agent` (a name, "all" or NULL for all). */
EMCK_API emck_status emck_verify(const emck_model* model, const char* claim, const char* agent, int diagnostic,
                                 emck_format format, char** report);

/* Evaluates an operator expression; `at` (may be NULL) names a state whose
 * membership is reported as well. */
EMCK_API emck_status emck_eval(const emck_model* model, const char* expr, const char* at, emck_format format,
                               char** result);

/* Canonical text of the model. */
EMCK_API emck_status emck_serialize(const emck_model* model, int expand_types, char** text);

/* Rebuilds a document with one side of every agent derived from the other;
 * `mode` is "bayes-from-poss" or "poss-from-type". */
EMCK_API emck_status emck_canonical(const char* text, size_t length, const char* mode, int expand_types,
                                    char** out);

/* Claims accepted by emck_verify and emck_search, newline separated. */
EMCK_API emck_status emck_claims(char** names);

typedef struct emck_search_params {
  const char* claim;
  int states;       /* maximum state count; 0 keeps the claim default */
  int agents;       /* 0 keeps the claim default */
  int denominator;  /* 0 keeps the claim default */
  const char* mode; /* "exhaustive", "random" or NULL for the claim default */
  uint64_t seed;
  uint64_t budget;  /* 0 is rejected */
  int budget_set;   /* nonzero when `budget` overrides the claim default */
  unsigned workers;
} emck_search_params;

/* EMCK_OK when nothing was found, EMCK_FAILED with `model` set to the
 * counterexample's canonical text. `model` may be NULL. */
EMCK_API emck_status emck_search(const emck_search_params* params, emck_format format, char** report, char** model);

#ifdef __cplusplus
}
#endif

#endif /* EMCK_EMCK_H_ */
