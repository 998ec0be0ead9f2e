/*
 * Copyright 2026 The Proofread Forge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libproofread.
 *
 * Every fallible call returns a pf_status. On failure the message is
 * available from pf_last_error() on the calling thread until the next
 * failing call there. Strings returned through char** are heap-allocated
 * UTF-8 and must be released with pf_free_string(). Output pointers are left
 * untouched on failure.
 *
 * A pf_context holds configuration plus lazily loaded resources (vocabulary,
 * judge, serving model). A context may be shared by threads for the
 * read-only calls (those taking const pf_context*); setters need exclusive
 * access.
 */

#ifndef PROOFREAD_PROOFREAD_H_
#define PROOFREAD_PROOFREAD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PROOFREAD_BUILDING_LIBRARY)
#define PF_API __attribute__((visibility("default")))
#else
#define PF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_INVALID_ARGUMENT = 1,
  PF_ERR_IO = 2,
  PF_ERR_UNKNOWN_CHARACTER = 3,
  PF_ERR_OUT_OF_RANGE = 4,
  PF_ERR_JUDGE_UNAVAILABLE = 5,
  PF_ERR_INTERNAL = 6
} pf_status;

typedef struct pf_context pf_context;

PF_API const char* pf_version(void);
PF_API const char* pf_status_name(pf_status status);
PF_API const char* pf_last_error(void);
PF_API void pf_free_string(char* s);

/* Context ------------------------------------------------------------- */

/* config_path: optional JSON config file. overrides_json: optional JSON
 * object merged over the file (RFC 7386 merge patch). Either may be NULL. */
PF_API pf_status pf_context_create(const char* config_path,
                                   const char* overrides_json,
                                   pf_context** out);
PF_API void pf_context_destroy(pf_context* ctx);

PF_API pf_status pf_context_set_seed(pf_context* ctx, uint64_t seed);
PF_API pf_status pf_context_set_jobs(pf_context* ctx, size_t jobs);
PF_API pf_status pf_context_set_sigma(pf_context* ctx, double sigma);
PF_API pf_status pf_context_set_vocab(pf_context* ctx, const char* tsv_path);
/* kind: "rule" or "http"; endpoint is required for "http". */
PF_API pf_status pf_context_set_judge(pf_context* ctx, const char* kind,
                                      const char* endpoint);
/* Effective configuration as JSON. */
PF_API pf_status pf_context_config(const pf_context* ctx, char** out_json);

/* Keyboard ------------------------------------------------------------ */

/* ch: one UTF-8 character on the built-in QWERTY layout. */
PF_API pf_status pf_key_center(const char* ch, double* x, double* y);
PF_API pf_status pf_nearest_key(double x, double y, char** out_ch);

/* Corruption ---------------------------------------------------------- */

/* {"corrupted": str, "edits": [...]}; uses the context's corruption config
 * and seed. */
PF_API pf_status pf_corrupt(const pf_context* ctx, const char* text,
                            char** out_json);
PF_API pf_status pf_replay(const char* source, const char* edits_json,
                           char** out_text);

/* Keyboard decoding simulation ---------------------------------------- */

/* Decodes one line as line number `index` (seeded from the context seed and
 * the index). With corrupt_first != 0 the line is corrupted first.
 * Output: {"input", "corrupted", "literal", "corrected", "per_word"}. */
PF_API pf_status pf_decode_line(const pf_context* ctx, const char* line,
                                size_t index, int corrupt_first,
                                char** out_json);
/* File form: one JSON object per input line. */
PF_API pf_status pf_decode_file(const pf_context* ctx, const char* input_path,
                                const char* output_path, int corrupt_first,
                                char** out_stats_json);

/* Dataset pipeline ---------------------------------------------------- */

PF_API pf_status pf_post_rules(const char* text, const char* reference,
                               char** out_text);
PF_API pf_status pf_run_pipeline(const pf_context* ctx, const char* input_path,
                                 const char* output_path,
                                 char** out_stats_json);

/* Metrics ------------------------------------------------------------- */

PF_API pf_status pf_evaluate(const pf_context* ctx, const char* dataset_path,
                             const char* answers_path, int per_example,
                             char** out_report_json);

/* Rewards ------------------------------------------------------------- */

/* kind: "global", "direct" or NULL for the configured kind. Candidate lines
 * are plain text, or JSON objects {"candidate", "policy_logp",
 * "reference_logp"} to apply the KL term. Writes JSONL to output_path, or
 * returns it through out_jsonl when output_path is NULL. */
PF_API pf_status pf_score_rewards(const pf_context* ctx,
                                  const char* dataset_path,
                                  const char* candidates_path,
                                  const char* kind, const char* output_path,
                                  char** out_jsonl);
PF_API pf_status pf_reward_kl(double reward, const double* policy_logp,
                              const double* reference_logp, size_t n,
                              double kl_beta, double* out);

/* Serving simulation -------------------------------------------------- */

PF_API pf_status pf_pick_bucket(const pf_context* ctx, size_t token_len,
                                size_t* out_bucket);
/* mode: "baseline" or "speculative". Output: {"text", "target_calls", ...}. */
PF_API pf_status pf_serve_document(const pf_context* ctx, const char* document,
                                   const char* mode, char** out_json);
/* Benchmarks both modes over the sources of a JSONL dataset; `mode` picks the
 * headline numbers of the report. */
PF_API pf_status pf_serve_bench(const pf_context* ctx, const char* dataset_path,
                                const char* mode, int with_traces,
                                char** out_report_json);

/* Calibration --------------------------------------------------------- */

PF_API pf_status pf_calibrate_sigma(const char* sample_path,
                                    double target_error, uint64_t seed,
                                    char** out_json);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* PROOFREAD_PROOFREAD_H_ */
