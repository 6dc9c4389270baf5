// Copyright 2026 The Submax Authors.
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

/* C interface to the submax library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every call that
 * can fail returns an smx_status; the message of the most recent failure on
 * the calling thread is available from smx_last_error(). */

#ifndef SUBMAX_SUBMAX_H_
#define SUBMAX_SUBMAX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SMX_EXPORT __declspec(dllexport)
#else
#define SMX_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smx_status {
  SMX_OK = 0,
  SMX_INVALID_ARGUMENT = 1,
  SMX_INVALID_SUBSET = 2,
  SMX_PARSE_ERROR = 3,
  SMX_IO_ERROR = 4,
  SMX_TOO_LARGE = 5,
  SMX_UNKNOWN_NAME = 6,
  SMX_INTERNAL_ERROR = 99
} smx_status;

typedef struct smx_instance smx_instance;
typedef struct smx_result smx_result;

SMX_EXPORT const char* smx_last_error(void);
SMX_EXPORT const char* smx_status_name(smx_status status);

/* Instances. `objective` is one of image, movie, revenue, synthetic-cut. */

/* `spec` is "n=..,p=..,dim=..,lambda=.."; NULL or "" keeps the defaults. */
SMX_EXPORT smx_status smx_instance_generate(const char* objective, const char* spec,
                                            uint64_t seed, smx_instance** out);
/* Similarity kinds read a CSV matrix, graph kinds an edge list. A
 * node_count <= 0 infers it from the largest id. */
SMX_EXPORT smx_status smx_instance_load(const char* objective, const char* path,
                                        int node_count, double lambda,
                                        smx_instance** out);
SMX_EXPORT smx_status smx_instance_save(const smx_instance* instance, const char* path);
SMX_EXPORT void smx_instance_free(smx_instance* instance);
SMX_EXPORT int smx_instance_size(const smx_instance* instance);
/* 1 when a similarity matrix has negative entries, which voids
 * nonnegativity of the image and movie objectives. */
SMX_EXPORT int smx_instance_has_negative_similarity(const smx_instance* instance);
/* f(members), outside any query ledger. */
SMX_EXPORT smx_status smx_instance_evaluate(const smx_instance* instance,
                                            const int32_t* members, size_t count,
                                            double* value);

/* Single runs. */

typedef struct smx_run_options {
  const char* algorithm; /* anm, greedy, random or rlg */
  int k;
  double eps;      /* <= 0 selects the algorithm's default */
  double delta;
  int64_t samples; /* estimator sample count; 0 selects the theoretical one */
  int parallelism;
  uint64_t seed;
} smx_run_options;

SMX_EXPORT void smx_run_options_init(smx_run_options* options);
SMX_EXPORT smx_status smx_run(const smx_instance* instance, const smx_run_options* options,
                              smx_result** out);
SMX_EXPORT void smx_result_free(smx_result* result);
SMX_EXPORT double smx_result_value(const smx_result* result);
SMX_EXPORT size_t smx_result_solution(const smx_result* result, const int32_t** members);
SMX_EXPORT int smx_result_rounds(const smx_result* result);
SMX_EXPORT int64_t smx_result_queries(const smx_result* result);
/* Queries issued in each round; smx_result_rounds() entries. */
SMX_EXPORT const int64_t* smx_result_round_queries(const smx_result* result);
/* Solution value after each round; smx_result_rounds() entries. */
SMX_EXPORT const double* smx_result_round_values(const smx_result* result);

/* Experiment sweeps writing trace and summary CSV files. */

typedef struct smx_experiment_config {
  const char* objective;
  const char* data_path;  /* NULL: synthetic instance */
  const char* synthetic;  /* synthetic spec, as for smx_instance_generate */
  int node_count;         /* <= 0: inferred */
  double lambda;          /* < 0: default */
  const char* algorithm;
  const int* ks;
  size_t k_count;
  double eps;             /* <= 0: the algorithm's default */
  double delta;
  int trials;
  uint64_t seed;
  int64_t samples;        /* 0: theoretical */
  int parallelism;
  const char* out_path;   /* summary CSV; NULL to skip */
  const char* trace_path; /* per-round trace CSV; NULL to skip */
  const char* debug_trace_path; /* threshold-sampling JSON lines; NULL to skip */
  int timestamp;          /* nonzero: leading "# generated" comment line */
} smx_experiment_config;

SMX_EXPORT void smx_experiment_config_init(smx_experiment_config* config);
SMX_EXPORT smx_status smx_run_experiment(const smx_experiment_config* config);

/* Acceptance suites. */

typedef void (*smx_line_sink)(const char* line, void* user);

/* Runs `suite`, passing one report line per criterion to `sink`, and sets
 * *all_passed. */
SMX_EXPORT smx_status smx_run_acceptance(const char* suite, uint64_t seed,
                                         smx_line_sink sink, void* user,
                                         int* all_passed);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SUBMAX_SUBMAX_H_ */
