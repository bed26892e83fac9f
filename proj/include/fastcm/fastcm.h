// Copyright 2026 The fastcm Authors.
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

/*
 * C interface to the fastcm library: maximum-entropy configuration models
 * (binary UBCM and weighted UECM), their parameter inference, fast and
 * brute-force samplers, Chung-Lu baselines, synthetic generators and
 * network statistics.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every function returns an fcm_status; on
 * failure fcm_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Output pointers are
 * only written on success, except for the solvers, which also fill their
 * outputs when returning FCM_ERR_NOT_CONVERGED.
 *
 * Handles may be used from several threads as long as no handle is used
 * concurrently; the only mutable handle type is fcm_rng.
 */

#ifndef FASTCM_FASTCM_H_
#define FASTCM_FASTCM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FASTCM_BUILDING)
#    define FCM_API __declspec(dllexport)
#  else
#    define FCM_API __declspec(dllimport)
#  endif
#else
#  define FCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define FCM_VERSION_STRING "1.0.0"

typedef enum fcm_status {
  FCM_OK = 0,
  FCM_ERR_INVALID_ARGUMENT = 1,
  FCM_ERR_CONTRACT = 2,      /* broken internal bound, e.g. p > q */
  FCM_ERR_PARSE = 3,
  FCM_ERR_IO = 4,
  FCM_ERR_NOT_CONVERGED = 5,
  FCM_ERR_INTERNAL = 6
} fcm_status;

typedef enum fcm_sampler_kind {
  FCM_SAMPLER_FAST = 0,
  FCM_SAMPLER_BRUTEFORCE = 1
} fcm_sampler_kind;

typedef struct fcm_rng fcm_rng;
typedef struct fcm_params fcm_params;
typedef struct fcm_edgelist fcm_edgelist;
typedef struct fcm_targets fcm_targets;

typedef struct fcm_solver_options {
  uint64_t max_iterations; /* >= 1, default 10000 */
  double tolerance;        /* > 0, default 1e-8 */
  double damping;          /* (0, 1], default 1 */
} fcm_solver_options;

typedef struct fcm_fit_report {
  uint64_t iterations;
  double residual;
  int converged;
  double wall_seconds;
} fcm_fit_report;

FCM_API const char* fcm_version(void);
FCM_API const char* fcm_last_error(void);
FCM_API const char* fcm_status_name(fcm_status status);

/* ---- probability kernels ---------------------------------------------- */

FCM_API fcm_status fcm_chung_lu_rate(double k_i, double k_j, double m, double* out);
FCM_API fcm_status fcm_ubcm_edge_prob(double alpha_i, double alpha_j, double* out);
FCM_API fcm_status fcm_uecm_edge_prob(double alpha_i, double alpha_j, double beta_i,
                                      double beta_j, double* out);
FCM_API fcm_status fcm_uecm_weight_pmf(int64_t w, double beta_i, double beta_j, double* out);
FCM_API fcm_status fcm_uecm_upper_bound_prob(double alpha_i, double alpha_j, double beta_i,
                                             double beta_j, double beta_min, double* out);
FCM_API fcm_status fcm_uecm_expected_weight(double alpha_i, double alpha_j, double beta_i,
                                            double beta_j, double* out);

/* ---- random streams ---------------------------------------------------- */

/* Identical (seed, stream) pairs reproduce identical draws. */
FCM_API fcm_status fcm_rng_create(uint64_t seed, uint64_t stream, fcm_rng** out);
FCM_API void fcm_rng_destroy(fcm_rng* rng);
/* L >= 1 with P(L) = q (1 - q)^(L - 1); 0 < q <= 1. */
FCM_API fcm_status fcm_geometric_skip(fcm_rng* rng, double q, uint64_t* out);

/* ---- parameters --------------------------------------------------------- */

/* alpha may be +inf for a node that never connects. beta must be finite with
   beta_i + beta_j > 0 for every pair. */
FCM_API fcm_status fcm_params_create_ubcm(const double* alpha, size_t n, fcm_params** out);
FCM_API fcm_status fcm_params_create_uecm(const double* alpha, const double* beta, size_t n,
                                          fcm_params** out);
FCM_API void fcm_params_destroy(fcm_params* params);
FCM_API size_t fcm_params_size(const fcm_params* params);
FCM_API int fcm_params_has_beta(const fcm_params* params);
/* Copies n values into alpha and (UECM only; may be NULL) beta. */
FCM_API fcm_status fcm_params_get(const fcm_params* params, double* alpha, double* beta);
/* File format: header `node,alpha` or `node,alpha,beta`, one row per node. */
FCM_API fcm_status fcm_params_read(const char* path, fcm_params** out);
FCM_API fcm_status fcm_params_write(const fcm_params* params, const char* path);
/* O(N^2) sums; expected_strengths requires UECM parameters. */
FCM_API fcm_status fcm_expected_degrees(const fcm_params* params, double* out);
FCM_API fcm_status fcm_expected_strengths(const fcm_params* params, double* out);

/* ---- inference ---------------------------------------------------------- */

FCM_API void fcm_solver_options_default(fcm_solver_options* opts);
/* opts may be NULL for defaults. Returns FCM_ERR_NOT_CONVERGED (with *out
 * and *report filled) when the tolerance was not reached. */
FCM_API fcm_status fcm_solve_ubcm(const double* k, size_t n, const fcm_solver_options* opts,
                                  fcm_params** out, fcm_fit_report* report);
FCM_API fcm_status fcm_solve_uecm(const double* k, const double* s, size_t n,
                                  const fcm_solver_options* opts, fcm_params** out,
                                  fcm_fit_report* report);

/* Degree (and strength) targets; header `node,degree` or
 * `node,degree,strength`, one row per node. */
FCM_API fcm_status fcm_targets_read(const char* path, fcm_targets** out);
FCM_API void fcm_targets_destroy(fcm_targets* targets);
FCM_API size_t fcm_targets_size(const fcm_targets* targets);
FCM_API int fcm_targets_has_strength(const fcm_targets* targets);
/* s may be NULL; it must be NULL when there are no strengths. */
FCM_API fcm_status fcm_targets_get(const fcm_targets* targets, double* k, double* s);

/* ---- edge lists --------------------------------------------------------- */

FCM_API fcm_status fcm_edgelist_create(size_t n_nodes, int directed, int weighted,
                                       fcm_edgelist** out);
/* Undirected edges are normalized to src < dst; self-loops, duplicates and
 * zero weights are rejected. */
FCM_API fcm_status fcm_edgelist_add(fcm_edgelist* edges, uint64_t src, uint64_t dst,
                                    uint64_t weight);
FCM_API void fcm_edgelist_destroy(fcm_edgelist* edges);
FCM_API size_t fcm_edgelist_num_nodes(const fcm_edgelist* edges);
FCM_API size_t fcm_edgelist_num_edges(const fcm_edgelist* edges);
FCM_API int fcm_edgelist_is_directed(const fcm_edgelist* edges);
FCM_API int fcm_edgelist_is_weighted(const fcm_edgelist* edges);
/* Bipartite partition sizes; returns 0 for non-bipartite lists. */
FCM_API int fcm_edgelist_bipartite(const fcm_edgelist* edges, size_t* plus, size_t* minus);
FCM_API fcm_status fcm_edgelist_get(const fcm_edgelist* edges, size_t index, uint64_t* src,
                                    uint64_t* dst, uint64_t* weight);
/* Original label of a node, or NULL when ids were numeric in the input. */
FCM_API const char* fcm_edgelist_label(const fcm_edgelist* edges, size_t node);

/* Parses `src dst [weight]` text; see the README for the directive lines.
 * warnings (may be NULL) receives the number of cleanup warnings; the text
 * is available through fcm_last_warning(). */
FCM_API fcm_status fcm_edgelist_read(const char* path, int weighted, int directed,
                                     fcm_edgelist** out, size_t* warnings);
FCM_API const char* fcm_last_warning(void);
FCM_API fcm_status fcm_edgelist_write(const fcm_edgelist* edges, const char* path);
/* Writes `node<TAB>label`; does nothing when there are no labels. */
FCM_API fcm_status fcm_edgelist_write_labels(const fcm_edgelist* edges, const char* path);

/* ---- samplers ----------------------------------------------------------- */

/* UBCM or UECM according to the parameter kind. */
FCM_API fcm_status fcm_sample(const fcm_params* params, fcm_sampler_kind kind, fcm_rng* rng,
                              fcm_edgelist** out);
FCM_API fcm_status fcm_sample_chunglu_mh(const double* k, size_t n, fcm_rng* rng,
                                         fcm_edgelist** out);
FCM_API fcm_status fcm_sample_chunglu_stub(const double* k, const double* s, size_t n,
                                           fcm_rng* rng, fcm_edgelist** out);
FCM_API fcm_status fcm_sample_bipartite(const fcm_params* plus, const fcm_params* minus,
                                        fcm_rng* rng, fcm_edgelist** out);
FCM_API fcm_status fcm_sample_directed(const fcm_params* out_params,
                                       const fcm_params* in_params, fcm_rng* rng,
                                       fcm_edgelist** out);

/* ---- synthetic networks ------------------------------------------------- */

FCM_API fcm_status fcm_holme_kim(size_t n, size_t m, double p_triad, fcm_rng* rng,
                                 fcm_edgelist** out);
FCM_API fcm_status fcm_common_neighbor_weights(const fcm_edgelist* edges, fcm_edgelist** out);

/* ---- statistics --------------------------------------------------------- */

/* k_out and s_out hold fcm_edgelist_num_nodes() values; either may be NULL. */
FCM_API fcm_status fcm_degree_and_strength(const fcm_edgelist* edges, double* k_out,
                                           double* s_out);
FCM_API fcm_status fcm_triangle_count(const fcm_edgelist* edges, uint64_t* out);
/* k_ref holds one reference degree per node of the list. */
FCM_API fcm_status fcm_rich_club_density(const fcm_edgelist* edges, const double* k_ref,
                                         double alpha, double* out);
FCM_API fcm_status fcm_log_degree_mse(const double* reference, const double* sampled, size_t n,
                                      double* out);

#ifdef __cplusplus
}
#endif

#endif /* FASTCM_FASTCM_H_ */
