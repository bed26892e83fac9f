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

#include "fastcm/fastcm.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <unordered_set>
#include <variant>

#include "error.hpp"
#include "inference.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "rng.hpp"
#include "samplers.hpp"
#include "synth.hpp"

struct fcm_rng {
  fastcm::RngStream stream;
};

struct fcm_params {
  fastcm::Params value;
};

struct fcm_targets {
  fastcm::Targets value;
};

struct fcm_edgelist {
  fastcm::EdgeList value;
  // Pair keys for duplicate checks in fcm_edgelist_add; built on first use.
  std::unordered_set<std::uint64_t> pairs;
  bool pairs_ready = false;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_warning;

fcm_status fail(fcm_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
fcm_status guard(F&& body) {
  try {
    body();
    return FCM_OK;
  } catch (const fastcm::InvalidArgument& e) {
    return fail(FCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const fastcm::ContractViolation& e) {
    return fail(FCM_ERR_CONTRACT, e.what());
  } catch (const fastcm::ParseError& e) {
    return fail(FCM_ERR_PARSE, e.what());
  } catch (const fastcm::IoError& e) {
    return fail(FCM_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FCM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FCM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FCM_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw fastcm::InvalidArgument(what);
}

std::vector<double> copy_array(const double* values, size_t n) {
  require(values != nullptr || n == 0, "null array");
  return std::vector<double>(values, values + n);
}

fcm_edgelist* wrap(fastcm::EdgeList edges) {
  return new fcm_edgelist{std::move(edges), {}, false};
}

fastcm::SolverOptions solver_options(const fcm_solver_options* opts) {
  fastcm::SolverOptions out;
  if (opts) {
    out.max_iterations = opts->max_iterations;
    out.tolerance = opts->tolerance;
    out.damping = opts->damping;
  }
  return out;
}

void fill_report(const fastcm::FitReport& r, fcm_fit_report* report) {
  if (!report) return;
  report->iterations = r.iterations;
  report->residual = r.residual;
  report->converged = r.converged ? 1 : 0;
  report->wall_seconds = r.wall_seconds;
}

std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

}  // namespace

extern "C" {

const char* fcm_version(void) { return FCM_VERSION_STRING; }

const char* fcm_last_error(void) { return last_error.c_str(); }

const char* fcm_last_warning(void) { return last_warning.c_str(); }

const char* fcm_status_name(fcm_status status) {
  switch (status) {
    case FCM_OK: return "ok";
    case FCM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FCM_ERR_CONTRACT: return "contract violation";
    case FCM_ERR_PARSE: return "parse error";
    case FCM_ERR_IO: return "i/o error";
    case FCM_ERR_NOT_CONVERGED: return "not converged";
    case FCM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

fcm_status fcm_chung_lu_rate(double k_i, double k_j, double m, double* out) {
  return guard([&] {
    require(out, "null output");
    *out = fastcm::chung_lu_rate(k_i, k_j, m);
  });
}

fcm_status fcm_ubcm_edge_prob(double alpha_i, double alpha_j, double* out) {
  return guard([&] {
    require(out, "null output");
    *out = fastcm::ubcm_edge_prob(alpha_i, alpha_j);
  });
}

fcm_status fcm_uecm_edge_prob(double alpha_i, double alpha_j, double beta_i, double beta_j,
                              double* out) {
  return guard([&] {
    require(out, "null output");
    *out = fastcm::uecm_edge_prob(alpha_i, alpha_j, beta_i, beta_j);
  });
}

fcm_status fcm_uecm_weight_pmf(int64_t w, double beta_i, double beta_j, double* out) {
  return guard([&] {
    require(out, "null output");
    *out = fastcm::uecm_weight_pmf(w, beta_i, beta_j);
  });
}

fcm_status fcm_uecm_upper_bound_prob(double alpha_i, double alpha_j, double beta_i,
                                     double beta_j, double beta_min, double* out) {
  return guard([&] {
    require(out, "null output");
    *out = fastcm::uecm_upper_bound_prob(alpha_i, alpha_j, beta_i, beta_j, beta_min);
  });
}

fcm_status fcm_uecm_expected_weight(double alpha_i, double alpha_j, double beta_i,
                                    double beta_j, double* out) {
  return guard([&] {
    require(out, "null output");
    *out = fastcm::uecm_expected_weight(alpha_i, alpha_j, beta_i, beta_j);
  });
}

fcm_status fcm_rng_create(uint64_t seed, uint64_t stream, fcm_rng** out) {
  return guard([&] {
    require(out, "null output");
    *out = new fcm_rng{fastcm::RngStream(seed, stream)};
  });
}

void fcm_rng_destroy(fcm_rng* rng) { delete rng; }

fcm_status fcm_geometric_skip(fcm_rng* rng, double q, uint64_t* out) {
  return guard([&] {
    require(rng && out, "null argument");
    *out = fastcm::geometric_skip(q, rng->stream);
  });
}

fcm_status fcm_params_create_ubcm(const double* alpha, size_t n, fcm_params** out) {
  return guard([&] {
    require(out, "null output");
    *out = new fcm_params{fastcm::ParamsUBCM(copy_array(alpha, n))};
  });
}

fcm_status fcm_params_create_uecm(const double* alpha, const double* beta, size_t n,
                                  fcm_params** out) {
  return guard([&] {
    require(out, "null output");
    *out = new fcm_params{fastcm::ParamsUECM(copy_array(alpha, n), copy_array(beta, n))};
  });
}

void fcm_params_destroy(fcm_params* params) { delete params; }

size_t fcm_params_size(const fcm_params* params) {
  if (!params) return 0;
  return std::visit([](const auto& p) { return p.size(); }, params->value);
}

int fcm_params_has_beta(const fcm_params* params) {
  return params && std::holds_alternative<fastcm::ParamsUECM>(params->value) ? 1 : 0;
}

fcm_status fcm_params_get(const fcm_params* params, double* alpha, double* beta) {
  return guard([&] {
    require(params && alpha, "null argument");
    if (const auto* u = std::get_if<fastcm::ParamsUBCM>(&params->value)) {
      std::copy(u->alpha().begin(), u->alpha().end(), alpha);
      return;
    }
    const auto& e = std::get<fastcm::ParamsUECM>(params->value);
    std::copy(e.alpha().begin(), e.alpha().end(), alpha);
    if (beta) std::copy(e.beta().begin(), e.beta().end(), beta);
  });
}

fcm_status fcm_params_read(const char* path, fcm_params** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new fcm_params{fastcm::read_params(path)};
  });
}

fcm_status fcm_params_write(const fcm_params* params, const char* path) {
  return guard([&] {
    require(params && path, "null argument");
    fastcm::write_params(params->value, path);
  });
}

fcm_status fcm_expected_degrees(const fcm_params* params, double* out) {
  return guard([&] {
    require(params && out, "null argument");
    const auto k = std::visit([](const auto& p) { return fastcm::expected_degrees(p); },
                              params->value);
    std::copy(k.begin(), k.end(), out);
  });
}

fcm_status fcm_expected_strengths(const fcm_params* params, double* out) {
  return guard([&] {
    require(params && out, "null argument");
    const auto* e = std::get_if<fastcm::ParamsUECM>(&params->value);
    require(e != nullptr, "expected strengths need UECM parameters");
    const auto s = fastcm::expected_strengths(*e);
    std::copy(s.begin(), s.end(), out);
  });
}

void fcm_solver_options_default(fcm_solver_options* opts) {
  if (!opts) return;
  const fastcm::SolverOptions d;
  opts->max_iterations = d.max_iterations;
  opts->tolerance = d.tolerance;
  opts->damping = d.damping;
}

fcm_status fcm_solve_ubcm(const double* k, size_t n, const fcm_solver_options* opts,
                          fcm_params** out, fcm_fit_report* report) {
  bool converged = true;
  const fcm_status st = guard([&] {
    require(out, "null output");
    auto fit = fastcm::solve_ubcm({copy_array(k, n)}, solver_options(opts));
    fill_report(fit.report, report);
    converged = fit.report.converged;
    *out = new fcm_params{std::move(fit.params)};
  });
  if (st == FCM_OK && !converged) return fail(FCM_ERR_NOT_CONVERGED, "solver did not converge");
  return st;
}

fcm_status fcm_solve_uecm(const double* k, const double* s, size_t n,
                          const fcm_solver_options* opts, fcm_params** out,
                          fcm_fit_report* report) {
  bool converged = true;
  const fcm_status st = guard([&] {
    require(out, "null output");
    auto fit = fastcm::solve_uecm({copy_array(k, n)}, {copy_array(s, n)}, solver_options(opts));
    fill_report(fit.report, report);
    converged = fit.report.converged;
    *out = new fcm_params{std::move(fit.params)};
  });
  if (st == FCM_OK && !converged) return fail(FCM_ERR_NOT_CONVERGED, "solver did not converge");
  return st;
}

fcm_status fcm_edgelist_create(size_t n_nodes, int directed, int weighted, fcm_edgelist** out) {
  return guard([&] {
    require(out, "null output");
    require(n_nodes < (size_t{1} << 32), "too many nodes");
    fastcm::EdgeList e;
    e.n_nodes = n_nodes;
    e.directed = directed != 0;
    e.weighted = weighted != 0;
    *out = wrap(std::move(e));
  });
}

fcm_status fcm_edgelist_add(fcm_edgelist* edges, uint64_t src, uint64_t dst, uint64_t weight) {
  return guard([&] {
    require(edges, "null edge list");
    auto& el = edges->value;
    require(src < el.n_nodes && dst < el.n_nodes, "node id out of range");
    require(src != dst, "self-loop");
    require(weight >= 1, "weight must be >= 1");
    if (!el.directed && src > dst) std::swap(src, dst);
    if (!edges->pairs_ready) {
      for (const auto& e : el.edges) edges->pairs.insert(pair_key(e.src, e.dst));
      edges->pairs_ready = true;
    }
    require(edges->pairs.insert(pair_key(src, dst)).second, "duplicate pair");
    el.edges.push_back({static_cast<fastcm::NodeId>(src), static_cast<fastcm::NodeId>(dst),
                        el.weighted ? weight : 1});
  });
}

void fcm_edgelist_destroy(fcm_edgelist* edges) { delete edges; }

size_t fcm_edgelist_num_nodes(const fcm_edgelist* edges) {
  return edges ? edges->value.n_nodes : 0;
}

size_t fcm_edgelist_num_edges(const fcm_edgelist* edges) {
  return edges ? edges->value.edges.size() : 0;
}

int fcm_edgelist_is_directed(const fcm_edgelist* edges) {
  return edges && edges->value.directed ? 1 : 0;
}

int fcm_edgelist_is_weighted(const fcm_edgelist* edges) {
  return edges && edges->value.weighted ? 1 : 0;
}

int fcm_edgelist_bipartite(const fcm_edgelist* edges, size_t* plus, size_t* minus) {
  if (!edges || !edges->value.bipartite) return 0;
  if (plus) *plus = edges->value.bipartite->plus;
  if (minus) *minus = edges->value.bipartite->minus;
  return 1;
}

fcm_status fcm_edgelist_get(const fcm_edgelist* edges, size_t index, uint64_t* src,
                            uint64_t* dst, uint64_t* weight) {
  return guard([&] {
    require(edges, "null edge list");
    require(index < edges->value.edges.size(), "edge index out of range");
    const auto& e = edges->value.edges[index];
    if (src) *src = e.src;
    if (dst) *dst = e.dst;
    if (weight) *weight = e.weight;
  });
}

const char* fcm_edgelist_label(const fcm_edgelist* edges, size_t node) {
  if (!edges || node >= edges->value.labels.size()) return nullptr;
  return edges->value.labels[node].c_str();
}

fcm_status fcm_edgelist_read(const char* path, int weighted, int directed, fcm_edgelist** out,
                             size_t* warnings) {
  return guard([&] {
    require(path && out, "null argument");
    auto res = fastcm::read_edgelist(path, {weighted != 0, directed != 0});
    last_warning.clear();
    for (const auto& w : res.warnings) {
      if (!last_warning.empty()) last_warning += "; ";
      last_warning += w;
    }
    if (warnings) *warnings = res.warnings.size();
    *out = wrap(std::move(res.edges));
  });
}

fcm_status fcm_edgelist_write(const fcm_edgelist* edges, const char* path) {
  return guard([&] {
    require(edges && path, "null argument");
    fastcm::write_edgelist(edges->value, path);
  });
}

fcm_status fcm_edgelist_write_labels(const fcm_edgelist* edges, const char* path) {
  return guard([&] {
    require(edges && path, "null argument");
    fastcm::write_labels(edges->value, path);
  });
}

fcm_status fcm_sample(const fcm_params* params, fcm_sampler_kind kind, fcm_rng* rng,
                      fcm_edgelist** out) {
  return guard([&] {
    require(params && rng && out, "null argument");
    require(kind == FCM_SAMPLER_FAST || kind == FCM_SAMPLER_BRUTEFORCE, "unknown sampler kind");
    const bool fast = kind == FCM_SAMPLER_FAST;
    fastcm::EdgeList e;
    if (const auto* u = std::get_if<fastcm::ParamsUBCM>(&params->value)) {
      e = fast ? fastcm::sample_ubcm_fast(*u, rng->stream)
               : fastcm::sample_ubcm_bruteforce(*u, rng->stream);
    } else {
      const auto& w = std::get<fastcm::ParamsUECM>(params->value);
      e = fast ? fastcm::sample_uecm_fast(w, rng->stream)
               : fastcm::sample_uecm_bruteforce(w, rng->stream);
    }
    *out = wrap(std::move(e));
  });
}

fcm_status fcm_sample_chunglu_mh(const double* k, size_t n, fcm_rng* rng, fcm_edgelist** out) {
  return guard([&] {
    require(rng && out, "null argument");
    *out = wrap(fastcm::sample_chunglu_mh({copy_array(k, n)}, rng->stream));
  });
}

fcm_status fcm_sample_chunglu_stub(const double* k, const double* s, size_t n, fcm_rng* rng,
                                   fcm_edgelist** out) {
  return guard([&] {
    require(rng && out, "null argument");
    *out = wrap(fastcm::sample_chunglu_stub({copy_array(k, n)}, {copy_array(s, n)}, rng->stream));
  });
}

fcm_status fcm_sample_bipartite(const fcm_params* plus, const fcm_params* minus, fcm_rng* rng,
                                fcm_edgelist** out) {
  return guard([&] {
    require(plus && minus && rng && out, "null argument");
    require(plus->value.index() == minus->value.index(), "parameter kinds differ");
    fastcm::EdgeList e;
    if (const auto* p = std::get_if<fastcm::ParamsUBCM>(&plus->value)) {
      e = fastcm::sample_bipartite_fast(*p, std::get<fastcm::ParamsUBCM>(minus->value),
                                        rng->stream);
    } else {
      e = fastcm::sample_bipartite_fast(std::get<fastcm::ParamsUECM>(plus->value),
                                        std::get<fastcm::ParamsUECM>(minus->value), rng->stream);
    }
    *out = wrap(std::move(e));
  });
}

fcm_status fcm_sample_directed(const fcm_params* out_params, const fcm_params* in_params,
                               fcm_rng* rng, fcm_edgelist** out) {
  return guard([&] {
    require(out_params && in_params && rng && out, "null argument");
    require(out_params->value.index() == in_params->value.index(), "parameter kinds differ");
    fastcm::EdgeList e;
    if (const auto* p = std::get_if<fastcm::ParamsUBCM>(&out_params->value)) {
      e = fastcm::sample_directed_fast(*p, std::get<fastcm::ParamsUBCM>(in_params->value),
                                       rng->stream);
    } else {
      e = fastcm::sample_directed_fast(std::get<fastcm::ParamsUECM>(out_params->value),
                                       std::get<fastcm::ParamsUECM>(in_params->value),
                                       rng->stream);
    }
    *out = wrap(std::move(e));
  });
}

fcm_status fcm_holme_kim(size_t n, size_t m, double p_triad, fcm_rng* rng, fcm_edgelist** out) {
  return guard([&] {
    require(rng && out, "null argument");
    *out = wrap(fastcm::holme_kim(n, m, p_triad, rng->stream));
  });
}

fcm_status fcm_common_neighbor_weights(const fcm_edgelist* edges, fcm_edgelist** out) {
  return guard([&] {
    require(edges && out, "null argument");
    *out = wrap(fastcm::common_neighbor_weights(edges->value));
  });
}

fcm_status fcm_degree_and_strength(const fcm_edgelist* edges, double* k_out, double* s_out) {
  return guard([&] {
    require(edges, "null edge list");
    auto [k, s] = fastcm::degree_and_strength(edges->value);
    if (k_out) std::copy(k.values.begin(), k.values.end(), k_out);
    if (s_out) std::copy(s.values.begin(), s.values.end(), s_out);
  });
}

fcm_status fcm_triangle_count(const fcm_edgelist* edges, uint64_t* out) {
  return guard([&] {
    require(edges && out, "null argument");
    *out = fastcm::triangle_count(edges->value);
  });
}

fcm_status fcm_rich_club_density(const fcm_edgelist* edges, const double* k_ref, double alpha,
                                 double* out) {
  return guard([&] {
    require(edges && out, "null argument");
    *out = fastcm::rich_club_density(
        edges->value, {copy_array(k_ref, edges->value.n_nodes)}, alpha);
  });
}

fcm_status fcm_log_degree_mse(const double* reference, const double* sampled, size_t n,
                              double* out) {
  return guard([&] {
    require(out, "null output");
    const auto a = copy_array(reference, n);
    const auto b = copy_array(sampled, n);
    *out = fastcm::log_degree_mse(a, b);
  });
}


fcm_status fcm_targets_read(const char* path, fcm_targets** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new fcm_targets{fastcm::read_targets(path)};
  });
}

void fcm_targets_destroy(fcm_targets* targets) { delete targets; }

size_t fcm_targets_size(const fcm_targets* targets) {
  return targets ? targets->value.degrees.size() : 0;
}

int fcm_targets_has_strength(const fcm_targets* targets) {
  return targets && targets->value.strengths ? 1 : 0;
}

fcm_status fcm_targets_get(const fcm_targets* targets, double* k, double* s) {
  return guard([&] {
    require(targets && k, "null argument");
    require(!s || targets->value.strengths, "targets have no strengths");
    std::copy(targets->value.degrees.values.begin(), targets->value.degrees.values.end(), k);
    if (s) std::copy(targets->value.strengths->values.begin(), targets->value.strengths->values.end(), s);
  });
}

}  // extern "C"
