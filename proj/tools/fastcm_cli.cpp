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

// Command-line driver: parameter inference, ensemble sampling, timing
// sweeps, ensemble statistics and the rich-club / triangle bias demo.
// Talks to the library through the C API only.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fastcm/fastcm.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNotConverged = 3;

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

void check(fcm_status status) {
  if (status == FCM_OK) return;
  throw CliError(status == FCM_ERR_NOT_CONVERGED ? kExitNotConverged : kExitData,
                 std::string(fcm_status_name(status)) + ": " + fcm_last_error());
}

struct RngFree {
  void operator()(fcm_rng* p) const { fcm_rng_destroy(p); }
};
struct ParamsFree {
  void operator()(fcm_params* p) const { fcm_params_destroy(p); }
};
struct EdgesFree {
  void operator()(fcm_edgelist* p) const { fcm_edgelist_destroy(p); }
};
struct TargetsFree {
  void operator()(fcm_targets* p) const { fcm_targets_destroy(p); }
};
using Rng = std::unique_ptr<fcm_rng, RngFree>;
using Params = std::unique_ptr<fcm_params, ParamsFree>;
using Edges = std::unique_ptr<fcm_edgelist, EdgesFree>;
using TargetsHandle = std::unique_ptr<fcm_targets, TargetsFree>;

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  fcm_rng* r = nullptr;
  check(fcm_rng_create(seed, stream, &r));
  return Rng(r);
}

double cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

double wall_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_MONOTONIC, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

// Shortest round-trip text, so reruns produce identical bytes.
std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitData, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw CliError(kExitData, "error writing " + path.string());
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitData, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw CliError(kExitData, path.string() + ": " + e.what());
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CliError(kExitData, "cannot create " + dir.string() + ": " + ec.message());
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs body(i) for i in [0, count) on `threads` workers. Stops handing out
// work after the first failure and rethrows it.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---- inputs ---------------------------------------------------------------

Edges read_edges(const std::string& path, bool weighted) {
  fcm_edgelist* e = nullptr;
  std::size_t warnings = 0;
  check(fcm_edgelist_read(path.c_str(), weighted, 0, &e, &warnings));
  if (warnings) std::cerr << "warning: " << path << ": " << fcm_last_warning() << "\n";
  return Edges(e);
}

std::vector<double> degrees_of(const fcm_edgelist* e) {
  std::vector<double> k(fcm_edgelist_num_nodes(e));
  check(fcm_degree_and_strength(e, k.data(), nullptr));
  return k;
}

std::vector<double> strengths_of(const fcm_edgelist* e) {
  std::vector<double> s(fcm_edgelist_num_nodes(e));
  check(fcm_degree_and_strength(e, nullptr, s.data()));
  return s;
}

struct Targets {
  std::vector<double> k;
  std::optional<std::vector<double>> s;
  Edges network;  // set when the targets came from an edge list
};

Targets load_targets(const std::string& edges_path, const std::string& targets_path, bool weighted) {
  Targets t;
  if (!edges_path.empty()) {
    t.network = read_edges(edges_path, weighted);
    t.k = degrees_of(t.network.get());
    if (weighted) t.s = strengths_of(t.network.get());
    return t;
  }
  fcm_targets* raw = nullptr;
  check(fcm_targets_read(targets_path.c_str(), &raw));
  TargetsHandle handle(raw);
  t.k.resize(fcm_targets_size(raw));
  if (fcm_targets_has_strength(raw)) {
    t.s.emplace(t.k.size());
    check(fcm_targets_get(raw, t.k.data(), t.s->data()));
  } else {
    check(fcm_targets_get(raw, t.k.data(), nullptr));
  }
  return t;
}

// ---- fitting --------------------------------------------------------------

struct SolverFlags {
  double tolerance = 1e-8;
  std::uint64_t max_iterations = 10000;
  double damping = 1.0;

  void add_to(CLI::App* app) {
    app->add_option("--tol", tolerance, "Max relative residual")->check(CLI::PositiveNumber);
    app->add_option("--max-iter", max_iterations, "Solver iteration cap")->check(CLI::PositiveNumber);
    app->add_option("--damping", damping, "Initial Newton step length")->check(CLI::Range(1e-6, 1.0));
  }

  fcm_solver_options options() const { return {max_iterations, tolerance, damping}; }

  json to_json() const {
    return {{"tolerance", tolerance}, {"max_iterations", max_iterations}, {"damping", damping}};
  }
};

struct Fit {
  Params params;
  fcm_fit_report report{};
  bool converged = false;
};

Fit fit_model(const std::string& model, const Targets& t, const SolverFlags& flags) {
  Fit fit;
  const fcm_solver_options opts = flags.options();
  fcm_params* p = nullptr;
  fcm_status st;
  if (model == "ubcm") {
    st = fcm_solve_ubcm(t.k.data(), t.k.size(), &opts, &p, &fit.report);
  } else {
    if (!t.s) throw CliError(kExitData, "uecm needs strengths (weighted edges or a strength column)");
    st = fcm_solve_uecm(t.k.data(), t.s->data(), t.k.size(), &opts, &p, &fit.report);
  }
  if (st != FCM_OK && st != FCM_ERR_NOT_CONVERGED) check(st);
  fit.params.reset(p);
  fit.converged = st == FCM_OK;
  return fit;
}

json fit_json(const Fit& fit, bool timing) {
  json j = {{"iterations", fit.report.iterations},
            {"residual", fit.report.residual},
            {"converged", fit.converged}};
  if (timing) j["wall_seconds"] = fit.report.wall_seconds;
  return j;
}

// ---- infer ----------------------------------------------------------------

struct InferCmd {
  std::string edges, targets, model = "ubcm", out, report;
  bool report_timing = false;
  SolverFlags solver;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("infer", "Fit model parameters to a network or a target file");
    auto* e = cmd->add_option("--edges", edges, "Edge list of the observed network");
    auto* t = cmd->add_option("--targets", targets, "CSV with node,degree[,strength]");
    e->excludes(t);
    cmd->add_option("--model", model, "ubcm or uecm")->check(CLI::IsMember({"ubcm", "uecm"}));
    cmd->add_option("--out", out, "Parameter file to write")->required();
    cmd->add_option("--report", report, "FitReport JSON path (default: stdout)");
    cmd->add_flag("--report-timing", report_timing, "Include wall time in the report");
    solver.add_to(cmd);
    cmd->callback([this, cmd] {
      if (edges.empty() && targets.empty()) throw CLI::RequiredError("--edges or --targets");
      (void)cmd;
    });
  }

  int run() const {
    const Targets t = load_targets(edges, targets, model == "uecm");
    const Fit fit = fit_model(model, t, solver);
    check(fcm_params_write(fit.params.get(), out.c_str()));
    json config = {{"model", model}, {"solver", solver.to_json()}};
    if (!edges.empty()) config["edges"] = edges;
    if (!targets.empty()) config["targets"] = targets;
    if (t.network && fcm_edgelist_label(t.network.get(), 0)) {
      const std::string labels = out + ".labels.tsv";
      check(fcm_edgelist_write_labels(t.network.get(), labels.c_str()));
      config["labels"] = labels;
    }
    json j = {{"command", "infer"}, {"config", config}, {"n_nodes", t.k.size()},
              {"params", out}, {"fit", fit_json(fit, report_timing)}};
    const std::string text = j.dump(2) + "\n";
    if (report.empty()) {
      std::cout << text;
    } else {
      write_text(report, text);
    }
    if (!fit.converged) {
      std::cerr << "error: solver did not converge (residual " << fit.report.residual << ")\n";
      return kExitNotConverged;
    }
    return kExitOk;
  }
};

// ---- sample ---------------------------------------------------------------

std::string sample_file_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "sample_%06zu.tsv", i);
  return buf;
}

struct SampleCmd {
  std::string params_path, edges, targets, model = "ubcm", sampler = "fast", out_dir;
  std::uint64_t seed = 0;
  std::size_t samples = 1;
  unsigned threads = default_threads();
  SolverFlags solver;
  CLI::Option* model_opt = nullptr;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("sample", "Generate an ensemble of networks");
    auto* p = cmd->add_option("--params", params_path, "Parameter file from `infer`");
    auto* e = cmd->add_option("--edges", edges, "Observed network (fitted on the fly)");
    auto* t = cmd->add_option("--targets", targets, "CSV with node,degree[,strength]");
    p->excludes(e)->excludes(t);
    e->excludes(t);
    model_opt = cmd->add_option("--model", model, "ubcm, uecm, chung-lu or chung-lu-stub")
                    ->check(CLI::IsMember({"ubcm", "uecm", "chung-lu", "chung-lu-stub"}));
    cmd->add_option("--sampler", sampler, "fast or bruteforce")->check(CLI::IsMember({"fast", "bruteforce"}));
    cmd->add_option("--seed", seed, "Base seed; sample i uses stream i");
    cmd->add_option("-n,--samples", samples, "Ensemble size")->check(CLI::PositiveNumber);
    cmd->add_option("--out-dir", out_dir, "Output directory")->required();
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    solver.add_to(cmd);
    cmd->callback([this] {
      if (params_path.empty() && edges.empty() && targets.empty())
        throw CLI::RequiredError("--params, --edges or --targets");
      if (!params_path.empty() && model.starts_with("chung-lu"))
        throw CLI::ValidationError("--params", "Chung-Lu models take --edges or --targets");
      if (model.starts_with("chung-lu") && sampler != "fast")
        throw CLI::ValidationError("--sampler", "Chung-Lu models have a single sampler");
    });
  }

  int run() {
    json config = {{"model", model}, {"sampler", sampler}, {"seed", seed}, {"samples", samples}};
    json fit_info;
    Params params;
    Targets t;
    if (!params_path.empty()) {
      fcm_params* p = nullptr;
      check(fcm_params_read(params_path.c_str(), &p));
      params.reset(p);
      const std::string kind = fcm_params_has_beta(p) ? "uecm" : "ubcm";
      if (model_opt->count() == 0) {
        model = kind;
        config["model"] = model;
      } else if (model != kind) {
        throw CliError(kExitUsage, "--model " + model + " does not match " + kind + " parameters");
      }
      config["params"] = params_path;
    } else {
      const bool weighted = model == "uecm" || model == "chung-lu-stub";
      t = load_targets(edges, targets, weighted);
      if (!edges.empty()) config["edges"] = edges;
      if (!targets.empty()) config["targets"] = targets;
      if (model == "ubcm" || model == "uecm") {
        Fit fit = fit_model(model, t, solver);
        config["solver"] = solver.to_json();
        fit_info = fit_json(fit, false);
        if (!fit.converged) {
          std::cerr << "error: solver did not converge (residual " << fit.report.residual
                    << "); no samples written\n";
          return kExitNotConverged;
        }
        params = std::move(fit.params);
      } else if (model == "chung-lu-stub" && !t.s) {
        throw CliError(kExitData, "chung-lu-stub needs strengths");
      }
    }

    ensure_dir(out_dir);
    const fs::path dir(out_dir);
    const fcm_sampler_kind kind = sampler == "fast" ? FCM_SAMPLER_FAST : FCM_SAMPLER_BRUTEFORCE;
    std::vector<std::size_t> edge_counts(samples, 0);
    std::vector<char> written(samples, 0);
    int code = kExitOk;
    std::string failure;
    try {
      parallel_for(samples, threads, [&](std::size_t i) {
        Rng rng = make_rng(seed, i);
        fcm_edgelist* raw = nullptr;
        if (params) {
          check(fcm_sample(params.get(), kind, rng.get(), &raw));
        } else if (model == "chung-lu") {
          check(fcm_sample_chunglu_mh(t.k.data(), t.k.size(), rng.get(), &raw));
        } else {
          check(fcm_sample_chunglu_stub(t.k.data(), t.s->data(), t.k.size(), rng.get(), &raw));
        }
        Edges e(raw);
        const std::string path = (dir / sample_file_name(i)).string();
        check(fcm_edgelist_write(e.get(), path.c_str()));
        edge_counts[i] = fcm_edgelist_num_edges(e.get());
        written[i] = 1;
      });
    } catch (const CliError& e) {
      code = e.code;
      failure = e.what();
    }

    json files = json::array();
    for (std::size_t i = 0; i < samples; ++i) {
      if (!written[i]) continue;
      files.push_back({{"sample_id", i}, {"seed", seed}, {"stream", i},
                       {"file", sample_file_name(i)}, {"n_edges", edge_counts[i]}});
    }
    json manifest = {{"command", "sample"}, {"config", config}, {"complete", code == kExitOk},
                     {"samples", files}};
    if (params) manifest["n_nodes"] = fcm_params_size(params.get());
    else manifest["n_nodes"] = t.k.size();
    if (!fit_info.is_null()) manifest["fit"] = fit_info;
    if (t.network && fcm_edgelist_label(t.network.get(), 0)) {
      check(fcm_edgelist_write_labels(t.network.get(), (dir / "labels.tsv").string().c_str()));
      manifest["labels"] = "labels.tsv";
    }
    if (code != kExitOk) manifest["error"] = failure;
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
    if (code != kExitOk) throw CliError(code, failure + " (partial ensemble recorded in manifest.json)");
    return kExitOk;
  }
};

// ---- metrics --------------------------------------------------------------

const std::vector<double> kDefaultAlphaLevels{0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5};

struct MetricsCmd {
  std::string manifest_path, edges, targets, out;
  std::vector<double> alphas = kDefaultAlphaLevels;
  unsigned threads = default_threads();

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("metrics", "Ensemble statistics for a sampled ensemble");
    cmd->add_option("--manifest", manifest_path, "manifest.json written by `sample`")->required();
    auto* e = cmd->add_option("--edges", edges, "Reference network (default: the sampled input)");
    auto* t = cmd->add_option("--targets", targets, "Reference degrees/strengths CSV");
    e->excludes(t);
    cmd->add_option("--alpha", alphas, "Rich-club group fractions")
        ->delimiter(',')
        ->check(CLI::Range(1e-12, 1.0));
    cmd->add_option("--out", out, "CSV to write")->required();
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  int run() {
    const json manifest = read_json(manifest_path);
    const fs::path dir = fs::path(manifest_path).parent_path();
    std::string model;
    try {
      model = manifest.at("config").at("model").get<std::string>();
      if (edges.empty() && targets.empty()) {
        const json& c = manifest.at("config");
        if (c.contains("edges")) edges = c["edges"].get<std::string>();
        else if (c.contains("targets")) targets = c["targets"].get<std::string>();
        else throw CliError(kExitUsage, "manifest has no reference input; pass --edges or --targets");
      }
    } catch (const json::exception& e) {
      throw CliError(kExitData, manifest_path + ": " + e.what());
    }
    const bool weighted = model == "uecm" || model == "chung-lu-stub";
    const Targets ref = load_targets(edges, targets, weighted);
    const bool with_strength = weighted && ref.s.has_value();

    struct Row {
      std::uint64_t id, seed, edges, triangles;
      double degree_mse, strength_mse;
      std::vector<double> density;
    };
    const json& files = manifest.at("samples");
    std::vector<Row> rows(files.size());
    parallel_for(files.size(), threads, [&](std::size_t i) {
      const json& f = files[i];
      Row& r = rows[i];
      r.id = f.at("sample_id").get<std::uint64_t>();
      r.seed = f.at("seed").get<std::uint64_t>();
      Edges e = read_edges((dir / f.at("file").get<std::string>()).string(), weighted);
      if (fcm_edgelist_num_nodes(e.get()) != ref.k.size())
        throw CliError(kExitData, "sample " + std::to_string(r.id) + " has a different node count");
      r.edges = fcm_edgelist_num_edges(e.get());
      check(fcm_triangle_count(e.get(), &r.triangles));
      const auto k = degrees_of(e.get());
      check(fcm_log_degree_mse(ref.k.data(), k.data(), k.size(), &r.degree_mse));
      if (with_strength) {
        const auto s = strengths_of(e.get());
        check(fcm_log_degree_mse(ref.s->data(), s.data(), s.size(), &r.strength_mse));
      }
      for (double a : alphas) {
        double d = 0.0;
        check(fcm_rich_club_density(e.get(), ref.k.data(), a, &d));
        r.density.push_back(d);
      }
    });

    json config = {{"command", "metrics"}, {"manifest", manifest_path}, {"alpha", alphas}};
    if (!edges.empty()) config["edges"] = edges;
    if (!targets.empty()) config["targets"] = targets;
    config["sample_config"] = manifest.at("config");
    std::ostringstream csv;
    csv << "# " << config.dump() << "\n";
    csv << "sample_id,seed,n_edges,triangles,log_degree_mse";
    if (with_strength) csv << ",log_strength_mse";
    csv << ",richclub_alpha,richclub_density\n";
    for (const Row& r : rows) {
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        csv << r.id << ',' << r.seed << ',' << r.edges << ',' << r.triangles << ',' << num(r.degree_mse);
        if (with_strength) csv << ',' << num(r.strength_mse);
        csv << ',' << num(alphas[a]) << ',' << num(r.density[a]) << '\n';
      }
    }
    write_text(out, csv.str());
    return kExitOk;
  }
};

// ---- bench ----------------------------------------------------------------

const std::vector<std::string> kBenchMethods{"ubcm-fast", "ubcm-bruteforce", "uecm-fast",
                                             "uecm-bruteforce", "chung-lu", "chung-lu-stub"};

// Fitted instance built from one homogeneous UECM draw: its realized
// degrees and strengths are the targets of both models.
struct BenchInstance {
  Targets targets;
  Params ubcm, uecm;
};

BenchInstance make_bench_instance(std::size_t n, double mean_degree, double mean_strength,
                                  std::uint64_t seed, const SolverFlags& solver) {
  const double p = mean_degree / static_cast<double>(n - 1);
  const double ratio = 1.0 - mean_degree / mean_strength;  // e^{-(beta_i + beta_j)}
  const double b = -std::log(ratio);
  const double logit = std::log(p / (1.0 - p));
  const double a = 0.5 * (-logit - b - std::log1p(-ratio));
  std::vector<double> alpha(n, a), beta(n, 0.5 * b);
  fcm_params* raw = nullptr;
  check(fcm_params_create_uecm(alpha.data(), beta.data(), n, &raw));
  Params homogeneous(raw);
  Rng rng = make_rng(seed, (std::uint64_t{1} << 40) + n);
  fcm_edgelist* g = nullptr;
  check(fcm_sample(homogeneous.get(), FCM_SAMPLER_FAST, rng.get(), &g));
  Edges graph(g);

  BenchInstance inst;
  inst.targets.k = degrees_of(graph.get());
  inst.targets.s = strengths_of(graph.get());
  Fit u = fit_model("ubcm", inst.targets, solver);
  Fit w = fit_model("uecm", inst.targets, solver);
  if (!u.converged || !w.converged)
    throw CliError(kExitNotConverged, "fit of the N=" + std::to_string(n) + " instance did not converge");
  inst.ubcm = std::move(u.params);
  inst.uecm = std::move(w.params);
  return inst;
}

struct BenchCmd {
  std::vector<std::size_t> sizes{1000, 10000, 100000};
  std::vector<std::string> methods = kBenchMethods;
  double mean_degree = 10.0, mean_strength = 20.0;
  std::size_t runs = 40, bruteforce_max = 10000;
  std::uint64_t seed = 0;
  std::string out;
  SolverFlags solver;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("bench", "CPU-time sweep of the samplers (runs serially)");
    cmd->add_option("--sizes", sizes, "Node counts")->delimiter(',')->check(CLI::Range(16ul, 1ul << 31));
    cmd->add_option("--methods", methods, "Subset of: " + [] {
          std::string s;
          for (const auto& m : kBenchMethods) s += (s.empty() ? "" : ",") + m;
          return s;
        }())
        ->delimiter(',')
        ->check(CLI::IsMember(kBenchMethods));
    cmd->add_option("--mean-degree", mean_degree, "Target mean degree")->check(CLI::PositiveNumber);
    cmd->add_option("--mean-strength", mean_strength, "Target mean strength (> mean degree)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--runs", runs, "Timed runs per method and size")->check(CLI::PositiveNumber);
    cmd->add_option("--bruteforce-max-nodes", bruteforce_max, "Skip brute force above this size");
    cmd->add_option("--seed", seed, "Seed; run r uses stream r");
    cmd->add_option("--out", out, "CSV to write")->required();
    solver.add_to(cmd);
    cmd->callback([this] {
      if (mean_strength <= mean_degree)
        throw CLI::ValidationError("--mean-strength", "must exceed --mean-degree");
      for (std::size_t n : sizes)
        if (mean_degree >= static_cast<double>(n - 1))
          throw CLI::ValidationError("--sizes", "mean degree must be below N - 1");
    });
  }

  int run() const {
    json config = {{"command", "bench"}, {"sizes", sizes}, {"methods", methods},
                   {"mean_degree", mean_degree}, {"mean_strength", mean_strength},
                   {"runs", runs}, {"bruteforce_max_nodes", bruteforce_max}, {"seed", seed},
                   {"solver", solver.to_json()}};
    std::ostringstream csv;
    csv << "# " << config.dump() << "\n";
    csv << "method,n_nodes,n_edges,run_index,cpu_seconds,seed\n";
    for (std::size_t n : sizes) {
      const BenchInstance inst = make_bench_instance(n, mean_degree, mean_strength, seed, solver);
      for (const std::string& method : methods) {
        if (method.ends_with("bruteforce") && n > bruteforce_max) continue;
        for (std::size_t r = 0; r < runs; ++r) {
          Rng rng = make_rng(seed, r);
          fcm_edgelist* raw = nullptr;
          const double t0 = cpu_seconds();
          fcm_status st;
          if (method == "ubcm-fast") st = fcm_sample(inst.ubcm.get(), FCM_SAMPLER_FAST, rng.get(), &raw);
          else if (method == "ubcm-bruteforce") st = fcm_sample(inst.ubcm.get(), FCM_SAMPLER_BRUTEFORCE, rng.get(), &raw);
          else if (method == "uecm-fast") st = fcm_sample(inst.uecm.get(), FCM_SAMPLER_FAST, rng.get(), &raw);
          else if (method == "uecm-bruteforce") st = fcm_sample(inst.uecm.get(), FCM_SAMPLER_BRUTEFORCE, rng.get(), &raw);
          else if (method == "chung-lu") st = fcm_sample_chunglu_mh(inst.targets.k.data(), n, rng.get(), &raw);
          else st = fcm_sample_chunglu_stub(inst.targets.k.data(), inst.targets.s->data(), n, rng.get(), &raw);
          const double elapsed = cpu_seconds() - t0;
          check(st);
          Edges e(raw);
          csv << method << ',' << n << ',' << fcm_edgelist_num_edges(e.get()) << ',' << r << ','
              << num(elapsed) << ',' << seed << '\n';
        }
      }
    }
    write_text(out, csv.str());
    return kExitOk;
  }
};

// ---- demo-bias ------------------------------------------------------------

double quantile(std::vector<double> xs, double q) {
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

json describe(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1)) : 0.0;
  return {{"mean", mean}, {"sd", sd}, {"q025", quantile(xs, 0.025)}, {"q975", quantile(xs, 0.975)}};
}

struct DemoBiasCmd {
  std::size_t n = 5000, m = 10, samples = 100;
  double p_triad = 0.1;
  std::uint64_t seed = 0;
  std::vector<double> alphas = kDefaultAlphaLevels;
  std::string out_dir;
  unsigned threads = default_threads();
  SolverFlags solver;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "demo-bias", "Holme-Kim network vs Chung-Lu and UBCM ensembles: rich-club and triangles");
    cmd->add_option("--n", n, "Holme-Kim node count")->check(CLI::PositiveNumber);
    cmd->add_option("--m", m, "Edges added per node")->check(CLI::PositiveNumber);
    cmd->add_option("--p", p_triad, "Triad-closure probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--samples", samples, "Ensemble size per model")->check(CLI::Range(2ul, 1ul << 31));
    cmd->add_option("--seed", seed, "Seed");
    cmd->add_option("--alpha", alphas, "Rich-club group fractions")
        ->delimiter(',')
        ->check(CLI::Range(1e-12, 1.0));
    cmd->add_option("--out-dir", out_dir, "Output directory")->required();
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    solver.add_to(cmd);
  }

  int run() {
    std::sort(alphas.begin(), alphas.end());
    ensure_dir(out_dir);
    const fs::path dir(out_dir);

    // Stream 0 builds the network; ensemble member i of model c uses
    // stream 1 + c * samples + i.
    Rng rng = make_rng(seed, 0);
    fcm_edgelist* g = nullptr;
    check(fcm_holme_kim(n, m, p_triad, rng.get(), &g));
    Edges network(g);
    check(fcm_edgelist_write(network.get(), (dir / "network.tsv").string().c_str()));
    Targets t;
    t.k = degrees_of(network.get());
    Fit fit = fit_model("ubcm", t, solver);
    check(fcm_params_write(fit.params.get(), (dir / "params.csv").string().c_str()));
    if (!fit.converged) {
      std::cerr << "error: UBCM fit did not converge (residual " << fit.report.residual << ")\n";
      return kExitNotConverged;
    }

    auto stats = [&](const fcm_edgelist* e, std::uint64_t& triangles, std::vector<double>& density) {
      check(fcm_triangle_count(e, &triangles));
      density.resize(alphas.size());
      for (std::size_t a = 0; a < alphas.size(); ++a)
        check(fcm_rich_club_density(e, t.k.data(), alphas[a], &density[a]));
    };
    std::uint64_t observed_triangles = 0;
    std::vector<double> observed_density;
    stats(network.get(), observed_triangles, observed_density);

    const std::vector<std::string> models{"chung-lu", "ubcm"};
    std::vector<std::vector<std::uint64_t>> triangles(models.size(), std::vector<std::uint64_t>(samples));
    std::vector<std::vector<std::vector<double>>> density(models.size(),
                                                         std::vector<std::vector<double>>(samples));
    parallel_for(models.size() * samples, threads, [&](std::size_t job) {
      const std::size_t c = job / samples, i = job % samples;
      Rng r = make_rng(seed, 1 + job);
      fcm_edgelist* raw = nullptr;
      if (c == 0) check(fcm_sample_chunglu_mh(t.k.data(), n, r.get(), &raw));
      else check(fcm_sample(fit.params.get(), FCM_SAMPLER_FAST, r.get(), &raw));
      Edges e(raw);
      stats(e.get(), triangles[c][i], density[c][i]);
    });

    json config = {{"command", "demo-bias"}, {"n", n}, {"m", m}, {"p_triad", p_triad},
                   {"samples", samples}, {"seed", seed}, {"alpha", alphas},
                   {"solver", solver.to_json()}};
    std::ostringstream rc, tri;
    rc << "# " << config.dump() << "\nmodel,sample_id,alpha,density\n";
    tri << "# " << config.dump() << "\nmodel,sample_id,triangles\n";
    for (std::size_t a = 0; a < alphas.size(); ++a)
      rc << "holme-kim,0," << num(alphas[a]) << ',' << num(observed_density[a]) << '\n';
    tri << "holme-kim,0," << observed_triangles << '\n';
    json ensembles;
    for (std::size_t c = 0; c < models.size(); ++c) {
      for (std::size_t i = 0; i < samples; ++i) {
        for (std::size_t a = 0; a < alphas.size(); ++a)
          rc << models[c] << ',' << i << ',' << num(alphas[a]) << ',' << num(density[c][i][a]) << '\n';
        tri << models[c] << ',' << i << ',' << triangles[c][i] << '\n';
      }
      std::vector<double> tcount(triangles[c].begin(), triangles[c].end());
      json tj = describe(tcount);
      const double sd = tj["sd"].get<double>();
      tj["z_observed"] = sd > 0 ? (static_cast<double>(observed_triangles) - tj["mean"].get<double>()) / sd
                                : (static_cast<double>(observed_triangles) == tj["mean"].get<double>() ? 0.0 : INFINITY);
      json rj = json::array();
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        std::vector<double> xs(samples);
        for (std::size_t i = 0; i < samples; ++i) xs[i] = density[c][i][a];
        json d = describe(xs);
        d["alpha"] = alphas[a];
        rj.push_back(d);
      }
      ensembles[models[c]] = {{"triangles", tj}, {"richclub", rj}};
    }
    json observed = {{"triangles", observed_triangles}, {"n_edges", fcm_edgelist_num_edges(network.get())}};
    json orc = json::array();
    for (std::size_t a = 0; a < alphas.size(); ++a) orc.push_back({{"alpha", alphas[a]}, {"density", observed_density[a]}});
    observed["richclub"] = orc;
    json summary = {{"config", config}, {"fit", fit_json(fit, false)}, {"observed", observed},
                    {"ensembles", ensembles}};
    write_text(dir / "richclub.csv", rc.str());
    write_text(dir / "triangles.csv", tri.str());
    write_text(dir / "summary.json", summary.dump(2) + "\n");
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-entropy configuration model fitting and fast sampling"};
  app.set_version_flag("--version", std::string(fcm_version()));
  app.require_subcommand(1);
  InferCmd infer;
  SampleCmd sample;
  MetricsCmd metrics;
  BenchCmd bench;
  DemoBiasCmd demo;
  infer.setup(app);
  sample.setup(app);
  bench.setup(app);
  metrics.setup(app);
  demo.setup(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (app.got_subcommand("infer")) return infer.run();
    if (app.got_subcommand("sample")) return sample.run();
    if (app.got_subcommand("bench")) return bench.run();
    if (app.got_subcommand("metrics")) return metrics.run();
    return demo.run();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
