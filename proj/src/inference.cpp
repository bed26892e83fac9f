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

#include "inference.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "error.hpp"
#include "model.hpp"

namespace fastcm {

namespace {

constexpr double kBetaFloor = 1e-12;
constexpr double kInitEps = 1e-6;
// Fixed beta for nodes whose weights are all 1 (s == k). The likelihood only
// approaches its supremum as beta -> inf; at 40 a weight above 1 has
// probability below 5e-18, far under any solver tolerance.
constexpr double kUnitWeightBeta = 40.0;
// Above this many unknowns the Newton system is solved block-diagonally.
constexpr Eigen::Index kDenseLimit = 3000;

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Nodes sharing identical targets share one unknown. Unknowns are laid out
// as [alpha_0 .. alpha_{U-1}] or [alpha_0 .. alpha_{U-1}, beta_0 .. beta_{U-1}].
struct ReducedSystem {
  bool weighted = false;
  std::vector<double> k, s, count;
  std::vector<std::ptrdiff_t> class_of;  // per node; -1 for isolated nodes
  std::vector<bool> frozen;              // per unknown; held at its start value

  Eigen::Index classes() const { return static_cast<Eigen::Index>(k.size()); }
  Eigen::Index dim() const { return weighted ? 2 * classes() : classes(); }
};

struct Evaluation {
  VectorXd grad;
  MatrixXd hess;  // dense, or dim x 2 diagonal blocks when !dense
  double objective = 0.0;
  double residual = 0.0;
  double merit = 0.0;
  bool finite = true;
};

ReducedSystem reduce(const std::vector<double>& k, const std::vector<double>* s) {
  ReducedSystem sys;
  sys.weighted = s != nullptr;
  sys.class_of.assign(k.size(), -1);
  std::map<std::pair<double, double>, std::ptrdiff_t> index;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0.0) continue;
    const std::pair<double, double> key{k[i], s ? (*s)[i] : 0.0};
    auto [it, inserted] = index.try_emplace(key, static_cast<std::ptrdiff_t>(sys.k.size()));
    if (inserted) {
      sys.k.push_back(key.first);
      sys.s.push_back(key.second);
      sys.count.push_back(0.0);
    }
    sys.count[it->second] += 1.0;
    sys.class_of[i] = it->second;
  }
  sys.frozen.assign(static_cast<std::size_t>(sys.dim()), false);
  if (sys.weighted)
    for (std::size_t u = 0; u < sys.k.size(); ++u)
      sys.frozen[sys.k.size() + u] = sys.s[u] == sys.k[u];
  return sys;
}

// Negative log-likelihood, its gradient and Hessian over the class unknowns.
// Hessian entries are the per-pair covariances of (edge indicator, weight)
// scaled by class multiplicities; within-class pairs appear c(c - 1) / 2
// times.
Evaluation evaluate(const ReducedSystem& sys, const VectorXd& theta, bool with_hessian) {
  const Eigen::Index u_count = sys.classes();
  const Eigen::Index d = sys.dim();
  const bool dense = d <= kDenseLimit;
  Evaluation ev;
  ev.grad = VectorXd::Zero(d);
  if (with_hessian) ev.hess = dense ? MatrixXd::Zero(d, d) : MatrixXd::Zero(d, 2);

  VectorXd kexp = VectorXd::Zero(u_count);
  VectorXd sexp = VectorXd::Zero(u_count);
  // Row sums sum_v c_v h(u, v) for the diagonal blocks: aa, ab, bb.
  MatrixXd rows = MatrixXd::Zero(u_count, 3);
  VectorXd self_aa = VectorXd::Zero(u_count), self_ab = VectorXd::Zero(u_count),
           self_bb = VectorXd::Zero(u_count), self_p = VectorXd::Zero(u_count),
           self_w = VectorXd::Zero(u_count);
  double pair_part = 0.0;

  for (Eigen::Index u = 0; u < u_count; ++u) {
    const double cu = sys.count[u];
    // A single-node class has no within-class pair, and its 2 * beta_u may
    // be outside the domain.
    for (Eigen::Index v = cu < 2.0 ? u + 1 : u; v < u_count; ++v) {
      const double cv = sys.count[v];
      double p, ew = 0.0, haa, hab = 0.0, hbb = 0.0, lz;
      if (!sys.weighted) {
        const double x = theta[u] + theta[v];
        p = kernel::ubcm(x);
        haa = p * (1.0 - p);
        lz = kernel::softplus(-x);
      } else {
        const double b = theta[u_count + u] + theta[u_count + v];
        const double x = theta[u] + theta[v] + b;
        const double y = std::exp(-b);
        const double r = -std::expm1(-b);
        const double z = -x - std::log(r);
        p = kernel::sigmoid(z);
        lz = kernel::softplus(z);
        ew = p / r;
        haa = p * (1.0 - p);
        hab = ew * (1.0 - p);
        hbb = p * (1.0 + y - p) / (r * r);
      }
      const double pairs = u == v ? cu * (cu - 1.0) / 2.0 : cu * cv;
      pair_part += pairs * lz;
      kexp[u] += cv * p;
      sexp[u] += cv * ew;
      rows(u, 0) += cv * haa;
      rows(u, 1) += cv * hab;
      rows(u, 2) += cv * hbb;
      if (u == v) {
        self_p[u] = p;
        self_w[u] = ew;
        self_aa[u] = haa;
        self_ab[u] = hab;
        self_bb[u] = hbb;
        continue;
      }
      kexp[v] += cu * p;
      sexp[v] += cu * ew;
      rows(v, 0) += cu * haa;
      rows(v, 1) += cu * hab;
      rows(v, 2) += cu * hbb;
      if (with_hessian && dense) {
        const double cc = cu * cv;
        ev.hess(u, v) = ev.hess(v, u) = cc * haa;
        if (sys.weighted) {
          const Eigen::Index bu = u_count + u, bv = u_count + v;
          ev.hess(u, bv) = ev.hess(bv, u) = cc * hab;
          ev.hess(v, bu) = ev.hess(bu, v) = cc * hab;
          ev.hess(bu, bv) = ev.hess(bv, bu) = cc * hbb;
        }
      }
    }
  }

  double objective = pair_part;
  double residual = 0.0;
  for (Eigen::Index u = 0; u < u_count; ++u) {
    const double cu = sys.count[u];
    const double kk = kexp[u] - self_p[u];
    ev.grad[u] = cu * (sys.k[u] - kk);
    objective += cu * sys.k[u] * theta[u];
    residual = std::max(residual, std::abs(kk - sys.k[u]) / std::max(sys.k[u], 1.0));
    if (sys.weighted) {
      const double ss = sexp[u] - self_w[u];
      ev.grad[u_count + u] = cu * (sys.s[u] - ss);
      objective += cu * sys.s[u] * theta[u_count + u];
      residual = std::max(residual, std::abs(ss - sys.s[u]) / std::max(sys.s[u], 1.0));
    }
    if (!with_hessian) continue;
    const double daa = cu * (rows(u, 0) + (cu - 2.0) * self_aa[u]);
    const double dab = cu * (rows(u, 1) + (cu - 2.0) * self_ab[u]);
    const double dbb = cu * (rows(u, 2) + (cu - 2.0) * self_bb[u]);
    if (dense) {
      ev.hess(u, u) = daa;
      if (sys.weighted) {
        const Eigen::Index bu = u_count + u;
        ev.hess(u, bu) = ev.hess(bu, u) = dab;
        ev.hess(bu, bu) = dbb;
      }
    } else {
      // Per-class blocks: (aa, ab) in row u, (ab, bb) in row U + u.
      ev.hess(u, 0) = daa;
      ev.hess(u, 1) = dab;
      if (sys.weighted) {
        ev.hess(u_count + u, 0) = dab;
        ev.hess(u_count + u, 1) = dbb;
      }
    }
  }
  ev.objective = objective;
  ev.residual = residual;
  ev.merit = ev.grad.squaredNorm();
  ev.finite = std::isfinite(objective) && std::isfinite(ev.merit) && std::isfinite(residual);
  return ev;
}

// Descent direction for the objective: full Newton when small, per-class
// Newton blocks otherwise. Returns an empty vector when no usable
// direction exists.
VectorXd newton_direction(const ReducedSystem& sys, const Evaluation& ev) {
  const Eigen::Index d = sys.dim();
  if (d <= kDenseLimit) {
    const double scale = std::max(ev.hess.diagonal().cwiseAbs().maxCoeff(), 1e-300);
    MatrixXd base = ev.hess;
    VectorXd grad = ev.grad;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (!sys.frozen[i]) continue;
      base.row(i).setZero();
      base.col(i).setZero();
      base(i, i) = scale;
      grad[i] = 0.0;
    }
    for (double ridge = 0.0; ridge < 1.0; ridge = ridge == 0.0 ? 1e-14 : ridge * 100.0) {
      MatrixXd h = base;
      h.diagonal().array() += ridge * scale;
      Eigen::LDLT<MatrixXd> ldlt(h);
      if (ldlt.info() != Eigen::Success) continue;
      VectorXd dir = ldlt.solve(-grad);
      if (dir.allFinite() && dir.dot(ev.grad) < 0.0) return dir;
    }
    return {};
  }
  const Eigen::Index u_count = sys.classes();
  VectorXd dir(d);
  for (Eigen::Index u = 0; u < u_count; ++u) {
    if (!sys.weighted) {
      dir[u] = -ev.grad[u] / std::max(ev.hess(u, 0), 1e-300);
      continue;
    }
    const double a = ev.hess(u, 0), b = ev.hess(u, 1), c = ev.hess(u_count + u, 1);
    const double ga = ev.grad[u], gb = ev.grad[u_count + u];
    const double det = a * c - b * b;
    if (sys.frozen[u_count + u]) {
      dir[u] = -ga / std::max(a, 1e-300);
      dir[u_count + u] = 0.0;
    } else if (det > 1e-300 * std::max(a * c, 1e-300)) {
      dir[u] = -(c * ga - b * gb) / det;
      dir[u_count + u] = -(a * gb - b * ga) / det;
    } else {
      dir[u] = -ga / std::max(a, 1e-300);
      dir[u_count + u] = -gb / std::max(c, 1e-300);
    }
  }
  if (!dir.allFinite() || dir.dot(ev.grad) >= 0.0) return {};
  return dir;
}

// Smallest beta_u + beta_v over pairs of distinct nodes, or +inf when
// unweighted. Only pair sums must stay positive.
double min_pair_beta(const ReducedSystem& sys, const VectorXd& theta) {
  if (!sys.weighted) return std::numeric_limits<double>::infinity();
  const Eigen::Index u_count = sys.classes();
  double lowest = std::numeric_limits<double>::infinity(), second = lowest, within = lowest;
  for (Eigen::Index u = 0; u < u_count; ++u) {
    const double b = theta[u_count + u];
    if (sys.count[u] >= 2.0) within = std::min(within, 2.0 * b);
    if (b < lowest) {
      second = lowest;
      lowest = b;
    } else if (b < second) {
      second = b;
    }
  }
  return std::min(within, lowest + second);
}

struct SolveResult {
  VectorXd theta;
  FitReport report;
};

SolveResult run_newton(const ReducedSystem& sys, VectorXd theta, const SolverOptions& opts) {
  SolveResult out;
  Evaluation ev = evaluate(sys, theta, true);
  std::size_t it = 0;
  while (ev.finite && ev.residual > opts.tolerance && it < opts.max_iterations) {
    ++it;
    const VectorXd dir = newton_direction(sys, ev);
    if (dir.size() == 0) break;
    const double slope = ev.grad.dot(dir);
    double t = opts.damping;
    bool moved = false;
    for (int tries = 0; tries < 60; ++tries, t *= 0.5) {
      VectorXd trial = theta + t * dir;
      if (!(min_pair_beta(sys, trial) >= kBetaFloor)) continue;
      Evaluation next = evaluate(sys, trial, true);
      if (!next.finite) continue;
      // Either merit works: the squared gradient avoids cancellation near
      // the optimum, the objective guarantees progress far from it.
      const bool merit_ok = next.merit <= (1.0 - 1e-4 * t) * ev.merit;
      const bool objective_ok = next.objective <= ev.objective + 1e-4 * t * slope;
      if (merit_ok || objective_ok) {
        theta = std::move(trial);
        ev = std::move(next);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  out.theta = std::move(theta);
  out.report.iterations = it;
  out.report.residual = ev.finite ? ev.residual : std::numeric_limits<double>::infinity();
  out.report.converged = ev.finite && ev.residual <= opts.tolerance;
  return out;
}

void require_degree_targets(const std::vector<double>& k) {
  const std::size_t n = k.size();
  if (n < 2) throw InvalidArgument("degree sequence needs at least 2 nodes");
  std::size_t positive = 0;
  for (double v : k) {
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidArgument("degrees must be finite and non-negative");
    if (v >= static_cast<double>(n) - 1.0)
      throw InvalidArgument("infeasible degree sequence: entry >= N - 1");
    if (v > 0.0) ++positive;
  }
  if (positive < 2) throw InvalidArgument("degree sequence needs at least two positive entries");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void SolverOptions::validate() const {
  if (max_iterations < 1) throw InvalidArgument("max_iterations must be >= 1");
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
  if (!(damping > 0.0 && damping <= 1.0)) throw InvalidArgument("damping must lie in (0, 1]");
}

UbcmFit solve_ubcm(const DegreeSequence& k, const SolverOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  opts.validate();
  require_degree_targets(k.values);
  const ReducedSystem sys = reduce(k.values, nullptr);

  const double root_two_m = std::sqrt(k.total());
  VectorXd theta(sys.dim());
  for (Eigen::Index u = 0; u < sys.classes(); ++u) theta[u] = -std::log(sys.k[u] / root_two_m);

  SolveResult res = run_newton(sys, std::move(theta), opts);
  std::vector<double> alpha(k.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (sys.class_of[i] >= 0) alpha[i] = res.theta[sys.class_of[i]];
  res.report.wall_seconds = seconds_since(start);
  return {ParamsUBCM(std::move(alpha)), res.report};
}

UecmFit solve_uecm(const DegreeSequence& k, const StrengthSequence& s, const SolverOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  opts.validate();
  require_degree_targets(k.values);
  if (s.size() != k.size()) throw InvalidArgument("degree and strength sequences differ in length");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double si = s.values[i];
    if (!std::isfinite(si) || si < 0.0)
      throw InvalidArgument("strengths must be finite and non-negative");
    if (si < k.values[i]) throw InvalidArgument("strength below degree (weights must be >= 1)");
    if (k.values[i] == 0.0 && si > 0.0)
      throw InvalidArgument("positive strength on a node with zero degree");
  }
  const ReducedSystem sys = reduce(k.values, &s.values);

  const Eigen::Index u_count = sys.classes();
  const double root_two_m = std::sqrt(k.total());
  VectorXd theta(sys.dim());
  for (Eigen::Index u = 0; u < u_count; ++u) {
    theta[u] = -std::log(sys.k[u] / root_two_m);
    if (sys.frozen[u_count + u]) {
      theta[u_count + u] = kUnitWeightBeta;
      theta[u] -= kUnitWeightBeta;
    } else {
      theta[u_count + u] =
          std::max(std::log(sys.s[u] / (sys.s[u] - sys.k[u] + kInitEps)), 1e-3);
    }
  }

  SolveResult res = run_newton(sys, std::move(theta), opts);
  const double isolated_beta =
      u_count > 0 ? res.theta.tail(u_count).maxCoeff() : 1.0;
  std::vector<double> alpha(k.size(), std::numeric_limits<double>::infinity());
  std::vector<double> beta(k.size(), isolated_beta);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (sys.class_of[i] < 0) continue;
    alpha[i] = res.theta[sys.class_of[i]];
    beta[i] = res.theta[u_count + sys.class_of[i]];
  }
  res.report.wall_seconds = seconds_since(start);
  return {ParamsUECM(std::move(alpha), std::move(beta)), res.report};
}

std::vector<double> expected_degrees(const ParamsUBCM& params) {
  const auto alpha = params.alpha();
  std::vector<double> out(alpha.size(), 0.0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      const double p = kernel::ubcm(alpha[i] + alpha[j]);
      out[i] += p;
      out[j] += p;
    }
  }
  return out;
}

std::vector<double> expected_degrees(const ParamsUECM& params) {
  std::vector<double> out(params.size(), 0.0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      const double p =
          uecm_edge_prob(params.alpha(i), params.alpha(j), params.beta(i), params.beta(j));
      out[i] += p;
      out[j] += p;
    }
  }
  return out;
}

std::vector<double> expected_strengths(const ParamsUECM& params) {
  std::vector<double> out(params.size(), 0.0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      const double w =
          uecm_expected_weight(params.alpha(i), params.alpha(j), params.beta(i), params.beta(j));
      out[i] += w;
      out[j] += w;
    }
  }
  return out;
}

double max_relative_residual(const std::vector<double>& got, const std::vector<double>& want) {
  if (got.size() != want.size()) throw InvalidArgument("residual: length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    worst = std::max(worst, std::abs(got[i] - want[i]) / std::max(want[i], 1.0));
  return worst;
}

}  // namespace fastcm
