// Copyright 2026 The ballid Authors
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

#include "ballid/cma_es.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ballid/errors.hpp"

namespace ballid {

namespace {

void decompose(CmaState& state) {
  // Enforce exact symmetry before decomposing.
  state.covariance =
      0.5 * (state.covariance + state.covariance.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(state.covariance);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("covariance eigendecomposition failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  if (!ev.allFinite() || ev.minCoeff() <= 0.0) {
    throw NumericalError("covariance is no longer positive definite");
  }
  state.eigenvectors = solver.eigenvectors();
  state.axis_lengths = ev.cwiseSqrt();
}

Eigen::VectorXd clip_unit(Eigen::VectorXd x) {
  return x.cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace

CmaStrategy CmaStrategy::defaults(int dim, int population_size) {
  if (dim < 1) throw InvalidInput("CMA-ES dimension must be positive");
  if (population_size < 2) {
    throw InvalidInput("population_size must be at least 2");
  }
  CmaStrategy s;
  s.dim = dim;
  s.population_size = population_size;
  s.parents = population_size / 2;
  const double n = dim;

  s.weights.resize(s.parents);
  for (int i = 0; i < s.parents; ++i) {
    s.weights[i] = std::log((population_size + 1) / 2.0) - std::log(i + 1.0);
  }
  s.weights /= s.weights.sum();
  s.mu_eff = 1.0 / s.weights.squaredNorm();

  s.c_sigma = (s.mu_eff + 2.0) / (n + s.mu_eff + 5.0);
  s.d_sigma = 1.0 +
              2.0 * std::max(0.0, std::sqrt((s.mu_eff - 1.0) / (n + 1.0)) - 1.0) +
              s.c_sigma;
  s.c_c = (4.0 + s.mu_eff / n) / (n + 4.0 + 2.0 * s.mu_eff / n);
  s.c_1 = 2.0 / ((n + 1.3) * (n + 1.3) + s.mu_eff);
  s.c_mu = std::min(1.0 - s.c_1, 2.0 * (s.mu_eff - 2.0 + 1.0 / s.mu_eff) /
                                     ((n + 2.0) * (n + 2.0) + s.mu_eff));
  s.chi_n = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));
  return s;
}

double CmaState::min_eigenvalue() const {
  return axis_lengths.size() ? axis_lengths.minCoeff() * axis_lengths.minCoeff()
                             : 0.0;
}

CmaState cma_init(const Eigen::VectorXd& mean, double step_size,
                  int population_size) {
  if (mean.size() == 0 || !mean.allFinite()) {
    throw InvalidInput("CMA-ES mean must be a finite non-empty vector");
  }
  if (!(step_size > 0.0) || !std::isfinite(step_size)) {
    throw InvalidInput("CMA-ES step size must be positive");
  }
  const auto n = static_cast<int>(mean.size());
  CmaState state;
  state.strategy = CmaStrategy::defaults(n, population_size);
  state.mean = clip_unit(mean);
  state.step_size = step_size;
  state.covariance = Eigen::MatrixXd::Identity(n, n);
  state.path_sigma = Eigen::VectorXd::Zero(n);
  state.path_c = Eigen::VectorXd::Zero(n);
  decompose(state);
  return state;
}

std::vector<Eigen::VectorXd> cma_ask(const CmaState& state, Rng& rng) {
  const int n = state.strategy.dim;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Eigen::VectorXd> out;
  out.reserve(state.strategy.population_size);
  for (int k = 0; k < state.strategy.population_size; ++k) {
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z[i] = normal(rng);
    const Eigen::VectorXd y =
        state.eigenvectors * state.axis_lengths.cwiseProduct(z);
    out.push_back(clip_unit(state.mean + state.step_size * y));
  }
  return out;
}

CmaState cma_tell(CmaState state, std::span<const Eigen::VectorXd> candidates,
                  std::span<const double> losses) {
  const CmaStrategy& s = state.strategy;
  const int n = s.dim;
  if (candidates.size() != losses.size() ||
      static_cast<int>(candidates.size()) != s.population_size) {
    throw InvalidInput("cma_tell expects population_size candidates and losses");
  }
  for (std::size_t i = 0; i < losses.size(); ++i) {
    if (!std::isfinite(losses[i])) throw InvalidInput("non-finite loss");
    if (candidates[i].size() != n) {
      throw InvalidInput("candidate dimension mismatch");
    }
  }

  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return losses[a] < losses[b]; });

  // C^{-1/2} = B D^{-1} B^T
  const Eigen::MatrixXd inv_sqrt_c =
      state.eigenvectors * state.axis_lengths.cwiseInverse().asDiagonal() *
      state.eigenvectors.transpose();

  // Repaired points are injected solutions: their Mahalanobis length is
  // capped so a clipped outlier cannot blow up the paths.
  const double y_cap = std::sqrt(static_cast<double>(n)) + 2.0 * n / (n + 2.0);
  Eigen::MatrixXd selected(n, s.parents);
  for (int i = 0; i < s.parents; ++i) {
    Eigen::VectorXd y = (candidates[order[i]] - state.mean) / state.step_size;
    const double len = (inv_sqrt_c * y).norm();
    if (len > y_cap) y *= y_cap / len;
    selected.col(i) = y;
  }
  const Eigen::VectorXd y_w = selected * s.weights;

  state.mean = clip_unit(state.mean + state.step_size * y_w);

  state.path_sigma = (1.0 - s.c_sigma) * state.path_sigma +
                     std::sqrt(s.c_sigma * (2.0 - s.c_sigma) * s.mu_eff) *
                         (inv_sqrt_c * y_w);
  const double ps_norm = state.path_sigma.norm();
  const double decay =
      std::sqrt(1.0 - std::pow(1.0 - s.c_sigma, 2.0 * (state.generation + 1)));
  const bool h_sigma =
      ps_norm / decay < (1.4 + 2.0 / (n + 1.0)) * s.chi_n;

  state.path_c = (1.0 - s.c_c) * state.path_c;
  if (h_sigma) {
    state.path_c += std::sqrt(s.c_c * (2.0 - s.c_c) * s.mu_eff) * y_w;
  }
  const double delta_h = h_sigma ? 0.0 : s.c_c * (2.0 - s.c_c);

  Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < s.parents; ++i) {
    rank_mu += s.weights[i] * selected.col(i) * selected.col(i).transpose();
  }
  state.covariance =
      (1.0 + s.c_1 * delta_h - s.c_1 - s.c_mu) * state.covariance +
      s.c_1 * state.path_c * state.path_c.transpose() + s.c_mu * rank_mu;

  state.step_size *=
      std::exp(s.c_sigma / s.d_sigma * (ps_norm / s.chi_n - 1.0));
  if (!std::isfinite(state.step_size) || state.step_size <= 0.0) {
    throw NumericalError("step size degenerated");
  }
  decompose(state);
  ++state.generation;
  return state;
}

CmaRunResult cma_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, double step_size,
                          int population_size, int generations,
                          std::uint64_t seed) {
  Rng rng(seed);
  CmaState state = cma_init(x0, step_size, population_size);
  CmaRunResult result;
  result.best_loss = std::numeric_limits<double>::infinity();
  std::vector<double> losses(population_size);
  for (int g = 0; g < generations; ++g) {
    const auto candidates = cma_ask(state, rng);
    for (int k = 0; k < population_size; ++k) {
      losses[k] = f(candidates[k]);
      if (losses[k] < result.best_loss) {
        result.best_loss = losses[k];
        result.best_x = candidates[k];
      }
    }
    result.generation_best.push_back(
        *std::min_element(losses.begin(), losses.end()));
    state = cma_tell(std::move(state), candidates, losses);
    result.generations = g + 1;
  }
  return result;
}

}  // namespace ballid
