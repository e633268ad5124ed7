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

#ifndef BALLID_CMA_ES_HPP_
#define BALLID_CMA_ES_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ballid {

using Rng = std::mt19937_64;

// Learning rates and recombination weights of (mu/mu_w, lambda)-CMA-ES,
// following Hansen's defaults for the given dimension and population.
struct CmaStrategy {
  int dim = 0;
  int population_size = 0;
  int parents = 0;  // mu = floor(lambda / 2)
  Eigen::VectorXd weights;
  double mu_eff = 0.0;
  double c_sigma = 0.0;
  double d_sigma = 0.0;
  double c_c = 0.0;
  double c_1 = 0.0;
  double c_mu = 0.0;
  double chi_n = 0.0;  // E||N(0, I)||

  static CmaStrategy defaults(int dim, int population_size);
};

// Search distribution N(mean, step_size^2 * covariance) over the unit box
// [0, 1]^d. The eigendecomposition of the covariance is cached.
struct CmaState {
  CmaStrategy strategy;
  Eigen::VectorXd mean;
  double step_size = 0.0;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd path_sigma;
  Eigen::VectorXd path_c;
  int generation = 0;

  Eigen::MatrixXd eigenvectors;   // B
  Eigen::VectorXd axis_lengths;   // D = sqrt(eigenvalues)

  double min_eigenvalue() const;
};

// Mean is clipped into the unit box. Throws InvalidInput on bad arguments.
CmaState cma_init(const Eigen::VectorXd& mean, double step_size,
                  int population_size);

// Draws population_size candidates from the search distribution and repairs
// each into [0, 1]^d by coordinate-wise clipping.
std::vector<Eigen::VectorXd> cma_ask(const CmaState& state, Rng& rng);

// One generation of mean, cumulative step-size and rank-1 + rank-mu
// covariance updates, using the (repaired) candidates as evaluated.
// Throws InvalidInput on size mismatch or non-finite losses, NumericalError
// if the covariance stops being positive definite.
CmaState cma_tell(CmaState state, std::span<const Eigen::VectorXd> candidates,
                  std::span<const double> losses);

struct CmaRunResult {
  Eigen::VectorXd best_x;
  double best_loss = 0.0;
  int generations = 0;
  std::vector<double> generation_best;
};

// Plain ask/evaluate/tell loop for a fixed number of generations on the unit
// box. Used for benchmarks and tests; identification has its own driver.
CmaRunResult cma_minimize(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, double step_size,
                          int population_size, int generations,
                          std::uint64_t seed);

}  // namespace ballid

#endif  // BALLID_CMA_ES_HPP_
