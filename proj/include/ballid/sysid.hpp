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

#ifndef BALLID_SYSID_HPP_
#define BALLID_SYSID_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ballid/ball_dynamics.hpp"
#include "ballid/trajectory.hpp"

namespace ballid {

struct SysIdConfig {
  ContactParams initial_params{0.5, 0.5, 0.5, 1.0, 1.0};
  ParamBounds bounds;
  double search_scale = 0.2;  // sigma_0 in the unit-normalized box
  int population_size = 4;
  double drop_weight = 1.0;  // lambda_1
  double roll_weight = 1.0;  // lambda_2
  // Divide each weight by the squared range of its recorded series so the
  // two sums are commensurate.
  bool normalize_by_range = true;
  double tolerance = 1e-8;
  int max_generations = 300;
  std::uint64_t seed = 0;
  bool parallel = true;

  void validate() const;
};

// Trajectory matching loss:
//   drop_weight * sum (h_i - h'_i)^2 + roll_weight * sum (d_i - d'_i)^2
// Pairs must match in kind and length.
double sysid_loss(const Trajectory& sim_drop, const Trajectory& sim_roll,
                  const Trajectory& real_drop, const Trajectory& real_roll,
                  double drop_weight, double roll_weight);

Eigen::VectorXd normalize(const ContactParams& p, const ParamBounds& bounds);
ContactParams denormalize(const Eigen::VectorXd& x, const ParamBounds& bounds);

// Everything needed to score one candidate: the recordings, the forward
// model settings and the effective loss weights.
class IdentificationProblem {
 public:
  IdentificationProblem(Trajectory real_drop, Trajectory real_roll,
                        const SysIdConfig& cfg, const BallSpec& spec,
                        const SimConfig& sim, double h0, double v0);

  // Loss at a point of the unit box; the point is clipped first.
  double loss(const Eigen::VectorXd& x) const;
  double loss(const ContactParams& p) const;

  const ParamBounds& bounds() const { return bounds_; }
  double drop_weight() const { return drop_weight_; }
  double roll_weight() const { return roll_weight_; }

 private:
  Trajectory real_drop_;
  Trajectory real_roll_;
  ParamBounds bounds_;
  BallSpec spec_;
  SimConfig drop_sim_;
  SimConfig roll_sim_;
  double h0_;
  double v0_;
  double drop_weight_;
  double roll_weight_;
};

enum class Termination { Tolerance, MaxGenerations };
std::string_view to_string(Termination t);

struct IdentificationResult {
  ContactParams best_params;
  double best_loss = 0.0;
  int generations_used = 0;
  std::vector<double> generation_best;  // min loss of each generation
  std::vector<double> running_best;     // best loss seen so far
  Termination terminated_by = Termination::MaxGenerations;
  double drop_weight = 0.0;  // effective weights after normalization
  double roll_weight = 0.0;
  int restarts = 0;

  bool operator==(const IdentificationResult&) const = default;
};

// CMA-ES identification loop: ask, simulate drop and roll for every
// candidate, score, tell. Stops when two consecutive generation-best losses
// differ by less than cfg.tolerance or after cfg.max_generations.
IdentificationResult identify(const Trajectory& real_drop,
                              const Trajectory& real_roll,
                              const SysIdConfig& cfg, const BallSpec& spec,
                              const SimConfig& sim, double h0, double v0);

}  // namespace ballid

#endif  // BALLID_SYSID_HPP_
