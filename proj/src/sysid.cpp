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

#include "ballid/sysid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballid/cma_es.hpp"
#include "ballid/errors.hpp"
#include "ballid/kernels.hpp"

namespace ballid {

namespace {

double sum_sq_residual(const Trajectory& sim, const Trajectory& real) {
  if (sim.kind != real.kind) {
    throw InvalidInput("loss compares trajectories of different kinds");
  }
  if (sim.size() != real.size()) {
    throw InvalidInput("loss compares trajectories of different lengths");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < sim.size(); ++i) {
    const double r = sim.values[i] - real.values[i];
    sum += r * r;
  }
  return sum;
}

double effective_weight(double weight, const Trajectory& real, bool normalize) {
  if (!normalize) return weight;
  const double range = real.range();
  // A flat recording carries no scale; fall back to the raw weight.
  return range > 0.0 ? weight / (range * range) : weight;
}

SimConfig resampled(SimConfig sim, const Trajectory& traj) {
  sim.sample_interval = traj.dt;
  sim.validate();
  return sim;
}

}  // namespace

void SysIdConfig::validate() const {
  bounds.validate();
  validate_params(initial_params, bounds);
  if (!(search_scale > 0.0 && search_scale <= 1.0)) {
    throw InvalidInput("search_scale must lie in (0, 1]");
  }
  if (population_size < 2) throw InvalidInput("population_size must be >= 2");
  if (!(drop_weight >= 0.0) || !(roll_weight >= 0.0) ||
      !std::isfinite(drop_weight) || !std::isfinite(roll_weight)) {
    throw InvalidInput("loss weights must be finite and non-negative");
  }
  if (!(tolerance > 0.0)) throw InvalidInput("tolerance must be positive");
  if (max_generations < 1) throw InvalidInput("max_generations must be >= 1");
}

double sysid_loss(const Trajectory& sim_drop, const Trajectory& sim_roll,
                  const Trajectory& real_drop, const Trajectory& real_roll,
                  double drop_weight, double roll_weight) {
  if (sim_drop.kind != TrajectoryKind::DropHeight ||
      sim_roll.kind != TrajectoryKind::RollDisplacement) {
    throw InvalidInput("loss expects a drop and a roll trajectory");
  }
  if (!(drop_weight >= 0.0) || !(roll_weight >= 0.0) ||
      !std::isfinite(drop_weight) || !std::isfinite(roll_weight)) {
    throw InvalidInput("loss weights must be finite and non-negative");
  }
  return drop_weight * sum_sq_residual(sim_drop, real_drop) +
         roll_weight * sum_sq_residual(sim_roll, real_roll);
}

Eigen::VectorXd normalize(const ContactParams& p, const ParamBounds& bounds) {
  const auto v = p.to_array();
  Eigen::VectorXd x(ContactParams::kDim);
  for (std::size_t i = 0; i < v.size(); ++i) {
    x[i] = (v[i] - bounds.lo[i]) / (bounds.hi[i] - bounds.lo[i]);
  }
  return x;
}

ContactParams denormalize(const Eigen::VectorXd& x, const ParamBounds& bounds) {
  if (x.size() != static_cast<Eigen::Index>(ContactParams::kDim)) {
    throw InvalidInput("normalized parameter vector has wrong dimension");
  }
  std::array<double, ContactParams::kDim> v{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = bounds.lo[i] + x[i] * (bounds.hi[i] - bounds.lo[i]);
  }
  return ContactParams::from_array(v);
}

IdentificationProblem::IdentificationProblem(Trajectory real_drop,
                                             Trajectory real_roll,
                                             const SysIdConfig& cfg,
                                             const BallSpec& spec,
                                             const SimConfig& sim, double h0,
                                             double v0)
    : real_drop_(std::move(real_drop)),
      real_roll_(std::move(real_roll)),
      bounds_(cfg.bounds),
      spec_(spec),
      h0_(h0),
      v0_(v0) {
  if (real_drop_.kind != TrajectoryKind::DropHeight ||
      real_roll_.kind != TrajectoryKind::RollDisplacement) {
    throw InvalidInput("identification needs a drop and a roll recording");
  }
  validate_sampling(real_drop_);
  validate_sampling(real_roll_);
  cfg.validate();
  spec_.validate();
  if (!(h0_ > 0.0) || !std::isfinite(h0_)) {
    throw InvalidInput("h0 must be positive");
  }
  if (!(v0_ >= 0.0) || !std::isfinite(v0_)) {
    throw InvalidInput("v0 must be non-negative");
  }
  drop_sim_ = resampled(sim, real_drop_);
  roll_sim_ = resampled(sim, real_roll_);
  drop_weight_ =
      effective_weight(cfg.drop_weight, real_drop_, cfg.normalize_by_range);
  roll_weight_ =
      effective_weight(cfg.roll_weight, real_roll_, cfg.normalize_by_range);
}

double IdentificationProblem::loss(const ContactParams& p) const {
  const Trajectory drop =
      simulate_drop(p, spec_, h0_, drop_sim_, real_drop_.size());
  const Trajectory roll =
      simulate_roll(p, spec_, v0_, roll_sim_, real_roll_.size());
  return sysid_loss(drop, roll, real_drop_, real_roll_, drop_weight_,
                    roll_weight_);
}

double IdentificationProblem::loss(const Eigen::VectorXd& x) const {
  return loss(denormalize(x.cwiseMax(0.0).cwiseMin(1.0), bounds_));
}

std::string_view to_string(Termination t) {
  return t == Termination::Tolerance ? "Tolerance" : "MaxGenerations";
}

IdentificationResult identify(const Trajectory& real_drop,
                              const Trajectory& real_roll,
                              const SysIdConfig& cfg, const BallSpec& spec,
                              const SimConfig& sim, double h0, double v0) {
  const IdentificationProblem problem(real_drop, real_roll, cfg, spec, sim, h0,
                                      v0);
  constexpr int kMaxRestarts = 3;

  Rng rng(cfg.seed);
  CmaState state = cma_init(normalize(cfg.initial_params, cfg.bounds),
                            cfg.search_scale, cfg.population_size);

  IdentificationResult result;
  result.drop_weight = problem.drop_weight();
  result.roll_weight = problem.roll_weight();
  result.best_loss = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x = state.mean;
  double prev_best = std::numeric_limits<double>::infinity();

  for (int gen = 1; gen <= cfg.max_generations; ++gen) {
    const std::vector<Eigen::VectorXd> candidates = cma_ask(state, rng);
    const std::vector<double> losses =
        cfg.parallel ? evaluate_losses_parallel(problem, candidates)
                     : evaluate_losses_serial(problem, candidates);

    try {
      state = cma_tell(std::move(state), candidates, losses);
    } catch (const NumericalError&) {
      if (++result.restarts > kMaxRestarts) throw;
      state = cma_init(best_x, cfg.search_scale, cfg.population_size);
    }

    const auto it = std::min_element(losses.begin(), losses.end());
    const double gen_best = *it;
    if (gen_best < result.best_loss) {
      result.best_loss = gen_best;
      best_x = candidates[static_cast<std::size_t>(it - losses.begin())];
    }
    result.generation_best.push_back(gen_best);
    result.running_best.push_back(result.best_loss);
    result.generations_used = gen;

    if (std::abs(prev_best - gen_best) < cfg.tolerance) {
      result.terminated_by = Termination::Tolerance;
      break;
    }
    prev_best = gen_best;
  }
  result.best_params = denormalize(best_x, cfg.bounds);
  return result;
}

}  // namespace ballid
