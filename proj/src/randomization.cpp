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

#include "ballid/randomization.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ballid/errors.hpp"

namespace ballid {

DrSpec DrSpec::defaults() {
  return DrSpec{{
      {"robot_static_friction", 0.3, 1.6},
      {"robot_dynamic_friction", 0.3, 1.2},
      {"robot_restitution", 0.0, 0.5},
      {"joint_default_pos", -0.01, 0.01},
      {"base_com_x", -0.025, 0.025},
      {"base_com_y", -0.05, 0.05},
      {"base_com_z", -0.05, 0.05},
      {"push_robot", -0.5, 0.5},
  }};
}

void DrSpec::validate() const {
  for (const DrTerm& t : terms) {
    if (!std::isfinite(t.lo) || !std::isfinite(t.hi) || t.lo > t.hi) {
      throw InvalidInput("randomization term '" + t.name +
                         "' needs finite lo <= hi");
    }
  }
}

double sample_uniform(double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return lo + (hi - lo) * unit(rng);
}

std::vector<NamedValue> sample_dr(const DrSpec& spec, Rng& rng) {
  spec.validate();
  std::vector<NamedValue> out;
  out.reserve(spec.terms.size());
  for (const DrTerm& t : spec.terms) {
    out.push_back({t.name, sample_uniform(t.lo, t.hi, rng)});
  }
  return out;
}

std::string_view to_string(Surface s) {
  return s == Surface::HardGround ? "hard" : "grass";
}

ContactParams perturb_params(const ContactParams& nominal, double stddev,
                             Rng& rng) {
  if (!(stddev >= 0.0)) throw InvalidInput("perturbation std must be >= 0");
  std::normal_distribution<double> normal(0.0, 1.0);
  auto v = nominal.to_array();
  for (double& x : v) x += stddev * normal(rng);
  return ContactParams::from_array(v);
}

std::vector<SurfaceAssignment> assign_surface_params(
    std::size_t n_envs, const ContactParams& hard, const ContactParams& grass,
    Rng& rng, const SurfaceAssignmentOptions& opts) {
  if (n_envs < 2) throw InvalidInput("need at least two environments");
  opts.bounds.validate();
  const std::size_t n_hard = (n_envs + 1) / 2;
  std::vector<SurfaceAssignment> out;
  out.reserve(n_envs);
  for (std::size_t i = 0; i < n_envs; ++i) {
    const bool is_hard = i < n_hard;
    const ContactParams& nominal = is_hard ? hard : grass;
    out.push_back({is_hard ? Surface::HardGround : Surface::Grass,
                   opts.bounds.clip(
                       perturb_params(nominal, opts.perturbation_std, rng))});
  }
  return out;
}

void NoiseConfig::validate() const {
  if (!(c_min >= 0.0) || !(c_vel > 0.0) || !(c_dist > 0.0) ||
      !std::isfinite(c_min) || !std::isfinite(c_vel) || !std::isfinite(c_dist)) {
    throw InvalidInput("noise constants need c_min >= 0, c_vel > 0, c_dist > 0");
  }
}

namespace {

void validate_observation(const ObjectObservation& obs) {
  if (!obs.position.allFinite() || !obs.velocity.allFinite()) {
    throw InvalidInput("observation has non-finite components");
  }
}

}  // namespace

double observation_noise_sigma(const ObjectObservation& obs,
                               const NoiseConfig& cfg) {
  cfg.validate();
  validate_observation(obs);
  return cfg.c_min + obs.velocity.norm() / cfg.c_vel +
         obs.position.norm() / cfg.c_dist;
}

ObjectObservation apply_observation_noise(const ObjectObservation& obs,
                                          const NoiseConfig& cfg, Rng& rng) {
  const double sigma = observation_noise_sigma(obs, cfg);
  std::normal_distribution<double> normal(0.0, 1.0);
  ObjectObservation out = obs;
  for (int i = 0; i < 3; ++i) out.position[i] += sigma * normal(rng);
  return out;
}

void PlacementSpec::validate() const {
  for (double v : {angular_range, radial_range, min_radius, goal_depth,
                   goal_width, ball_speed_lo}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidInput("placement ranges must be non-negative");
    }
  }
  if (!(ball_speed_hi >= ball_speed_lo) || !std::isfinite(ball_speed_hi)) {
    throw InvalidInput("ball speed range needs lo <= hi");
  }
  if (!goal_center.allFinite()) throw InvalidInput("goal center not finite");
}

BallPlacement sample_ball_placement(const Eigen::Vector2d& nominal_position,
                                    double nominal_direction,
                                    const PlacementSpec& spec, Rng& rng) {
  spec.validate();
  const double nominal_radius = nominal_position.norm();
  if (!(nominal_radius > 0.0) || !std::isfinite(nominal_radius)) {
    throw InvalidInput("nominal ball position must be nonzero");
  }
  const double angle =
      nominal_direction +
      sample_uniform(-spec.angular_range, spec.angular_range, rng);
  const double radius = std::max(
      spec.min_radius,
      nominal_radius + sample_uniform(-spec.radial_range, spec.radial_range, rng));
  const double speed = sample_uniform(spec.ball_speed_lo, spec.ball_speed_hi, rng);
  const double heading =
      sample_uniform(-std::numbers::pi, std::numbers::pi, rng);

  BallPlacement out;
  out.position = radius * Eigen::Vector2d(std::cos(angle), std::sin(angle));
  out.velocity = speed * Eigen::Vector2d(std::cos(heading), std::sin(heading));
  return out;
}

Eigen::Vector2d sample_goal(const PlacementSpec& spec, Rng& rng) {
  spec.validate();
  const double hx = 0.5 * spec.goal_depth;
  const double hy = 0.5 * spec.goal_width;
  const double x = sample_uniform(spec.goal_center.x() - hx,
                                  spec.goal_center.x() + hx, rng);
  const double y = sample_uniform(spec.goal_center.y() - hy,
                                  spec.goal_center.y() + hy, rng);
  return {x, y};
}

}  // namespace ballid
