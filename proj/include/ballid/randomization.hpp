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

#ifndef BALLID_RANDOMIZATION_HPP_
#define BALLID_RANDOMIZATION_HPP_

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ballid/ball_dynamics.hpp"
#include "ballid/cma_es.hpp"

namespace ballid {

// Uniform U(lo, hi) randomization of one named simulator quantity.
struct DrTerm {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
};

struct DrSpec {
  std::vector<DrTerm> terms;

  // Robot contact, joint offset, CoM shift and push ranges used in training.
  static DrSpec defaults();
  void validate() const;
};

struct NamedValue {
  std::string name;
  double value = 0.0;
};

// One independent draw per term, in declaration order.
std::vector<NamedValue> sample_dr(const DrSpec& spec, Rng& rng);

// U(lo, hi) built on a canonical [0, 1) draw so lo == hi is exact.
double sample_uniform(double lo, double hi, Rng& rng);

enum class Surface { HardGround, Grass };
std::string_view to_string(Surface s);

struct SurfaceAssignment {
  Surface surface = Surface::HardGround;
  ContactParams params;
};

struct SurfaceAssignmentOptions {
  double perturbation_std = 1.0;  // 0 reproduces the nominals exactly
  ParamBounds bounds;
};

// theta ~ N(nominal, std^2 I) without clipping.
ContactParams perturb_params(const ContactParams& nominal, double stddev,
                             Rng& rng);

// First ceil(n/2) environments use the hard-ground nominal, the rest grass.
// Each environment's parameters are perturbed and clipped to the bounds.
std::vector<SurfaceAssignment> assign_surface_params(
    std::size_t n_envs, const ContactParams& hard, const ContactParams& grass,
    Rng& rng, const SurfaceAssignmentOptions& opts = {});

struct NoiseConfig {
  double c_min = 0.01;  // m
  double c_vel = 10.0;  // (m/s) per m of noise
  double c_dist = 20.0;  // m per m of noise

  void validate() const;
};

enum class ObjectKind { Ball, Goal };

// Object state expressed in the robot's root frame.
struct ObjectObservation {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  ObjectKind kind = ObjectKind::Ball;
};

// sigma = c_min + |v| / c_vel + |p| / c_dist. The robot sits at the frame
// origin, so |p| is the object's distance.
double observation_noise_sigma(const ObjectObservation& obs,
                               const NoiseConfig& cfg);

// Adds sigma * N(0, I) to the position; velocity is passed through.
ObjectObservation apply_observation_noise(const ObjectObservation& obs,
                                          const NoiseConfig& cfg, Rng& rng);

struct PlacementSpec {
  double angular_range = std::numbers::pi / 6.0;  // rad, +/- about nominal
  double radial_range = 0.2;                      // m, +/- about nominal
  double min_radius = 0.05;                       // m
  Eigen::Vector2d goal_center{5.0, 0.0};
  double goal_depth = 0.5;  // extent along x (forward)
  double goal_width = 1.0;  // extent along y (lateral)
  double ball_speed_lo = 0.1;
  double ball_speed_hi = 0.3;

  void validate() const;
};

struct BallPlacement {
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();
};

// Perturbs the nominal spawn along its arc (angle) and radius, then draws an
// initial rolling velocity with uniform heading.
BallPlacement sample_ball_placement(const Eigen::Vector2d& nominal_position,
                                    double nominal_direction,
                                    const PlacementSpec& spec, Rng& rng);

// Uniform over the goal rectangle, relative to the robot's start.
Eigen::Vector2d sample_goal(const PlacementSpec& spec, Rng& rng);

}  // namespace ballid

#endif  // BALLID_RANDOMIZATION_HPP_
