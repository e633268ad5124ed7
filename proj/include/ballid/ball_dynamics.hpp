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

#ifndef BALLID_BALL_DYNAMICS_HPP_
#define BALLID_BALL_DYNAMICS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ballid/trajectory.hpp"

namespace ballid {

// The five identified contact parameters of the ball.
struct ContactParams {
  double static_friction = 0.5;
  double dynamic_friction = 0.5;
  double restitution = 0.5;
  double linear_damping = 1.0;   // 1/s
  double angular_damping = 1.0;  // 1/s, damping rate on spin

  static constexpr std::size_t kDim = 5;
  static const std::array<std::string, kDim>& names();

  std::array<double, kDim> to_array() const;
  static ContactParams from_array(const std::array<double, kDim>& v);

  bool operator==(const ContactParams&) const = default;
};

// Reference values identified on the two calibration surfaces.
ContactParams hard_ground_params();
ContactParams grass_params();

struct ParamBounds {
  std::array<double, ContactParams::kDim> lo{0.0, 0.0, 0.0, 0.0, 0.0};
  std::array<double, ContactParams::kDim> hi{1.0, 1.0, 1.0, 5.0, 5.0};

  void validate() const;
  bool contains(const ContactParams& p) const;
  ContactParams clip(const ContactParams& p) const;
};

// Non-finite values are errors; values outside the bounds are errors;
// dynamic > static friction is only reported through the returned warnings.
std::vector<std::string> validate_params(const ContactParams& p,
                                         const ParamBounds& bounds = {});

struct BallSpec {
  double radius = 0.11;  // m
  double mass = 0.43;    // kg
  double inertia_factor = 2.0 / 3.0;  // I / (m r^2), thin hollow sphere

  void validate() const;
  // 1 + I/(m r^2): translational + rotational inertia of a rolling ball.
  double effective_inertia() const { return 1.0 + inertia_factor; }
};

struct SimConfig {
  double gravity = 9.81;
  double integrator_step = 1e-4;
  double bounce_cutoff_speed = 1e-3;
  double roll_stop_speed = 1e-3;
  double sample_interval = 0.1;

  void validate() const;
};

// Samples covering the default 2 s recording window at 0.1 s.
inline constexpr std::size_t kDefaultSamples = 21;

struct ImpactEvent {
  double time = 0.0;
  double speed_in = 0.0;   // |v| just before contact
  double speed_out = 0.0;  // |v| just after; 0 once the ball comes to rest
};

struct DropResult {
  Trajectory trajectory;
  std::vector<ImpactEvent> impacts;
};

// Vertical drop from rest at height h0 with restitution bounces.
//
// Flight obeys dv/dt = -g - linear_damping * v, integrated with fixed-step
// RK4. Ground crossings inside a step are located by bisection on the step
// length to 1e-8 s; the impact reverses the velocity scaled by restitution.
// When the rebound speed falls below bounce_cutoff_speed the ball rests at
// h = 0 for the rest of the run.
Trajectory simulate_drop(const ContactParams& params, const BallSpec& spec,
                         double h0, const SimConfig& cfg,
                         std::size_t n_samples = kDefaultSamples);
DropResult simulate_drop_events(const ContactParams& params,
                                const BallSpec& spec, double h0,
                                const SimConfig& cfg,
                                std::size_t n_samples = kDefaultSamples);

// Horizontal roll without slipping from initial speed v0.
//
//   kappa * dv/dt = -(mu_d * g + (c_lin + inertia_factor * c_ang) * v)
//
// with kappa = 1 + inertia_factor. Once v drops to roll_stop_speed the ball
// stops. Static friction has no effect on a ball that is already rolling.
Trajectory simulate_roll(const ContactParams& params, const BallSpec& spec,
                         double v0, const SimConfig& cfg,
                         std::size_t n_samples = kDefaultSamples);

}  // namespace ballid

#endif  // BALLID_BALL_DYNAMICS_HPP_
