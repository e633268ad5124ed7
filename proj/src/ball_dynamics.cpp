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

#include "ballid/ball_dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "ballid/errors.hpp"

namespace ballid {

namespace {

constexpr double kImpactTimeTolerance = 1e-8;  // s

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

// Position/velocity of the ball along one axis.
struct State {
  double pos = 0.0;
  double vel = 0.0;
};

// Classic RK4 for x' = v, v' = accel(v).
template <typename Accel>
State rk4_step(const State& s, double h, const Accel& accel) {
  const double v1 = s.vel;
  const double a1 = accel(v1);
  const double v2 = s.vel + 0.5 * h * a1;
  const double a2 = accel(v2);
  const double v3 = s.vel + 0.5 * h * a2;
  const double a3 = accel(v3);
  const double v4 = s.vel + h * a3;
  const double a4 = accel(v4);
  return {s.pos + h / 6.0 * (v1 + 2.0 * v2 + 2.0 * v3 + v4),
          s.vel + h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)};
}

// Smallest sub-step in (0, h] at which `crossed` becomes true, to within
// kImpactTimeTolerance. `crossed(h)` must hold.
template <typename Pred>
double bisect_event(double h, const Pred& crossed) {
  double lo = 0.0;
  double hi = h;
  while (hi - lo > kImpactTimeTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (crossed(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::size_t substeps_per_sample(const SimConfig& cfg) {
  const double ratio = cfg.sample_interval / cfg.integrator_step;
  return static_cast<std::size_t>(std::max(1.0, std::ceil(ratio - 1e-9)));
}

void validate_sim_params(const ContactParams& p) {
  for (double v : p.to_array()) require_finite(v, "contact parameter");
  if (p.static_friction < 0.0 || p.dynamic_friction < 0.0 ||
      p.linear_damping < 0.0 || p.angular_damping < 0.0) {
    throw InvalidInput("friction and damping must be non-negative");
  }
  if (p.restitution < 0.0 || p.restitution > 1.0) {
    throw InvalidInput("restitution must lie in [0, 1]");
  }
}

void validate_common(const ContactParams& params, const BallSpec& spec,
                     const SimConfig& cfg, std::size_t n_samples) {
  validate_sim_params(params);
  spec.validate();
  cfg.validate();
  if (n_samples < 2) throw InvalidInput("n_samples must be at least 2");
}

}  // namespace

const std::array<std::string, ContactParams::kDim>& ContactParams::names() {
  static const std::array<std::string, kDim> kNames{
      "static_friction", "dynamic_friction", "restitution", "linear_damping",
      "angular_damping"};
  return kNames;
}

std::array<double, ContactParams::kDim> ContactParams::to_array() const {
  return {static_friction, dynamic_friction, restitution, linear_damping,
          angular_damping};
}

ContactParams ContactParams::from_array(const std::array<double, kDim>& v) {
  return {v[0], v[1], v[2], v[3], v[4]};
}

ContactParams hard_ground_params() { return {0.77, 0.07, 0.75, 0.01, 4.28}; }
ContactParams grass_params() { return {0.98, 0.15, 0.71, 0.01, 4.95}; }

void ParamBounds::validate() const {
  for (std::size_t i = 0; i < ContactParams::kDim; ++i) {
    require_finite(lo[i], "lower bound");
    require_finite(hi[i], "upper bound");
    if (!(lo[i] < hi[i])) {
      throw InvalidInput("bounds for " + ContactParams::names()[i] +
                         " must satisfy lo < hi");
    }
  }
}

bool ParamBounds::contains(const ContactParams& p) const {
  const auto v = p.to_array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= lo[i] && v[i] <= hi[i])) return false;
  }
  return true;
}

ContactParams ParamBounds::clip(const ContactParams& p) const {
  auto v = p.to_array();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::clamp(v[i], lo[i], hi[i]);
  return ContactParams::from_array(v);
}

std::vector<std::string> validate_params(const ContactParams& p,
                                         const ParamBounds& bounds) {
  bounds.validate();
  const auto v = p.to_array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    require_finite(v[i], ContactParams::names()[i].c_str());
    if (v[i] < bounds.lo[i] || v[i] > bounds.hi[i]) {
      throw InvalidInput(ContactParams::names()[i] + " outside its bounds");
    }
  }
  std::vector<std::string> warnings;
  if (p.dynamic_friction > p.static_friction) {
    warnings.emplace_back("dynamic_friction exceeds static_friction");
  }
  return warnings;
}

void BallSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidInput("ball radius must be positive");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw InvalidInput("ball mass must be positive");
  }
  if (!(inertia_factor > 0.0 && inertia_factor <= 1.0)) {
    throw InvalidInput("inertia_factor must lie in (0, 1]");
  }
}

void SimConfig::validate() const {
  for (double v : {gravity, integrator_step, bounce_cutoff_speed,
                   roll_stop_speed, sample_interval}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidInput("simulation settings must be positive and finite");
    }
  }
  if (integrator_step > sample_interval / 10.0 * (1.0 + 1e-12)) {
    throw InvalidInput("integrator_step must be at most sample_interval/10");
  }
}

DropResult simulate_drop_events(const ContactParams& params,
                                const BallSpec& spec, double h0,
                                const SimConfig& cfg, std::size_t n_samples) {
  validate_common(params, spec, cfg, n_samples);
  require_finite(h0, "h0");
  if (!(h0 > 0.0)) throw InvalidInput("drop height h0 must be positive");

  const double g = cfg.gravity;
  const double damping = params.linear_damping;
  const auto accel = [g, damping](double v) { return -g - damping * v; };

  DropResult result;
  result.trajectory = Trajectory{cfg.sample_interval,
                                 std::vector<double>(n_samples, 0.0),
                                 TrajectoryKind::DropHeight};
  result.trajectory.values[0] = h0;

  State state{h0, 0.0};
  bool resting = false;
  double t = 0.0;

  // Integrates `span` seconds from the current state, handling any impacts.
  const auto advance = [&](double span) {
    while (span > 0.0 && !resting) {
      const State next = rk4_step(state, span, accel);
      if (next.pos > 0.0) {
        state = next;
        t += span;
        return;
      }
      const double hit = bisect_event(span, [&](double s) {
        return rk4_step(state, s, accel).pos <= 0.0;
      });
      const double speed_in = std::abs(rk4_step(state, hit, accel).vel);
      const double speed_out = params.restitution * speed_in;
      t += hit;
      span -= hit;
      if (speed_out < cfg.bounce_cutoff_speed) {
        result.impacts.push_back({t, speed_in, 0.0});
        state = {0.0, 0.0};
        resting = true;
      } else {
        result.impacts.push_back({t, speed_in, speed_out});
        state = {0.0, speed_out};
      }
    }
  };

  const std::size_t substeps = substeps_per_sample(cfg);
  const double h = cfg.sample_interval / static_cast<double>(substeps);
  for (std::size_t k = 1; k < n_samples; ++k) {
    for (std::size_t j = 0; j < substeps && !resting; ++j) advance(h);
    // Keep sample times exact rather than accumulating substeps.
    t = static_cast<double>(k) * cfg.sample_interval;
    result.trajectory.values[k] = resting ? 0.0 : state.pos;
  }
  return result;
}

Trajectory simulate_drop(const ContactParams& params, const BallSpec& spec,
                         double h0, const SimConfig& cfg,
                         std::size_t n_samples) {
  return simulate_drop_events(params, spec, h0, cfg, n_samples).trajectory;
}

Trajectory simulate_roll(const ContactParams& params, const BallSpec& spec,
                         double v0, const SimConfig& cfg,
                         std::size_t n_samples) {
  validate_common(params, spec, cfg, n_samples);
  require_finite(v0, "v0");
  if (v0 < 0.0) throw InvalidInput("initial roll speed v0 must be >= 0");

  const double kappa = spec.effective_inertia();
  const double coulomb = params.dynamic_friction * cfg.gravity;
  const double viscous =
      params.linear_damping + spec.inertia_factor * params.angular_damping;
  const auto accel = [=](double v) { return -(coulomb + viscous * v) / kappa; };

  Trajectory traj{cfg.sample_interval, std::vector<double>(n_samples, 0.0),
                  TrajectoryKind::RollDisplacement};
  State state{0.0, v0};
  bool stopped = v0 <= cfg.roll_stop_speed;

  const auto advance = [&](double span) {
    const State next = rk4_step(state, span, accel);
    if (next.vel > cfg.roll_stop_speed) {
      state = next;
      return;
    }
    const double stop = bisect_event(span, [&](double s) {
      return rk4_step(state, s, accel).vel <= cfg.roll_stop_speed;
    });
    state = {std::max(state.pos, rk4_step(state, stop, accel).pos), 0.0};
    stopped = true;
  };

  const std::size_t substeps = substeps_per_sample(cfg);
  const double h = cfg.sample_interval / static_cast<double>(substeps);
  for (std::size_t k = 1; k < n_samples; ++k) {
    for (std::size_t j = 0; j < substeps && !stopped; ++j) advance(h);
    traj.values[k] = state.pos;
  }
  return traj;
}

}  // namespace ballid
