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

#include "ballid/rewards.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ballid/errors.hpp"

namespace ballid {

namespace {

constexpr std::array<std::string_view, kRewardTermCount> kTermNames{
    "anchor_pos", "anchor_ori",  "body_pos",    "body_ori",
    "lin_vel",    "ang_vel",     "foot_pos",    "ball_prox",
    "contact",    "side_kick",   "vel_align",   "speed",
    "z_speed",    "action_rate", "joint_limit", "undesired_contact",
    "foot_sep",   "waist_rate",  "upright"};

double mean_kernel(const std::vector<double>& errors_sq, double sigma,
                   const char* what) {
  if (errors_sq.empty()) {
    throw InvalidInput(std::string(what) + " needs at least one tracked body");
  }
  double sum = 0.0;
  for (double e : errors_sq) sum += tracking_kernel(e, sigma);
  return sum / static_cast<double>(errors_sq.size());
}

double planar_cosine(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

// Lateral swing direction in the robot frame (x forward, y left): a left
// foot sweeps toward -y, a right foot toward +y.
Eigen::Vector2d lateral_direction(Foot leg) {
  return leg == Foot::Left ? Eigen::Vector2d(0.0, -1.0)
                           : Eigen::Vector2d(0.0, 1.0);
}

}  // namespace

std::string_view to_string(Foot f) {
  switch (f) {
    case Foot::Left:
      return "left";
    case Foot::Right:
      return "right";
    case Foot::None:
      return "none";
  }
  return "none";
}

Foot parse_foot(std::string_view s) {
  if (s == "left" || s == "L") return Foot::Left;
  if (s == "right" || s == "R") return Foot::Right;
  if (s == "none" || s.empty()) return Foot::None;
  throw InvalidInput("unknown foot '" + std::string(s) + "'");
}

Stage parse_stage(std::string_view s) {
  if (s == "1" || s == "I" || s == "i") return Stage::I;
  if (s == "2" || s == "II" || s == "ii") return Stage::II;
  throw InvalidInput("unknown stage '" + std::string(s) + "' (use 1 or 2)");
}

std::string_view term_name(RewardTerm t) {
  return kTermNames[static_cast<std::size_t>(t)];
}

RewardTerm term_from_index(std::size_t i) {
  if (i >= kRewardTermCount) throw InvalidInput("reward term index out of range");
  return static_cast<RewardTerm>(i);
}

RewardSpec RewardSpec::defaults() {
  RewardSpec s;
  const auto set = [&s](RewardTerm t, std::optional<double> w1,
                        std::optional<double> w2) {
    s.term(t).weight_stage1 = w1;
    s.term(t).weight_stage2 = w2;
  };
  using T = RewardTerm;
  constexpr std::nullopt_t none = std::nullopt;
  set(T::AnchorPos, 1.0, none);
  set(T::AnchorOri, 1.0, 0.5);
  set(T::BodyPos, 1.0, 0.8);
  set(T::BodyOri, 1.0, 0.8);
  set(T::LinVel, 1.0, 0.8);
  set(T::AngVel, 1.0, 0.8);
  set(T::FootPos, none, 1.0);
  set(T::BallProx, none, 1.0);
  set(T::Contact, none, 50.0);
  set(T::SideKick, none, 50.0);
  set(T::VelAlign, none, 30.0);
  set(T::Speed, none, 10.0);
  set(T::ZSpeed, none, -0.2);
  set(T::ActionRate, -0.1, -0.1);
  set(T::JointLimit, -10.0, -10.0);
  set(T::UndesiredContact, -0.1, -0.1);
  set(T::FootSep, none, 0.2);
  set(T::WaistRate, none, -0.25);
  set(T::Upright, none, -1.0);
  return s;
}

std::optional<double> RewardSpec::weight(RewardTerm t, Stage stage) const {
  return stage == Stage::I ? term(t).weight_stage1 : term(t).weight_stage2;
}

void RewardSpec::validate() const {
  for (const TermSpec& t : terms) {
    if (!(t.sigma > 0.0)) throw InvalidInput("kernel sigma must be positive");
  }
  if (!(outcome_window >= 0.0)) throw InvalidInput("outcome_window must be >= 0");
  if (!(target_ball_speed > 0.0) || !(min_foot_separation > 0.0)) {
    throw InvalidInput("speed and separation scales must be positive");
  }
}

void KickEvent::validate() const {
  if (labeled_leg == Foot::None) {
    throw InvalidInput("kicking-leg label must be left or right");
  }
  if (std::abs(target_direction.norm() - 1.0) > 1e-9) {
    throw InvalidInput("target_direction must be a unit vector");
  }
  if (!(min_speed_threshold >= 0.0)) {
    throw InvalidInput("min_speed_threshold must be >= 0");
  }
}

double tracking_kernel(double error_sq, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidInput("kernel sigma must be positive");
  }
  if (!std::isfinite(error_sq) || error_sq < 0.0) {
    throw InvalidInput("squared error must be finite and >= 0");
  }
  return std::exp(-error_sq / (sigma * sigma));
}

StepReward evaluate_step(const StateFrame& frame, const KickEvent& event,
                         const RewardSpec& spec, Stage stage) {
  if (stage == Stage::II && !frame.has_ball) {
    throw InvalidInput("stage II reward needs ball state in every frame");
  }
  StepReward r;
  for (std::size_t i = 0; i < kRewardTermCount; ++i) {
    r.active[i] = spec.weight(term_from_index(i), stage).has_value();
  }
  const auto is_active = [&](RewardTerm t) {
    return r.active[static_cast<std::size_t>(t)];
  };
  const auto set = [&](RewardTerm t, double v) {
    r.raw[static_cast<std::size_t>(t)] = v;
  };
  const auto sigma = [&](RewardTerm t) { return spec.term(t).sigma; };

  using T = RewardTerm;
  // Motion tracking.
  if (is_active(T::AnchorPos)) {
    set(T::AnchorPos, tracking_kernel(frame.anchor_pos_err_sq, sigma(T::AnchorPos)));
  }
  if (is_active(T::AnchorOri)) {
    set(T::AnchorOri, tracking_kernel(frame.anchor_ori_err_sq, sigma(T::AnchorOri)));
  }
  if (is_active(T::BodyPos)) {
    set(T::BodyPos, mean_kernel(frame.body_pos_err_sq, sigma(T::BodyPos), "body_pos"));
  }
  if (is_active(T::BodyOri)) {
    set(T::BodyOri, mean_kernel(frame.body_ori_err_sq, sigma(T::BodyOri), "body_ori"));
  }
  if (is_active(T::LinVel)) {
    set(T::LinVel, tracking_kernel(frame.lin_vel_err_sq, sigma(T::LinVel)));
  }
  if (is_active(T::AngVel)) {
    set(T::AngVel, tracking_kernel(frame.ang_vel_err_sq, sigma(T::AngVel)));
  }
  if (is_active(T::FootPos)) {
    set(T::FootPos, tracking_kernel(frame.foot_pos_err_sq, sigma(T::FootPos)));
  }

  // Ball interaction terms.
  const bool after_contact = event.first_contact_step.has_value() &&
                             frame.step >= *event.first_contact_step;
  if (is_active(T::BallProx)) {
    const double d = frame.ball_distance_xy;
    set(T::BallProx, after_contact ? event.frozen_ball_prox
                                   : tracking_kernel(d * d, sigma(T::BallProx)));
  }
  if (is_active(T::Contact)) {
    const bool first = event.first_contact_step.has_value() &&
                       frame.step == *event.first_contact_step;
    set(T::Contact, first && event.correct_contact() ? 1.0 : 0.0);
  }
  if (is_active(T::SideKick) && !after_contact) {
    set(T::SideKick, planar_cosine(frame.swing_foot_velocity,
                                   lateral_direction(event.labeled_leg)));
  }
  const bool in_window =
      after_contact && event.correct_contact() &&
      frame.time - event.first_contact_time <= spec.outcome_window &&
      frame.ball_velocity.norm() > event.min_speed_threshold;
  if (in_window) {
    const Eigen::Vector2d v_xy = frame.ball_velocity.head<2>();
    if (is_active(T::VelAlign)) {
      set(T::VelAlign, planar_cosine(v_xy, event.target_direction.head<2>()));
    }
    if (is_active(T::Speed)) {
      set(T::Speed, std::min(v_xy.norm() / spec.target_ball_speed, 1.0));
    }
    if (is_active(T::ZSpeed)) set(T::ZSpeed, std::abs(frame.ball_velocity.z()));
  }

  // Regularization.
  if (is_active(T::ActionRate)) {
    if (frame.action.size() != frame.prev_action.size()) {
      throw InvalidInput("action and previous action differ in length");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < frame.action.size(); ++i) {
      const double d = frame.action[i] - frame.prev_action[i];
      sq += d * d;
    }
    set(T::ActionRate, sq);
  }
  if (is_active(T::JointLimit)) {
    set(T::JointLimit, static_cast<double>(frame.joint_limit_violations));
  }
  if (is_active(T::UndesiredContact)) {
    set(T::UndesiredContact, static_cast<double>(frame.undesired_contacts));
  }
  if (is_active(T::FootSep)) {
    set(T::FootSep,
        std::clamp(frame.foot_separation / spec.min_foot_separation, 0.0, 1.0));
  }
  if (is_active(T::WaistRate)) set(T::WaistRate, frame.waist_action_delta_sq);
  if (is_active(T::Upright)) {
    const Eigen::Vector3d& g = frame.projected_gravity;
    set(T::Upright, g.x() * g.x() + g.y() * g.y());
  }

  for (std::size_t i = 0; i < kRewardTermCount; ++i) {
    if (!r.active[i]) continue;
    r.weighted[i] = *spec.weight(term_from_index(i), stage) * r.raw[i];
    r.total += r.weighted[i];
  }
  return r;
}

RewardEpisode::RewardEpisode(KickEvent event, RewardSpec spec, Stage stage)
    : event_(std::move(event)), spec_(std::move(spec)), stage_(stage) {
  event_.validate();
  spec_.validate();
}

StepReward RewardEpisode::step(const StateFrame& frame) {
  if (stage_ == Stage::II && frame.has_ball && !event_.first_contact_step) {
    const double d = frame.ball_distance_xy;
    const double prox =
        tracking_kernel(d * d, spec_.term(RewardTerm::BallProx).sigma);
    // Keep the last value seen before contact; a contact on the very first
    // frame freezes that frame's value.
    if (frame.ball_contact == Foot::None || !has_prox_) {
      event_.frozen_ball_prox = prox;
      has_prox_ = true;
    }
    if (frame.ball_contact != Foot::None) {
      event_.first_contact_step = frame.step;
      event_.first_contact_time = frame.time;
      event_.contact_foot = frame.ball_contact;
      event_.ball_velocity_after = frame.ball_velocity;
    }
  }
  return evaluate_step(frame, event_, spec_, stage_);
}

double kick_accuracy(const Eigen::Vector3d& ball_velocity,
                     const Eigen::Vector3d& impact_to_goal) {
  const Eigen::Vector2d v = ball_velocity.head<2>();
  const Eigen::Vector2d g = impact_to_goal.head<2>();
  if (!v.allFinite() || !g.allFinite() || v.norm() == 0.0 || g.norm() == 0.0) {
    throw UndefinedMetric("kick accuracy needs nonzero planar vectors");
  }
  return std::clamp(v.dot(g) / (v.norm() * g.norm()), -1.0, 1.0);
}

double success_rate(const std::vector<bool>& outcomes) {
  if (outcomes.empty()) throw UndefinedMetric("success rate of zero kicks");
  const auto goals = std::count(outcomes.begin(), outcomes.end(), true);
  return static_cast<double>(goals) / static_cast<double>(outcomes.size());
}

}  // namespace ballid
