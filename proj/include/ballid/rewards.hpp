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

#ifndef BALLID_REWARDS_HPP_
#define BALLID_REWARDS_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ballid {

enum class Stage { I, II };
enum class Foot { None, Left, Right };

std::string_view to_string(Foot f);
Foot parse_foot(std::string_view s);
Stage parse_stage(std::string_view s);

enum class RewardTerm {
  AnchorPos,
  AnchorOri,
  BodyPos,
  BodyOri,
  LinVel,
  AngVel,
  FootPos,
  BallProx,
  Contact,
  SideKick,
  VelAlign,
  Speed,
  ZSpeed,
  ActionRate,
  JointLimit,
  UndesiredContact,
  FootSep,
  WaistRate,
  Upright,
};
inline constexpr std::size_t kRewardTermCount = 19;

std::string_view term_name(RewardTerm t);
RewardTerm term_from_index(std::size_t i);

struct TermSpec {
  std::optional<double> weight_stage1;
  std::optional<double> weight_stage2;
  double sigma = 0.5;  // only used by exponential kernels
};

struct RewardSpec {
  std::array<TermSpec, kRewardTermCount> terms;
  double outcome_window = 0.5;     // s after first contact
  double target_ball_speed = 5.0;  // m/s, speed shaping saturates here
  double min_foot_separation = 0.2;  // m, foot-sep saturates here

  // Stage I / II weights of the training reward stack.
  static RewardSpec defaults();

  const TermSpec& term(RewardTerm t) const {
    return terms[static_cast<std::size_t>(t)];
  }
  TermSpec& term(RewardTerm t) { return terms[static_cast<std::size_t>(t)]; }
  std::optional<double> weight(RewardTerm t, Stage stage) const;
  void validate() const;
};

// Everything the kernels read from one control step. Squared errors are
// precomputed norms; per-body errors are averaged through the kernel.
struct StateFrame {
  std::size_t step = 0;
  double time = 0.0;

  double anchor_pos_err_sq = 0.0;
  double anchor_ori_err_sq = 0.0;  // squared geodesic angle
  std::vector<double> body_pos_err_sq{0.0};
  std::vector<double> body_ori_err_sq{0.0};
  double lin_vel_err_sq = 0.0;
  double ang_vel_err_sq = 0.0;
  double foot_pos_err_sq = 0.0;

  std::vector<double> action;
  std::vector<double> prev_action;
  int joint_limit_violations = 0;
  int undesired_contacts = 0;
  Eigen::Vector3d projected_gravity{0.0, 0.0, -1.0};
  double foot_separation = 0.0;
  double waist_action_delta_sq = 0.0;

  bool has_ball = false;
  double ball_distance_xy = 0.0;
  Eigen::Vector3d ball_velocity = Eigen::Vector3d::Zero();
  Eigen::Vector2d swing_foot_velocity = Eigen::Vector2d::Zero();
  Foot ball_contact = Foot::None;  // foot touching the ball this step
};

// Episode-level kick state: first contact, the frozen proximity value and
// the outcome-shaping inputs.
struct KickEvent {
  Foot contact_foot = Foot::None;  // foot of the first contact
  Foot labeled_leg = Foot::Right;
  std::optional<std::size_t> first_contact_step;
  double first_contact_time = 0.0;
  double frozen_ball_prox = 1.0;
  Eigen::Vector3d ball_velocity_after = Eigen::Vector3d::Zero();
  Eigen::Vector3d target_direction{1.0, 0.0, 0.0};
  double min_speed_threshold = 0.2;  // m/s

  bool correct_contact() const {
    return first_contact_step.has_value() && contact_foot == labeled_leg;
  }
  void validate() const;
};

struct StepReward {
  std::array<double, kRewardTermCount> raw{};       // unweighted term value
  std::array<double, kRewardTermCount> weighted{};  // raw * stage weight
  std::array<bool, kRewardTermCount> active{};      // term has a stage weight
  double total = 0.0;

  double value(RewardTerm t) const {
    return weighted[static_cast<std::size_t>(t)];
  }
};

// exp(-error_sq / sigma^2)
double tracking_kernel(double error_sq, double sigma);

// Scores one frame. Stage II needs ball state in the frame.
StepReward evaluate_step(const StateFrame& frame, const KickEvent& event,
                         const RewardSpec& spec, Stage stage);

// Feeds frames in order, maintaining the KickEvent between steps.
class RewardEpisode {
 public:
  RewardEpisode(KickEvent event, RewardSpec spec, Stage stage);

  StepReward step(const StateFrame& frame);
  const KickEvent& event() const { return event_; }

 private:
  KickEvent event_;
  RewardSpec spec_;
  Stage stage_;
  bool has_prox_ = false;
};

// Cosine between the planar outgoing ball velocity and the planar direction
// from the impact point to the goal. Throws UndefinedMetric on zero vectors.
double kick_accuracy(const Eigen::Vector3d& ball_velocity,
                     const Eigen::Vector3d& impact_to_goal);

// goals / kicks. Throws UndefinedMetric for an empty list.
double success_rate(const std::vector<bool>& outcomes);

// State-trace CSV: header row naming columns, one frame per row. Lists
// (body errors, actions) are ';'-separated inside a cell. Ball columns are
// optional; frames without them have has_ball = false.
std::vector<StateFrame> read_state_trace(std::istream& in);
void write_state_trace(std::ostream& out, const std::vector<StateFrame>& frames);

// Per-step weighted term values for the stage's active terms plus total.
void write_reward_series(std::ostream& out, const std::vector<StepReward>& steps,
                         const std::vector<StateFrame>& frames, Stage stage,
                         const RewardSpec& spec);

}  // namespace ballid

#endif  // BALLID_REWARDS_HPP_
