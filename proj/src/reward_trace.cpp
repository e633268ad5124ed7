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

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "ballid/errors.hpp"
#include "ballid/format.hpp"
#include "ballid/rewards.hpp"

namespace ballid {

namespace {

const std::vector<std::string>& core_columns() {
  static const std::vector<std::string> kCols{
      "step",           "t",
      "anchor_pos_err_sq", "anchor_ori_err_sq",
      "body_pos_err_sq",   "body_ori_err_sq",
      "lin_vel_err_sq",    "ang_vel_err_sq",
      "action",            "prev_action",
      "joint_limit_violations", "undesired_contacts"};
  return kCols;
}

const std::vector<std::string>& optional_columns() {
  static const std::vector<std::string> kCols{
      "foot_pos_err_sq", "gravity_x",       "gravity_y",
      "gravity_z",       "foot_separation", "waist_action_delta_sq"};
  return kCols;
}

const std::vector<std::string>& ball_columns() {
  static const std::vector<std::string> kCols{
      "ball_dist_xy",  "ball_vx",       "ball_vy",     "ball_vz",
      "swing_foot_vx", "swing_foot_vy", "ball_contact"};
  return kCols;
}

class Row {
 public:
  Row(const std::map<std::string, std::size_t>& index,
      std::vector<std::string_view> cells, std::size_t line)
      : index_(index), cells_(std::move(cells)), line_(line) {}

  bool has(const std::string& col) const { return index_.count(col) != 0; }
  std::string_view cell(const std::string& col) const {
    return cells_.at(index_.at(col));
  }
  double number(const std::string& col) const {
    return parse_double(cell(col), where(col));
  }
  double number_or(const std::string& col, double fallback) const {
    return has(col) ? number(col) : fallback;
  }
  long long integer(const std::string& col) const {
    return parse_int(cell(col), where(col));
  }
  std::vector<double> list(const std::string& col) const {
    return parse_double_list(cell(col), ';', where(col));
  }

 private:
  std::string where(const std::string& col) const {
    return col + " (line " + std::to_string(line_) + ")";
  }

  const std::map<std::string, std::size_t>& index_;
  std::vector<std::string_view> cells_;
  std::size_t line_;
};

}  // namespace

std::vector<StateFrame> read_state_trace(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw InvalidInput("empty state trace");
  std::map<std::string, std::size_t> index;
  const auto names = split(trim(header), ',');
  for (std::size_t i = 0; i < names.size(); ++i) {
    index.emplace(std::string(names[i]), i);
  }
  const auto known = [](const std::string& name) {
    for (const auto* group : {&core_columns(), &optional_columns(), &ball_columns()}) {
      for (const auto& c : *group) {
        if (c == name) return true;
      }
    }
    return false;
  };
  for (const auto& [name, i] : index) {
    if (!known(name)) throw InvalidInput("unknown trace column '" + name + "'");
  }
  for (const auto& c : core_columns()) {
    if (!index.count(c)) throw InvalidInput("trace is missing column '" + c + "'");
  }
  const bool ball = index.count("ball_dist_xy") != 0;
  for (const auto& c : ball_columns()) {
    if (ball != (index.count(c) != 0)) {
      throw InvalidInput("ball columns must be given together");
    }
  }

  std::vector<StateFrame> frames;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split(trim(line), ',');
    if (cells.size() != names.size()) {
      throw InvalidInput("trace line " + std::to_string(line_no) +
                         " has the wrong number of fields");
    }
    const Row row(index, std::move(cells), line_no);
    StateFrame f;
    const long long step = row.integer("step");
    if (step < 0) throw InvalidInput("negative step index");
    f.step = static_cast<std::size_t>(step);
    f.time = row.number("t");
    f.anchor_pos_err_sq = row.number("anchor_pos_err_sq");
    f.anchor_ori_err_sq = row.number("anchor_ori_err_sq");
    f.body_pos_err_sq = row.list("body_pos_err_sq");
    f.body_ori_err_sq = row.list("body_ori_err_sq");
    f.lin_vel_err_sq = row.number("lin_vel_err_sq");
    f.ang_vel_err_sq = row.number("ang_vel_err_sq");
    f.foot_pos_err_sq = row.number_or("foot_pos_err_sq", 0.0);
    f.action = row.list("action");
    f.prev_action = row.list("prev_action");
    f.joint_limit_violations = static_cast<int>(row.integer("joint_limit_violations"));
    f.undesired_contacts = static_cast<int>(row.integer("undesired_contacts"));
    f.projected_gravity = {row.number_or("gravity_x", 0.0),
                           row.number_or("gravity_y", 0.0),
                           row.number_or("gravity_z", -1.0)};
    f.foot_separation = row.number_or("foot_separation", 0.0);
    f.waist_action_delta_sq = row.number_or("waist_action_delta_sq", 0.0);
    if (ball && !row.cell("ball_dist_xy").empty()) {
      f.has_ball = true;
      f.ball_distance_xy = row.number("ball_dist_xy");
      f.ball_velocity = {row.number("ball_vx"), row.number("ball_vy"),
                         row.number("ball_vz")};
      f.swing_foot_velocity = {row.number("swing_foot_vx"),
                               row.number("swing_foot_vy")};
      f.ball_contact = parse_foot(row.cell("ball_contact"));
    }
    frames.push_back(std::move(f));
  }
  if (frames.empty()) throw InvalidInput("state trace has no frames");
  return frames;
}

void write_state_trace(std::ostream& out, const std::vector<StateFrame>& frames) {
  bool first = true;
  for (const auto* group : {&core_columns(), &optional_columns(), &ball_columns()}) {
    for (const auto& c : *group) {
      out << (first ? "" : ",") << c;
      first = false;
    }
  }
  out << '\n';
  const auto num = [](double v) { return format_double(v); };
  for (const StateFrame& f : frames) {
    out << f.step << ',' << num(f.time) << ',' << num(f.anchor_pos_err_sq) << ','
        << num(f.anchor_ori_err_sq) << ','
        << format_double_list(f.body_pos_err_sq, ';') << ','
        << format_double_list(f.body_ori_err_sq, ';') << ','
        << num(f.lin_vel_err_sq) << ',' << num(f.ang_vel_err_sq) << ','
        << format_double_list(f.action, ';') << ','
        << format_double_list(f.prev_action, ';') << ','
        << f.joint_limit_violations << ',' << f.undesired_contacts << ','
        << num(f.foot_pos_err_sq) << ',' << num(f.projected_gravity.x()) << ','
        << num(f.projected_gravity.y()) << ',' << num(f.projected_gravity.z())
        << ',' << num(f.foot_separation) << ',' << num(f.waist_action_delta_sq);
    if (f.has_ball) {
      out << ',' << num(f.ball_distance_xy) << ',' << num(f.ball_velocity.x())
          << ',' << num(f.ball_velocity.y()) << ',' << num(f.ball_velocity.z())
          << ',' << num(f.swing_foot_velocity.x()) << ','
          << num(f.swing_foot_velocity.y()) << ',' << to_string(f.ball_contact);
    } else {
      out << ",,,,,,,";
    }
    out << '\n';
  }
}

void write_reward_series(std::ostream& out, const std::vector<StepReward>& steps,
                         const std::vector<StateFrame>& frames, Stage stage,
                         const RewardSpec& spec) {
  if (steps.size() != frames.size()) {
    throw InvalidInput("reward series and frames differ in length");
  }
  std::vector<RewardTerm> cols;
  for (std::size_t i = 0; i < kRewardTermCount; ++i) {
    if (spec.weight(term_from_index(i), stage)) cols.push_back(term_from_index(i));
  }
  out << "step,t";
  for (RewardTerm t : cols) out << ',' << term_name(t);
  out << ",total\n";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    out << frames[k].step << ',' << format_double(frames[k].time);
    for (RewardTerm t : cols) out << ',' << format_double(steps[k].value(t));
    out << ',' << format_double(steps[k].total) << '\n';
  }
}

}  // namespace ballid
