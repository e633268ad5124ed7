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

#ifndef BALLID_CONFIG_HPP_
#define BALLID_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ballid/ball_dynamics.hpp"
#include "ballid/randomization.hpp"
#include "ballid/rewards.hpp"
#include "ballid/sysid.hpp"

namespace ballid {

struct CurriculumSettings {
  std::size_t motions = 1;
  std::size_t bins = 10;
  double smoothing_alpha = 1.0;
  double decay = 1.0;
};

// One file, one section per module. Absent sections keep their defaults,
// except `noise`, whose constants have no defaults and must be supplied
// before the observation-noise sampler can run.
struct UnifiedConfig {
  std::optional<std::uint64_t> seed;
  BallSpec ball;
  SimConfig sim;
  SysIdConfig sysid;
  DrSpec dr = DrSpec::defaults();
  std::optional<NoiseConfig> noise;
  PlacementSpec placement;
  CurriculumSettings curriculum;
  RewardSpec reward = RewardSpec::defaults();
  double min_speed_threshold = 0.2;
};

// Unknown keys are rejected so typos do not silently fall back to defaults.
UnifiedConfig config_from_json(const nlohmann::json& j);
UnifiedConfig load_config(const std::string& path);

ContactParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const ContactParams& p);
// Accepts a bare parameter object or one wrapped under "params" or
// "best_params" (the identify output).
ContactParams load_params(const std::string& path);

nlohmann::json result_to_json(const IdentificationResult& r);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace ballid

#endif  // BALLID_CONFIG_HPP_
