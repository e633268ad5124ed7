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

#include "ballid/config.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>

#include "ballid/errors.hpp"

namespace ballid {

using nlohmann::json;

namespace {

void require_object(const json& j, std::string_view section) {
  if (!j.is_object()) {
    throw InvalidInput("config section '" + std::string(section) +
                       "' must be an object");
  }
}

void check_keys(const json& j, std::string_view section,
                std::initializer_list<std::string_view> allowed) {
  require_object(j, section);
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) {
      throw InvalidInput("unknown key '" + key + "' in config section '" +
                         std::string(section) + "'");
    }
  }
}

double number(const json& j, std::string_view key) {
  const json& v = j.at(std::string(key));
  if (!v.is_number()) {
    throw InvalidInput("config key '" + std::string(key) + "' must be a number");
  }
  return v.get<double>();
}

void read_number(const json& j, std::string_view key, double& out) {
  if (j.contains(std::string(key))) out = number(j, key);
}

template <typename Int>
void read_count(const json& j, std::string_view key, Int& out) {
  if (!j.contains(std::string(key))) return;
  const json& v = j.at(std::string(key));
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInput("config key '" + std::string(key) +
                       "' must be a non-negative integer");
  }
  out = static_cast<Int>(v.get<long long>());
}

std::pair<double, double> pair_of(const json& v, std::string_view key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InvalidInput("config key '" + std::string(key) +
                       "' must be a [lo, hi] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

void read_ball(const json& j, BallSpec& b) {
  check_keys(j, "ball", {"radius", "mass", "inertia_factor"});
  read_number(j, "radius", b.radius);
  read_number(j, "mass", b.mass);
  read_number(j, "inertia_factor", b.inertia_factor);
  b.validate();
}

void read_sim(const json& j, SimConfig& s) {
  check_keys(j, "sim", {"gravity", "integrator_step", "bounce_cutoff_speed",
                        "roll_stop_speed", "sample_interval"});
  read_number(j, "gravity", s.gravity);
  read_number(j, "integrator_step", s.integrator_step);
  read_number(j, "bounce_cutoff_speed", s.bounce_cutoff_speed);
  read_number(j, "roll_stop_speed", s.roll_stop_speed);
  read_number(j, "sample_interval", s.sample_interval);
  s.validate();
}

void read_sysid(const json& j, SysIdConfig& c) {
  check_keys(j, "sysid",
             {"initial_params", "bounds", "search_scale", "population_size",
              "loss_weights", "normalize_by_range", "tolerance",
              "max_generations", "parallel"});
  if (j.contains("initial_params")) {
    c.initial_params = params_from_json(j.at("initial_params"));
  }
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    require_object(b, "sysid.bounds");
    const auto& names = ContactParams::names();
    for (const auto& [key, value] : b.items()) {
      std::size_t i = 0;
      while (i < names.size() && names[i] != key) ++i;
      if (i == names.size()) {
        throw InvalidInput("unknown parameter '" + key + "' in sysid.bounds");
      }
      std::tie(c.bounds.lo[i], c.bounds.hi[i]) = pair_of(value, key);
    }
  }
  read_number(j, "search_scale", c.search_scale);
  read_count(j, "population_size", c.population_size);
  if (j.contains("loss_weights")) {
    std::tie(c.drop_weight, c.roll_weight) =
        pair_of(j.at("loss_weights"), "loss_weights");
  }
  if (j.contains("normalize_by_range")) {
    c.normalize_by_range = j.at("normalize_by_range").get<bool>();
  }
  read_number(j, "tolerance", c.tolerance);
  read_count(j, "max_generations", c.max_generations);
  if (j.contains("parallel")) c.parallel = j.at("parallel").get<bool>();
  c.validate();
}

void read_dr(const json& j, DrSpec& dr) {
  check_keys(j, "dr", {"terms"});
  if (!j.contains("terms")) return;
  const json& terms = j.at("terms");
  if (!terms.is_array()) throw InvalidInput("dr.terms must be an array");
  dr.terms.clear();
  for (const json& t : terms) {
    check_keys(t, "dr.terms[]", {"name", "lo", "hi"});
    dr.terms.push_back(
        {t.at("name").get<std::string>(), number(t, "lo"), number(t, "hi")});
  }
  dr.validate();
}

NoiseConfig read_noise(const json& j) {
  check_keys(j, "noise", {"c_min", "c_vel", "c_dist"});
  for (const char* key : {"c_min", "c_vel", "c_dist"}) {
    if (!j.contains(key)) {
      throw InvalidInput(std::string("noise.") + key + " is required");
    }
  }
  NoiseConfig n{number(j, "c_min"), number(j, "c_vel"), number(j, "c_dist")};
  n.validate();
  return n;
}

void read_placement(const json& j, PlacementSpec& p) {
  check_keys(j, "placement",
             {"angular_range", "radial_range", "min_radius", "goal_center",
              "goal_depth", "goal_width", "ball_speed_range"});
  read_number(j, "angular_range", p.angular_range);
  read_number(j, "radial_range", p.radial_range);
  read_number(j, "min_radius", p.min_radius);
  if (j.contains("goal_center")) {
    const auto [x, y] = pair_of(j.at("goal_center"), "goal_center");
    p.goal_center = {x, y};
  }
  read_number(j, "goal_depth", p.goal_depth);
  read_number(j, "goal_width", p.goal_width);
  if (j.contains("ball_speed_range")) {
    std::tie(p.ball_speed_lo, p.ball_speed_hi) =
        pair_of(j.at("ball_speed_range"), "ball_speed_range");
  }
  p.validate();
}

void read_curriculum(const json& j, CurriculumSettings& c) {
  check_keys(j, "curriculum", {"motions", "bins", "smoothing_alpha", "decay"});
  read_count(j, "motions", c.motions);
  read_count(j, "bins", c.bins);
  read_number(j, "smoothing_alpha", c.smoothing_alpha);
  read_number(j, "decay", c.decay);
}

RewardTerm term_by_name(const std::string& name) {
  for (std::size_t i = 0; i < kRewardTermCount; ++i) {
    if (term_name(term_from_index(i)) == name) return term_from_index(i);
  }
  throw InvalidInput("unknown reward term '" + name + "'");
}

std::optional<double> optional_weight(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw InvalidInput("reward weights must be numbers or null");
  return v.get<double>();
}

void read_reward(const json& j, RewardSpec& r, double& min_speed) {
  check_keys(j, "reward",
             {"sigma", "weights", "outcome_window", "target_ball_speed",
              "min_foot_separation", "min_speed_threshold"});
  if (j.contains("sigma")) {
    const json& s = j.at("sigma");
    if (s.is_number()) {
      for (TermSpec& t : r.terms) t.sigma = s.get<double>();
    } else {
      require_object(s, "reward.sigma");
      for (const auto& [key, value] : s.items()) {
        r.term(term_by_name(key)).sigma = value.get<double>();
      }
    }
  }
  if (j.contains("weights")) {
    const json& w = j.at("weights");
    require_object(w, "reward.weights");
    for (const auto& [key, value] : w.items()) {
      if (!value.is_array() || value.size() != 2) {
        throw InvalidInput("reward.weights." + key +
                           " must be [stage1, stage2] (null = inactive)");
      }
      TermSpec& t = r.term(term_by_name(key));
      t.weight_stage1 = optional_weight(value[0]);
      t.weight_stage2 = optional_weight(value[1]);
    }
  }
  read_number(j, "outcome_window", r.outcome_window);
  read_number(j, "target_ball_speed", r.target_ball_speed);
  read_number(j, "min_foot_separation", r.min_foot_separation);
  read_number(j, "min_speed_threshold", min_speed);
  r.validate();
}

}  // namespace

ContactParams params_from_json(const json& j) {
  require_object(j, "params");
  const auto& names = ContactParams::names();
  check_keys(j, "params", {names[0], names[1], names[2], names[3], names[4]});
  std::array<double, ContactParams::kDim> v{};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!j.contains(names[i])) {
      throw InvalidInput("parameter '" + names[i] + "' is required");
    }
    v[i] = number(j, names[i]);
  }
  return ContactParams::from_array(v);
}

json params_to_json(const ContactParams& p) {
  json j = json::object();
  const auto v = p.to_array();
  for (std::size_t i = 0; i < v.size(); ++i) j[ContactParams::names()[i]] = v[i];
  return j;
}

UnifiedConfig config_from_json(const json& j) {
  check_keys(j, "<root>",
             {"seed", "ball", "sim", "sysid", "dr", "noise", "placement",
              "curriculum", "reward"});
  UnifiedConfig c;
  try {
    if (j.contains("seed")) {
      std::uint64_t seed = 0;
      read_count(j, "seed", seed);
      c.seed = seed;
    }
    if (j.contains("ball")) read_ball(j.at("ball"), c.ball);
    if (j.contains("sim")) read_sim(j.at("sim"), c.sim);
    if (j.contains("sysid")) read_sysid(j.at("sysid"), c.sysid);
    if (j.contains("dr")) read_dr(j.at("dr"), c.dr);
    if (j.contains("noise")) c.noise = read_noise(j.at("noise"));
    if (j.contains("placement")) read_placement(j.at("placement"), c.placement);
    if (j.contains("curriculum")) read_curriculum(j.at("curriculum"), c.curriculum);
    if (j.contains("reward")) {
      read_reward(j.at("reward"), c.reward, c.min_speed_threshold);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed config: ") + e.what());
  }
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

UnifiedConfig load_config(const std::string& path) {
  return config_from_json(read_json_file(path));
}

ContactParams load_params(const std::string& path) {
  const json j = read_json_file(path);
  try {
    if (j.contains("params")) return params_from_json(j.at("params"));
    if (j.contains("best_params")) return params_from_json(j.at("best_params"));
    return params_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed parameter file: ") + e.what());
  }
}

json result_to_json(const IdentificationResult& r) {
  json history = json::array();
  for (std::size_t i = 0; i < r.generation_best.size(); ++i) {
    history.push_back({{"generation", i + 1},
                       {"best", r.generation_best[i]},
                       {"running_best", r.running_best[i]}});
  }
  return {{"best_params", params_to_json(r.best_params)},
          {"best_loss", r.best_loss},
          {"generations_used", r.generations_used},
          {"terminated_by", std::string(to_string(r.terminated_by))},
          {"restarts", r.restarts},
          {"effective_weights", {{"drop", r.drop_weight}, {"roll", r.roll_weight}}},
          {"loss_history", history}};
}

}  // namespace ballid
