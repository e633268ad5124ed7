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

#include <gtest/gtest.h>

#include "ballid/errors.hpp"

namespace ballid {
namespace {

using nlohmann::json;

TEST(ConfigTest, EmptyObjectGivesDefaults) {
  const UnifiedConfig c = config_from_json(json::object());
  EXPECT_FALSE(c.seed.has_value());
  EXPECT_FALSE(c.noise.has_value());
  EXPECT_EQ(c.sysid.population_size, 4);
  EXPECT_EQ(c.sysid.max_generations, 300);
  EXPECT_EQ(c.sysid.tolerance, 1e-8);
  EXPECT_EQ(c.dr.terms.size(), 8u);
}

TEST(ConfigTest, ReadsEverySection) {
  const json j = json::parse(R"({
    "seed": 12,
    "ball": {"radius": 0.1, "mass": 0.4},
    "sim": {"integrator_step": 5e-5},
    "sysid": {"population_size": 6, "loss_weights": [2, 0.5],
              "bounds": {"angular_damping": [0, 8]},
              "initial_params": {"static_friction": 0.5, "dynamic_friction": 0.1,
                                 "restitution": 0.5, "linear_damping": 1,
                                 "angular_damping": 1},
              "normalize_by_range": false, "parallel": false},
    "dr": {"terms": [{"name": "mass_scale", "lo": 0.9, "hi": 1.1}]},
    "noise": {"c_min": 0.02, "c_vel": 5, "c_dist": 10},
    "placement": {"goal_center": [6, 1], "ball_speed_range": [0.0, 0.5]},
    "curriculum": {"motions": 3, "bins": 5, "decay": 0.9},
    "reward": {"sigma": {"anchor_pos": 0.3}, "weights": {"contact": [null, 20]},
               "min_speed_threshold": 0.5}
  })");
  const UnifiedConfig c = config_from_json(j);
  EXPECT_EQ(*c.seed, 12u);
  EXPECT_EQ(c.ball.radius, 0.1);
  EXPECT_EQ(c.sim.integrator_step, 5e-5);
  EXPECT_EQ(c.sysid.population_size, 6);
  EXPECT_EQ(c.sysid.drop_weight, 2.0);
  EXPECT_EQ(c.sysid.roll_weight, 0.5);
  EXPECT_EQ(c.sysid.bounds.hi[4], 8.0);
  EXPECT_EQ(c.sysid.initial_params.dynamic_friction, 0.1);
  EXPECT_FALSE(c.sysid.normalize_by_range);
  EXPECT_FALSE(c.sysid.parallel);
  ASSERT_EQ(c.dr.terms.size(), 1u);
  EXPECT_EQ(c.dr.terms[0].name, "mass_scale");
  EXPECT_EQ(c.noise->c_vel, 5.0);
  EXPECT_EQ(c.placement.goal_center.x(), 6.0);
  EXPECT_EQ(c.placement.ball_speed_hi, 0.5);
  EXPECT_EQ(c.curriculum.bins, 5u);
  EXPECT_EQ(c.reward.term(RewardTerm::AnchorPos).sigma, 0.3);
  EXPECT_EQ(*c.reward.weight(RewardTerm::Contact, Stage::II), 20.0);
  EXPECT_FALSE(c.reward.weight(RewardTerm::Contact, Stage::I).has_value());
  EXPECT_EQ(c.min_speed_threshold, 0.5);
}

TEST(ConfigTest, RejectsUnknownKeysAndBadValues) {
  const auto bad = [](const char* text) {
    EXPECT_THROW(config_from_json(json::parse(text)), InvalidInput) << text;
  };
  bad(R"({"extra": 1})");
  bad(R"({"ball": {"colour": "white"}})");
  bad(R"({"ball": {"radius": -1}})");
  bad(R"({"sysid": {"population_size": 1}})");
  bad(R"({"sysid": {"seed": 3}})");
  bad(R"({"sysid": {"normalize_by_range": 3}})");
  bad(R"({"sim": {"integrator_step": "small"}})");
  bad(R"({"noise": {"c_min": 0.01}})");
  bad(R"({"seed": -4})");
  bad(R"({"reward": {"weights": {"kick_power": [1, 1]}}})");
  bad(R"({"dr": {"terms": [{"name": "x", "lo": 2, "hi": 1}]}})");
}

TEST(ConfigTest, ParamsJsonRoundTrip) {
  const ContactParams p = grass_params();
  EXPECT_EQ(params_from_json(params_to_json(p)), p);
  json partial = params_to_json(p);
  partial.erase("restitution");
  EXPECT_THROW(params_from_json(partial), InvalidInput);
}

TEST(ConfigTest, ResultJsonCarriesHistory) {
  IdentificationResult r;
  r.best_params = hard_ground_params();
  r.best_loss = 0.5;
  r.generations_used = 2;
  r.generation_best = {1.0, 0.5};
  r.running_best = {1.0, 0.5};
  r.terminated_by = Termination::Tolerance;
  const json j = result_to_json(r);
  EXPECT_EQ(j["terminated_by"], "Tolerance");
  EXPECT_EQ(j["loss_history"].size(), 2u);
  EXPECT_EQ(j["loss_history"][1]["generation"], 2);
  EXPECT_EQ(params_from_json(j["best_params"]), hard_ground_params());
}

TEST(ConfigTest, MissingFileIsIoError) {
  EXPECT_THROW(load_config("/nonexistent/config.json"), IoError);
}

}  // namespace
}  // namespace ballid
