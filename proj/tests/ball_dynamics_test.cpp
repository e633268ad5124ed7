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

#include <cmath>

#include <gtest/gtest.h>

#include "ballid/errors.hpp"
#include "oracles.hpp"

namespace ballid {
namespace {

ContactParams undamped(double restitution, double dynamic_friction) {
  return {0.5, dynamic_friction, restitution, 0.0, 0.0};
}

TEST(DropTest, UndampedMatchesBallisticBounces) {
  const SimConfig cfg;
  for (double e : {0.0, 0.3, 0.75, 0.95}) {
    for (double h0 : {0.5, 1.0, 2.0}) {
      const Trajectory t = simulate_drop(undamped(e, 0.1), BallSpec{}, h0, cfg);
      const auto ref = oracle::drop_heights(h0, cfg.gravity, e,
                                            cfg.bounce_cutoff_speed, 0.1, 21);
      ASSERT_EQ(t.size(), ref.size());
      for (std::size_t k = 0; k < ref.size(); ++k) {
        EXPECT_NEAR(t.values[k], ref[k], 1e-4) << "e=" << e << " h0=" << h0
                                               << " k=" << k;
      }
    }
  }
}

TEST(DropTest, FirstImpactTimeAndSpeed) {
  const SimConfig cfg;
  const DropResult r = simulate_drop_events(undamped(0.5, 0.1), BallSpec{}, 1.0, cfg);
  ASSERT_FALSE(r.impacts.empty());
  EXPECT_NEAR(r.impacts[0].time, std::sqrt(2.0 / cfg.gravity), 1e-7);
  EXPECT_NEAR(r.impacts[0].speed_in, std::sqrt(2.0 * cfg.gravity), 1e-6);
  EXPECT_NEAR(r.impacts[0].speed_out, 0.5 * r.impacts[0].speed_in, 1e-12);
}

TEST(DropTest, ZeroRestitutionRestsAtFirstImpact) {
  const DropResult r =
      simulate_drop_events(undamped(0.0, 0.1), BallSpec{}, 1.0, SimConfig{});
  ASSERT_EQ(r.impacts.size(), 1u);
  EXPECT_EQ(r.impacts[0].speed_out, 0.0);
  for (std::size_t k = 5; k < r.trajectory.size(); ++k) {
    EXPECT_EQ(r.trajectory.values[k], 0.0);
  }
}

TEST(DropTest, InvariantsAcrossParameterGrid) {
  for (double e : {0.0, 0.5, 1.0}) {
    for (double c : {0.0, 1.0, 5.0}) {
      const ContactParams p{0.5, 0.5, e, c, 1.0};
      const DropResult r = simulate_drop_events(p, BallSpec{}, 1.5, SimConfig{});
      EXPECT_EQ(r.trajectory.values[0], 1.5);
      EXPECT_NO_THROW(validate_simulated(r.trajectory));
      for (const ImpactEvent& ev : r.impacts) {
        EXPECT_LE(ev.speed_out, e * ev.speed_in + 1e-12);
      }
      for (std::size_t i = 1; i < r.impacts.size(); ++i) {
        EXPECT_GT(r.impacts[i].time, r.impacts[i - 1].time);
        EXPECT_LE(r.impacts[i].speed_in, r.impacts[i - 1].speed_in + 1e-9);
      }
    }
  }
}

TEST(DropTest, PerfectRestitutionUndampedReturnsToHeight) {
  const SimConfig cfg;
  const Trajectory t = simulate_drop(undamped(1.0, 0.1), BallSpec{}, 1.0, cfg, 200);
  double peak = 0.0;
  for (std::size_t k = 10; k < t.size(); ++k) peak = std::max(peak, t.values[k]);
  EXPECT_LE(peak, 1.0 + 1e-6);
  EXPECT_GT(peak, 0.95);
}

TEST(DropTest, DampingLowersTrajectory) {
  const SimConfig cfg;
  const Trajectory free = simulate_drop(undamped(0.7, 0.1), BallSpec{}, 1.0, cfg);
  ContactParams damped = undamped(0.7, 0.1);
  damped.linear_damping = 2.0;
  const Trajectory slow = simulate_drop(damped, BallSpec{}, 1.0, cfg);
  // A damped ball falls more slowly at first.
  EXPECT_GT(slow.values[3], free.values[3]);
}

TEST(DropTest, StepHalvingIsConverged) {
  SimConfig coarse;
  SimConfig fine;
  fine.integrator_step = coarse.integrator_step / 2.0;
  const ContactParams p = hard_ground_params();
  const Trajectory a = simulate_drop(p, BallSpec{}, 1.0, coarse);
  const Trajectory b = simulate_drop(p, BallSpec{}, 1.0, fine);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(a.values[k], b.values[k], 1e-5);
  }
}

TEST(DropTest, RejectsBadInput) {
  EXPECT_THROW(simulate_drop(ContactParams{}, BallSpec{}, 0.0, SimConfig{}),
               InvalidInput);
  EXPECT_THROW(simulate_drop(ContactParams{}, BallSpec{}, NAN, SimConfig{}),
               InvalidInput);
  ContactParams bad;
  bad.restitution = 1.2;
  EXPECT_THROW(simulate_drop(bad, BallSpec{}, 1.0, SimConfig{}), InvalidInput);
  EXPECT_THROW(simulate_drop(ContactParams{}, BallSpec{}, 1.0, SimConfig{}, 1),
               InvalidInput);
  SimConfig cfg;
  cfg.integrator_step = 0.05;
  EXPECT_THROW(simulate_drop(ContactParams{}, BallSpec{}, 1.0, cfg), InvalidInput);
}

TEST(RollTest, UndampedMatchesConstantDeceleration) {
  const SimConfig cfg;
  const BallSpec spec;
  for (double mu : {0.05, 0.07, 0.15, 0.5}) {
    for (double v0 : {0.5, 2.0, 4.0}) {
      const Trajectory t = simulate_roll(undamped(0.5, mu), spec, v0, cfg);
      const double a = mu * cfg.gravity / (1.0 + spec.inertia_factor);
      const auto ref = oracle::roll_displacement(v0, a, cfg.roll_stop_speed, 0.1, 21);
      for (std::size_t k = 0; k < ref.size(); ++k) {
        EXPECT_NEAR(t.values[k], ref[k], 1e-4) << "mu=" << mu << " v0=" << v0
                                               << " k=" << k;
      }
    }
  }
}

TEST(RollTest, ViscousOnlyMatchesExponentialDecay) {
  // Frictionless with pure viscous drag: x(t) = v0/k (1 - exp(-k t)).
  const SimConfig cfg;
  const BallSpec spec;
  const ContactParams p{0.5, 0.0, 0.5, 0.3, 0.6};
  const double k = (0.3 + spec.inertia_factor * 0.6) / (1.0 + spec.inertia_factor);
  const Trajectory t = simulate_roll(p, spec, 2.0, cfg);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double ti = 0.1 * static_cast<double>(i);
    EXPECT_NEAR(t.values[i], 2.0 / k * (1.0 - std::exp(-k * ti)), 1e-8);
  }
}

TEST(RollTest, MonotoneAndStopsAtRest) {
  const Trajectory t = simulate_roll(grass_params(), BallSpec{}, 2.0, SimConfig{}, 100);
  EXPECT_EQ(t.values[0], 0.0);
  EXPECT_NO_THROW(validate_simulated(t));
  EXPECT_EQ(t.values[99], t.values[80]);
}

TEST(RollTest, ZeroSpeedStaysPut) {
  const Trajectory t = simulate_roll(grass_params(), BallSpec{}, 0.0, SimConfig{});
  for (double v : t.values) EXPECT_EQ(v, 0.0);
}

TEST(RollTest, StepHalvingIsConverged) {
  SimConfig coarse;
  SimConfig fine;
  fine.integrator_step = coarse.integrator_step / 2.0;
  const Trajectory a = simulate_roll(hard_ground_params(), BallSpec{}, 2.0, coarse);
  const Trajectory b = simulate_roll(hard_ground_params(), BallSpec{}, 2.0, fine);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_NEAR(a.values[k], b.values[k], 1e-5);
  }
}

TEST(RollTest, FrictionShortensTravel) {
  const SimConfig cfg;
  double last = 1e9;
  for (double mu : {0.05, 0.1, 0.2, 0.4}) {
    ContactParams p = hard_ground_params();
    p.dynamic_friction = mu;
    const double x = simulate_roll(p, BallSpec{}, 2.0, cfg).values.back();
    EXPECT_LT(x, last);
    last = x;
  }
}

TEST(RollTest, RejectsNegativeSpeed) {
  EXPECT_THROW(simulate_roll(ContactParams{}, BallSpec{}, -1.0, SimConfig{}),
               InvalidInput);
}

TEST(ContactParamsTest, ArrayRoundTripAndNames) {
  const ContactParams p = grass_params();
  EXPECT_EQ(ContactParams::from_array(p.to_array()), p);
  EXPECT_EQ(ContactParams::names()[0], "static_friction");
  EXPECT_EQ(ContactParams::names()[4], "angular_damping");
}

TEST(ContactParamsTest, IdentifiedPresets) {
  const auto h = hard_ground_params().to_array();
  const auto g = grass_params().to_array();
  const std::array<double, 5> h_ref{0.77, 0.07, 0.75, 0.01, 4.28};
  const std::array<double, 5> g_ref{0.98, 0.15, 0.71, 0.01, 4.95};
  EXPECT_EQ(h, h_ref);
  EXPECT_EQ(g, g_ref);
}

TEST(ContactParamsTest, BoundsValidationAndWarnings) {
  const ParamBounds b;
  EXPECT_TRUE(b.contains(hard_ground_params()));
  ContactParams p = hard_ground_params();
  p.angular_damping = 6.0;
  EXPECT_FALSE(b.contains(p));
  EXPECT_EQ(b.clip(p).angular_damping, 5.0);
  EXPECT_THROW(validate_params(p, b), InvalidInput);
  ContactParams inverted{0.1, 0.2, 0.5, 1.0, 1.0};
  const auto w = validate_params(inverted, b);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("dynamic_friction"), std::string::npos);
  EXPECT_TRUE(validate_params(hard_ground_params(), b).empty());
}

}  // namespace
}  // namespace ballid
