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


#include "ballid/trajectory.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "ballid/errors.hpp"
#include "ballid/format.hpp"

namespace ballid {
namespace {

TEST(TrajectoryCsvTest, RoundTripIsExact) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  Trajectory t{0.1, {}, TrajectoryKind::RollDisplacement};
  for (int i = 0; i < 50; ++i) t.values.push_back(u(rng));
  std::stringstream ss;
  write_trajectory_csv(ss, t);
  const Trajectory back = read_trajectory_csv(ss, TrajectoryKind::RollDisplacement);
  EXPECT_EQ(back.values, t.values);
  EXPECT_NEAR(back.dt, 0.1, 1e-15);
  EXPECT_EQ(back.kind, TrajectoryKind::RollDisplacement);
}

TEST(TrajectoryCsvTest, ParsesHandWrittenFile) {
  std::istringstream in("t,value\n0,1.0\n0.05,0.98\n0.1,0.95\n");
  const Trajectory t = read_trajectory_csv(in, TrajectoryKind::DropHeight);
  EXPECT_DOUBLE_EQ(t.dt, 0.05);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.values[2], 0.95);
}

TEST(TrajectoryCsvTest, RejectsMalformedFiles) {
  const auto bad = [](const std::string& s) {
    std::istringstream in(s);
    EXPECT_THROW(read_trajectory_csv(in, TrajectoryKind::DropHeight), InvalidInput)
        << s;
  };
  bad("");
  bad("time,h\n0,1\n0.1,2\n");
  bad("t,value\n0,1\n");
  bad("t,value\n0,1\n0.1,x\n");
  bad("t,value\n0,1\n0.1,2,3\n");
  bad("t,value\n0.1,1\n0.2,2\n");
  bad("t,value\n0,1\n0.1,2\n0.3,3\n");
  bad("t,value\n0,1\n0.1,nan\n");
}

TEST(TrajectoryCsvTest, MissingFileIsIoError) {
  EXPECT_THROW(read_trajectory_csv(std::string("/nonexistent/x.csv"),
                                   TrajectoryKind::DropHeight),
               IoError);
}

TEST(TrajectoryTest, AveragingGivesMeanAndPopulationStd) {
  const Trajectory a{0.1, {1.0, 2.0, 3.0}, TrajectoryKind::DropHeight};
  const Trajectory b{0.1, {3.0, 2.0, 5.0}, TrajectoryKind::DropHeight};
  const std::vector<Trajectory> reps{a, b};
  const TrajectoryStats s = average_trajectories(reps);
  EXPECT_EQ(s.mean.values, (std::vector<double>{2.0, 2.0, 4.0}));
  EXPECT_EQ(s.stddev, (std::vector<double>{1.0, 0.0, 1.0}));
}

TEST(TrajectoryTest, AveragingRejectsMismatch) {
  const Trajectory a{0.1, {1.0, 2.0}, TrajectoryKind::DropHeight};
  Trajectory b = a;
  b.values.push_back(1.0);
  EXPECT_THROW(average_trajectories(std::vector<Trajectory>{a, b}), InvalidInput);
  b = a;
  b.kind = TrajectoryKind::RollDisplacement;
  EXPECT_THROW(average_trajectories(std::vector<Trajectory>{a, b}), InvalidInput);
  EXPECT_THROW(average_trajectories(std::vector<Trajectory>{}), InvalidInput);
}

TEST(TrajectoryTest, SimulatedInvariants) {
  EXPECT_THROW(validate_simulated({0.1, {1.0, -0.1}, TrajectoryKind::DropHeight}),
               InvalidInput);
  EXPECT_THROW(
      validate_simulated({0.1, {0.0, 1.0, 0.5}, TrajectoryKind::RollDisplacement}),
      InvalidInput);
  EXPECT_NO_THROW(
      validate_simulated({0.1, {0.0, 1.0, 1.0}, TrajectoryKind::RollDisplacement}));
  EXPECT_THROW(validate_sampling({0.0, {0.0, 1.0}, TrajectoryKind::DropHeight}),
               InvalidInput);
}

TEST(TrajectoryTest, KindNames) {
  EXPECT_EQ(to_string(TrajectoryKind::DropHeight), "drop");
  EXPECT_EQ(parse_trajectory_kind("roll"), TrajectoryKind::RollDisplacement);
  EXPECT_THROW(parse_trajectory_kind("slide"), InvalidInput);
}

TEST(FormatTest, DoubleRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, 0.0}) {
    EXPECT_EQ(parse_double(format_double(v), "v"), v);
  }
  EXPECT_EQ(parse_double(" +1.5 ", "v"), 1.5);
  EXPECT_THROW(parse_double("1.5x", "v"), InvalidInput);
  EXPECT_THROW(parse_int("2.0", "n"), InvalidInput);
  EXPECT_EQ(parse_double_list("1, 2,3", ',', "l"), (std::vector<double>{1, 2, 3}));
}

}  // namespace
}  // namespace ballid
