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

#ifndef BALLID_TRAJECTORY_HPP_
#define BALLID_TRAJECTORY_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ballid {

enum class TrajectoryKind { DropHeight, RollDisplacement };

std::string_view to_string(TrajectoryKind kind);
TrajectoryKind parse_trajectory_kind(std::string_view name);

// Uniformly sampled scalar time series starting at t = 0.
struct Trajectory {
  double dt = 0.1;
  std::vector<double> values;
  TrajectoryKind kind = TrajectoryKind::DropHeight;

  std::size_t size() const { return values.size(); }
  double time(std::size_t i) const { return static_cast<double>(i) * dt; }
  double duration() const {
    return values.empty() ? 0.0 : time(values.size() - 1);
  }
  // max - min of the samples; 0 for an empty series.
  double range() const;
};

// Throws InvalidInput unless dt > 0, at least two samples and all finite.
void validate_sampling(const Trajectory& traj);

// Sampling checks plus the physical invariants of simulated output:
// heights >= 0 for drops, non-decreasing displacement for rolls.
void validate_simulated(const Trajectory& traj);

struct TrajectoryStats {
  Trajectory mean;
  std::vector<double> stddev;  // population std per sample
};

// Pointwise mean of repeated recordings. All inputs must share kind, dt and
// length.
TrajectoryStats average_trajectories(std::span<const Trajectory> repeats);

// CSV with header `t,value`, one row per sample. Values are written with
// shortest round-trip formatting so parse(write(x)) == x exactly.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// Kind is not stored in the file; the caller supplies it. The sampling
// interval is recovered from the t column, which must be uniform.
Trajectory read_trajectory_csv(std::istream& in, TrajectoryKind kind);
Trajectory read_trajectory_csv(const std::string& path, TrajectoryKind kind);

}  // namespace ballid

#endif  // BALLID_TRAJECTORY_HPP_
