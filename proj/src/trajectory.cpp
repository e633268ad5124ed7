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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ballid/errors.hpp"
#include "ballid/format.hpp"

namespace ballid {

std::string_view to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::DropHeight:
      return "drop";
    case TrajectoryKind::RollDisplacement:
      return "roll";
  }
  return "unknown";
}

TrajectoryKind parse_trajectory_kind(std::string_view name) {
  if (name == "drop") return TrajectoryKind::DropHeight;
  if (name == "roll") return TrajectoryKind::RollDisplacement;
  throw InvalidInput("unknown experiment kind '" + std::string(name) +
                     "' (expected drop or roll)");
}

double Trajectory::range() const {
  if (values.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

void validate_sampling(const Trajectory& traj) {
  if (!(traj.dt > 0.0) || !std::isfinite(traj.dt)) {
    throw InvalidInput("trajectory sampling interval must be positive");
  }
  if (traj.values.size() < 2) {
    throw InvalidInput("trajectory needs at least two samples");
  }
  for (double v : traj.values) {
    if (!std::isfinite(v)) throw InvalidInput("trajectory has non-finite sample");
  }
}

void validate_simulated(const Trajectory& traj) {
  validate_sampling(traj);
  if (traj.kind == TrajectoryKind::DropHeight) {
    for (double v : traj.values) {
      if (v < 0.0) throw InvalidInput("drop height below ground");
    }
  } else {
    for (std::size_t i = 1; i < traj.values.size(); ++i) {
      if (traj.values[i] < traj.values[i - 1]) {
        throw InvalidInput("roll displacement decreases");
      }
    }
  }
}

TrajectoryStats average_trajectories(std::span<const Trajectory> repeats) {
  if (repeats.empty()) throw InvalidInput("no trajectories to average");
  const Trajectory& first = repeats.front();
  for (const Trajectory& t : repeats) {
    validate_sampling(t);
    if (t.kind != first.kind || t.size() != first.size() ||
        std::abs(t.dt - first.dt) > 1e-12 * first.dt) {
      throw InvalidInput("repeated trajectories differ in kind, dt or length");
    }
  }
  const auto n = static_cast<double>(repeats.size());
  TrajectoryStats stats;
  stats.mean = Trajectory{first.dt, std::vector<double>(first.size(), 0.0),
                          first.kind};
  stats.stddev.assign(first.size(), 0.0);
  for (std::size_t i = 0; i < first.size(); ++i) {
    double sum = 0.0;
    for (const Trajectory& t : repeats) sum += t.values[i];
    const double mean = sum / n;
    double ss = 0.0;
    for (const Trajectory& t : repeats) {
      ss += (t.values[i] - mean) * (t.values[i] - mean);
    }
    stats.mean.values[i] = mean;
    stats.stddev[i] = std::sqrt(ss / n);
  }
  return stats;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,value\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << format_double(traj.time(i)) << ',' << format_double(traj.values[i])
        << '\n';
  }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_trajectory_csv(out, traj);
  if (!out) throw IoError("failed writing '" + path + "'");
}

Trajectory read_trajectory_csv(std::istream& in, TrajectoryKind kind) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty trajectory CSV");
  if (trim(line) != "t,value") {
    throw InvalidInput("trajectory CSV header must be 't,value'");
  }
  std::vector<double> times;
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto fields = split(row, ',');
    if (fields.size() != 2) {
      throw InvalidInput("trajectory CSV line " + std::to_string(line_no) +
                         ": expected 2 fields");
    }
    times.push_back(parse_double(fields[0], "t"));
    values.push_back(parse_double(fields[1], "value"));
  }
  if (values.size() < 2) {
    throw InvalidInput("trajectory CSV needs at least two rows");
  }
  const double dt = times[1] - times[0];
  if (std::abs(times[0]) > 1e-9 || !(dt > 0.0)) {
    throw InvalidInput("trajectory CSV must start at t=0 with increasing t");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double expected = static_cast<double>(i) * dt;
    if (std::abs(times[i] - expected) > 1e-9 * std::max(1.0, expected)) {
      throw InvalidInput("trajectory CSV rows are not at a fixed interval");
    }
  }
  Trajectory traj{dt, std::move(values), kind};
  validate_sampling(traj);
  return traj;
}

Trajectory read_trajectory_csv(const std::string& path, TrajectoryKind kind) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_trajectory_csv(in, kind);
}

}  // namespace ballid
