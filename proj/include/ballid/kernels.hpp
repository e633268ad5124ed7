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

#ifndef BALLID_KERNELS_HPP_
#define BALLID_KERNELS_HPP_

// Data-parallel evaluation kernels. Each has a serial reference with the
// same signature; both must produce bit-identical output.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ballid/ball_dynamics.hpp"
#include "ballid/sysid.hpp"

namespace ballid {

std::vector<double> evaluate_losses_serial(
    const IdentificationProblem& problem,
    std::span<const Eigen::VectorXd> candidates);
std::vector<double> evaluate_losses_parallel(
    const IdentificationProblem& problem,
    std::span<const Eigen::VectorXd> candidates);

std::vector<Trajectory> simulate_drop_batch_serial(
    std::span<const ContactParams> params, const BallSpec& spec, double h0,
    const SimConfig& cfg, std::size_t n_samples);
std::vector<Trajectory> simulate_drop_batch_parallel(
    std::span<const ContactParams> params, const BallSpec& spec, double h0,
    const SimConfig& cfg, std::size_t n_samples);

std::vector<Trajectory> simulate_roll_batch_serial(
    std::span<const ContactParams> params, const BallSpec& spec, double v0,
    const SimConfig& cfg, std::size_t n_samples);
std::vector<Trajectory> simulate_roll_batch_parallel(
    std::span<const ContactParams> params, const BallSpec& spec, double v0,
    const SimConfig& cfg, std::size_t n_samples);

int max_threads();

}  // namespace ballid

#endif  // BALLID_KERNELS_HPP_
