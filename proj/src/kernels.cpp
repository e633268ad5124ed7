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

#include "ballid/kernels.hpp"

#include <exception>

#include <omp.h>

namespace ballid {

namespace {

// Runs body(i) for i in [0, n) across threads. The first exception thrown by
// any iteration is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t n, const Body& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<double> evaluate_losses_serial(
    const IdentificationProblem& problem,
    std::span<const Eigen::VectorXd> candidates) {
  std::vector<double> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out[i] = problem.loss(candidates[i]);
  }
  return out;
}

std::vector<double> evaluate_losses_parallel(
    const IdentificationProblem& problem,
    std::span<const Eigen::VectorXd> candidates) {
  std::vector<double> out(candidates.size());
  parallel_for(candidates.size(),
               [&](std::size_t i) { out[i] = problem.loss(candidates[i]); });
  return out;
}

std::vector<Trajectory> simulate_drop_batch_serial(
    std::span<const ContactParams> params, const BallSpec& spec, double h0,
    const SimConfig& cfg, std::size_t n_samples) {
  std::vector<Trajectory> out;
  out.reserve(params.size());
  for (const auto& p : params) {
    out.push_back(simulate_drop(p, spec, h0, cfg, n_samples));
  }
  return out;
}

std::vector<Trajectory> simulate_drop_batch_parallel(
    std::span<const ContactParams> params, const BallSpec& spec, double h0,
    const SimConfig& cfg, std::size_t n_samples) {
  std::vector<Trajectory> out(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    out[i] = simulate_drop(params[i], spec, h0, cfg, n_samples);
  });
  return out;
}

std::vector<Trajectory> simulate_roll_batch_serial(
    std::span<const ContactParams> params, const BallSpec& spec, double v0,
    const SimConfig& cfg, std::size_t n_samples) {
  std::vector<Trajectory> out;
  out.reserve(params.size());
  for (const auto& p : params) {
    out.push_back(simulate_roll(p, spec, v0, cfg, n_samples));
  }
  return out;
}

std::vector<Trajectory> simulate_roll_batch_parallel(
    std::span<const ContactParams> params, const BallSpec& spec, double v0,
    const SimConfig& cfg, std::size_t n_samples) {
  std::vector<Trajectory> out(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    out[i] = simulate_roll(params[i], spec, v0, cfg, n_samples);
  });
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace ballid
