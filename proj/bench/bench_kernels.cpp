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


// Serial vs OpenMP throughput for the candidate-evaluation and batch
// simulation kernels.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ballid/kernels.hpp"

namespace ballid {
namespace {

std::vector<Eigen::VectorXd> unit_points(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Eigen::VectorXd> xs;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXd x(ContactParams::kDim);
    for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = u(rng);
    xs.push_back(x);
  }
  return xs;
}

std::vector<ContactParams> param_batch(std::size_t n) {
  std::vector<ContactParams> ps;
  for (const auto& x : unit_points(n)) ps.push_back(denormalize(x, ParamBounds{}));
  return ps;
}

const IdentificationProblem& problem() {
  static const IdentificationProblem p(
      simulate_drop(hard_ground_params(), BallSpec{}, 1.0, SimConfig{}),
      simulate_roll(hard_ground_params(), BallSpec{}, 2.0, SimConfig{}),
      SysIdConfig{}, BallSpec{}, SimConfig{}, 1.0, 2.0);
  return p;
}

template <bool kParallel>
void BM_EvaluateLosses(benchmark::State& state) {
  const auto xs = unit_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto f = kParallel ? evaluate_losses_parallel(problem(), xs)
                       : evaluate_losses_serial(problem(), xs);
    benchmark::DoNotOptimize(f.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = kParallel ? max_threads() : 1;
}

template <bool kParallel>
void BM_DropBatch(benchmark::State& state) {
  const auto ps = param_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto t = kParallel ? simulate_drop_batch_parallel(ps, BallSpec{}, 1.0, SimConfig{}, 21)
                       : simulate_drop_batch_serial(ps, BallSpec{}, 1.0, SimConfig{}, 21);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool kParallel>
void BM_RollBatch(benchmark::State& state) {
  const auto ps = param_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto t = kParallel ? simulate_roll_batch_parallel(ps, BallSpec{}, 2.0, SimConfig{}, 21)
                       : simulate_roll_batch_serial(ps, BallSpec{}, 2.0, SimConfig{}, 21);
    benchmark::DoNotOptimize(t.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_EvaluateLosses<false>)->Name("evaluate_losses/serial")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_EvaluateLosses<true>)->Name("evaluate_losses/parallel")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_DropBatch<false>)->Name("drop_batch/serial")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_DropBatch<true>)->Name("drop_batch/parallel")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_RollBatch<false>)->Name("roll_batch/serial")->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_RollBatch<true>)->Name("roll_batch/parallel")->Arg(4)->Arg(16)->Arg(64);

}  // namespace
}  // namespace ballid

BENCHMARK_MAIN();
