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


#include "ballid/cma_es.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "ballid/errors.hpp"

namespace ballid {
namespace {

double sphere(const Eigen::VectorXd& x) {
  return (x.array() - 0.5).square().sum();
}

TEST(CmaStrategyTest, DefaultCoefficients) {
  const CmaStrategy s = CmaStrategy::defaults(5, 4);
  EXPECT_EQ(s.parents, 2);
  EXPECT_NEAR(s.weights.sum(), 1.0, 1e-15);
  EXPECT_GT(s.weights(0), s.weights(1));
  EXPECT_NEAR(s.mu_eff, 1.0 / s.weights.squaredNorm(), 1e-12);
  const double n = 5.0;
  EXPECT_NEAR(s.chi_n, std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n)),
              1e-15);
  EXPECT_GT(s.c_1, 0.0);
  EXPECT_GE(s.c_mu, 0.0);
  EXPECT_LE(s.c_1 + s.c_mu, 1.0);
  EXPECT_THROW(CmaStrategy::defaults(5, 1), InvalidInput);
  EXPECT_THROW(CmaStrategy::defaults(0, 4), InvalidInput);
}

TEST(CmaTest, AskStaysInUnitBox) {
  CmaState s = cma_init(Eigen::VectorXd::Constant(3, 0.95), 0.5, 8);
  Rng rng(1);
  for (int g = 0; g < 50; ++g) {
    const auto xs = cma_ask(s, rng);
    ASSERT_EQ(xs.size(), 8u);
    std::vector<double> f;
    for (const auto& x : xs) {
      EXPECT_GE(x.minCoeff(), 0.0);
      EXPECT_LE(x.maxCoeff(), 1.0);
      f.push_back(sphere(x));
    }
    s = cma_tell(std::move(s), xs, f);
  }
}

TEST(CmaTest, CovarianceStaysSymmetricPositiveDefinite) {
  CmaState s = cma_init(Eigen::VectorXd::Constant(5, 0.2), 0.3, 4);
  Rng rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int g = 0; g < 1000; ++g) {
    const auto xs = cma_ask(s, rng);
    // A noisy objective keeps the search from collapsing to a point.
    std::vector<double> f;
    for (const auto& x : xs) f.push_back(sphere(x) + 0.01 * u(rng));
    s = cma_tell(std::move(s), xs, f);
    ASSERT_LT((s.covariance - s.covariance.transpose()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.covariance);
    ASSERT_GT(es.eigenvalues().minCoeff(), 0.0) << "generation " << g;
    ASSERT_TRUE(std::isfinite(s.step_size));
    ASSERT_GT(s.step_size, 0.0);
  }
  EXPECT_EQ(s.generation, 1000);
}

TEST(CmaTest, MinimizeIsDeterministicUnderSeed) {
  const auto a = cma_minimize(sphere, Eigen::VectorXd::Constant(5, 0.1), 0.3, 4, 60, 42);
  const auto b = cma_minimize(sphere, Eigen::VectorXd::Constant(5, 0.1), 0.3, 4, 60, 42);
  const auto c = cma_minimize(sphere, Eigen::VectorXd::Constant(5, 0.1), 0.3, 4, 60, 43);
  EXPECT_EQ(a.best_x, b.best_x);
  EXPECT_EQ(a.generation_best, b.generation_best);
  EXPECT_NE(a.generation_best, c.generation_best);
}

TEST(CmaTest, SphereConverges) {
  const auto r = cma_minimize(sphere, Eigen::VectorXd::Constant(5, 0.1), 0.3, 4, 200, 7);
  EXPECT_LT(r.best_loss, 1e-8);
  EXPECT_EQ(r.generations, 200);
}

TEST(CmaTest, OptimumOnBoundaryIsReached) {
  const auto f = [](const Eigen::VectorXd& x) { return x.sum(); };
  const auto r = cma_minimize(f, Eigen::VectorXd::Constant(3, 0.5), 0.3, 6, 150, 3);
  EXPECT_LT(r.best_loss, 1e-6);
}

TEST(CmaTest, TellRejectsBadInput) {
  CmaState s = cma_init(Eigen::VectorXd::Constant(2, 0.5), 0.2, 4);
  Rng rng(1);
  auto xs = cma_ask(s, rng);
  std::vector<double> f(3, 1.0);
  EXPECT_THROW(cma_tell(s, xs, f), InvalidInput);
  f.assign(4, 1.0);
  f[2] = NAN;
  EXPECT_THROW(cma_tell(s, xs, f), InvalidInput);
}

TEST(CmaTest, InitClipsMeanAndValidatesStep) {
  const CmaState s = cma_init(Eigen::Vector2d(-1.0, 2.0), 0.2, 4);
  EXPECT_EQ(s.mean, Eigen::Vector2d(0.0, 1.0));
  EXPECT_THROW(cma_init(Eigen::Vector2d(0.5, 0.5), 0.0, 4), InvalidInput);
}

}  // namespace
}  // namespace ballid
