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


#include "ballid/curriculum.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "ballid/errors.hpp"

namespace ballid {
namespace {

TEST(HistogramTest, SmoothedProbabilities) {
  FailureHistogram h(2, 2, 1.0);
  h.set_count(0, 0, 9.0);
  const auto p = h.probabilities();
  ASSERT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p[0], 10.0 / 13.0);
  for (int i = 1; i < 4; ++i) EXPECT_DOUBLE_EQ(p[i], 1.0 / 13.0);
}

TEST(HistogramTest, AllZeroIsUniformOrInvalid) {
  const FailureHistogram h(3, 4, 1.0);
  for (double p : h.probabilities()) EXPECT_DOUBLE_EQ(p, 1.0 / 12.0);
  const FailureHistogram bare(3, 4, 0.0);
  EXPECT_THROW(bare.probabilities(), InvalidState);
}

TEST(HistogramTest, RecordFailureAppliesDecayFirst) {
  FailureHistogram h(1, 2, 1.0, 0.5);
  h.record_failure(0, 1);
  h.record_failure(0, 1);
  EXPECT_DOUBLE_EQ(h.count(0, 1), 1.5);
  h.record_failure(0, 0);
  EXPECT_DOUBLE_EQ(h.count(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(h.count(0, 1), 0.75);
}

TEST(HistogramTest, BinOfAndBounds) {
  const FailureHistogram h(1, 10);
  EXPECT_EQ(h.bin_of(0.0), 0u);
  EXPECT_EQ(h.bin_of(0.35), 3u);
  EXPECT_EQ(h.bin_of(0.999999), 9u);
  EXPECT_THROW(h.bin_of(1.0), InvalidInput);
  EXPECT_THROW(h.bin_of(-0.1), InvalidInput);
  EXPECT_THROW(h.count(1, 0), InvalidInput);
  EXPECT_THROW(FailureHistogram(0, 10), InvalidInput);
  EXPECT_THROW(FailureHistogram(1, 10, -1.0), InvalidInput);
  EXPECT_THROW(FailureHistogram(1, 10, 1.0, 0.0), InvalidInput);
}

TEST(HistogramTest, CsvRoundTrip) {
  FailureHistogram h(2, 3, 0.5);
  h.set_count(0, 2, 4.0);
  h.set_count(1, 0, 0.25);
  std::stringstream ss;
  h.write_csv(ss);
  const FailureHistogram back = FailureHistogram::read_csv(ss, 0.5);
  EXPECT_EQ(back.motions(), 2u);
  EXPECT_EQ(back.bins(), 3u);
  EXPECT_EQ(back.probabilities(), h.probabilities());
  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(FailureHistogram::read_csv(ragged), InvalidInput);
  std::istringstream negative("1,-2\n");
  EXPECT_THROW(FailureHistogram::read_csv(negative), InvalidInput);
}

TEST(SampleStartTest, FrequenciesTrackHistogram) {
  FailureHistogram h(2, 2, 1.0);
  h.set_count(0, 0, 9.0);
  Rng rng(12);
  std::array<int, 4> counts{};
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const EpisodeStart s = sample_start(h, rng);
    const std::size_t bin = h.bin_of(s.phase);
    ++counts[s.motion * 2 + bin];
  }
  EXPECT_NEAR(counts[0] / double(n), 10.0 / 13.0, 0.01);
  EXPECT_NEAR(counts[3] / double(n), 1.0 / 13.0, 0.01);
}

TEST(SampleStartTest, PhaseStaysInItsBin) {
  FailureHistogram h(1, 7, 0.0);
  h.set_count(0, 6, 1.0);
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const EpisodeStart s = sample_start(h, rng);
    EXPECT_GE(s.phase, 6.0 / 7.0);
    EXPECT_LT(s.phase, 1.0);
  }
}

TEST(SampleStartTest, DecayShiftsMassToRecentFailures) {
  FailureHistogram h(1, 2, 0.0, 0.5);
  for (int i = 0; i < 10; ++i) h.record_failure(0, 0);
  h.record_failure(0, 1);
  h.record_failure(0, 1);
  const auto p = h.probabilities();
  EXPECT_GT(p[1], p[0]);
}

}  // namespace
}  // namespace ballid
