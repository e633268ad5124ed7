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

#ifndef BALLID_CURRICULUM_HPP_
#define BALLID_CURRICULUM_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ballid/cma_es.hpp"

namespace ballid {

// Failure counts over (motion index, phase bin). Episode starts are drawn
// with probability proportional to count + smoothing_alpha, so segments
// that fail often are revisited more.
class FailureHistogram {
 public:
  static constexpr std::size_t kDefaultBins = 10;

  FailureHistogram(std::size_t motions, std::size_t bins = kDefaultBins,
                   double smoothing_alpha = 1.0, double decay = 1.0);

  std::size_t motions() const { return motions_; }
  std::size_t bins() const { return bins_; }
  double smoothing_alpha() const { return alpha_; }
  double decay() const { return decay_; }

  double count(std::size_t motion, std::size_t bin) const;
  void set_count(std::size_t motion, std::size_t bin, double value);

  // Multiplies every count by decay, then adds one to (motion, bin).
  void record_failure(std::size_t motion, std::size_t bin);

  // Row-major cell probabilities (motion-major). Throws InvalidState when
  // every weight is zero.
  std::vector<double> probabilities() const;

  // Bin index for a phase in [0, 1).
  std::size_t bin_of(double phase) const;

  // M rows x B columns of counts, no header.
  void write_csv(std::ostream& out) const;
  static FailureHistogram read_csv(std::istream& in,
                                   double smoothing_alpha = 1.0,
                                   double decay = 1.0);

 private:
  std::size_t index(std::size_t motion, std::size_t bin) const;

  std::size_t motions_;
  std::size_t bins_;
  double alpha_;
  double decay_;
  std::vector<double> counts_;
};

struct EpisodeStart {
  std::size_t motion = 0;
  double phase = 0.0;  // in [bin/B, (bin+1)/B)
};

EpisodeStart sample_start(const FailureHistogram& hist, Rng& rng);

}  // namespace ballid

#endif  // BALLID_CURRICULUM_HPP_
