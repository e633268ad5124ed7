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

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <string>

#include "ballid/errors.hpp"
#include "ballid/format.hpp"

namespace ballid {

FailureHistogram::FailureHistogram(std::size_t motions, std::size_t bins,
                                   double smoothing_alpha, double decay)
    : motions_(motions),
      bins_(bins),
      alpha_(smoothing_alpha),
      decay_(decay),
      counts_(motions * bins, 0.0) {
  if (motions < 1 || bins < 1) {
    throw InvalidInput("histogram needs at least one motion and one bin");
  }
  if (!(smoothing_alpha >= 0.0) || !std::isfinite(smoothing_alpha)) {
    throw InvalidInput("smoothing_alpha must be >= 0");
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    throw InvalidInput("decay must lie in (0, 1]");
  }
}

std::size_t FailureHistogram::index(std::size_t motion, std::size_t bin) const {
  if (motion >= motions_ || bin >= bins_) {
    throw InvalidInput("histogram cell (" + std::to_string(motion) + ", " +
                       std::to_string(bin) + ") out of range");
  }
  return motion * bins_ + bin;
}

double FailureHistogram::count(std::size_t motion, std::size_t bin) const {
  return counts_[index(motion, bin)];
}

void FailureHistogram::set_count(std::size_t motion, std::size_t bin,
                                 double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidInput("failure counts must be finite and >= 0");
  }
  counts_[index(motion, bin)] = value;
}

void FailureHistogram::record_failure(std::size_t motion, std::size_t bin) {
  const std::size_t i = index(motion, bin);
  if (decay_ < 1.0) {
    for (double& c : counts_) c *= decay_;
  }
  counts_[i] += 1.0;
}

std::vector<double> FailureHistogram::probabilities() const {
  std::vector<double> p(counts_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    p[i] = counts_[i] + alpha_;
    total += p[i];
  }
  if (!(total > 0.0)) {
    throw InvalidState("all-zero histogram with no smoothing has no distribution");
  }
  for (double& x : p) x /= total;
  return p;
}

std::size_t FailureHistogram::bin_of(double phase) const {
  if (!(phase >= 0.0 && phase < 1.0)) {
    throw InvalidInput("phase must lie in [0, 1)");
  }
  return std::min(bins_ - 1,
                  static_cast<std::size_t>(phase * static_cast<double>(bins_)));
}

void FailureHistogram::write_csv(std::ostream& out) const {
  for (std::size_t m = 0; m < motions_; ++m) {
    for (std::size_t b = 0; b < bins_; ++b) {
      if (b) out << ',';
      out << format_double(counts_[m * bins_ + b]);
    }
    out << '\n';
  }
}

FailureHistogram FailureHistogram::read_csv(std::istream& in,
                                            double smoothing_alpha,
                                            double decay) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(parse_double_list(line, ',', "histogram count"));
    if (rows.back().size() != rows.front().size()) {
      throw InvalidInput("histogram CSV rows have different lengths");
    }
  }
  if (rows.empty() || rows.front().empty()) {
    throw InvalidInput("histogram CSV is empty");
  }
  FailureHistogram hist(rows.size(), rows.front().size(), smoothing_alpha,
                        decay);
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (std::size_t b = 0; b < rows[m].size(); ++b) {
      hist.set_count(m, b, rows[m][b]);
    }
  }
  return hist;
}

EpisodeStart sample_start(const FailureHistogram& hist, Rng& rng) {
  const std::vector<double> p = hist.probabilities();
  std::discrete_distribution<std::size_t> cell(p.begin(), p.end());
  const std::size_t c = cell(rng);
  const std::size_t bin = c % hist.bins();
  const auto bins = static_cast<double>(hist.bins());
  const double lo = static_cast<double>(bin) / bins;
  const double hi = static_cast<double>(bin + 1) / bins;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Stay strictly inside the bin even if rounding lands on its upper edge.
  const double phase = std::clamp(lo + (hi - lo) * unit(rng), lo,
                                  std::nextafter(hi, lo));
  return {c / hist.bins(), phase};
}

}  // namespace ballid
