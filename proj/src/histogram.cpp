// Copyright 2026 The ctcsim Authors
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

#include "ctcsim/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ctcsim {

Histogram Histogram::from_counts(std::vector<std::string> labels, std::vector<std::uint64_t> counts) {
  if (labels.size() != counts.size()) throw std::invalid_argument("histogram: labels/counts size mismatch");
  Histogram h;
  h.labels = std::move(labels);
  h.counts = std::move(counts);
  h.total = std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0});
  h.probabilities.resize(h.counts.size(), 0.0);
  if (h.total > 0) {
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      h.probabilities[i] = static_cast<double>(h.counts[i]) / static_cast<double>(h.total);
    }
  }
  return h;
}

Histogram Histogram::exact(std::vector<std::string> labels, std::vector<double> probabilities) {
  if (labels.size() != probabilities.size()) {
    throw std::invalid_argument("histogram: labels/probabilities size mismatch");
  }
  Histogram h;
  h.labels = std::move(labels);
  h.probabilities = std::move(probabilities);
  return h;
}

double total_variation(const Histogram& a, const Histogram& b) {
  if (a.size() != b.size()) throw std::invalid_argument("total_variation: histograms differ in size");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a.probabilities[i] - b.probabilities[i]);
  return 0.5 * sum;
}

std::vector<BinCheck> binomial_check(const Histogram& sampled, const Histogram& exact, double sigmas) {
  if (sampled.size() != exact.size()) throw std::invalid_argument("binomial_check: histograms differ in size");
  if (sampled.total == 0) throw std::invalid_argument("binomial_check: sampled histogram is empty");
  std::vector<BinCheck> out;
  const auto n = static_cast<double>(sampled.total);
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    BinCheck c;
    c.label = sampled.labels[i];
    c.observed = sampled.probabilities[i];
    c.expected = std::clamp(exact.probabilities[i], 0.0, 1.0);
    c.bound = sigmas * std::sqrt(c.expected * (1.0 - c.expected) / n);
    c.pass = std::abs(c.observed - c.expected) <= c.bound;
    out.push_back(c);
  }
  return out;
}

bool all_pass(const std::vector<BinCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const BinCheck& c) { return c.pass; });
}

}  // namespace ctcsim
