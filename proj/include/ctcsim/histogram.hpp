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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ctcsim {

/**
 * Distribution over labelled outcomes. Sampled histograms carry counts and
 * their total; exact (Born) distributions leave `counts` empty and `total`
 * zero.
 */
struct Histogram {
  std::vector<std::string> labels;
  std::vector<double> probabilities;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  static Histogram from_counts(std::vector<std::string> labels, std::vector<std::uint64_t> counts);
  static Histogram exact(std::vector<std::string> labels, std::vector<double> probabilities);

  bool is_sampled() const { return !counts.empty(); }
  std::size_t size() const { return labels.size(); }
};

double total_variation(const Histogram& a, const Histogram& b);

/// One bin of a sampled-vs-exact comparison.
struct BinCheck {
  std::string label;
  double observed = 0.0;
  double expected = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/**
 * Per-bin binomial check |f − p| ≤ sigmas·√(p(1−p)/N). A bin with p = 0
 * therefore passes only with a zero count.
 */
std::vector<BinCheck> binomial_check(const Histogram& sampled, const Histogram& exact, double sigmas = 5.0);

bool all_pass(const std::vector<BinCheck>& checks);

}  // namespace ctcsim
