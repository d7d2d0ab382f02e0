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

/**
 * @file
 * Encrypted joint measurement of a future two-qubit state, and multistage
 * same-day application of a unitary chain.
 *
 * Encrypted measurement register (six qubits):
 *
 *   A, B        the two qubits of Φ_AB, created "tomorrow"
 *   o1, i1      first Ψ00 pair; i1 arrives "today" as A's proxy
 *   i2, o2      second Ψ00 pair; i2 is B's proxy
 *
 *   today      Bell measurement of (i1, i2)          -> ciphertext label
 *   tomorrow   Bell measurement of (A, o1)           -> key_a
 *              Bell measurement of (B, o2)           -> key_b
 *
 * A key outcome Ψ_l leaves σ(l) (up to phase) on the proxy, so the today
 * outcome Ψ_t is a measurement of Φ_AB in the relabelled Bell state
 * σ(key_a) ⊗ σ(key_b) · Ψ_t.
 */

#pragma once

#include "ctcsim/histogram.hpp"
#include "ctcsim/quantum.hpp"
#include "ctcsim/rng.hpp"
#include "ctcsim/state_vector.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ctcsim {

struct TrialRecord {
  std::uint64_t trial_id = 0;
  BellLabel today;
  BellLabel key_a;
  BellLabel key_b;
  std::optional<BellLabel> decoded;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

using SigmaMap = std::function<ComplexMatrix(BellLabel)>;

/// Raised when σ⊗σ·Ψ fails to be a Bell state up to phase (a convention bug).
class RelabelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Total map (key_a, key_b, today) -> decoded label.
class RelabelTable {
 public:
  explicit RelabelTable(std::array<BellLabel, 64> entries) : entries_(entries) {}

  BellLabel lookup(BellLabel key_a, BellLabel key_b, BellLabel today) const {
    return entries_[slot(key_a, key_b, today)];
  }

  static std::size_t slot(BellLabel key_a, BellLabel key_b, BellLabel today) {
    return static_cast<std::size_t>(16 * key_a.index() + 4 * key_b.index() + today.index());
  }

  /// For every key pair, today -> decoded is a permutation of the 4 labels.
  bool is_bijective_per_key() const;

 private:
  std::array<BellLabel, 64> entries_;
};

/// Exhaustive table with σ⊗σ·Ψ_today ∝ Ψ_decoded; throws RelabelError otherwise.
RelabelTable build_relabel_table(const SigmaMap& sigma_map = sigma, double tol = 1e-12);

/// Label l with `state` = c·Ψ_l, |c| = 1, or nullopt.
std::optional<BellLabel> identify_bell_state(const ComplexVector& state, double tol = 1e-12);

/// Replacement of Φ_AB from trial `from_trial` on.
struct Substitution {
  std::uint64_t from_trial = 0;
  StateVector state;
};

/**
 * Simulates `n_trials` independent runs. Trial t draws from
 * rng.derive(t), so output does not depend on scheduling.
 */
std::vector<TrialRecord> run_encrypted_measurement(const StateVector& phi_ab, std::uint64_t n_trials,
                                                   const RngStream& rng,
                                                   const std::optional<Substitution>& substitution = std::nullopt);

/// One trial; exposed for tests and replay.
TrialRecord encrypted_trial(const StateVector& phi_ab, std::uint64_t trial_id, RngStream& rng);

enum class MeasurementOrder { TodayFirst, KeysFirst };

/**
 * Exact joint probabilities of (key_a, key_b, today), indexed by
 * RelabelTable::slot, from sequential projections on the full six-qubit state.
 */
std::array<double, 64> encrypted_joint_distribution(const StateVector& phi_ab, MeasurementOrder order);

/// Bell-basis Born distribution of a two-qubit state.
Histogram bell_distribution(const StateVector& phi_ab);

struct DecodeResult {
  std::vector<TrialRecord> records;
  Histogram histogram;
};

/// Fills `decoded` from the keys only; never sees Φ_AB.
DecodeResult decode_trials(std::span<const TrialRecord> records, const RelabelTable& table);

Histogram today_histogram(std::span<const TrialRecord> records);
Histogram key_a_histogram(std::span<const TrialRecord> records);
Histogram key_b_histogram(std::span<const TrialRecord> records);

/// Histogram of `today` over trials whose keys are both Ψ00.
Histogram postselected_histogram(std::span<const TrialRecord> records);

Histogram uniform_bell_histogram();

struct MarginalCheck {
  Histogram histogram;
  double tv_to_uniform = 0.0;
  bool uniform_within_bounds = false;
};

struct CiphertextReport {
  MarginalCheck today;
  MarginalCheck key_a;
  MarginalCheck key_b;

  bool all_uniform() const {
    return today.uniform_within_bounds && key_a.uniform_within_bounds && key_b.uniform_within_bounds;
  }
};

/// Undecoded ciphertext and each key stream compared against uniform (5σ per bin).
CiphertextReport ciphertext_uselessness_check(std::span<const TrialRecord> records, double sigmas = 5.0);

struct MultistageReport {
  std::uint64_t trials = 0;
  std::uint64_t success_count = 0;
  /// Output qubit of each successful trial, in trial order.
  std::vector<StateVector> conditional_final_states;

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(success_count) / static_cast<double>(trials);
  }
};

/**
 * Applies U_1 … U_k "today" to the arriving halves of k fresh Ψ00 pairs and
 * chains them with Bell measurements (input, p_1), (q_1, p_2), …,
 * (q_{k-1}, p_k). A trial succeeds when every measurement gives Ψ00; q_k then
 * holds U_k ⋯ U_1 · input up to phase.
 */
MultistageReport run_multistage(std::span<const ComplexMatrix> unitaries, const StateVector& input,
                                std::uint64_t n_trials, const RngStream& rng);

}  // namespace ctcsim
