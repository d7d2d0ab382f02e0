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

#include "ctcsim/protocols.hpp"

#include "ctcsim/linalg.hpp"

#include <algorithm>
#include <string>

namespace ctcsim {

namespace {

const MeasurementBasis& bell_basis() {
  static const MeasurementBasis basis = MeasurementBasis::bell();
  return basis;
}

std::vector<std::string> bell_label_strings() {
  std::vector<std::string> out;
  for (auto l : all_bell_labels()) out.push_back(l.str());
  return out;
}

BellLabel measure_pair(StateVector& state, int first, int second, RngStream& rng) {
  const int targets[] = {first, second};
  auto m = measure_in_basis(state, bell_basis(), targets, rng);
  state = std::move(m.residual);
  return BellLabel::from_index(static_cast<int>(m.outcome_index));
}

void check_two_qubit(const StateVector& phi) {
  if (phi.num_qubits() != 2) throw std::invalid_argument("encrypted measurement needs a two-qubit state");
  if (!phi.is_normalized()) throw std::invalid_argument("encrypted measurement state is not normalized");
}

template <typename Select>
Histogram label_histogram(std::span<const TrialRecord> records, Select select) {
  std::vector<std::uint64_t> counts(4, 0);
  for (const auto& r : records) {
    if (auto l = select(r)) ++counts[static_cast<std::size_t>(l->index())];
  }
  return Histogram::from_counts(bell_label_strings(), std::move(counts));
}

MarginalCheck check_uniform(Histogram h, double sigmas) {
  MarginalCheck c;
  const Histogram uniform = uniform_bell_histogram();
  c.tv_to_uniform = total_variation(h, uniform);
  c.uniform_within_bounds = h.total > 0 && all_pass(binomial_check(h, uniform, sigmas));
  c.histogram = std::move(h);
  return c;
}

}  // namespace

bool RelabelTable::is_bijective_per_key() const {
  for (auto ka : all_bell_labels()) {
    for (auto kb : all_bell_labels()) {
      std::array<bool, 4> hit{};
      for (auto t : all_bell_labels()) hit[static_cast<std::size_t>(lookup(ka, kb, t).index())] = true;
      if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
    }
  }
  return true;
}

std::optional<BellLabel> identify_bell_state(const ComplexVector& state, double tol) {
  if (state.size() != 4) return std::nullopt;
  for (auto l : all_bell_labels()) {
    if (equal_up_to_phase(state, bell_state(l).amplitudes(), tol)) return l;
  }
  return std::nullopt;
}

RelabelTable build_relabel_table(const SigmaMap& sigma_map, double tol) {
  std::array<BellLabel, 64> entries{};
  for (auto ka : all_bell_labels()) {
    for (auto kb : all_bell_labels()) {
      const ComplexMatrix correction = tensor_product(sigma_map(ka), sigma_map(kb));
      for (auto t : all_bell_labels()) {
        const ComplexVector image = correction * bell_state(t).amplitudes();
        const auto decoded = identify_bell_state(image, tol);
        if (!decoded) {
          throw RelabelError("sigma(" + ka.str() + ") x sigma(" + kb.str() + ") does not map Bell state " +
                             t.str() + " onto a Bell state");
        }
        entries[RelabelTable::slot(ka, kb, t)] = *decoded;
      }
    }
  }
  return RelabelTable(entries);
}

TrialRecord encrypted_trial(const StateVector& phi_ab, std::uint64_t trial_id, RngStream& rng) {
  TrialRecord rec;
  rec.trial_id = trial_id;

  // (o1, i1, i2, o2); today's measurement happens before Φ_AB exists.
  const StateVector resource = bell_state(BellLabel(0, 0));
  StateVector state = resource.tensor(resource);
  rec.today = measure_pair(state, 1, 2, rng);

  // (A, B, o1, o2)
  state = phi_ab.tensor(state);
  rec.key_a = measure_pair(state, 0, 2, rng);
  // (B, o2)
  rec.key_b = measure_pair(state, 0, 1, rng);
  return rec;
}

std::vector<TrialRecord> run_encrypted_measurement(const StateVector& phi_ab, std::uint64_t n_trials,
                                                   const RngStream& rng,
                                                   const std::optional<Substitution>& substitution) {
  check_two_qubit(phi_ab);
  if (n_trials == 0) throw std::invalid_argument("number of trials must be positive");
  if (substitution) {
    if (substitution->from_trial >= n_trials) {
      throw std::out_of_range("substitution index " + std::to_string(substitution->from_trial) +
                              " outside run of " + std::to_string(n_trials) + " trials");
    }
    check_two_qubit(substitution->state);
  }
  std::vector<TrialRecord> records;
  records.reserve(n_trials);
  for (std::uint64_t t = 0; t < n_trials; ++t) {
    const bool substituted = substitution && t >= substitution->from_trial;
    RngStream trial_rng = rng.derive(t);
    records.push_back(encrypted_trial(substituted ? substitution->state : phi_ab, t, trial_rng));
  }
  return records;
}

std::array<double, 64> encrypted_joint_distribution(const StateVector& phi_ab, MeasurementOrder order) {
  check_two_qubit(phi_ab);
  const StateVector resource = bell_state(BellLabel(0, 0));
  // (A, B, o1, i1, i2, o2)
  const StateVector full = phi_ab.tensor(resource).tensor(resource);
  std::array<double, 64> probs{};
  for (auto ka : all_bell_labels()) {
    for (auto kb : all_bell_labels()) {
      for (auto t : all_bell_labels()) {
        ComplexVector amp;
        if (order == MeasurementOrder::TodayFirst) {
          const int today[] = {3, 4};
          StateVector s(contract_bra(full, bell_state(t), today));  // (A, B, o1, o2)
          const int first[] = {0, 2};
          s = StateVector(contract_bra(s, bell_state(ka), first));  // (B, o2)
          const int second[] = {0, 1};
          amp = contract_bra(s, bell_state(kb), second);
        } else {
          const int first[] = {0, 2};
          StateVector s(contract_bra(full, bell_state(ka), first));  // (B, i1, i2, o2)
          const int second[] = {0, 3};
          s = StateVector(contract_bra(s, bell_state(kb), second));  // (i1, i2)
          const int today[] = {0, 1};
          amp = contract_bra(s, bell_state(t), today);
        }
        probs[RelabelTable::slot(ka, kb, t)] = std::norm(amp(0));
      }
    }
  }
  return probs;
}

Histogram bell_distribution(const StateVector& phi_ab) {
  const int pair[] = {0, 1};
  return born_distribution(phi_ab, bell_basis(), pair);
}

DecodeResult decode_trials(std::span<const TrialRecord> records, const RelabelTable& table) {
  DecodeResult out;
  out.records.assign(records.begin(), records.end());
  for (auto& r : out.records) r.decoded = table.lookup(r.key_a, r.key_b, r.today);
  out.histogram = label_histogram(out.records, [](const TrialRecord& r) { return r.decoded; });
  return out;
}

Histogram today_histogram(std::span<const TrialRecord> records) {
  return label_histogram(records, [](const TrialRecord& r) { return std::optional(r.today); });
}

Histogram key_a_histogram(std::span<const TrialRecord> records) {
  return label_histogram(records, [](const TrialRecord& r) { return std::optional(r.key_a); });
}

Histogram key_b_histogram(std::span<const TrialRecord> records) {
  return label_histogram(records, [](const TrialRecord& r) { return std::optional(r.key_b); });
}

Histogram postselected_histogram(std::span<const TrialRecord> records) {
  const BellLabel phi00(0, 0);
  return label_histogram(records, [phi00](const TrialRecord& r) {
    return r.key_a == phi00 && r.key_b == phi00 ? std::optional(r.today) : std::nullopt;
  });
}

Histogram uniform_bell_histogram() { return Histogram::exact(bell_label_strings(), std::vector<double>(4, 0.25)); }

CiphertextReport ciphertext_uselessness_check(std::span<const TrialRecord> records, double sigmas) {
  CiphertextReport report;
  report.today = check_uniform(today_histogram(records), sigmas);
  report.key_a = check_uniform(key_a_histogram(records), sigmas);
  report.key_b = check_uniform(key_b_histogram(records), sigmas);
  return report;
}

MultistageReport run_multistage(std::span<const ComplexMatrix> unitaries, const StateVector& input,
                                std::uint64_t n_trials, const RngStream& rng) {
  if (input.num_qubits() != 1) throw std::invalid_argument("multistage input must be a single qubit");
  if (n_trials == 0) throw std::invalid_argument("number of trials must be positive");
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (unitaries[i].rows() != 2 || !is_unitary(unitaries[i])) {
      throw std::invalid_argument("stage " + std::to_string(i + 1) + " is not a single-qubit unitary");
    }
  }
  const int k = static_cast<int>(unitaries.size());

  // (input, p_1, q_1, …, p_k, q_k) with every U_i already applied to q_i.
  const StateVector resource = bell_state(BellLabel(0, 0));
  StateVector prepared = input;
  for (int i = 0; i < k; ++i) prepared = prepared.tensor(resource);
  for (int i = 0; i < k; ++i) {
    const int q[] = {2 * i + 2};
    prepared = apply_gate(prepared, unitaries[static_cast<std::size_t>(i)], q);
  }

  MultistageReport report;
  report.trials = n_trials;
  for (std::uint64_t t = 0; t < n_trials; ++t) {
    RngStream trial_rng = rng.derive(t);
    StateVector state = prepared;
    bool success = true;
    // The carrier and the next p always sit at positions 0 and 1.
    for (int i = 0; i < k; ++i) {
      if (measure_pair(state, 0, 1, trial_rng) != BellLabel(0, 0)) success = false;
    }
    if (success) {
      ++report.success_count;
      report.conditional_final_states.push_back(std::move(state));
    }
  }
  return report;
}

}  // namespace ctcsim
