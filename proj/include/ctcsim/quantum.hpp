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
 * Qubit gates, the Bell basis, the state/map dualities and seeded projective
 * measurement.
 */

#pragma once

#include "ctcsim/histogram.hpp"
#include "ctcsim/linalg.hpp"
#include "ctcsim/rng.hpp"
#include "ctcsim/state_vector.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ctcsim {

/// Two-bit label (x, y) of the Bell state Ψ_xy.
class BellLabel {
 public:
  constexpr BellLabel() = default;
  BellLabel(int x, int y);

  /// Label with index 2x + y.
  static BellLabel from_index(int index);

  constexpr int x() const { return x_; }
  constexpr int y() const { return y_; }
  constexpr int index() const { return 2 * x_ + y_; }
  std::string str() const;

  friend constexpr bool operator==(BellLabel, BellLabel) = default;

 private:
  int x_ = 0;
  int y_ = 0;
};

/// All four labels in index order 00, 01, 10, 11.
std::array<BellLabel, 4> all_bell_labels();

/// Ψ_xy = (|x⟩|y⟩ + (−1)^y |x+1⟩|y+1⟩) / √2, sums mod 2.
StateVector bell_state(BellLabel label);

/// σ_00 = I, σ_10 = σ_x, σ_01 = σ_y, σ_11 = σ_z.
ComplexMatrix sigma(BellLabel label);

namespace gates {
ComplexMatrix identity(int num_qubits = 1);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// |x⟩|y⟩ ↦ |x⟩|x+y⟩ with the first qubit as control.
ComplexMatrix cnot();
ComplexMatrix swap();
}  // namespace gates

/**
 * Channel from a bipartite state Φ on H ⊗ K: the d_K × d_H matrix M with
 * M(b, a) equal to the coefficient of |a⟩_H |b⟩_K.
 */
ComplexMatrix f_map(const ComplexVector& phi, Eigen::Index dim_h, Eigen::Index dim_k);
ComplexMatrix f_map(const StateVector& phi, int h_qubits = 1);

/**
 * Map of the bra Ψ*, given the ket Ψ: the d_K × d_H matrix with
 * M(b, a) = conj(coefficient of |a⟩_H |b⟩_K).
 */
ComplexMatrix g_map(const ComplexVector& psi, Eigen::Index dim_h, Eigen::Index dim_k);
ComplexMatrix g_map(const StateVector& psi, int h_qubits = 1);

/// Inverse of f_map: rebuilds the state vector from its channel matrix.
ComplexVector state_from_f_map(const ComplexMatrix& m);

/**
 * Applies `gate` to `targets` in listed order (targets[0] is the most
 * significant bit of the gate's index) and the identity elsewhere.
 */
StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate, std::span<const int> targets);

/**
 * ⟨bra|_targets applied to `state`: the unnormalized vector left on the
 * remaining qubits, kept in ascending order.
 */
ComplexVector contract_bra(const StateVector& state, const StateVector& bra, std::span<const int> targets);

/// Orthonormal, complete basis of a k-qubit target space with outcome labels.
class MeasurementBasis {
 public:
  /// Throws std::invalid_argument unless the elements are orthonormal and complete to `tol`.
  MeasurementBasis(std::vector<StateVector> elements, std::vector<std::string> labels,
                   double tol = kDefaultTolerance);

  static MeasurementBasis bell();
  static MeasurementBasis computational(int num_qubits);

  int num_qubits() const { return elements_.front().num_qubits(); }
  std::size_t size() const { return elements_.size(); }
  const StateVector& element(std::size_t k) const { return elements_[k]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<StateVector> elements_;
  std::vector<std::string> labels_;
};

struct MeasurementResult {
  std::size_t outcome_index = 0;
  /// Born probability of the outcome before renormalization.
  double probability = 0.0;
  /// Renormalized post-measurement state on all qubits.
  StateVector post_state;
  /// Renormalized state of the unmeasured qubits (ascending order); post_state
  /// is the basis element on the targets times this.
  StateVector residual;
};

/// Samples one outcome with its Born probability.
MeasurementResult measure_in_basis(const StateVector& state, const MeasurementBasis& basis,
                                   std::span<const int> targets, RngStream& rng);

/// Exact outcome probabilities; sums to ‖state‖².
Histogram born_distribution(const StateVector& state, const MeasurementBasis& basis,
                            std::span<const int> targets);

}  // namespace ctcsim
