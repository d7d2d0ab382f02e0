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
 * A backward-in-time wire realized by post-selected teleportation.
 *
 * A LoopCircuit is a unitary U on n+1 qubits whose `loop_qubit` output is fed
 * back to the same qubit's input. The physical realization used here:
 *
 *   register   open wires 0..n-1 | A = qubit n | B = qubit n+1
 *   prepare    input ⊗ Ψ00(A, B)
 *   apply      U, with its loop wire acting on A
 *   measure    Bell basis on (A, B), A supplying the first label bit
 *
 * Conditioned on outcome Ψ00 the open wires have undergone
 * ½·Tr_loop(U); other outcomes insert a Pauli on the loop wire.
 */

#pragma once

#include "ctcsim/linalg.hpp"
#include "ctcsim/quantum.hpp"
#include "ctcsim/rng.hpp"
#include "ctcsim/state_vector.hpp"

#include <complex>
#include <vector>

namespace ctcsim {

class LoopCircuit {
 public:
  /// Throws std::invalid_argument if `u` is not a unitary on ≥ 1 qubits or
  /// `loop_qubit` is out of range.
  LoopCircuit(ComplexMatrix u, int loop_qubit, double tol = kDefaultTolerance);

  static LoopCircuit cnot() { return LoopCircuit(gates::cnot(), 1); }
  static LoopCircuit swap() { return LoopCircuit(gates::swap(), 1); }

  const ComplexMatrix& unitary() const { return u_; }
  int loop_qubit() const { return loop_qubit_; }
  int num_qubits() const { return num_qubits_; }
  int num_open_qubits() const { return num_qubits_ - 1; }
  Eigen::Index open_dim() const { return Eigen::Index{1} << num_open_qubits(); }

  /// Index into u of (open-wire index, loop bit).
  Eigen::Index full_index(Eigen::Index open, int loop_bit) const;

 private:
  ComplexMatrix u_;
  int loop_qubit_;
  int num_qubits_;
};

struct LoopShot {
  BellLabel outcome;
  double probability = 0.0;
  /// Renormalized state of the open wires.
  StateVector residual;
};

/// One run of the teleportation realization on `input` (open wires only).
LoopShot simulate_loop(const LoopCircuit& circuit, const StateVector& input, RngStream& rng);

/// Tr_loop(U) computed by conjugating the loop wire to the last position.
ComplexMatrix loop_partial_trace(const LoopCircuit& circuit);

/**
 * Unnormalized map on the open wires conditioned on `outcome`, by direct
 * index contraction:
 *   E(b, a) = Σ_{i,j,q} conj(Ψ_outcome(i, j)) · U((b,i), (a,q)) · Ψ00(q, j).
 */
ComplexMatrix effective_operator(const LoopCircuit& circuit, BellLabel outcome);

/// F_{Ψ00} ∘ G_{Ψ_outcome*}: ½·σ(outcome) up to a global phase.
ComplexMatrix time_travel_channel(BellLabel outcome);

/// effective_operator(circuit, Ψ00) == ½·Tr_loop(U) within `tol`.
bool verify_loop_identity(const LoopCircuit& circuit, double tol = kDefaultTolerance);

struct PostselectionReport {
  BellLabel outcome_label;
  ComplexMatrix effective_operator;
  /// ‖E·input‖² for the input the report was built for.
  double outcome_probability = 0.0;
  /// c with effective_operator = c · Tr_loop(U · (I ⊗ σ(outcome))); ½ for Ψ00.
  std::complex<double> scalar_factor;
};

PostselectionReport postselection_report(const LoopCircuit& circuit, BellLabel outcome, const StateVector& input);

/**
 * Map induced on the loop wire alone when the open wires enter and leave in
 * basis state |open_index⟩: (⟨c| ⊗ I) U (|c⟩ ⊗ I) with the loop wire placed
 * last.
 */
ComplexMatrix loop_wire_map(const LoopCircuit& circuit, Eigen::Index open_index);

/**
 * Orthonormal basis of the states ψ with M ψ = ψ exactly (eigenvalue one, not
 * merely up to phase): the states that survive a trip around the loop.
 */
std::vector<ComplexVector> consistent_loop_states(const ComplexMatrix& loop_map, double tol = kDefaultTolerance);

}  // namespace ctcsim
