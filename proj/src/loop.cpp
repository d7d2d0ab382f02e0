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

#include "ctcsim/loop.hpp"

#include <Eigen/SVD>

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ctcsim {

namespace {

/// Conjugates U so that the loop wire becomes the last qubit.
ComplexMatrix loop_last(const LoopCircuit& circuit) {
  std::vector<int> order;
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    if (q != circuit.loop_qubit()) order.push_back(q);
  }
  order.push_back(circuit.loop_qubit());
  const ComplexMatrix p = qubit_permutation<double>(order);
  return p * circuit.unitary() * p.adjoint();
}

}  // namespace

LoopCircuit::LoopCircuit(ComplexMatrix u, int loop_qubit, double tol)
    : u_(std::move(u)), loop_qubit_(loop_qubit), num_qubits_(0) {
  const auto dim = static_cast<std::uint64_t>(u_.rows());
  if (u_.rows() != u_.cols() || dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("loop unitary must be square with power-of-two dimension >= 2");
  }
  num_qubits_ = std::countr_zero(dim);
  if (loop_qubit < 0 || loop_qubit >= num_qubits_) {
    throw std::invalid_argument("loop qubit " + std::to_string(loop_qubit) + " out of range");
  }
  if (!is_unitary(u_, tol)) throw std::invalid_argument("loop operator is not unitary");
}

Eigen::Index LoopCircuit::full_index(Eigen::Index open, int loop_bit) const {
  const int below = num_open_qubits() - loop_qubit_;
  const Eigen::Index high = open >> below;
  const Eigen::Index low = open & ((Eigen::Index{1} << below) - 1);
  return (high << (below + 1)) | (Eigen::Index{loop_bit} << below) | low;
}

LoopShot simulate_loop(const LoopCircuit& circuit, const StateVector& input, RngStream& rng) {
  const int n = circuit.num_open_qubits();
  if (input.num_qubits() != n) {
    throw std::invalid_argument("loop input has " + std::to_string(input.num_qubits()) + " qubits, circuit has " +
                                std::to_string(n) + " open wires");
  }
  const StateVector prepared = input.tensor(bell_state(BellLabel(0, 0)));

  std::vector<int> targets;
  for (int j = 0; j < circuit.num_qubits(); ++j) {
    if (j == circuit.loop_qubit()) {
      targets.push_back(n);
    } else {
      targets.push_back(j < circuit.loop_qubit() ? j : j - 1);
    }
  }
  const StateVector evolved = apply_gate(prepared, circuit.unitary(), targets);

  static const MeasurementBasis bell = MeasurementBasis::bell();
  const int pair[] = {n, n + 1};
  auto m = measure_in_basis(evolved, bell, pair, rng);
  return LoopShot{BellLabel::from_index(static_cast<int>(m.outcome_index)), m.probability,
                  std::move(m.residual)};
}

ComplexMatrix loop_partial_trace(const LoopCircuit& circuit) {
  return partial_trace(loop_last(circuit), 2, TracePosition::Last);
}

ComplexMatrix effective_operator(const LoopCircuit& circuit, BellLabel outcome) {
  const auto& u = circuit.unitary();
  const ComplexVector measured = bell_state(outcome).amplitudes();
  const ComplexVector resource = bell_state(BellLabel(0, 0)).amplitudes();
  const Eigen::Index dim = circuit.open_dim();
  ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    for (Eigen::Index a = 0; a < dim; ++a) {
      std::complex<double> acc{0};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const auto bra = std::conj(measured(2 * i + j));
          if (bra == 0.0) continue;
          for (int q = 0; q < 2; ++q) {
            acc += bra * u(circuit.full_index(b, i), circuit.full_index(a, q)) * resource(2 * q + j);
          }
        }
      }
      e(b, a) = acc;
    }
  }
  return e;
}

ComplexMatrix time_travel_channel(BellLabel outcome) {
  return f_map(bell_state(BellLabel(0, 0))) * g_map(bell_state(outcome));
}

bool verify_loop_identity(const LoopCircuit& circuit, double tol) {
  const ComplexMatrix lhs = effective_operator(circuit, BellLabel(0, 0));
  const ComplexMatrix rhs = 0.5 * loop_partial_trace(circuit);
  return (lhs - rhs).norm() <= tol;
}

PostselectionReport postselection_report(const LoopCircuit& circuit, BellLabel outcome, const StateVector& input) {
  if (input.dim() != circuit.open_dim()) throw std::invalid_argument("report input does not match open wires");
  PostselectionReport report;
  report.outcome_label = outcome;
  report.effective_operator = effective_operator(circuit, outcome);
  report.outcome_probability = (report.effective_operator * input.amplitudes()).squaredNorm();

  // G_{Ψ_l*} = ω·σ_l/√2 for a unit phase ω, giving E_l = (ω/2)·Tr_loop(U·(I ⊗ σ_l)).
  const ComplexMatrix g = g_map(bell_state(outcome));
  const ComplexMatrix s = sigma(outcome);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  s.cwiseAbs().maxCoeff(&r, &c);
  const std::complex<double> omega = g(r, c) * std::numbers::sqrt2 / s(r, c);
  report.scalar_factor = 0.5 * omega;
  return report;
}

ComplexMatrix loop_wire_map(const LoopCircuit& circuit, Eigen::Index open_index) {
  if (open_index < 0 || open_index >= circuit.open_dim()) throw std::out_of_range("open basis index out of range");
  return loop_last(circuit).block(2 * open_index, 2 * open_index, 2, 2);
}

std::vector<ComplexVector> consistent_loop_states(const ComplexMatrix& loop_map, double tol) {
  if (loop_map.rows() != loop_map.cols()) throw std::invalid_argument("loop map must be square");
  const Eigen::Index dim = loop_map.rows();
  const ComplexMatrix shifted = loop_map - ComplexMatrix::Identity(dim, dim);
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
  std::vector<ComplexVector> out;
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (sv(k) <= tol) out.push_back(svd.matrixV().col(k));
  }
  return out;
}

}  // namespace ctcsim
