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

#include "ctcsim/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ctcsim {

namespace {

using cd = std::complex<double>;

/**
 * Maps (rest, target) index pairs to full register indices, where `target`
 * packs the listed target qubits in order and `rest` packs the remaining
 * qubits in ascending order, both MSB-first.
 */
class QubitSplit {
 public:
  QubitSplit(int num_qubits, std::span<const int> targets)
      : num_targets_(static_cast<int>(targets.size())) {
    std::vector<bool> used(num_qubits, false);
    for (int t : targets) {
      if (t < 0 || t >= num_qubits) {
        throw std::invalid_argument("target qubit " + std::to_string(t) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
      }
      if (used[t]) throw std::invalid_argument("duplicate target qubit " + std::to_string(t));
      used[t] = true;
    }
    std::vector<int> rest;
    for (int q = 0; q < num_qubits; ++q) {
      if (!used[q]) rest.push_back(q);
    }
    const int num_rest = static_cast<int>(rest.size());
    target_dim_ = Eigen::Index{1} << num_targets_;
    rest_dim_ = Eigen::Index{1} << num_rest;
    table_.resize(static_cast<std::size_t>(target_dim_ * rest_dim_));
    for (Eigen::Index r = 0; r < rest_dim_; ++r) {
      Eigen::Index base = 0;
      for (int j = 0; j < num_rest; ++j) {
        base |= ((r >> (num_rest - 1 - j)) & 1) << (num_qubits - 1 - rest[j]);
      }
      for (Eigen::Index t = 0; t < target_dim_; ++t) {
        Eigen::Index full = base;
        for (int j = 0; j < num_targets_; ++j) {
          full |= ((t >> (num_targets_ - 1 - j)) & 1) << (num_qubits - 1 - targets[j]);
        }
        table_[static_cast<std::size_t>(r * target_dim_ + t)] = full;
      }
    }
  }

  Eigen::Index target_dim() const { return target_dim_; }
  Eigen::Index rest_dim() const { return rest_dim_; }
  Eigen::Index full(Eigen::Index rest, Eigen::Index target) const {
    return table_[static_cast<std::size_t>(rest * target_dim_ + target)];
  }

 private:
  int num_targets_;
  Eigen::Index target_dim_ = 1;
  Eigen::Index rest_dim_ = 1;
  std::vector<Eigen::Index> table_;
};

ComplexMatrix matrix2(cd a, cd b, cd c, cd d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

void check_split(Eigen::Index size, Eigen::Index dim_h, Eigen::Index dim_k) {
  if (dim_h <= 0 || dim_k <= 0 || dim_h * dim_k != size) {
    throw std::invalid_argument("dimension split " + std::to_string(dim_h) + "x" + std::to_string(dim_k) +
                                " inconsistent with " + std::to_string(size) + " amplitudes");
  }
}

// Probabilities at or below this fraction of the total are treated as exact
// zeros when sampling; they arise only from rounding.
constexpr double kNegligibleProbability = 1e-14;

}  // namespace

BellLabel::BellLabel(int x, int y) : x_(x), y_(y) {
  if ((x != 0 && x != 1) || (y != 0 && y != 1)) {
    throw std::invalid_argument("Bell label bits must be 0 or 1");
  }
}

BellLabel BellLabel::from_index(int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("Bell label index must be in [0, 3]");
  return BellLabel(index >> 1, index & 1);
}

std::string BellLabel::str() const { return std::string{char('0' + x_), char('0' + y_)}; }

std::array<BellLabel, 4> all_bell_labels() {
  return {BellLabel(0, 0), BellLabel(0, 1), BellLabel(1, 0), BellLabel(1, 1)};
}

StateVector bell_state(BellLabel label) {
  const int x = label.x();
  const int y = label.y();
  ComplexVector a = ComplexVector::Zero(4);
  const double s = 1.0 / std::numbers::sqrt2;
  a(2 * x + y) += s;
  a(2 * (1 - x) + (1 - y)) += (y == 0 ? s : -s);
  return StateVector(std::move(a));
}

ComplexMatrix sigma(BellLabel label) {
  switch (label.index()) {
    case 0: return gates::identity();
    case 1: return gates::pauli_y();
    case 2: return gates::pauli_x();
    default: return gates::pauli_z();
  }
}

namespace gates {

ComplexMatrix identity(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() { return matrix2(0, 1, 1, 0); }
ComplexMatrix pauli_y() { return matrix2(0, cd(0, -1), cd(0, 1), 0); }
ComplexMatrix pauli_z() { return matrix2(1, 0, 0, -1); }

ComplexMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return matrix2(s, s, s, -s);
}

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(3, 2) = m(2, 3) = 1;
  return m;
}

ComplexMatrix swap() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(2, 1) = m(1, 2) = m(3, 3) = 1;
  return m;
}

}  // namespace gates

ComplexMatrix f_map(const ComplexVector& phi, Eigen::Index dim_h, Eigen::Index dim_k) {
  check_split(phi.size(), dim_h, dim_k);
  ComplexMatrix m(dim_k, dim_h);
  for (Eigen::Index a = 0; a < dim_h; ++a) {
    for (Eigen::Index b = 0; b < dim_k; ++b) m(b, a) = phi(a * dim_k + b);
  }
  return m;
}

ComplexMatrix f_map(const StateVector& phi, int h_qubits) {
  const Eigen::Index dim_h = Eigen::Index{1} << h_qubits;
  if (h_qubits < 0 || h_qubits > phi.num_qubits()) throw std::invalid_argument("f_map: bad qubit split");
  return f_map(phi.amplitudes(), dim_h, phi.dim() / dim_h);
}

ComplexMatrix g_map(const ComplexVector& psi, Eigen::Index dim_h, Eigen::Index dim_k) {
  return f_map(psi, dim_h, dim_k).conjugate();
}

ComplexMatrix g_map(const StateVector& psi, int h_qubits) { return f_map(psi, h_qubits).conjugate(); }

ComplexVector state_from_f_map(const ComplexMatrix& m) {
  ComplexVector phi(m.size());
  for (Eigen::Index a = 0; a < m.cols(); ++a) {
    for (Eigen::Index b = 0; b < m.rows(); ++b) phi(a * m.rows() + b) = m(b, a);
  }
  return phi;
}

StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate, std::span<const int> targets) {
  const QubitSplit split(state.num_qubits(), targets);
  if (gate.rows() != split.target_dim() || gate.cols() != split.target_dim()) {
    throw std::invalid_argument("gate dimension " + std::to_string(gate.rows()) + " does not match " +
                                std::to_string(targets.size()) + " target qubits");
  }
  const auto& in = state.amplitudes();
  ComplexVector out(in.size());
  ComplexVector local(split.target_dim());
  for (Eigen::Index r = 0; r < split.rest_dim(); ++r) {
    for (Eigen::Index t = 0; t < split.target_dim(); ++t) local(t) = in(split.full(r, t));
    const ComplexVector mapped = gate * local;
    for (Eigen::Index t = 0; t < split.target_dim(); ++t) out(split.full(r, t)) = mapped(t);
  }
  return StateVector(std::move(out));
}

namespace {

ComplexVector contract_bra(const StateVector& state, const ComplexVector& bra, const QubitSplit& split) {
  if (bra.size() != split.target_dim()) throw std::invalid_argument("contract_bra: bra size mismatch");
  const auto& in = state.amplitudes();
  ComplexVector out = ComplexVector::Zero(split.rest_dim());
  for (Eigen::Index r = 0; r < split.rest_dim(); ++r) {
    cd acc{0};
    for (Eigen::Index t = 0; t < split.target_dim(); ++t) acc += std::conj(bra(t)) * in(split.full(r, t));
    out(r) = acc;
  }
  return out;
}

}  // namespace

ComplexVector contract_bra(const StateVector& state, const StateVector& bra, std::span<const int> targets) {
  return contract_bra(state, bra.amplitudes(), QubitSplit(state.num_qubits(), targets));
}

MeasurementBasis::MeasurementBasis(std::vector<StateVector> elements, std::vector<std::string> labels,
                                   double tol)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.empty()) throw std::invalid_argument("measurement basis is empty");
  if (labels_.size() != elements_.size()) throw std::invalid_argument("one label per basis element required");
  const Eigen::Index dim = elements_.front().dim();
  if (static_cast<Eigen::Index>(elements_.size()) != dim) {
    throw std::invalid_argument("measurement basis is not complete: " + std::to_string(elements_.size()) +
                                " elements for dimension " + std::to_string(dim));
  }
  ComplexMatrix columns(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (elements_[k].dim() != dim) throw std::invalid_argument("basis elements differ in size");
    columns.col(k) = elements_[k].amplitudes();
  }
  const ComplexMatrix gram = columns.adjoint() * columns;
  if ((gram - ComplexMatrix::Identity(dim, dim)).norm() > tol) {
    throw std::invalid_argument("measurement basis is not orthonormal");
  }
}

MeasurementBasis MeasurementBasis::bell() {
  std::vector<StateVector> elements;
  std::vector<std::string> labels;
  for (auto l : all_bell_labels()) {
    elements.push_back(bell_state(l));
    labels.push_back(l.str());
  }
  return MeasurementBasis(std::move(elements), std::move(labels));
}

MeasurementBasis MeasurementBasis::computational(int num_qubits) {
  std::vector<StateVector> elements;
  std::vector<std::string> labels;
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  for (std::uint64_t k = 0; k < dim; ++k) {
    elements.push_back(StateVector::basis(num_qubits, k));
    std::string label;
    for (int j = num_qubits - 1; j >= 0; --j) label.push_back(char('0' + ((k >> j) & 1)));
    labels.push_back(label);
  }
  return MeasurementBasis(std::move(elements), std::move(labels));
}

namespace {

void check_targets(const MeasurementBasis& basis, std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != basis.num_qubits()) {
    throw std::invalid_argument("measurement basis acts on " + std::to_string(basis.num_qubits()) +
                                " qubits but " + std::to_string(targets.size()) + " targets were given");
  }
}

}  // namespace

MeasurementResult measure_in_basis(const StateVector& state, const MeasurementBasis& basis,
                                   std::span<const int> targets, RngStream& rng) {
  check_targets(basis, targets);
  const QubitSplit split(state.num_qubits(), targets);
  std::vector<ComplexVector> components;
  std::vector<double> probs;
  components.reserve(basis.size());
  double total = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    components.push_back(contract_bra(state, basis.element(k).amplitudes(), split));
    probs.push_back(components.back().squaredNorm());
    total += probs.back();
  }
  if (total == 0.0) throw std::domain_error("cannot measure the zero vector");

  const double u = rng.uniform() * total;
  std::size_t chosen = basis.size();
  std::size_t last_possible = 0;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (probs[k] <= kNegligibleProbability * total) continue;
    last_possible = k;
    cumulative += probs[k];
    if (u < cumulative) {
      chosen = k;
      break;
    }
  }
  if (chosen == basis.size()) chosen = last_possible;

  MeasurementResult result;
  result.outcome_index = chosen;
  result.probability = probs[chosen] / total;
  result.residual = StateVector(components[chosen] / std::sqrt(probs[chosen]));

  const auto& b = basis.element(chosen).amplitudes();
  const auto& r = result.residual.amplitudes();
  ComplexVector post(state.dim());
  for (Eigen::Index ri = 0; ri < split.rest_dim(); ++ri) {
    for (Eigen::Index t = 0; t < split.target_dim(); ++t) post(split.full(ri, t)) = b(t) * r(ri);
  }
  result.post_state = StateVector(std::move(post));
  return result;
}

Histogram born_distribution(const StateVector& state, const MeasurementBasis& basis,
                            std::span<const int> targets) {
  check_targets(basis, targets);
  const QubitSplit split(state.num_qubits(), targets);
  std::vector<double> probs;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    probs.push_back(contract_bra(state, basis.element(k).amplitudes(), split).squaredNorm());
  }
  return Histogram::exact(basis.labels(), std::move(probs));
}

}  // namespace ctcsim
