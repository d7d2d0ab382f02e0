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

#include "ctcsim/linalg.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctcsim {

/**
 * Pure state of a qubit register. Amplitude index bit (n-1-q) holds qubit q,
 * i.e. qubit 0 is the most significant bit.
 */
template <typename Real>
class BasicStateVector {
 public:
  using Amplitudes = CVector<Real>;

  BasicStateVector() : amplitudes_(Amplitudes::Ones(1)) {}

  explicit BasicStateVector(Amplitudes amplitudes) : amplitudes_(std::move(amplitudes)) {
    const auto size = static_cast<std::uint64_t>(amplitudes_.size());
    if (size == 0 || !std::has_single_bit(size)) {
      throw std::invalid_argument("state vector length " + std::to_string(size) +
                                  " is not a power of two");
    }
    num_qubits_ = std::countr_zero(size);
  }

  /// Computational basis state |index⟩ on `num_qubits` qubits.
  static BasicStateVector basis(int num_qubits, std::uint64_t index) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (static_cast<Eigen::Index>(index) >= dim) throw std::out_of_range("basis index out of range");
    Amplitudes a = Amplitudes::Zero(dim);
    a(static_cast<Eigen::Index>(index)) = 1;
    return BasicStateVector(std::move(a));
  }

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  std::complex<Real> operator[](Eigen::Index i) const { return amplitudes_(i); }

  Real norm() const { return amplitudes_.norm(); }
  bool is_normalized(Real tol = kDefaultTolerance) const { return std::abs(norm() - Real{1}) <= tol; }

  BasicStateVector normalized() const {
    const Real n = norm();
    if (n == Real{0}) throw std::domain_error("cannot normalize the zero vector");
    return BasicStateVector(amplitudes_ / n);
  }

  /// this ⊗ other, with this as the leading qubits.
  BasicStateVector tensor(const BasicStateVector& other) const {
    return BasicStateVector(tensor_product(amplitudes_, other.amplitudes_));
  }

  std::complex<Real> inner(const BasicStateVector& other) const {
    return amplitudes_.dot(other.amplitudes_);
  }

 private:
  Amplitudes amplitudes_;
  int num_qubits_ = 0;
};

using StateVector = BasicStateVector<double>;

template <typename Real>
bool equal_up_to_phase(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b,
                       double tol = kDefaultTolerance) {
  return equal_up_to_phase(a.amplitudes(), b.amplitudes(), tol);
}

}  // namespace ctcsim
