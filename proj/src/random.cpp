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

#include "ctcsim/random.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>

namespace ctcsim {

double standard_normal(RngStream& rng) {
  // 1 - u lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, RngStream& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      m(i, j) = {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
    }
  }
  return m;
}

ComplexMatrix haar_unitary(Eigen::Index dim, RngStream& rng) {
  const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

StateVector random_state(int num_qubits, RngStream& rng) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return StateVector(ComplexVector(ginibre(dim, 1, rng).col(0))).normalized();
}

}  // namespace ctcsim
