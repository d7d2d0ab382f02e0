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
#include "ctcsim/rng.hpp"
#include "ctcsim/state_vector.hpp"

namespace ctcsim {

/// Standard normal sample (Box-Muller on RngStream::uniform, platform stable).
double standard_normal(RngStream& rng);

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, RngStream& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with R's diagonal phases removed.
ComplexMatrix haar_unitary(Eigen::Index dim, RngStream& rng);

/// Uniformly random normalized state on `num_qubits` qubits.
StateVector random_state(int num_qubits, RngStream& rng);

}  // namespace ctcsim
