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
 * Dense complex linear algebra used by every layer of the simulator.
 *
 * Index conventions:
 *  - An operator matrix maps inputs to outputs: output (upper) indices are
 *    rows, input (lower) indices are columns, so M(out, in).
 *  - A composite index over a tensor product uses the left factor as the
 *    high-order part: (a ⊗ b)(ra * rows_b + rb, ca * cols_b + cb).
 *  - Qubit 0 of a register is the most significant bit of an amplitude index.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctcsim {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

inline constexpr double kDefaultTolerance = 1e-10;

enum class TracePosition { First, Last };

/// Kronecker product with `a` as the high-order factor.
template <typename DerivedA, typename DerivedB>
auto tensor_product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "tensor_product operands must share a scalar type");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Tensor product of several factors, left to right.
template <typename Real>
CMatrix<Real> tensor_product(std::span<const CMatrix<Real>> factors) {
  CMatrix<Real> out = CMatrix<Real>::Identity(1, 1);
  for (const auto& f : factors) out = tensor_product(out, f);
  return out;
}

template <typename Derived>
auto dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint().eval();
}

/**
 * Contracts the input/output index pair of one tensor factor of a square
 * operator: for position Last, out(b, a) = Σ_p u(b·d + p, a·d + p); for
 * position First, out(b, a) = Σ_p u(p·m + b, p·m + a), where d is the traced
 * dimension and m = dim(u) / d.
 *
 * Other positions are reached by conjugating `u` with a permutation operator
 * (see qubit_permutation) before tracing.
 */
template <typename Derived>
auto partial_trace(const Eigen::MatrixBase<Derived>& u, Eigen::Index traced_dim,
                   TracePosition position) {
  using Scalar = typename Derived::Scalar;
  if (u.rows() != u.cols()) throw std::invalid_argument("partial_trace: operator is not square");
  if (traced_dim <= 0 || u.rows() % traced_dim != 0) {
    throw std::invalid_argument("partial_trace: traced dimension " + std::to_string(traced_dim) +
                                " does not divide operator dimension " +
                                std::to_string(u.rows()));
  }
  const Eigen::Index kept = u.rows() / traced_dim;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(kept, kept);
  for (Eigen::Index b = 0; b < kept; ++b) {
    for (Eigen::Index a = 0; a < kept; ++a) {
      Scalar acc{0};
      for (Eigen::Index p = 0; p < traced_dim; ++p) {
        acc += position == TracePosition::Last ? u(b * traced_dim + p, a * traced_dim + p)
                                               : u(p * kept + b, p * kept + a);
      }
      out(b, a) = acc;
    }
  }
  return out;
}

/**
 * True iff some unit-modulus c gives ‖a − c·b‖_F ≤ tol. The phase is taken
 * from the entry where |b| is largest. Two zero inputs compare equal; a zero
 * input against a non-zero one does not.
 */
template <typename DerivedA, typename DerivedB>
bool equal_up_to_phase(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                       double tol = kDefaultTolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double na = a.norm();
  const double nb = b.norm();
  if (na <= tol && nb <= tol) return true;
  if (na <= tol || nb <= tol) return false;

  Eigen::Index r = 0;
  Eigen::Index c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const auto ratio = a(r, c) / b(r, c);
  if (std::abs(ratio) == 0.0) return false;
  const auto phase = ratio / std::abs(ratio);
  return (a - phase * b).norm() <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kDefaultTolerance) {
  if (m.rows() != m.cols()) return false;
  const auto n = m.rows();
  return (m.adjoint() * m - Derived::PlainObject::Identity(n, n)).norm() <= tol;
}

/**
 * Permutation operator on `num_qubits` qubits sending input qubit `order[j]`
 * to output position j: P |q_0 … q_{n-1}⟩ = |q_{order[0]} … q_{order[n-1]}⟩.
 */
template <typename Real = double>
CMatrix<Real> qubit_permutation(std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<bool> seen(n, false);
  for (int q : order) {
    if (q < 0 || q >= n || seen[q]) throw std::invalid_argument("qubit_permutation: not a permutation");
    seen[q] = true;
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix<Real> p = CMatrix<Real>::Zero(dim, dim);
  for (Eigen::Index in = 0; in < dim; ++in) {
    Eigen::Index out = 0;
    for (int j = 0; j < n; ++j) {
      const auto bit = (in >> (n - 1 - order[j])) & 1;
      out |= bit << (n - 1 - j);
    }
    p(out, in) = 1;
  }
  return p;
}

}  // namespace ctcsim
