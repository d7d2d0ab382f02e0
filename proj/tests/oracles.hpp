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

// Reference computations for tests. Everything here works from explicit
// index loops over dense amplitudes and does not call the library's
// contraction, gate or measurement code.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline int bit(std::uint64_t index, int qubit, int num_qubits) {
  return static_cast<int>((index >> (num_qubits - 1 - qubit)) & 1);
}

/// Bell state from the closed formula, coefficient of |a b⟩ at 2a + b.
inline Vec bell(int x, int y) {
  Vec v = Vec::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  v(2 * x + y) += s;
  v(2 * ((x + 1) % 2) + (y + 1) % 2) += (y == 0 ? s : -s);
  return v;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Full operator of `gate` on ordered `targets` of an n-qubit register, built entry by entry.
inline Mat embed(const Mat& gate, const std::vector<int>& targets, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const int k = static_cast<int>(targets.size());
  Mat out = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      bool rest_equal = true;
      for (int q = 0; q < n; ++q) {
        bool is_target = false;
        for (int t : targets) is_target = is_target || t == q;
        if (!is_target && bit(row, q, n) != bit(col, q, n)) rest_equal = false;
      }
      if (!rest_equal) continue;
      std::uint64_t gr = 0;
      std::uint64_t gc = 0;
      for (int j = 0; j < k; ++j) {
        gr = (gr << 1) | static_cast<std::uint64_t>(bit(row, targets[j], n));
        gc = (gc << 1) | static_cast<std::uint64_t>(bit(col, targets[j], n));
      }
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          gate(static_cast<Eigen::Index>(gr), static_cast<Eigen::Index>(gc));
    }
  }
  return out;
}

/// Loop-wire channel by dense matrix products:
/// (I_open ⊗ ⟨Ψ_xy|) · (U_{open,A} ⊗ I_B) · (I_open ⊗ |Ψ00⟩), loop wire of U at `loop`.
inline Mat loop_channel(const Mat& u, int loop, int x, int y) {
  const int n_u = static_cast<int>(std::log2(static_cast<double>(u.rows())) + 0.5);
  const int n_open = n_u - 1;
  const int total = n_u + 1;  // open..., A, B
  std::vector<int> targets;
  for (int j = 0; j < n_u; ++j) targets.push_back(j == loop ? n_open : (j < loop ? j : j - 1));
  const Mat big_u = embed(u, targets, total);
  const Eigen::Index open_dim = Eigen::Index{1} << n_open;
  const Mat id = Mat::Identity(open_dim, open_dim);
  const Mat prep = kron(id, Mat(bell(0, 0)));
  const Mat proj = kron(id, Mat(bell(x, y).adjoint()));
  return proj * big_u * prep;
}

/// Tr over qubit `loop` of u, by direct summation.
inline Mat trace_qubit(const Mat& u, int loop) {
  const int n = static_cast<int>(std::log2(static_cast<double>(u.rows())) + 0.5);
  const Eigen::Index open_dim = Eigen::Index{1} << (n - 1);
  auto insert = [&](std::uint64_t open, int b) {
    std::uint64_t full = 0;
    int src = 0;
    for (int q = 0; q < n; ++q) {
      const int v = q == loop ? b : bit(open, src++, n - 1);
      full = (full << 1) | static_cast<std::uint64_t>(v);
    }
    return static_cast<Eigen::Index>(full);
  };
  Mat out = Mat::Zero(open_dim, open_dim);
  for (Eigen::Index r = 0; r < open_dim; ++r)
    for (Eigen::Index c = 0; c < open_dim; ++c)
      for (int p = 0; p < 2; ++p) out(r, c) += u(insert(r, p), insert(c, p));
  return out;
}

/**
 * Exact joint probabilities of the encrypted measurement on the full register
 * (A, B, o1, i1, i2, o2) = Φ ⊗ Ψ00 ⊗ Ψ00, indexed 16·key_a + 4·key_b + today,
 * as |⟨Ψ_ka(A,o1) Ψ_kb(B,o2) Ψ_t(i1,i2) | full⟩|².
 */
inline std::array<double, 64> encrypted_joint(const Vec& phi) {
  const Vec full = kron(kron(Mat(phi), Mat(bell(0, 0))), Mat(bell(0, 0)));
  std::array<double, 64> out{};
  for (int ka = 0; ka < 4; ++ka) {
    for (int kb = 0; kb < 4; ++kb) {
      for (int t = 0; t < 4; ++t) {
        const Vec pa = bell(ka >> 1, ka & 1);
        const Vec pb = bell(kb >> 1, kb & 1);
        const Vec pt = bell(t >> 1, t & 1);
        cd amp = 0;
        for (std::uint64_t i = 0; i < 64; ++i) {
          const int a = bit(i, 0, 6), b = bit(i, 1, 6), o1 = bit(i, 2, 6);
          const int i1 = bit(i, 3, 6), i2 = bit(i, 4, 6), o2 = bit(i, 5, 6);
          amp += std::conj(pa(2 * a + o1)) * std::conj(pb(2 * b + o2)) * std::conj(pt(2 * i1 + i2)) *
                 full(static_cast<Eigen::Index>(i));
        }
        out[static_cast<std::size_t>(16 * ka + 4 * kb + t)] = std::norm(amp);
      }
    }
  }
  return out;
}

/// |⟨Ψ_xy|φ⟩|² for the four labels.
inline std::array<double, 4> bell_probabilities(const Vec& phi) {
  std::array<double, 4> p{};
  for (int l = 0; l < 4; ++l) p[static_cast<std::size_t>(l)] = std::norm(bell(l >> 1, l & 1).dot(phi));
  return p;
}

/**
 * Multistage chain with all outcomes Ψ00: contracts ⟨Ψ00| on (carrier, p_i)
 * stage by stage using explicit amplitude loops. Returns the unnormalized
 * output qubit; its squared norm is the success probability.
 */
inline Vec multistage_success_branch(const std::vector<Mat>& stages, const Vec& input) {
  Vec carrier = input;
  for (const auto& u : stages) {
    // pair (p, q) in Ψ00 with U on q; project (carrier, p) on Ψ00.
    Vec pair = bell(0, 0);
    Vec moved = Vec::Zero(4);
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        for (int q2 = 0; q2 < 2; ++q2) moved(2 * p + q) += u(q, q2) * pair(2 * p + q2);
    const Vec proj = bell(0, 0);
    Vec next = Vec::Zero(2);
    for (int c = 0; c < 2; ++c)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) next(q) += std::conj(proj(2 * c + p)) * carrier(c) * moved(2 * p + q);
    carrier = next;
  }
  return carrier;
}

}  // namespace oracle
