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
#include "ctcsim/state_vector.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctcsim::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * State descriptions:
 *   bell:xy               Bell state Ψ_xy
 *   comp:b1b2...          computational basis state, qubit 0 first
 *   amp:re,im;re,im;...   explicit amplitudes, normalized on parse
 */
StateVector parse_state_spec(const std::string& spec);

/**
 * Comma-separated stage list: named gates I, X, Y, Z, H, or a bracketed
 * row-major 2x2 matrix "[re,im;re,im;re,im;re,im]".
 */
std::vector<ComplexMatrix> parse_stages(const std::string& spec);

enum class Command { Verify, CnotDemo, Loop, EncryptRun, Decode, Multistage };

struct RunConfig {
  Command command = Command::Verify;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  std::string state_spec;
  std::string output_path;
  double tolerance = 0.0;  // 0: per-check defaults
  // command-specific
  std::string input_path;
  std::string histogram_path;
  std::string stages;
  std::string unitary = "cnot";
  int loop_qubit = 1;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::uint64_t> substitute_at;
  std::string substitute_state;
  std::string expect_state;
  bool inject_wrong_sigma = false;
};

/// Parses argv and runs one subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_cnot_demo(const RunConfig& config, std::ostream& out);
int cmd_loop(const RunConfig& config, std::ostream& out);
int cmd_encrypt_run(const RunConfig& config, std::ostream& out);
int cmd_decode(const RunConfig& config, std::ostream& out);
int cmd_multistage(const RunConfig& config, std::ostream& out);

}  // namespace ctcsim::cli
