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

#include "cli.hpp"

#include "ctcsim/loop.hpp"
#include "ctcsim/protocols.hpp"
#include "ctcsim/quantum.hpp"
#include "ctcsim/random.hpp"
#include "ctcsim/records.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace ctcsim::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kExactTolerance = 1e-12;
constexpr double kLoopTolerance = 1e-10;
constexpr double kSigmas = 5.0;
constexpr int kRandomLoopCount = 20;

double tolerance_or(const RunConfig& config, double fallback) {
  return config.tolerance > 0.0 ? config.tolerance : fallback;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  return f;
}

void write_histogram_file(const std::string& path, const Histogram& h) {
  if (path.empty()) return;
  auto f = open_output(path);
  write_histogram_csv(f, h);
}

void print_bins(std::ostream& out, const std::vector<BinCheck>& bins) {
  for (const auto& b : bins) {
    out << "  " << b.label << "  observed " << fmt(b.observed) << "  expected " << fmt(b.expected) << "  bound "
        << fmt(b.bound) << (b.pass ? "  ok" : "  FAIL") << '\n';
  }
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// --- verify -----------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// σ with σ_10 and σ_11 exchanged; a deliberately wrong convention.
ComplexMatrix wrong_sigma(BellLabel l) {
  if (l == BellLabel(1, 0)) return sigma(BellLabel(1, 1));
  if (l == BellLabel(1, 1)) return sigma(BellLabel(1, 0));
  return sigma(l);
}

/// Distance of a from the nearest unit-phase multiple of b.
double phase_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.norm();
  const auto ratio = a(r, c) / b(r, c);
  if (std::abs(ratio) == 0.0) return a.norm() + b.norm();
  return (a - ratio / std::abs(ratio) * b).norm();
}

std::vector<CheckResult> run_verification(const RunConfig& config) {
  const SigmaMap sigma_map = config.inject_wrong_sigma ? SigmaMap(wrong_sigma) : SigmaMap(sigma);
  const double exact_tol = tolerance_or(config, kExactTolerance);
  const double loop_tol = tolerance_or(config, kLoopTolerance);
  const BellLabel phi00(0, 0);
  std::vector<CheckResult> checks;

  {
    const ComplexMatrix fg = f_map(bell_state(phi00)) * g_map(bell_state(phi00));
    const double err = (fg - 0.5 * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
    checks.push_back({"duality_identity", err <= exact_tol, err, exact_tol, "F_Psi00 . G_Psi00* = I/2"});
  }
  {
    double worst = 0.0;
    for (auto l : all_bell_labels()) {
      worst = std::max(worst, phase_distance(g_map(bell_state(l)), g_map(bell_state(phi00)) * sigma_map(l)));
    }
    checks.push_back({"sigma_corrections", worst <= exact_tol, worst, exact_tol,
                      "G_Psi_l* = G_Psi00* . sigma_l up to phase"});
  }
  {
    double worst = 0.0;
    for (auto l : all_bell_labels()) {
      worst = std::max(worst, phase_distance(time_travel_channel(l), 0.5 * sigma_map(l)));
    }
    const ComplexMatrix shift = time_travel_channel(BellLabel(1, 0));
    ComplexMatrix expected(2, 2);
    expected << 0, 0.5, 0.5, 0;
    worst = std::max(worst, (shift - expected).cwiseAbs().maxCoeff());
    checks.push_back({"time_travel_channels", worst <= exact_tol, worst, exact_tol,
                      "F_Psi00 . G_Psi_l* = sigma_l/2 up to phase; Psi10: |x> -> |x+1>/2"});
  }

  auto loop_error = [](const LoopCircuit& c) {
    return (effective_operator(c, BellLabel(0, 0)) - 0.5 * loop_partial_trace(c)).norm();
  };
  {
    const double e = loop_error(LoopCircuit::cnot());
    checks.push_back({"loop_identity_cnot", e <= loop_tol, e, loop_tol, "E_00(CNOT) = Tr_loop(CNOT)/2"});
  }
  {
    const double e = loop_error(LoopCircuit::swap());
    checks.push_back({"loop_identity_swap", e <= loop_tol, e, loop_tol, "E_00(SWAP) = I/2"});
  }
  for (int qubits : {2, 3}) {
    double worst = 0.0;
    for (int i = 0; i < kRandomLoopCount; ++i) {
      RngStream rng(config.seed, static_cast<std::uint64_t>(100 * qubits + i));
      const LoopCircuit c(haar_unitary(Eigen::Index{1} << qubits, rng), i % qubits);
      worst = std::max(worst, loop_error(c));
    }
    checks.push_back({"loop_identity_random_" + std::to_string(qubits) + "q", worst <= loop_tol, worst, loop_tol,
                      std::to_string(kRandomLoopCount) + " Haar-random unitaries"});
  }

  {
    CheckResult r{"relabel_table", false, 0.0, exact_tol, ""};
    try {
      const RelabelTable table = build_relabel_table(sigma_map, exact_tol);
      // Decode implied by the teleported key action alone: (G_a ⊗ G_b)† Ψ_t ∝ Ψ_decoded.
      int mismatches = 0;
      for (auto ka : all_bell_labels()) {
        for (auto kb : all_bell_labels()) {
          const ComplexMatrix action = 2.0 * tensor_product(g_map(bell_state(ka)), g_map(bell_state(kb)));
          for (auto t : all_bell_labels()) {
            const auto physical = identify_bell_state(action.adjoint() * bell_state(t).amplitudes(), exact_tol);
            if (!physical || *physical != table.lookup(ka, kb, t)) ++mismatches;
          }
        }
      }
      const bool bijective = table.is_bijective_per_key();
      r.pass = bijective && mismatches == 0;
      r.max_error = mismatches;
      r.detail = std::to_string(mismatches) + " of 64 entries disagree with the key action" +
                 (bijective ? "" : "; not bijective");
    } catch (const RelabelError& e) {
      r.detail = e.what();
      r.max_error = 64;
    }
    checks.push_back(r);
  }
  return checks;
}

// --- shared helpers ------------------------------------------------------------

StateVector one_qubit_input(const RunConfig& config, const std::string& fallback) {
  if (config.alpha || config.beta) {
    if (!config.alpha || !config.beta) throw UsageError("--alpha and --beta must be given together");
    const double norm2 = *config.alpha * *config.alpha + *config.beta * *config.beta;
    if (std::abs(norm2 - 1.0) > 1e-10) throw UsageError("alpha^2 + beta^2 must equal 1");
    ComplexVector v(2);
    v << *config.alpha, *config.beta;
    return StateVector(v);
  }
  const StateVector s = parse_state_spec(config.state_spec.empty() ? fallback : config.state_spec);
  if (s.num_qubits() != 1) throw UsageError("state must be a single qubit");
  return s;
}

void require_qubits(const StateVector& s, int n, const std::string& what) {
  if (s.num_qubits() != n) {
    throw UsageError(what + " must have " + std::to_string(n) + " qubit(s), got " + std::to_string(s.num_qubits()));
  }
}

std::vector<std::string> label_strings() {
  std::vector<std::string> v;
  for (auto l : all_bell_labels()) v.push_back(l.str());
  return v;
}

struct LoopRun {
  Histogram sampled;
  Histogram exact;
  std::uint64_t residual_mismatches = 0;
};

/// Shots of simulate_loop checked against ‖E_l ψ‖² and E_l ψ / ‖E_l ψ‖.
LoopRun sample_loop(const LoopCircuit& circuit, const StateVector& input, const RunConfig& config) {
  std::array<ComplexVector, 4> images;
  std::vector<double> exact;
  for (auto l : all_bell_labels()) {
    images[static_cast<std::size_t>(l.index())] = effective_operator(circuit, l) * input.amplitudes();
    exact.push_back(images[static_cast<std::size_t>(l.index())].squaredNorm());
  }
  std::vector<std::uint64_t> counts(4, 0);
  LoopRun run;
  const RngStream master(config.seed, 0);
  const double tol = tolerance_or(config, kLoopTolerance);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    RngStream rng = master.derive(t);
    const LoopShot shot = simulate_loop(circuit, input, rng);
    const auto k = static_cast<std::size_t>(shot.outcome.index());
    ++counts[k];
    const StateVector expected(images[k] / images[k].norm());
    if (!equal_up_to_phase(shot.residual, expected, tol)) ++run.residual_mismatches;
  }
  run.sampled = Histogram::from_counts(label_strings(), std::move(counts));
  run.exact = Histogram::exact(label_strings(), std::move(exact));
  return run;
}

struct SegmentCheck {
  std::string name;
  Histogram decoded;
  Histogram oracle;
  std::vector<BinCheck> bins;
  double tv = 0.0;
  bool pass = false;
};

SegmentCheck check_segment(const std::string& name, std::span<const TrialRecord> records, const StateVector& state,
                           const RelabelTable& table) {
  SegmentCheck s;
  s.name = name;
  s.decoded = decode_trials(records, table).histogram;
  s.oracle = bell_distribution(state);
  s.bins = binomial_check(s.decoded, s.oracle, kSigmas);
  s.tv = total_variation(s.decoded, s.oracle);
  s.pass = all_pass(s.bins);
  return s;
}

void print_segment(std::ostream& out, const SegmentCheck& s) {
  out << s.name << ": decoded vs exact Bell distribution, TV " << fmt(s.tv) << "  " << verdict(s.pass) << '\n';
  print_bins(out, s.bins);
}

void print_marginal(std::ostream& out, const std::string& name, const MarginalCheck& m) {
  out << name << ": TV to uniform " << fmt(m.tv_to_uniform) << "  " << verdict(m.uniform_within_bounds) << '\n';
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto checks = run_verification(config);
  bool ok = true;
  json report;
  report["checks"] = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  error " << fmt(c.max_error) << "  tol " << fmt(c.tolerance)
        << "  (" << c.detail << ")\n";
    report["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"max_error", c.max_error}, {"tolerance", c.tolerance}, {"detail", c.detail}});
  }
  report["pass"] = ok;
  if (!config.output_path.empty()) {
    auto f = open_output(config.output_path);
    f << report.dump(2) << '\n';
  }
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kPass : kVerificationFailure;
}

int cmd_cnot_demo(const RunConfig& config, std::ostream& out) {
  const StateVector input = one_qubit_input(config, "amp:0.6,0;0.8,0");
  const LoopRun run = sample_loop(LoopCircuit::cnot(), input, config);
  const auto bins = binomial_check(run.sampled, run.exact, kSigmas);
  const bool never = run.sampled.counts[1] == 0 && run.sampled.counts[3] == 0;
  const bool ok = all_pass(bins) && never && run.residual_mismatches == 0;

  out << "CNOT loop, " << config.trials << " shots, seed " << config.seed << '\n';
  out << "input amplitudes (" << fmt(std::abs(input[0])) << ", " << fmt(std::abs(input[1])) << ")\n";
  print_bins(out, bins);
  out << "Psi01/Psi11 count: " << run.sampled.counts[1] + run.sampled.counts[3] << "  " << verdict(never) << '\n';
  out << "residual |0> with Psi00, |1> with Psi10: " << run.residual_mismatches << " mismatches  "
      << verdict(run.residual_mismatches == 0) << '\n';
  out << "TV to exact: " << fmt(total_variation(run.sampled, run.exact)) << '\n';
  write_histogram_file(config.output_path, run.sampled);
  out << (ok ? "cnot-demo PASS" : "cnot-demo FAIL") << '\n';
  return ok ? kPass : kVerificationFailure;
}

int cmd_loop(const RunConfig& config, std::ostream& out) {
  ComplexMatrix u;
  if (config.unitary == "cnot") {
    u = gates::cnot();
  } else if (config.unitary == "swap") {
    u = gates::swap();
  } else if (config.unitary == "random2" || config.unitary == "random3") {
    RngStream rng(config.seed, 0xC0FFEE);
    u = haar_unitary(config.unitary == "random2" ? 4 : 8, rng);
  } else {
    throw UsageError("unknown --unitary '" + config.unitary + "' (cnot, swap, random2, random3)");
  }
  const LoopCircuit circuit(u, config.loop_qubit);
  const StateVector input = config.state_spec.empty()
                                ? StateVector::basis(circuit.num_open_qubits(), 0)
                                : parse_state_spec(config.state_spec);
  require_qubits(input, circuit.num_open_qubits(), "loop input state");

  const bool identity = verify_loop_identity(circuit, tolerance_or(config, kLoopTolerance));
  const LoopRun run = sample_loop(circuit, input, config);
  const auto bins = binomial_check(run.sampled, run.exact, kSigmas);
  const bool ok = identity && all_pass(bins) && run.residual_mismatches == 0;

  out << "loop " << config.unitary << " (loop qubit " << config.loop_qubit << "), " << config.trials << " shots\n";
  out << "E_00 = Tr_loop(U)/2: " << verdict(identity) << '\n';
  print_bins(out, bins);
  out << "residual = E_l psi / |E_l psi|: " << run.residual_mismatches << " mismatches\n";
  write_histogram_file(config.output_path, run.sampled);
  out << (ok ? "loop PASS" : "loop FAIL") << '\n';
  return ok ? kPass : kVerificationFailure;
}

int cmd_encrypt_run(const RunConfig& config, std::ostream& out) {
  const StateVector phi = parse_state_spec(config.state_spec.empty() ? "bell:00" : config.state_spec);
  require_qubits(phi, 2, "--state");
  std::optional<Substitution> substitution;
  if (config.substitute_at || !config.substitute_state.empty()) {
    if (!config.substitute_at || config.substitute_state.empty()) {
      throw UsageError("--substitute-at and --substitute-state must be given together");
    }
    if (*config.substitute_at >= config.trials) throw UsageError("--substitute-at must be below --trials");
    StateVector replacement = parse_state_spec(config.substitute_state);
    require_qubits(replacement, 2, "--substitute-state");
    substitution = Substitution{*config.substitute_at, std::move(replacement)};
  }

  const auto records = run_encrypted_measurement(phi, config.trials, RngStream(config.seed, 0), substitution);
  if (!config.output_path.empty()) {
    auto f = open_output(config.output_path);
    write_records(f, records);
  }
  const std::string hist_path =
      !config.histogram_path.empty() ? config.histogram_path
                                     : (config.output_path.empty() ? "" : config.output_path + ".today.csv");
  write_histogram_file(hist_path, today_histogram(records));

  const CiphertextReport cipher = ciphertext_uselessness_check(records, kSigmas);
  const RelabelTable table = build_relabel_table();
  const std::span<const TrialRecord> all(records);
  std::vector<SegmentCheck> segments;
  if (substitution) {
    const auto cut = static_cast<std::size_t>(substitution->from_trial);
    if (cut > 0) segments.push_back(check_segment("before substitution", all.first(cut), phi, table));
    segments.push_back(check_segment("after substitution", all.subspan(cut), substitution->state, table));
  } else {
    segments.push_back(check_segment("all trials", all, phi, table));
  }

  out << "encrypted measurement, " << config.trials << " trials, seed " << config.seed << '\n';
  print_marginal(out, "ciphertext (today)", cipher.today);
  print_marginal(out, "key_a", cipher.key_a);
  print_marginal(out, "key_b", cipher.key_b);
  bool ok = cipher.all_uniform();
  for (const auto& s : segments) {
    print_segment(out, s);
    ok = ok && s.pass;
  }
  out << (ok ? "encrypt-run PASS" : "encrypt-run FAIL") << '\n';
  return ok ? kPass : kVerificationFailure;
}

int cmd_decode(const RunConfig& config, std::ostream& out) {
  if (config.input_path.empty()) throw UsageError("decode needs --in <records.jsonl>");
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + config.input_path + "'");
  std::vector<TrialRecord> records;
  try {
    records = read_records(in);
  } catch (const RecordFormatError& e) {
    throw UsageError(config.input_path + ": " + e.what());
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const TrialRecord& a, const TrialRecord& b) { return a.trial_id < b.trial_id; });

  const DecodeResult decoded = decode_trials(records, build_relabel_table());
  if (!config.output_path.empty()) {
    auto f = open_output(config.output_path);
    write_records(f, decoded.records);
  }
  const std::string hist_path =
      !config.histogram_path.empty() ? config.histogram_path
                                     : (config.output_path.empty() ? "" : config.output_path + ".decoded.csv");
  write_histogram_file(hist_path, decoded.histogram);

  out << "decoded " << decoded.records.size() << " records\n";
  for (std::size_t i = 0; i < decoded.histogram.size(); ++i) {
    out << "  " << decoded.histogram.labels[i] << "  " << decoded.histogram.counts[i] << "  "
        << fmt(decoded.histogram.probabilities[i]) << '\n';
  }
  if (config.expect_state.empty()) return kPass;

  const StateVector expected = parse_state_spec(config.expect_state);
  require_qubits(expected, 2, "--expect");
  const auto bins = binomial_check(decoded.histogram, bell_distribution(expected), kSigmas);
  const bool ok = all_pass(bins);
  out << "against expected state, TV " << fmt(total_variation(decoded.histogram, bell_distribution(expected)))
      << "  " << verdict(ok) << '\n';
  print_bins(out, bins);
  return ok ? kPass : kVerificationFailure;
}

int cmd_multistage(const RunConfig& config, std::ostream& out) {
  const auto stages = parse_stages(config.stages);
  const StateVector input = one_qubit_input(config, "comp:0");
  const MultistageReport report = run_multistage(stages, input, config.trials, RngStream(config.seed, 0));

  ComplexVector target = input.amplitudes();
  for (const auto& u : stages) target = u * target;
  const double tol = tolerance_or(config, kLoopTolerance);
  std::uint64_t mismatches = 0;
  for (const auto& s : report.conditional_final_states) {
    if (!equal_up_to_phase(s.amplitudes(), target, tol)) ++mismatches;
  }

  const double p = std::pow(0.25, static_cast<double>(stages.size()));
  const Histogram sampled =
      Histogram::from_counts({"success", "failure"}, {report.success_count, report.trials - report.success_count});
  const auto bins = binomial_check(sampled, Histogram::exact({"success", "failure"}, {p, 1.0 - p}), kSigmas);
  const bool ok = all_pass(bins) && mismatches == 0;

  out << "multistage, " << stages.size() << " stage(s), " << report.trials << " trials, seed " << config.seed << '\n';
  out << "success rate " << fmt(report.success_rate()) << " (expected " << fmt(p) << ")  " << verdict(all_pass(bins))
      << '\n';
  out << "conditional outputs != U_k...U_1 input: " << mismatches << " of " << report.success_count << "  "
      << verdict(mismatches == 0) << '\n';
  write_histogram_file(config.output_path, sampled);
  out << (ok ? "multistage PASS" : "multistage FAIL") << '\n';
  return ok ? kPass : kVerificationFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Post-selected teleportation loops and encrypted future measurement"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&config](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Master RNG seed");
    sub->add_option("--trials", config.trials, "Number of trials/shots")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
    sub->add_option("--out", config.output_path, "Output file");
    sub->add_option("--tolerance", config.tolerance, "Numerical tolerance override")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Run the algebraic identity suite");
  common(verify);
  verify->add_flag("--inject-wrong-sigma", config.inject_wrong_sigma, "Negative control: swap sigma_10 and sigma_11");

  auto* cnot = app.add_subcommand("cnot-demo", "Teleportation loop through a CNOT target");
  common(cnot);
  cnot->add_option("--state", config.state_spec, "Control qubit state");
  cnot->add_option("--alpha", config.alpha, "Amplitude of |0> (real)");
  cnot->add_option("--beta", config.beta, "Amplitude of |1> (real)");

  auto* loop = app.add_subcommand("loop", "Teleportation loop through a chosen unitary");
  common(loop);
  loop->add_option("--unitary", config.unitary, "cnot, swap, random2 or random3");
  loop->add_option("--loop-qubit", config.loop_qubit, "Qubit of U fed back into itself");
  loop->add_option("--state", config.state_spec, "State of the open wires");

  auto* encrypt = app.add_subcommand("encrypt-run", "Encrypted joint measurement of a future state");
  common(encrypt);
  encrypt->add_option("--state", config.state_spec, "Two-qubit state created tomorrow");
  encrypt->add_option("--hist", config.histogram_path, "Ciphertext histogram CSV");
  encrypt->add_option("--substitute-at", config.substitute_at, "First trial using the substitute state");
  encrypt->add_option("--substitute-state", config.substitute_state, "Substitute two-qubit state");

  auto* decode = app.add_subcommand("decode", "Decode ciphertext records with their keys");
  decode->add_option("--in", config.input_path, "Trial records (JSON Lines)")->required();
  decode->add_option("--out", config.output_path, "Decoded records output");
  decode->add_option("--hist", config.histogram_path, "Decoded histogram CSV");
  decode->add_option("--expect", config.expect_state, "Compare against this state's Bell distribution");

  auto* multistage = app.add_subcommand("multistage", "Apply a unitary chain today by post-selection");
  common(multistage);
  multistage->add_option("--stages", config.stages, "Comma-separated I,X,Y,Z,H or [re,im;re,im;re,im;re,im]")
      ->required();
  multistage->add_option("--state", config.state_spec, "Input qubit state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (verify->parsed()) config.command = Command::Verify;
    if (cnot->parsed()) config.command = Command::CnotDemo;
    if (loop->parsed()) config.command = Command::Loop;
    if (encrypt->parsed()) config.command = Command::EncryptRun;
    if (decode->parsed()) config.command = Command::Decode;
    if (multistage->parsed()) config.command = Command::Multistage;
    switch (config.command) {
      case Command::Verify: return cmd_verify(config, out);
      case Command::CnotDemo: return cmd_cnot_demo(config, out);
      case Command::Loop: return cmd_loop(config, out);
      case Command::EncryptRun: return cmd_encrypt_run(config, out);
      case Command::Decode: return cmd_decode(config, out);
      case Command::Multistage: return cmd_multistage(config, out);
    }
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace ctcsim::cli
