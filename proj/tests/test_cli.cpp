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
#include "ctcsim/quantum.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ctcsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ctcsim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ctcsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(StateSpec, ParsesAllForms) {
  EXPECT_EQ(cli::parse_state_spec("bell:10").amplitudes(), bell_state(BellLabel(1, 0)).amplitudes());
  EXPECT_EQ(cli::parse_state_spec("comp:10").amplitudes(), StateVector::basis(2, 2).amplitudes());
  const StateVector s = cli::parse_state_spec("amp:3,0;0,4");
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s[1].imag(), 0.8, 1e-15);
}

TEST(StateSpec, RejectsMalformed) {
  for (const char* bad : {"", "bell:2", "bell:0", "comp:", "comp:012", "amp:", "amp:1,0;0", "amp:0,0;0,0",
                          "amp:1,0;0,0;1,0", "foo:1", "amp:x,0;1,0"}) {
    EXPECT_THROW(cli::parse_state_spec(bad), cli::UsageError) << bad;
  }
}

TEST(Stages, ParsesNamedAndBracketed) {
  const auto st = cli::parse_stages("H,X,[0.6,0;0,0.8;0,0.8;0.6,0]");
  ASSERT_EQ(st.size(), 3u);
  EXPECT_LE((st[0] - gates::hadamard()).norm(), 1e-15);
  EXPECT_LE((st[1] - gates::pauli_x()).norm(), 1e-15);
  EXPECT_EQ(st[2](1, 0), std::complex<double>(0, 0.8));
  EXPECT_TRUE(cli::parse_stages("").empty());
  EXPECT_THROW(cli::parse_stages("Q"), cli::UsageError);
  EXPECT_THROW(cli::parse_stages("[1,0;1,0;0,0;1,0]"), cli::UsageError);
  EXPECT_THROW(cli::parse_stages("[1,0;0,0]"), cli::UsageError);
}

TEST(Cli, VerifyPassesAndNegativeControlFails) {
  const auto good = run_cli({"verify"});
  EXPECT_EQ(good.code, cli::kPass) << good.out << good.err;
  const auto bad = run_cli({"verify", "--inject-wrong-sigma"});
  EXPECT_EQ(bad.code, cli::kVerificationFailure) << bad.out;
  EXPECT_NE(bad.out.find("relabel_table"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"nonsense"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"cnot-demo", "--state", "bell:7"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"cnot-demo", "--trials", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"encrypt-run", "--state", "comp:1"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"decode"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"decode", "--in", "/nonexistent/ctcsim/records.jsonl"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"multistage", "--stages", "Q", "--state", "comp:0"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"loop", "--unitary", "cnot", "--loop-qubit", "5"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kPass);
}

TEST_F(CliFiles, CnotDemoPassesAndWritesCsv) {
  const auto r = run_cli({"cnot-demo", "--alpha", "0.6", "--beta", "0.8", "--trials", "20000", "--seed", "3", "--out",
                          path("cnot.csv")});
  EXPECT_EQ(r.code, cli::kPass) << r.out;
  const std::string csv = slurp(path("cnot.csv"));
  EXPECT_EQ(csv.rfind("label,count,probability\n00,", 0), 0u) << csv;
  EXPECT_NE(csv.find("\n01,0,0\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("\n11,0,0\n"), std::string::npos) << csv;
}

TEST_F(CliFiles, EncryptRunIsByteIdenticalForSameSeed) {
  const std::vector<std::string> base{"encrypt-run", "--state", "amp:1,0;1,0;0,0;0,0", "--trials", "3000", "--seed",
                                      "11"};
  auto a = base;
  a.insert(a.end(), {"--out", path("a.jsonl")});
  auto b = base;
  b.insert(b.end(), {"--out", path("b.jsonl")});
  EXPECT_EQ(run_cli(a).code, cli::kPass);
  EXPECT_EQ(run_cli(b).code, cli::kPass);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
  EXPECT_EQ(slurp(path("a.jsonl.today.csv")), slurp(path("b.jsonl.today.csv")));
  EXPECT_FALSE(slurp(path("a.jsonl")).empty());

  auto c = base;
  c[6] = "12";
  c.insert(c.end(), {"--out", path("c.jsonl")});
  EXPECT_EQ(run_cli(c).code, cli::kPass);
  EXPECT_NE(slurp(path("a.jsonl")), slurp(path("c.jsonl")));
}

TEST_F(CliFiles, DecodeIsDeterministicAndChecksExpectation) {
  ASSERT_EQ(run_cli({"encrypt-run", "--state", "comp:00", "--trials", "4000", "--seed", "5", "--out",
                     path("r.jsonl")})
                .code,
            cli::kPass);
  const auto d1 = run_cli({"decode", "--in", path("r.jsonl"), "--out", path("d1.jsonl"), "--expect", "comp:00"});
  const auto d2 = run_cli({"decode", "--in", path("r.jsonl"), "--out", path("d2.jsonl"), "--expect", "comp:00"});
  EXPECT_EQ(d1.code, cli::kPass) << d1.out;
  EXPECT_EQ(d2.code, cli::kPass);
  EXPECT_EQ(slurp(path("d1.jsonl")), slurp(path("d2.jsonl")));
  EXPECT_EQ(slurp(path("d1.jsonl.decoded.csv")), slurp(path("d2.jsonl.decoded.csv")));
  EXPECT_EQ(slurp(path("d1.jsonl")).find("null"), std::string::npos);

  // |00⟩ decodes to Ψ00/Ψ11 only; claiming Ψ01 must fail
  const auto wrong = run_cli({"decode", "--in", path("r.jsonl"), "--out", path("d3.jsonl"), "--expect", "bell:01"});
  EXPECT_EQ(wrong.code, cli::kVerificationFailure) << wrong.out;
}

TEST_F(CliFiles, DecodeRejectsMalformedRecords) {
  std::ofstream(path("bad.jsonl")) << "{\"trial_id\":0}\n";
  const auto r = run_cli({"decode", "--in", path("bad.jsonl"), "--out", path("o.jsonl")});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
}

TEST_F(CliFiles, EncryptRunWithSubstitution) {
  const auto r = run_cli({"encrypt-run", "--state", "bell:00", "--trials", "4000", "--seed", "9", "--substitute-at",
                          "2000", "--substitute-state", "bell:11", "--out", path("s.jsonl")});
  EXPECT_EQ(r.code, cli::kPass) << r.out;
}

TEST(Cli, MultistageAndLoop) {
  const auto m = run_cli({"multistage", "--stages", "H,X", "--state", "comp:0", "--trials", "8000", "--seed", "2"});
  EXPECT_EQ(m.code, cli::kPass) << m.out;
  const auto l = run_cli({"loop", "--unitary", "swap", "--state", "amp:0.6,0;0,0.8", "--trials", "4000"});
  EXPECT_EQ(l.code, cli::kPass) << l.out;
  const auto l3 = run_cli({"loop", "--unitary", "random3", "--loop-qubit", "0", "--state", "comp:01", "--trials",
                           "4000"});
  EXPECT_EQ(l3.code, cli::kPass) << l3.out;
}
