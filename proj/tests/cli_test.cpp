// Copyright 2026 The lucheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "gtest/gtest.h"

#include "lucheck/state_file.hpp"
#include "test_util.hpp"

using namespace lucheck;
using namespace lucheck::testing;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lucheck_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string write_state(const std::string& name, const NQubitState& s) {
    return write(name, emit_state_file(state_file_from_state(s)));
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "lucheck");
    out_.str("");
    err_.str("");
    return cli::run_command(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, check_same_file_is_equivalent) {
  Rng rng(193);
  const auto f = write_state("a.json", random_state(2, 2, rng));
  EXPECT_EQ(run({"check", f, f}), 0);
  EXPECT_NE(out_.str().find("verdict: Equivalent"), std::string::npos);
}

TEST_F(CliTest, check_schmidt_pair_exits_one) {
  const auto a = write_state("a.json", schmidt_state(std::numbers::pi / 8));
  const auto b = write_state("b.json", schmidt_state(std::numbers::pi / 6));
  EXPECT_EQ(run({"check", a, b, "--json"}), 1);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["verdict"], "NotEquivalent");
  EXPECT_EQ(j["reason"], "by_marginal_spectra");
  EXPECT_EQ(j["inputs"][0]["n"], 2);
}

TEST_F(CliTest, check_ghz_pair_exits_two) {
  Rng rng(197);
  const auto ghz = ghz_state(3);
  const auto a = write_state("a.json", ghz);
  const auto b = write_state("b.json", apply_local_unitaries(ghz, haar_local_unitaries(3, rng)));
  EXPECT_EQ(run({"check", a, b}), 2);
  EXPECT_NE(out_.str().find("maximally mixed qubits: 0 1 2"), std::string::npos);
}

TEST_F(CliTest, check_with_fallback_finds_witness) {
  Rng rng(199);
  const auto a = write_state("a.json", bell_state());
  const auto b =
      write_state("b.json", apply_local_unitaries(bell_state(), haar_local_unitaries(2, rng)));
  EXPECT_EQ(run({"check", a, b, "--fallback", "--json"}), 0);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_LE(j["witness"]["residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["diagnostics"]["path"], "fallback");
}

TEST_F(CliTest, bad_inputs_exit_three) {
  const auto bad = write("bad.json", R"({"n": 1, "kind": "pure", "amplitudes": [[0, 0], [0, 0]]})");
  const auto good = write_state("good.json", bell_state());
  EXPECT_EQ(run({"check", bad, good}), cli::kExitUsage);
  EXPECT_NE(err_.str().find("validation"), std::string::npos);
  EXPECT_EQ(run({"check", good, (dir_ / "missing.json").string()}), cli::kExitUsage);
  EXPECT_EQ(run({"check", good}), cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
  const auto three = write_state("three.json", ghz_state(3));
  EXPECT_EQ(run({"check", good, three}), cli::kExitUsage);
}

TEST_F(CliTest, gen_is_reproducible_and_valid) {
  EXPECT_EQ(run({"gen", "--n", "3", "--kind", "mixed", "--rank", "2", "--seed", "11"}), 0);
  const std::string first = out_.str();
  EXPECT_EQ(run({"gen", "--n", "3", "--kind", "mixed", "--rank", "2", "--seed", "11"}), 0);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(parse_state_file(first).num_qubits(), 3);

  const auto path = (dir_ / "pure.json").string();
  EXPECT_EQ(run({"gen", "--n", "2", "--kind", "pure", "--seed", "3", "--min-bloch", "0.2",
                 "--label", "p", "--out", path}),
            0);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto file = parse_state_file_text(text);
  EXPECT_EQ(file.kind, StateFile::Kind::kPure);
  EXPECT_EQ(file.label, "p");
  EXPECT_EQ(run({"gen", "--n", "2", "--kind", "dense", "--seed", "3"}), cli::kExitUsage);
}

TEST_F(CliTest, pauli_and_trace_form) {
  const auto f = write_state("bell.json", bell_state());
  EXPECT_EQ(run({"pauli", f}), 0);
  EXPECT_NE(out_.str().find("YY -0.25"), std::string::npos);
  EXPECT_EQ(run({"pauli", f, "--json"}), 0);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["terms"].size(), 4u);

  EXPECT_EQ(run({"trace-form", f}), 0);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["frames"].size(), 2u);
  EXPECT_TRUE(j["frames"][0]["maximally_mixed"].get<bool>());
}

TEST_F(CliTest, oracle_reports_residual) {
  const auto a = write_state("a.json", schmidt_state(std::numbers::pi / 8));
  const auto b = write_state("b.json", schmidt_state(std::numbers::pi / 6));
  EXPECT_EQ(run({"oracle", a, b, "--restarts", "2"}), 0);
  EXPECT_GE(nlohmann::json::parse(out_.str())["best_residual"].get<double>(), 0.1035);
}
