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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lucheck/equivalence.hpp"

namespace lucheck {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct InputDigest {
  std::string path;
  std::string digest;  // "fnv1a64:<16 hex digits>" of the file bytes
  int n = 0;
};

/// FNV-1a 64-bit hash of a byte string, formatted as above.
std::string fnv1a64_digest(std::string_view bytes);

/// Machine-readable result of a `check`. Holds everything needed to re-verify
/// a witness independently: the unitaries, the claimed residual and the input
/// digests.
struct Report {
  int schema = kReportSchema;
  std::string version = kToolVersion;
  std::vector<InputDigest> inputs;
  nlohmann::json config = nlohmann::json::object();

  std::string verdict;  // Equivalent | NotEquivalent | Indeterminate
  std::optional<std::string> reason;
  std::vector<int> maximally_mixed_qubits;
  bool fallback_attempted = false;
  bool budget_exceeded = false;
  bool search_incomplete = false;

  std::vector<Matrix2c> witness;
  std::optional<double> witness_residual;
  std::vector<double> phases;
  std::vector<bool> phase_active;

  std::string path;
  double global_spectrum_gap = 0.0;
  std::vector<double> marginal_spectrum_gaps;
  std::optional<double> direct_distance;
  std::optional<double> phase_residual;
  long search_evaluations = 0;

  nlohmann::json timing = nlohmann::json::object();
};

nlohmann::json config_to_json(const EquivalenceConfig& config);

Report make_report(const Verdict& verdict, const EquivalenceConfig& config,
                   std::vector<InputDigest> inputs);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Exit code for the CLI: 0 Equivalent, 1 NotEquivalent, 2 Indeterminate.
int exit_code(const Verdict& verdict);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace lucheck
