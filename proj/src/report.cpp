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

#include "lucheck/report.hpp"

#include <cstdio>

namespace lucheck {

using nlohmann::json;

std::string fnv1a64_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& z = j.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
      m(r, c) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
    }
  }
  return m;
}

json config_to_json(const EquivalenceConfig& config) {
  return json{
      {"tol", config.tol},
      {"spectral_tol", config.spectral_tol},
      {"degeneracy_tol", config.degeneracy_tol},
      {"fallback", config.fallback},
      {"fallback_restarts", config.fallback_restarts},
      {"fallback_seed", config.fallback_seed},
      {"fallback_evaluations", config.fallback_evaluations},
      {"grid_points", config.search.grid_points},
      {"max_exhaustive_block", config.search.max_exhaustive_block},
      {"max_sweeps", config.search.max_sweeps},
      {"angle_resolution", config.search.angle_resolution},
      {"max_evaluations", config.search.max_evaluations},
      {"anchor_floor", config.search.anchor_floor},
  };
}

int exit_code(const Verdict& verdict) {
  if (verdict.is_equivalent()) return 0;
  if (verdict.is_not_equivalent()) return 1;
  return 2;
}

Report make_report(const Verdict& verdict, const EquivalenceConfig& config,
                   std::vector<InputDigest> inputs) {
  Report r;
  r.inputs = std::move(inputs);
  r.config = config_to_json(config);
  r.verdict = verdict.outcome_name();
  if (const auto* eq = std::get_if<Equivalent>(&verdict.outcome)) {
    r.witness = eq->witness.unitaries;
    r.witness_residual = eq->witness.residual;
  } else if (const auto* ne = std::get_if<NotEquivalent>(&verdict.outcome)) {
    r.reason = to_string(ne->reason);
  } else if (const auto* ind = std::get_if<Indeterminate>(&verdict.outcome)) {
    r.maximally_mixed_qubits = ind->maximally_mixed_qubits;
    r.fallback_attempted = ind->fallback_attempted;
    r.budget_exceeded = ind->budget_exceeded;
    r.search_incomplete = ind->search_incomplete;
  }
  const Diagnostics& d = verdict.diagnostics;
  r.phases = d.phases.omegas;
  r.phase_active = d.phases.active;
  r.path = d.path;
  r.global_spectrum_gap = d.preflight.global_gap;
  r.marginal_spectrum_gaps = d.preflight.marginal_gaps;
  r.direct_distance = d.direct_distance;
  if (d.phase_search) {
    r.phase_residual = d.phase_search->residual;
    r.search_evaluations = d.phase_search->evaluations;
  } else if (d.fallback) {
    r.search_evaluations = d.fallback->evaluations;
  }
  r.timing = json{{"preflight_ms", d.timing.preflight_ms},
                  {"trace_form_ms", d.timing.trace_form_ms},
                  {"search_ms", d.timing.search_ms},
                  {"total_ms", d.timing.total_ms}};
  return r;
}

json to_json(const Report& r) {
  json j;
  j["schema"] = r.schema;
  j["tool"] = "lucheck";
  j["version"] = r.version;
  json inputs = json::array();
  for (const auto& in : r.inputs) {
    inputs.push_back({{"path", in.path}, {"digest", in.digest}, {"n", in.n}});
  }
  j["inputs"] = std::move(inputs);
  j["config"] = r.config;
  j["verdict"] = r.verdict;
  if (r.reason) j["reason"] = *r.reason;
  if (r.verdict == "Indeterminate") {
    j["cause"] = {{"maximally_mixed_qubits", r.maximally_mixed_qubits},
                  {"fallback_attempted", r.fallback_attempted},
                  {"budget_exceeded", r.budget_exceeded},
                  {"search_incomplete", r.search_incomplete}};
  }
  if (r.witness_residual) {
    json us = json::array();
    for (const auto& u : r.witness) us.push_back(matrix_to_json(u));
    j["witness"] = {{"unitaries", std::move(us)}, {"residual", *r.witness_residual}};
  }
  j["phases"] = {{"omegas", r.phases}, {"active", r.phase_active}};
  json diag;
  diag["path"] = r.path;
  diag["global_spectrum_gap"] = r.global_spectrum_gap;
  diag["marginal_spectrum_gaps"] = r.marginal_spectrum_gaps;
  if (r.direct_distance) diag["direct_distance"] = *r.direct_distance;
  if (r.phase_residual) diag["phase_residual"] = *r.phase_residual;
  diag["search_evaluations"] = r.search_evaluations;
  j["diagnostics"] = std::move(diag);
  j["timing"] = r.timing;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema = j.at("schema").get<int>();
  r.version = j.at("version").get<std::string>();
  for (const auto& in : j.at("inputs")) {
    r.inputs.push_back({in.at("path").get<std::string>(), in.at("digest").get<std::string>(),
                        in.at("n").get<int>()});
  }
  r.config = j.at("config");
  r.verdict = j.at("verdict").get<std::string>();
  if (j.contains("reason")) r.reason = j["reason"].get<std::string>();
  if (j.contains("cause")) {
    const json& c = j["cause"];
    r.maximally_mixed_qubits = c.at("maximally_mixed_qubits").get<std::vector<int>>();
    r.fallback_attempted = c.at("fallback_attempted").get<bool>();
    r.budget_exceeded = c.at("budget_exceeded").get<bool>();
    r.search_incomplete = c.at("search_incomplete").get<bool>();
  }
  if (j.contains("witness")) {
    for (const auto& u : j["witness"].at("unitaries")) {
      r.witness.push_back(Matrix2c(matrix_from_json(u)));
    }
    r.witness_residual = j["witness"].at("residual").get<double>();
  }
  r.phases = j.at("phases").at("omegas").get<std::vector<double>>();
  r.phase_active = j.at("phases").at("active").get<std::vector<bool>>();
  const json& diag = j.at("diagnostics");
  r.path = diag.at("path").get<std::string>();
  r.global_spectrum_gap = diag.at("global_spectrum_gap").get<double>();
  r.marginal_spectrum_gaps = diag.at("marginal_spectrum_gaps").get<std::vector<double>>();
  if (diag.contains("direct_distance")) r.direct_distance = diag["direct_distance"].get<double>();
  if (diag.contains("phase_residual")) r.phase_residual = diag["phase_residual"].get<double>();
  r.search_evaluations = diag.at("search_evaluations").get<long>();
  r.timing = j.at("timing");
  return r;
}

}  // namespace lucheck
