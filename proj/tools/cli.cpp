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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lucheck/equivalence.hpp"
#include "lucheck/oracle.hpp"
#include "lucheck/pauli.hpp"
#include "lucheck/report.hpp"
#include "lucheck/state_file.hpp"
#include "lucheck/trace_form.hpp"

namespace lucheck::cli {

namespace {

using nlohmann::json;

struct LoadedState {
  NQubitState state;
  InputDigest digest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedState load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    NQubitState s = parse_state_file(text);
    return {s, {path, fnv1a64_digest(text), s.num_qubits()}};
  } catch (const StateFileError& e) {
    throw StateFileError(e.code(), path + ": " + e.what());
  }
}

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

void print_human(const Report& r, std::ostream& out) {
  out << "verdict: " << r.verdict;
  if (r.reason) out << " (" << *r.reason << ")";
  out << "\n";
  out << "path: " << r.path << "\n";
  if (r.verdict == "Indeterminate") {
    out << "maximally mixed qubits:";
    for (int q : r.maximally_mixed_qubits) out << " " << q;
    out << (r.maximally_mixed_qubits.empty() ? " none" : "") << "\n";
    out << "fallback attempted: " << (r.fallback_attempted ? "yes" : "no") << "\n";
    if (r.search_incomplete) out << "phase search incomplete\n";
  }
  if (r.witness_residual) {
    out << "witness residual: " << std::setprecision(3) << *r.witness_residual << "\n";
    for (std::size_t q = 0; q < r.witness.size(); ++q) {
      const Matrix2c& u = r.witness[q];
      out << "U" << q << " = [[" << format_complex(u(0, 0)) << ", " << format_complex(u(0, 1))
          << "], [" << format_complex(u(1, 0)) << ", " << format_complex(u(1, 1)) << "]]\n";
    }
  }
}

int cmd_check(const std::string& path_a, const std::string& path_b,
              const EquivalenceConfig& config, bool as_json, std::ostream& out) {
  const LoadedState a = load(path_a);
  const LoadedState b = load(path_b);
  if (a.state.num_qubits() != b.state.num_qubits()) {
    throw DimensionError("inputs have different qubit counts (" +
                         std::to_string(a.state.num_qubits()) + " vs " +
                         std::to_string(b.state.num_qubits()) + ")");
  }
  const Verdict verdict = decide_lu_equivalence(a.state, b.state, config);
  const Report report = make_report(verdict, config, {a.digest, b.digest});
  if (as_json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    print_human(report, out);
  }
  return exit_code(verdict);
}

json frame_to_json(const LocalEigenframe& f) {
  return json{{"qubit", f.qubit},
              {"eigenvalues", {f.eigenvalues[0], f.eigenvalues[1]}},
              {"V", matrix_to_json(f.V)},
              {"bloch", {f.bloch.x, f.bloch.y, f.bloch.z}},
              {"maximally_mixed", f.maximally_mixed}};
}

int cmd_trace_form(const std::string& path, double degeneracy_tol, std::ostream& out) {
  const LoadedState s = load(path);
  const TraceForm t = to_trace_form(s.state, degeneracy_tol);
  json frames = json::array();
  for (const auto& f : t.frames) frames.push_back(frame_to_json(f));
  const json doc{{"schema", kReportSchema},
                 {"input", {{"path", path}, {"digest", s.digest.digest}}},
                 {"n", t.state.num_qubits()},
                 {"trace_form", matrix_to_json(t.state.matrix())},
                 {"frames", std::move(frames)}};
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_pauli(const std::string& path, double threshold, bool as_json, std::ostream& out) {
  const LoadedState s = load(path);
  const PauliCoefficients p = expand(s.state);
  json terms = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p[i]) > threshold) {
      terms.push_back({{"label", pauli_label(i, p.n)}, {"index", i}, {"coefficient", p[i]}});
    }
  }
  if (as_json) {
    out << json{{"schema", kReportSchema}, {"n", p.n}, {"threshold", threshold},
                {"terms", std::move(terms)}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& t : terms) {
      out << t["label"].get<std::string>() << " " << std::setprecision(17)
          << t["coefficient"].get<double>() << "\n";
    }
  }
  return 0;
}

int cmd_gen(int n, const std::string& kind, int rank, std::uint64_t seed, double min_bloch,
            const std::string& label, const std::string& out_path, std::ostream& out) {
  Rng rng(seed);
  StateFile file;
  std::optional<std::string> lbl;
  if (!label.empty()) lbl = label;
  if (kind == "pure") {
    for (int attempt = 0;; ++attempt) {
      auto amps = random_pure_amplitudes(n, rng);
      const NQubitState s = from_pure_amplitudes(amps);
      bool ok = true;
      for (int q = 0; q < n && ok; ++q) ok = bloch_vector(reduced_qubit(s, q)).norm >= min_bloch;
      if (ok) {
        file = state_file_from_amplitudes(std::move(amps), lbl);
        break;
      }
      if (attempt >= 100000) throw std::runtime_error("gen: min-bloch rejection gave up");
    }
  } else if (kind == "mixed") {
    const NQubitState s = min_bloch > 0.0 ? random_state_min_bloch(n, rank, min_bloch, rng)
                                          : random_mixed_state(n, rank, rng);
    file = state_file_from_state(s, lbl);
  } else {
    throw CLI::ValidationError("--kind", "must be pure or mixed");
  }
  const std::string text = emit_state_file(file);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
  return 0;
}

int cmd_oracle(const std::string& path_a, const std::string& path_b, const OracleOptions& opts,
               std::ostream& out) {
  const LoadedState a = load(path_a);
  const LoadedState b = load(path_b);
  const OracleResult r = lu_fit_oracle(a.state, b.state, opts);
  json us = json::array();
  for (const auto& u : r.unitaries) us.push_back(matrix_to_json(u));
  out << json{{"schema", kReportSchema},
              {"inputs", {{{"path", path_a}, {"digest", a.digest.digest}},
                          {{"path", path_b}, {"digest", b.digest.digest}}}},
              {"restarts", opts.restarts},
              {"seed", opts.seed},
              {"best_residual", r.residual},
              {"unitaries", std::move(us)},
              {"evaluations", r.evaluations},
              {"budget_exhausted", r.budget_exhausted}}
             .dump(2)
      << "\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lucheck: local unitary equivalence checker for n-qubit density matrices"};
  app.require_subcommand(1);

  EquivalenceConfig config;
  std::string path_a;
  std::string path_b;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Decide LU equivalence of two state files");
  check->add_option("A", path_a, "First state file")->required();
  check->add_option("B", path_b, "Second state file")->required();
  check->add_option("--tol", config.tol, "Witness/trace-form Frobenius tolerance")
      ->capture_default_str();
  check->add_option("--spectral-tol", config.spectral_tol, "Spectrum comparison tolerance")
      ->capture_default_str();
  check->add_option("--degeneracy-tol", config.degeneracy_tol,
                    "Eigenvalue gap treated as maximally mixed")
      ->capture_default_str();
  check->add_flag("--fallback", config.fallback, "Search SU(2) on maximally mixed qubits");
  check->add_option("--restarts", config.fallback_restarts, "Fallback restarts")
      ->capture_default_str();
  check->add_option("--seed", config.fallback_seed, "Fallback seed")->capture_default_str();
  check->add_option("--grid-points", config.search.grid_points, "Phase grid points per angle")
      ->capture_default_str();
  check->add_option("--max-evaluations", config.search.max_evaluations,
                    "Phase search evaluation budget")
      ->capture_default_str();
  check->add_flag("--json", as_json, "Emit the JSON report");

  auto* trace = app.add_subcommand("trace-form", "Print the trace-decomposition form and frames");
  trace->add_option("A", path_a, "State file")->required();
  trace->add_option("--degeneracy-tol", config.degeneracy_tol)->capture_default_str();

  double threshold = 1e-12;
  auto* pauli_cmd = app.add_subcommand("pauli", "Print Pauli-basis coefficients");
  pauli_cmd->add_option("A", path_a, "State file")->required();
  pauli_cmd->add_option("--threshold", threshold, "Hide coefficients with |c| <= threshold")
      ->capture_default_str();
  pauli_cmd->add_flag("--json", as_json, "Emit JSON");

  int n = 0;
  std::string kind = "pure";
  int rank = 1;
  std::uint64_t seed = 1;
  double min_bloch = 0.0;
  std::string label;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a random state file");
  gen->add_option("--n", n, "Qubit count")->required()->check(CLI::Range(1, kDefaultMaxQubits));
  gen->add_option("--kind", kind, "pure or mixed")
      ->check(CLI::IsMember({"pure", "mixed"}))
      ->capture_default_str();
  gen->add_option("--rank", rank, "Ginibre rank for mixed states")->capture_default_str();
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--min-bloch", min_bloch, "Reject states with a marginal Bloch norm below this")
      ->capture_default_str();
  gen->add_option("--label", label, "Optional label");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Brute-force LU fit residual");
  oracle->add_option("A", path_a, "First state file")->required();
  oracle->add_option("B", path_b, "Second state file")->required();
  oracle->add_option("--restarts", oracle_opts.restarts)->capture_default_str();
  oracle->add_option("--seed", oracle_opts.seed)->capture_default_str();
  oracle->add_option("--max-evaluations", oracle_opts.max_evaluations_per_start)
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(path_a, path_b, config, as_json, out);
    if (*trace) return cmd_trace_form(path_a, config.degeneracy_tol, out);
    if (*pauli_cmd) return cmd_pauli(path_a, threshold, as_json, out);
    if (*gen) return cmd_gen(n, kind, rank, seed, min_bloch, label, out_path, out);
    if (*oracle) return cmd_oracle(path_a, path_b, oracle_opts, out);
  } catch (const StateFileError& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lucheck::cli
