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
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lucheck/oracle.hpp"
#include "lucheck/phase_match.hpp"
#include "lucheck/state.hpp"
#include "lucheck/trace_form.hpp"

namespace lucheck {

struct EquivalenceConfig {
  double tol = 1e-9;           // Frobenius, witness and trace-form residuals
  double spectral_tol = 1e-9;  // max abs gap between sorted spectra
  double degeneracy_tol = kDegeneracyTol;
  bool fallback = false;       // full-SU(2) search on maximally mixed qubits
  int fallback_restarts = 16;
  Seed fallback_seed = 0x5eed;
  long fallback_evaluations = 6000;  // Nelder-Mead budget per restart
  PhaseSearchOptions search;
};

enum class SpectralInvariant { kGlobalSpectrum, kMarginalSpectra };

struct PreflightReport {
  bool pass = true;
  std::optional<SpectralInvariant> failed;
  int qubit = -1;      // first failing qubit for marginal mismatches
  double gap = 0.0;    // gap of the failing invariant
  double global_gap = 0.0;
  std::vector<double> marginal_gaps;
};

/// Compares LU invariants: the global spectrum first, then each qubit's
/// marginal spectrum. Throws DimensionError on qubit-count mismatch.
PreflightReport preflight_invariants(const NQubitState& a, const NQubitState& b, double tol);

/// Local unitaries mapping a to b, with the residual recomputed from them.
struct WitnessLU {
  std::vector<Matrix2c> unitaries;
  double residual = 0.0;
};

/// Thrown when a solver-produced witness fails independent verification.
class WitnessError : public std::runtime_error {
 public:
  WitnessError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// ||b - (x)U a (x)U^dagger||_F.
double witness_residual(const NQubitState& a, const NQubitState& b,
                        std::span<const Matrix2c> unitaries);

/// Scales U to determinant 1 and picks the sign with arg(U00) in (-pi/2, pi/2]
/// (U01 decides when U00 vanishes).
Matrix2c normalize_global_phase(const Matrix2c& u);

/// U_i = V'_i diag(e^{i w_i}, e^{-i w_i}) V_i^dagger, verified against the
/// original pair. Throws WitnessError if the residual exceeds tol.
WitnessLU assemble_witness(const TraceForm& t, const TraceForm& t_prime,
                           const PhaseAssignment& phases, const NQubitState& original,
                           const NQubitState& original_prime, double tol);

/// Same with arbitrary per-qubit cores: U_i = V'_i W_i V_i^dagger.
WitnessLU assemble_witness_from_cores(const TraceForm& t, const TraceForm& t_prime,
                                      std::span<const Matrix2c> cores,
                                      const NQubitState& original,
                                      const NQubitState& original_prime, double tol);

struct FallbackResult {
  std::optional<WitnessLU> witness;
  double best_residual = 0.0;
  int restarts_used = 0;
  long evaluations = 0;
};

/// Multi-start search over SU(2) on `mixed_qubits` (3 Euler angles each)
/// and a diagonal phase on every other qubit, in trace-form coordinates.
FallbackResult su2_fallback(const NQubitState& a, const NQubitState& b,
                            const std::vector<int>& mixed_qubits,
                            const EquivalenceConfig& config = {});

enum class RejectionReason { kByGlobalSpectrum, kByMarginalSpectra, kByTraceForm };

const char* to_string(RejectionReason reason);

struct Equivalent {
  WitnessLU witness;
};

struct NotEquivalent {
  RejectionReason reason;
};

struct Indeterminate {
  std::vector<int> maximally_mixed_qubits;
  bool fallback_attempted = false;
  bool budget_exceeded = false;
  bool search_incomplete = false;  // phase search could not cover every angle
};

struct Timing {
  double preflight_ms = 0.0;
  double trace_form_ms = 0.0;
  double search_ms = 0.0;
  double total_ms = 0.0;
};

struct Diagnostics {
  PreflightReport preflight;
  std::string path;  // preflight | direct | phase_match | fallback
  std::optional<double> direct_distance;
  std::optional<PhaseMatchResult> phase_search;
  std::optional<FallbackResult> fallback;
  PhaseAssignment phases;
  Timing timing;
};

struct Verdict {
  std::variant<Equivalent, NotEquivalent, Indeterminate> outcome;
  Diagnostics diagnostics;

  bool is_equivalent() const { return std::holds_alternative<Equivalent>(outcome); }
  bool is_not_equivalent() const { return std::holds_alternative<NotEquivalent>(outcome); }
  bool is_indeterminate() const { return std::holds_alternative<Indeterminate>(outcome); }
  const char* outcome_name() const;
};

/// The full decision procedure: spectral preflight, trace forms, direct
/// comparison, phase matching, witness. Every Equivalent verdict carries a
/// witness whose residual was recomputed against a and b.
Verdict decide_lu_equivalence(const NQubitState& a, const NQubitState& b,
                              const EquivalenceConfig& config = {});

}  // namespace lucheck
