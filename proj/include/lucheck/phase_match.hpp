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
#include <vector>

#include "lucheck/pauli.hpp"
#include "lucheck/trace_form.hpp"

namespace lucheck {

/// Per-qubit angles omega_k of the diagonal phase unitaries
/// diag(e^{i omega_k}, e^{-i omega_k}). Angles live in [0, pi); inactive
/// qubits carry 0.
struct PhaseAssignment {
  std::vector<double> omegas;
  std::vector<bool> active;

  static PhaseAssignment zeros(int n);
};

/// Reduce an angle into [0, pi).
double reduce_mod_pi(double omega);

/// Applies rotate_phase for every active qubit.
PauliCoefficients apply_phases(const PauliCoefficients& p, const PhaseAssignment& phases);

struct PhaseSearchOptions {
  int grid_points = 64;             // per angle, over omega in [0, pi)
  int max_exhaustive_block = 3;     // angles searched jointly on the grid
  int max_sweeps = 16;              // block coordinate descent above that
  double angle_resolution = 1e-10;  // golden-section refinement, in omega
  long max_evaluations = 2'000'000;
  double anchor_floor = 1e-9;       // coefficients below this carry no phase
};

enum class PhaseMatchStatus { kMatched, kNoSolution, kBudgetExceeded };

const char* to_string(PhaseMatchStatus status);

struct PhaseMatchResult {
  PhaseMatchStatus status = PhaseMatchStatus::kNoSolution;
  PhaseAssignment phases;  // best found, even without a match
  double residual = 0.0;   // Frobenius norm of the remaining difference
  // True when a failed match rules out every phase assignment: all angles
  // were forced by anchor equations or searched by an exhaustive grid.
  bool exhaustive = false;
  int anchored = 0;  // solved from single-qubit anchors
  int peeled = 0;    // solved from anchors once other angles were known
  int free = 0;      // no coefficient depends on the angle
  std::vector<int> grid_qubits;
  long evaluations = 0;
};

/// Finds omegas with apply_phases(expand(t.state)) == expand(t_prime.state)
/// within tol. Maximally mixed qubits (in either frame) are left inactive.
PhaseMatchResult phase_match(const TraceForm& t, const TraceForm& t_prime, double tol,
                             const PhaseSearchOptions& options = {});

/// Coefficient-space core of phase_match. Only qubits in `active` are searched.
PhaseMatchResult match_phases(const PauliCoefficients& p, const PauliCoefficients& p_prime,
                              const std::vector<bool>& active, double tol,
                              const PhaseSearchOptions& options = {});

/// Angles recoverable from anchor equations alone, using only coefficients
/// that are the identity on every qubit in `identity_required`. Unresolved
/// qubits come back empty.
std::vector<std::optional<double>> anchor_phases(const PauliCoefficients& p,
                                                 const PauliCoefficients& p_prime,
                                                 const std::vector<bool>& active,
                                                 const std::vector<bool>& identity_required,
                                                 double floor = 1e-9);

}  // namespace lucheck
