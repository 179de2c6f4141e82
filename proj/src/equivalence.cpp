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

#include "lucheck/equivalence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "lucheck/optimize.hpp"
#include "lucheck/pauli.hpp"

namespace lucheck {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void require_same_qubits(const NQubitState& a, const NQubitState& b, const char* where) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError(std::string(where) + ": qubit counts differ (" +
                         std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()) + ")");
  }
}

WitnessLU build_witness(const TraceForm& t, const TraceForm& t_prime,
                        std::span<const Matrix2c> cores, const NQubitState& original,
                        const NQubitState& original_prime) {
  const std::size_t n = t.frames.size();
  if (cores.size() != n || t_prime.frames.size() != n) {
    throw DimensionError("assemble_witness: expected one core per qubit");
  }
  WitnessLU w;
  w.unitaries.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    w.unitaries.push_back(
        normalize_global_phase(t_prime.frames[q].V * cores[q] * t.frames[q].V.adjoint()));
  }
  w.residual = witness_residual(original, original_prime, w.unitaries);
  return w;
}

}  // namespace

const char* to_string(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::kByGlobalSpectrum:
      return "by_global_spectrum";
    case RejectionReason::kByMarginalSpectra:
      return "by_marginal_spectra";
    case RejectionReason::kByTraceForm:
      return "by_trace_form";
  }
  return "unknown";
}

const char* Verdict::outcome_name() const {
  if (is_equivalent()) return "Equivalent";
  if (is_not_equivalent()) return "NotEquivalent";
  return "Indeterminate";
}

PreflightReport preflight_invariants(const NQubitState& a, const NQubitState& b, double tol) {
  require_same_qubits(a, b, "preflight_invariants");
  PreflightReport report;
  const auto& sa = a.spectrum();
  const auto& sb = b.spectrum();
  for (std::size_t k = 0; k < sa.size(); ++k) {
    report.global_gap = std::max(report.global_gap, std::abs(sa[k] - sb[k]));
  }
  if (report.global_gap > tol) {
    report.pass = false;
    report.failed = SpectralInvariant::kGlobalSpectrum;
    report.gap = report.global_gap;
  }
  for (int q = 0; q < a.num_qubits(); ++q) {
    const EigenPair2 ea = eig_hermitian_2x2(reduced_qubit(a, q));
    const EigenPair2 eb = eig_hermitian_2x2(reduced_qubit(b, q));
    const double gap = std::max(std::abs(ea.eigenvalues[0] - eb.eigenvalues[0]),
                                std::abs(ea.eigenvalues[1] - eb.eigenvalues[1]));
    report.marginal_gaps.push_back(gap);
    if (report.pass && gap > tol) {
      report.pass = false;
      report.failed = SpectralInvariant::kMarginalSpectra;
      report.qubit = q;
      report.gap = gap;
    }
  }
  return report;
}

double witness_residual(const NQubitState& a, const NQubitState& b,
                        std::span<const Matrix2c> unitaries) {
  require_same_qubits(a, b, "witness_residual");
  if (static_cast<int>(unitaries.size()) != a.num_qubits()) {
    throw DimensionError("witness_residual: expected one unitary per qubit");
  }
  return frobenius_distance(b.matrix(), conjugate_local(a.matrix(), unitaries));
}

Matrix2c normalize_global_phase(const Matrix2c& u) {
  const Complex det = u.determinant();
  Matrix2c out = u / std::sqrt(det);
  const Complex pivot = std::abs(out(0, 0)) >= 1e-12 ? out(0, 0) : out(0, 1);
  const double arg = std::arg(pivot);
  if (arg <= -std::numbers::pi / 2 || arg > std::numbers::pi / 2) {
    out = -out;
  }
  return out;
}

WitnessLU assemble_witness_from_cores(const TraceForm& t, const TraceForm& t_prime,
                                      std::span<const Matrix2c> cores,
                                      const NQubitState& original,
                                      const NQubitState& original_prime, double tol) {
  WitnessLU w = build_witness(t, t_prime, cores, original, original_prime);
  if (!(w.residual <= tol)) {
    throw WitnessError("witness verification failed: residual " +
                           std::to_string(w.residual) + " exceeds tolerance " +
                           std::to_string(tol),
                       w.residual);
  }
  return w;
}

WitnessLU assemble_witness(const TraceForm& t, const TraceForm& t_prime,
                           const PhaseAssignment& phases, const NQubitState& original,
                           const NQubitState& original_prime, double tol) {
  std::vector<Matrix2c> cores;
  cores.reserve(t.frames.size());
  for (std::size_t q = 0; q < t.frames.size(); ++q) {
    const bool on = q < phases.active.size() && phases.active[q];
    cores.push_back(on ? phase_unitary(phases.omegas[q]) : Matrix2c::Identity());
  }
  return assemble_witness_from_cores(t, t_prime, cores, original, original_prime, tol);
}

FallbackResult su2_fallback(const NQubitState& a, const NQubitState& b,
                            const std::vector<int>& mixed_qubits,
                            const EquivalenceConfig& config) {
  require_same_qubits(a, b, "su2_fallback");
  const int n = a.num_qubits();
  const TraceForm t = to_trace_form(a, config.degeneracy_tol);
  const TraceForm tp = to_trace_form(b, config.degeneracy_tol);

  std::vector<bool> mixed(static_cast<std::size_t>(n), false);
  for (int q : mixed_qubits) {
    if (q < 0 || q >= n) throw std::out_of_range("su2_fallback: qubit index out of range");
    mixed[static_cast<std::size_t>(q)] = true;
  }
  // Parameter layout: 3 Euler angles per mixed qubit, one phase otherwise.
  std::vector<Eigen::Index> offset(static_cast<std::size_t>(n));
  Eigen::Index dim = 0;
  for (int q = 0; q < n; ++q) {
    offset[static_cast<std::size_t>(q)] = dim;
    dim += mixed[static_cast<std::size_t>(q)] ? 3 : 1;
  }
  auto cores_of = [&](const Eigen::VectorXd& x) {
    std::vector<Matrix2c> cores;
    cores.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      const Eigen::Index o = offset[static_cast<std::size_t>(q)];
      cores.push_back(mixed[static_cast<std::size_t>(q)] ? euler_unitary(x(o), x(o + 1), x(o + 2))
                                                         : phase_unitary(x(o)));
    }
    return cores;
  };
  const ComplexMatrix& source = t.state.matrix();
  const ComplexMatrix& target = tp.state.matrix();
  auto difference = [&](const Eigen::VectorXd& x) {
    const auto cores = cores_of(x);
    return ComplexMatrix(target - conjugate_local(source, cores));
  };
  auto objective = [&](const Eigen::VectorXd& x) { return difference(x).squaredNorm(); };
  auto residual_vector = [&](const Eigen::VectorXd& x) {
    const ComplexMatrix d = difference(x);
    Eigen::VectorXd r(2 * d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      r(2 * i) = d.data()[i].real();
      r(2 * i + 1) = d.data()[i].imag();
    }
    return r;
  };

  std::vector<bool> active(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) active[static_cast<std::size_t>(q)] = !mixed[static_cast<std::size_t>(q)];
  const auto anchors = anchor_phases(expand(t.state), expand(tp.state), active, mixed,
                                     config.search.anchor_floor);

  optimize::NelderMeadOptions nm;
  nm.max_evaluations = config.fallback_evaluations;
  nm.f_target = 1e-4 * config.tol * config.tol;
  nm.f_tol = 1e-24;
  nm.x_tol = 1e-9;
  optimize::LeastSquaresOptions lm;
  lm.residual_target = 1e-2 * config.tol;

  Rng rng(config.fallback_seed);
  FallbackResult out;
  out.best_residual = INFINITY;
  const int restarts = std::max(1, config.fallback_restarts);
  for (int start = 0; start < restarts; ++start) {
    Eigen::VectorXd x0(dim);
    for (int q = 0; q < n; ++q) {
      const auto uq = static_cast<std::size_t>(q);
      const Eigen::Index o = offset[uq];
      if (mixed[uq]) {
        for (int j = 0; j < 3; ++j) {
          x0(o + j) = start == 0 ? 0.0 : 4.0 * std::numbers::pi * rng.uniform();
        }
      } else {
        const double random_phase = std::numbers::pi * rng.uniform();
        x0(o) = anchors[uq] ? *anchors[uq] : (start == 0 ? 0.0 : random_phase);
      }
    }
    ++out.restarts_used;
    const auto coarse = optimize::nelder_mead(objective, x0, nm);
    const auto fine = optimize::levenberg_marquardt(residual_vector, coarse.x, lm);
    out.evaluations += coarse.evaluations + fine.evaluations;
    const double residual = std::sqrt(std::max(fine.f, 0.0));
    out.best_residual = std::min(out.best_residual, residual);
    if (residual <= config.tol) {
      const auto cores = cores_of(fine.x);
      WitnessLU w = build_witness(t, tp, cores, a, b);
      if (w.residual <= config.tol) {
        out.best_residual = w.residual;
        out.witness = std::move(w);
        break;
      }
    }
  }
  return out;
}

Verdict decide_lu_equivalence(const NQubitState& a, const NQubitState& b,
                              const EquivalenceConfig& config) {
  require_same_qubits(a, b, "decide_lu_equivalence");
  const auto start = Clock::now();
  const int n = a.num_qubits();
  Verdict verdict{Indeterminate{}, {}};
  Diagnostics& diag = verdict.diagnostics;
  diag.phases = PhaseAssignment::zeros(n);
  auto finish = [&](auto outcome) {
    verdict.outcome = std::move(outcome);
    diag.timing.total_ms = elapsed_ms(start);
    return verdict;
  };

  diag.path = "preflight";
  diag.preflight = preflight_invariants(a, b, config.spectral_tol);
  diag.timing.preflight_ms = elapsed_ms(start);
  if (!diag.preflight.pass) {
    return finish(NotEquivalent{*diag.preflight.failed == SpectralInvariant::kGlobalSpectrum
                                    ? RejectionReason::kByGlobalSpectrum
                                    : RejectionReason::kByMarginalSpectra});
  }

  const auto tf_start = Clock::now();
  const TraceForm t = to_trace_form(a, config.degeneracy_tol);
  const TraceForm tp = to_trace_form(b, config.degeneracy_tol);
  diag.timing.trace_form_ms = elapsed_ms(tf_start);

  std::vector<int> mixed;
  for (int q = 0; q < n; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    if (t.frames[uq].maximally_mixed || tp.frames[uq].maximally_mixed) mixed.push_back(q);
  }

  const auto search_start = Clock::now();
  if (!mixed.empty()) {
    if (!config.fallback) {
      return finish(Indeterminate{mixed, false, false, false});
    }
    diag.path = "fallback";
    FallbackResult fb = su2_fallback(a, b, mixed, config);
    diag.timing.search_ms = elapsed_ms(search_start);
    diag.fallback = fb;
    if (fb.witness) {
      return finish(Equivalent{*fb.witness});
    }
    return finish(Indeterminate{mixed, true, false, false});
  }

  for (int q = 0; q < n; ++q) diag.phases.active[static_cast<std::size_t>(q)] = true;
  diag.direct_distance = frobenius_distance(t.state.matrix(), tp.state.matrix());
  if (*diag.direct_distance <= config.tol) {
    diag.path = "direct";
    WitnessLU w = assemble_witness(t, tp, diag.phases, a, b, config.tol);
    diag.timing.search_ms = elapsed_ms(search_start);
    return finish(Equivalent{std::move(w)});
  }

  diag.path = "phase_match";
  PhaseMatchResult pm = phase_match(t, tp, config.tol, config.search);
  diag.timing.search_ms = elapsed_ms(search_start);
  diag.phases = pm.phases;
  diag.phase_search = pm;
  if (pm.status == PhaseMatchStatus::kMatched) {
    WitnessLU w = assemble_witness(t, tp, pm.phases, a, b, config.tol);
    return finish(Equivalent{std::move(w)});
  }
  if (pm.status == PhaseMatchStatus::kNoSolution && pm.exhaustive) {
    return finish(NotEquivalent{RejectionReason::kByTraceForm});
  }
  return finish(Indeterminate{{}, false, pm.status == PhaseMatchStatus::kBudgetExceeded, true});
}

}  // namespace lucheck
