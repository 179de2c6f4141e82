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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lucheck/equivalence.hpp"
#include "lucheck/oracle.hpp"
#include "lucheck/state.hpp"

namespace lucheck::testing {

inline NQubitState pure(std::vector<Complex> amps) { return from_pure_amplitudes(amps); }

/// cos(theta)|00> + sin(theta)|11>
inline NQubitState schmidt_state(double theta) {
  return pure({std::cos(theta), 0.0, 0.0, std::sin(theta)});
}

inline NQubitState bell_state() { return schmidt_state(std::numbers::pi / 4); }

inline NQubitState ghz_state(int n) {
  std::vector<Complex> amps(std::size_t{1} << n, 0.0);
  amps.front() = 1.0;
  amps.back() = 1.0;
  return pure(amps);
}

inline std::vector<Complex> w_amplitudes() {
  std::vector<Complex> amps(8, 0.0);
  amps[4] = amps[2] = amps[1] = 1.0 / std::sqrt(3.0);
  return amps;
}

inline NQubitState w_state() { return pure(w_amplitudes()); }

/// sqrt(2/3)|000> + sqrt(1/3)|111>: same spectra as W, different LU class.
inline NQubitState ghz_like_w_spectra() {
  std::vector<Complex> amps(8, 0.0);
  amps[0] = std::sqrt(2.0 / 3.0);
  amps[7] = std::sqrt(1.0 / 3.0);
  return pure(amps);
}

inline NQubitState diagonal_state(std::vector<double> diag) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(diag.size()),
                                        static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
  }
  return validate_state(m);
}

/// Ranks above 2^n are clamped, so a cycling rank works for every n.
inline NQubitState capped_random_state(int n, int rank, Rng& rng) {
  return random_state(n, std::min(rank, 1 << n), rng);
}

inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

/// Soundness: every Equivalent verdict must survive a residual recomputed
/// here, from the witness and the inputs alone.
inline bool witness_is_sound(const Verdict& v, const NQubitState& a, const NQubitState& b,
                             double tol = 1e-9) {
  const auto* eq = std::get_if<Equivalent>(&v.outcome);
  if (eq == nullptr) return true;
  for (const auto& u : eq->witness.unitaries) {
    if ((u.adjoint() * u - Matrix2c::Identity()).norm() > 1e-10) return false;
  }
  const ComplexMatrix full = kron_all(eq->witness.unitaries);
  const double residual = (b.matrix() - full * a.matrix() * full.adjoint()).norm();
  return residual <= tol;
}

}  // namespace lucheck::testing
