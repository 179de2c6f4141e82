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

#include <vector>

#include "lucheck/state.hpp"
#include "lucheck/tensor.hpp"

namespace lucheck {

/// Eigen-decomposition of one qubit's marginal: rho_i = V diag(p, 1 - p) V^dagger
/// with p >= 1/2. Maximally mixed marginals carry V = I.
struct LocalEigenframe {
  int qubit = 0;
  double eigenvalues[2] = {0.5, 0.5};
  Matrix2c V = Matrix2c::Identity();
  BlochVector bloch;
  bool maximally_mixed = false;
};

/// The state conjugated qubit-wise by the adjoints of its marginal
/// eigenframes, so that every marginal is diagonal with descending entries.
struct TraceForm {
  NQubitState state;
  std::vector<LocalEigenframe> frames;

  std::vector<bool> maximally_mixed_mask() const;
};

std::vector<LocalEigenframe> local_eigenframes(const NQubitState& s,
                                               double degeneracy_tol = kDegeneracyTol);

/// rho_t = (V_0^dag (x) ... (x) V_{n-1}^dag) rho (V_0 (x) ... (x) V_{n-1}).
TraceForm to_trace_form(const NQubitState& s, double degeneracy_tol = kDegeneracyTol);

/// (U_0 (x) ... (x) U_{n-1}) rho (U_0 (x) ... (x) U_{n-1})^dagger for 2x2 factors.
ComplexMatrix conjugate_local(const ComplexMatrix& rho, std::span<const Matrix2c> factors);

}  // namespace lucheck
