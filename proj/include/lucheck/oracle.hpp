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

#include <cstdint>
#include <span>
#include <vector>

#include "lucheck/random.hpp"
#include "lucheck/state.hpp"
#include "lucheck/tensor.hpp"

namespace lucheck {

using Seed = std::uint64_t;

/// 2^n independent complex Gaussians, normalized.
std::vector<Complex> random_pure_amplitudes(int n, Rng& rng);
NQubitState random_pure_state(int n, Rng& rng);
NQubitState random_pure_state(int n, Seed seed);

/// Ginibre ensemble: G G^dagger / Tr(G G^dagger), G a 2^n x rank complex
/// Gaussian matrix filled row-major.
NQubitState random_mixed_state(int n, int rank, Rng& rng);
NQubitState random_mixed_state(int n, int rank, Seed seed);

/// rank == 1 draws a pure state, otherwise a Ginibre state of that rank.
NQubitState random_state(int n, int rank, Rng& rng);

/// Redraws until every marginal Bloch norm is >= min_bloch. Throws
/// std::runtime_error after max_attempts.
NQubitState random_state_min_bloch(int n, int rank, double min_bloch, Rng& rng,
                                   int max_attempts = 100000);

/// Haar 2x2 unitary: QR of a complex Gaussian matrix with R's diagonal made
/// real positive.
Matrix2c haar_local_unitary(Rng& rng);
Matrix2c haar_local_unitary(Seed seed);

/// Haar unitary of arbitrary size (same construction, Householder QR).
ComplexMatrix haar_unitary(Eigen::Index dim, Rng& rng);

/// One Haar local unitary per qubit.
std::vector<Matrix2c> haar_local_unitaries(int n, Rng& rng);

/// e^{i a sz/2} e^{i b sy/2} e^{i g sz/2}
Matrix2c euler_unitary(double alpha, double beta, double gamma);

/// (U_0 (x) ... (x) U_{n-1}) rho (...)^dagger, validated.
NQubitState apply_local_unitaries(const NQubitState& s, std::span<const Matrix2c> us,
                                  double unitarity_tol = 1e-10);

struct OracleResult {
  double residual = 0.0;
  std::vector<Matrix2c> unitaries;
  long evaluations = 0;
  bool budget_exhausted = false;
};

struct OracleOptions {
  int restarts = 20;
  Seed seed = 1;
  long max_evaluations_per_start = 20000;
  double tolerance = 1e-10;
};

/// Brute-force upper bound on min_U ||b - U a U^dagger||_F over local
/// unitaries, by multi-start Nelder-Mead on 3n Euler angles. The first start
/// is the identity; the rest are uniform random angles.
OracleResult lu_fit_oracle(const NQubitState& a, const NQubitState& b,
                           const OracleOptions& options = {});

}  // namespace lucheck
