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

#include <cstddef>
#include <string>
#include <vector>

#include "lucheck/state.hpp"
#include "lucheck/tensor.hpp"

namespace lucheck {

/// Real coefficients c[alpha] of an n-qubit Hermitian operator in the basis of
/// Pauli strings sigma_{alpha_0} (x) ... (x) sigma_{alpha_{n-1}}, alpha_i in
/// {0: I, 1: x, 2: y, 3: z}. Stored flat in base 4 with qubit 0 as the most
/// significant digit. The operator is sum_alpha c[alpha] sigma_alpha.
struct PauliCoefficients {
  int n = 0;
  std::vector<double> c;

  static PauliCoefficients zeros(int n);

  std::size_t size() const { return c.size(); }
  double operator[](std::size_t index) const { return c[index]; }
  double& operator[](std::size_t index) { return c[index]; }

  /// Digit of `qubit` in a flat index.
  int digit(std::size_t index, int qubit) const {
    return static_cast<int>((index >> (2 * (n - 1 - qubit))) & 3u);
  }
  std::size_t stride(int qubit) const { return std::size_t{1} << (2 * (n - 1 - qubit)); }
};

/// "IXYZ"-style label of a flat index.
std::string pauli_label(std::size_t index, int n);

/// Thrown when an operator expected to be Hermitian yields complex coefficients.
class NonHermitianCoefficients : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c[alpha] = Tr(rho sigma_alpha) / 2^n.
PauliCoefficients expand(const NQubitState& s);

/// Same for an arbitrary Hermitian operator of side 2^n. Imaginary residue of
/// each coefficient must stay below imag_tol.
PauliCoefficients expand_operator(const ComplexMatrix& m, double imag_tol = 1e-10);

/// sum_alpha c[alpha] sigma_alpha.
ComplexMatrix reconstruct(const PauliCoefficients& p);

/// Coefficients of D rho D^dagger where D = diag(e^{i omega}, e^{-i omega}) acts
/// on qubit k. Only the (x, y) pairs on qubit k move:
///   (c_x, c_y) -> (c_x cos 2w + c_y sin 2w, -c_x sin 2w + c_y cos 2w).
PauliCoefficients rotate_phase(const PauliCoefficients& p, int k, double omega);

/// diag(e^{i omega}, e^{-i omega})
Matrix2c phase_unitary(double omega);

/// Frobenius norm of the operator whose coefficients are a - b.
double operator_distance(const PauliCoefficients& a, const PauliCoefficients& b);

}  // namespace lucheck
