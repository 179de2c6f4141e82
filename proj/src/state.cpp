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

#include "lucheck/state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace lucheck {

const char* to_string(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::kNonFinite:
      return "non_finite";
    case ValidationError::Kind::kNotSquare:
      return "not_square";
    case ValidationError::Kind::kNotPowerOfTwo:
      return "not_power_of_two";
    case ValidationError::Kind::kTooManyQubits:
      return "too_many_qubits";
    case ValidationError::Kind::kNotHermitian:
      return "not_hermitian";
    case ValidationError::Kind::kBadTrace:
      return "bad_trace";
    case ValidationError::Kind::kNegativeEigenvalue:
      return "negative_eigenvalue";
    case ValidationError::Kind::kZeroVector:
      return "zero_vector";
  }
  return "unknown";
}

int qubit_count_for_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    return -1;
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) {
    ++n;
  }
  return n;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

NQubitState validate_state(const ComplexMatrix& m, int max_qubits,
                           const ValidationTolerances& tol) {
  using Kind = ValidationError::Kind;
  if (!all_finite(m)) {
    throw ValidationError(Kind::kNonFinite, NAN, "matrix has non-finite entries");
  }
  if (m.rows() != m.cols()) {
    throw ValidationError(Kind::kNotSquare, static_cast<double>(m.cols()),
                          "matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", not square");
  }
  const int n = qubit_count_for_dimension(m.rows());
  if (n < 0) {
    throw ValidationError(Kind::kNotPowerOfTwo, static_cast<double>(m.rows()),
                          "matrix side " + std::to_string(m.rows()) +
                              " is not a power of two >= 2");
  }
  if (n > max_qubits) {
    throw ValidationError(Kind::kTooManyQubits, n,
                          std::to_string(n) + " qubits exceeds the maximum of " +
                              std::to_string(max_qubits));
  }
  const double herm = hermiticity_residual(m);
  if (herm > tol.hermiticity) {
    throw ValidationError(Kind::kNotHermitian, herm,
                          "matrix is not Hermitian: max |m - m^dagger| = " +
                              std::to_string(herm));
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol.trace) {
    throw ValidationError(Kind::kBadTrace, trace,
                          "trace is " + std::to_string(trace) + ", expected 1");
  }
  std::vector<double> spectrum = hermitian_eigenvalues(h);
  if (spectrum.back() < -tol.eigenvalue_floor) {
    throw ValidationError(Kind::kNegativeEigenvalue, spectrum.back(),
                          "negative eigenvalue " + std::to_string(spectrum.back()));
  }
  for (double& v : spectrum) {
    v = std::max(v, 0.0);
  }

  NQubitState s;
  s.n_ = n;
  s.matrix_ = h;
  s.purity_ = h.squaredNorm();
  s.spectrum_ = std::move(spectrum);
  return s;
}

NQubitState from_pure_amplitudes(std::span<const Complex> amps, int max_qubits) {
  const int n = qubit_count_for_dimension(static_cast<Eigen::Index>(amps.size()));
  if (n < 0) {
    throw ValidationError(ValidationError::Kind::kNotPowerOfTwo,
                          static_cast<double>(amps.size()),
                          "amplitude count " + std::to_string(amps.size()) +
                              " is not a power of two >= 2");
  }
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    psi(static_cast<Eigen::Index>(i)) = amps[i];
  }
  if (!all_finite(psi)) {
    throw ValidationError(ValidationError::Kind::kNonFinite, NAN,
                          "amplitudes have non-finite entries");
  }
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw ValidationError(ValidationError::Kind::kZeroVector, norm,
                          "amplitude vector has zero norm");
  }
  psi /= norm;
  return validate_state(psi * psi.adjoint(), max_qubits);
}

ComplexMatrix reduced_qubit(const NQubitState& s, int i) {
  return partial_trace(s.matrix(), s.num_qubits(), i);
}

BlochVector BlochVector::from_components(double x, double y, double z) {
  return BlochVector{x, y, z, std::sqrt(x * x + y * y + z * z)};
}

Matrix2c BlochVector::density_matrix() const {
  return 0.5 * (pauli(0) + x * pauli(1) + y * pauli(2) + z * pauli(3));
}

BlochVector bloch_vector(const ComplexMatrix& q) {
  if (q.rows() != 2 || q.cols() != 2) {
    throw ValidationError(ValidationError::Kind::kNotSquare, q.rows(),
                          "bloch_vector expects a 2x2 density matrix");
  }
  validate_state(q, 1);
  const double x = (q * pauli(1)).trace().real();
  const double y = (q * pauli(2)).trace().real();
  const double z = (q * pauli(3)).trace().real();
  return BlochVector::from_components(x, y, z);
}

std::vector<double> global_spectrum(const NQubitState& s) { return s.spectrum(); }

}  // namespace lucheck
