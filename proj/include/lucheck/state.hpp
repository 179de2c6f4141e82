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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lucheck/tensor.hpp"

namespace lucheck {

inline constexpr int kDefaultMaxQubits = 10;

// Numerical floors used when validating density matrices.
struct ValidationTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double eigenvalue_floor = 1e-10;
};

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind {
    kNonFinite,
    kNotSquare,
    kNotPowerOfTwo,
    kTooManyQubits,
    kNotHermitian,
    kBadTrace,
    kNegativeEigenvalue,
    kZeroVector,
  };

  ValidationError(Kind kind, double measured, const std::string& what)
      : std::invalid_argument(what), kind_(kind), measured_(measured) {}

  Kind kind() const { return kind_; }
  // The offending residual: hermiticity gap, trace, smallest eigenvalue, ...
  double measured() const { return measured_; }

 private:
  Kind kind_;
  double measured_;
};

const char* to_string(ValidationError::Kind kind);

/// A validated density matrix on n qubits. Instances only come out of
/// validate_state() and from_pure_amplitudes(), so every NQubitState is
/// Hermitian, unit-trace and positive semidefinite to tolerance.
class NQubitState {
 public:
  int num_qubits() const { return n_; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double purity() const { return purity_; }
  /// Eigenvalues, descending, tiny negatives clamped to zero.
  const std::vector<double>& spectrum() const { return spectrum_; }

 private:
  friend NQubitState validate_state(const ComplexMatrix&, int,
                                    const ValidationTolerances&);
  NQubitState() = default;

  int n_ = 0;
  ComplexMatrix matrix_;
  double purity_ = 0.0;
  std::vector<double> spectrum_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm = 0.0;

  static BlochVector from_components(double x, double y, double z);
  /// (I + r.sigma) / 2
  Matrix2c density_matrix() const;
};

/// Validates a candidate density matrix. Errors are reported in the order:
/// non-finite, shape, hermiticity, trace, positivity.
NQubitState validate_state(const ComplexMatrix& m, int max_qubits = kDefaultMaxQubits,
                           const ValidationTolerances& tol = {});

/// |psi><psi| of the normalized amplitude vector.
NQubitState from_pure_amplitudes(std::span<const Complex> amps,
                                 int max_qubits = kDefaultMaxQubits);

/// Reduced state of qubit i (0-based).
ComplexMatrix reduced_qubit(const NQubitState& s, int i);

/// Bloch vector of a single-qubit density matrix; throws ValidationError if
/// q is not one.
BlochVector bloch_vector(const ComplexMatrix& q);

/// Eigenvalues of the full matrix, descending.
std::vector<double> global_spectrum(const NQubitState& s);

/// Hermitian eigenvalues of an arbitrary Hermitian matrix, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// log2 of a matrix side, or -1 if not a power of two.
int qubit_count_for_dimension(Eigen::Index dim);

}  // namespace lucheck
