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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>

#include <Eigen/Dense>

namespace lucheck {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Matrix2c = Eigen::Matrix2cd;

// Largest matrix side kron() will produce unless told otherwise (n = 12).
inline constexpr Eigen::Index kDefaultMaxDimension = Eigen::Index{1} << 12;

// Eigenvalues are considered degenerate below this absolute gap.
inline constexpr double kDegeneracyTol = 1e-10;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pauli matrix by index: 0 = identity, 1 = x, 2 = y, 3 = z.
Matrix2c pauli(int index);

/// Kronecker product. Qubit ordering follows the factor order: the left
/// operand occupies the most significant bits of the row/column index.
/// Throws std::length_error if either side of the result exceeds max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dim = kDefaultMaxDimension);

/// Kronecker product of a list of factors, left to right.
ComplexMatrix kron_all(std::span<const Matrix2c> factors,
                       Eigen::Index max_dim = kDefaultMaxDimension);

/// Reduced 2x2 matrix of qubit `keep` (0-based, qubit 0 is the leftmost
/// factor) of an operator on n qubits.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n, int keep);

struct EigenPair2 {
  double eigenvalues[2];  // descending
  Matrix2c vectors;       // columns match eigenvalues
  bool degenerate = false;
};

// Closed-form eigensolver for a Hermitian 2x2 matrix. Each eigenvector
// column has its largest-modulus entry real and non-negative (ties go to
// row 0). Degenerate inputs return the identity as eigenvectors.
EigenPair2 eig_hermitian_2x2(const ComplexMatrix& h,
                             double degeneracy_tol = kDegeneracyTol,
                             double hermiticity_tol = 1e-10);

/// sqrt(sum |a - b|^2). Throws DimensionError on shape mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |m_ij - conj(m_ji)|.
double hermiticity_residual(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

}  // namespace lucheck
