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

#include "lucheck/tensor.hpp"

#include <cmath>
#include <string>

namespace lucheck {

namespace {

// Rotate the column so its largest-modulus entry is real and >= 0.
void fix_column_phase(Matrix2c& v, int col) {
  const double m0 = std::abs(v(0, col));
  const double m1 = std::abs(v(1, col));
  const int row = (m1 > m0 * (1.0 + 1e-12)) ? 1 : 0;
  const double mag = std::abs(v(row, col));
  if (mag == 0.0) {
    return;
  }
  const Complex phase = std::conj(v(row, col)) / mag;
  v.col(col) *= phase;
  v(row, col) = Complex(mag, 0.0);
}

}  // namespace

Matrix2c pauli(int index) {
  Matrix2c m;
  switch (index) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::out_of_range("pauli index must be in 0..3, got " +
                              std::to_string(index));
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dim) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    throw std::length_error("kron result " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds maximum side " +
                            std::to_string(max_dim));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_all(std::span<const Matrix2c> factors, Eigen::Index max_dim) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) {
    out = kron(out, f, max_dim);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n, int keep) {
  if (rho.rows() != rho.cols()) {
    throw DimensionError("partial_trace: matrix is not square");
  }
  if (n < 1 || n > 30 || rho.rows() != (Eigen::Index{1} << n)) {
    throw DimensionError("partial_trace: matrix side " +
                         std::to_string(rho.rows()) + " is not 2^" +
                         std::to_string(n));
  }
  if (keep < 0 || keep >= n) {
    throw std::out_of_range("partial_trace: qubit " + std::to_string(keep) +
                            " out of range for n = " + std::to_string(n));
  }
  const Eigen::Index dim = rho.rows();
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - keep);
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (Eigen::Index rest = 0; rest < dim; ++rest) {
    if (rest & bit) {
      continue;
    }
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        out(a, b) += rho(rest | (a ? bit : 0), rest | (b ? bit : 0));
      }
    }
  }
  return out;
}

EigenPair2 eig_hermitian_2x2(const ComplexMatrix& h, double degeneracy_tol,
                             double hermiticity_tol) {
  if (h.rows() != 2 || h.cols() != 2) {
    throw DimensionError("eig_hermitian_2x2: expected a 2x2 matrix");
  }
  const double herm = hermiticity_residual(h);
  if (!(herm <= hermiticity_tol)) {
    throw std::invalid_argument("eig_hermitian_2x2: matrix is not Hermitian (residual " +
                                std::to_string(herm) + ")");
  }
  // h = m I + x sx + y sy + z sz
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex off = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  const double m = 0.5 * (a + d);
  const double x = off.real();
  const double y = -off.imag();
  const double z = 0.5 * (a - d);
  const double r = std::sqrt(x * x + y * y + z * z);

  EigenPair2 out;
  out.eigenvalues[0] = m + r;
  out.eigenvalues[1] = m - r;
  out.degenerate = 2.0 * r < degeneracy_tol;
  if (out.degenerate) {
    out.vectors = Matrix2c::Identity();
    return out;
  }
  // Pick the branch that avoids cancellation in r - |z|.
  Eigen::Vector2cd v;
  if (z >= 0.0) {
    v << Complex(r + z, 0.0), Complex(x, y);
  } else {
    v << Complex(x, -y), Complex(r - z, 0.0);
  }
  v.normalize();
  out.vectors.col(0) = v;
  out.vectors(0, 1) = -std::conj(v(1));
  out.vectors(1, 1) = std::conj(v(0));
  fix_column_phase(out.vectors, 0);
  fix_column_phase(out.vectors, 1);
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance: shape mismatch " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  return (a - b).norm();
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermiticity_residual: matrix is not square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      return false;
    }
  }
  return true;
}

}  // namespace lucheck
