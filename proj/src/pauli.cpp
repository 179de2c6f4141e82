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

#include "lucheck/pauli.hpp"

#include <cmath>

namespace lucheck {

namespace {

std::size_t interleaved_index(Eigen::Index row, Eigen::Index col, int n) {
  std::size_t out = 0;
  for (int q = 0; q < n; ++q) {
    const int shift = n - 1 - q;
    const std::size_t r = static_cast<std::size_t>((row >> shift) & 1);
    const std::size_t c = static_cast<std::size_t>((col >> shift) & 1);
    out = (out << 2) | (r << 1) | c;
  }
  return out;
}

}  // namespace

PauliCoefficients PauliCoefficients::zeros(int n) {
  return PauliCoefficients{n, std::vector<double>(std::size_t{1} << (2 * n), 0.0)};
}

std::string pauli_label(std::size_t index, int n) {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string out(static_cast<std::size_t>(n), 'I');
  for (int q = n - 1; q >= 0; --q) {
    out[static_cast<std::size_t>(q)] = kNames[index & 3u];
    index >>= 2;
  }
  return out;
}

PauliCoefficients expand(const NQubitState& s) { return expand_operator(s.matrix()); }

// The matrix is regrouped as a tensor with one base-4 digit (row bit, col bit)
// per qubit. On each digit, Tr(M sigma) for a 2x2 block M is
//   I: m00 + m11   x: m01 + m10   y: i (m01 - m10)   z: m00 - m11.
PauliCoefficients expand_operator(const ComplexMatrix& m, double imag_tol) {
  const int n = qubit_count_for_dimension(m.rows());
  if (n < 0 || m.rows() != m.cols()) {
    throw DimensionError("expand: operator side must be a power of two");
  }
  const std::size_t total = std::size_t{1} << (2 * n);
  std::vector<Complex> t(total);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      t[interleaved_index(r, c, n)] = m(r, c);
    }
  }
  const Complex i_unit(0.0, 1.0);
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << (2 * (n - 1 - q));
    for (std::size_t base = 0; base < total; base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t i0 = base + off;
        const Complex m00 = t[i0];
        const Complex m01 = t[i0 + stride];
        const Complex m10 = t[i0 + 2 * stride];
        const Complex m11 = t[i0 + 3 * stride];
        t[i0] = m00 + m11;
        t[i0 + stride] = m01 + m10;
        t[i0 + 2 * stride] = i_unit * (m01 - m10);
        t[i0 + 3 * stride] = m00 - m11;
      }
    }
  }
  const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
  PauliCoefficients out = PauliCoefficients::zeros(n);
  for (std::size_t i = 0; i < total; ++i) {
    const Complex v = t[i] * scale;
    if (std::abs(v.imag()) > imag_tol) {
      throw NonHermitianCoefficients("coefficient " + pauli_label(i, n) +
                                     " has imaginary part " + std::to_string(v.imag()));
    }
    out.c[i] = v.real();
  }
  return out;
}

ComplexMatrix reconstruct(const PauliCoefficients& p) {
  const int n = p.n;
  const std::size_t total = p.size();
  std::vector<Complex> t(p.c.begin(), p.c.end());
  const Complex i_unit(0.0, 1.0);
  // Inverse of the expand butterfly: c0 I + cx X + cy Y + cz Z as a 2x2 block.
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << (2 * (n - 1 - q));
    for (std::size_t base = 0; base < total; base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t i0 = base + off;
        const Complex c0 = t[i0];
        const Complex cx = t[i0 + stride];
        const Complex cy = t[i0 + 2 * stride];
        const Complex cz = t[i0 + 3 * stride];
        t[i0] = c0 + cz;
        t[i0 + stride] = cx - i_unit * cy;
        t[i0 + 2 * stride] = cx + i_unit * cy;
        t[i0 + 3 * stride] = c0 - cz;
      }
    }
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      out(r, c) = t[interleaved_index(r, c, n)];
    }
  }
  return out;
}

PauliCoefficients rotate_phase(const PauliCoefficients& p, int k, double omega) {
  if (k < 0 || k >= p.n) {
    throw std::out_of_range("rotate_phase: qubit " + std::to_string(k) +
                            " out of range for n = " + std::to_string(p.n));
  }
  PauliCoefficients out = p;
  const double cs = std::cos(2.0 * omega);
  const double sn = std::sin(2.0 * omega);
  const std::size_t stride = p.stride(k);
  for (std::size_t base = 0; base < p.size(); base += 4 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t ix = base + off + stride;
      const std::size_t iy = ix + stride;
      const double cx = p.c[ix];
      const double cy = p.c[iy];
      out.c[ix] = cx * cs + cy * sn;
      out.c[iy] = -cx * sn + cy * cs;
    }
  }
  return out;
}

Matrix2c phase_unitary(double omega) {
  Matrix2c d = Matrix2c::Zero();
  d(0, 0) = std::polar(1.0, omega);
  d(1, 1) = std::polar(1.0, -omega);
  return d;
}

double operator_distance(const PauliCoefficients& a, const PauliCoefficients& b) {
  if (a.n != b.n || a.size() != b.size()) {
    throw DimensionError("operator_distance: qubit count mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.c[i] - b.c[i];
    sum += d * d;
  }
  return std::sqrt(sum * static_cast<double>(std::size_t{1} << a.n));
}

}  // namespace lucheck
