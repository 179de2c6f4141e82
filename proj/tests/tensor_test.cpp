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

#include "gtest/gtest.h"

#include "lucheck/random.hpp"
#include "test_util.hpp"

using namespace lucheck;
using lucheck::testing::random_hermitian;
using lucheck::testing::random_matrix;

TEST(kron, identities) {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(kron(i2, i2), ComplexMatrix(ComplexMatrix::Identity(4, 4)));
}

TEST(kron, sigma_x_sigma_z) {
  const ComplexMatrix m = kron(pauli(1), pauli(3));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1;
  expected(1, 3) = -1;
  expected(2, 0) = 1;
  expected(3, 1) = -1;
  EXPECT_EQ(m, expected);
}

TEST(kron, associative_and_bilinear) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(2, 2, rng);
    const ComplexMatrix c = random_matrix(2, 2, rng);
    EXPECT_LE(frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    const Complex s = rng.complex_normal();
    EXPECT_LE(frobenius_distance(kron(s * a + c, b), s * kron(a, b) + kron(c, b)), 1e-12);
    EXPECT_LE(frobenius_distance(kron(a, s * b + c), s * kron(a, b) + kron(a, c)), 1e-12);
  }
}

TEST(kron, rejects_oversized_result) {
  const ComplexMatrix big = ComplexMatrix::Identity(64, 64);
  EXPECT_THROW(kron(big, big, 1024), std::length_error);
}

TEST(partial_trace, product_state_returns_factor) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix2c ra = lucheck::random_mixed_state(1, 2, rng).matrix();
    const Matrix2c rb = lucheck::random_mixed_state(1, 2, rng).matrix();
    const ComplexMatrix rho = kron(ra, rb);
    EXPECT_LE(frobenius_distance(partial_trace(rho, 2, 0), ra), 1e-12);
    EXPECT_LE(frobenius_distance(partial_trace(rho, 2, 1), rb), 1e-12);
  }
}

TEST(partial_trace, bell_marginal_is_maximally_mixed) {
  const ComplexMatrix rho = lucheck::testing::bell_state().matrix();
  EXPECT_LE(frobenius_distance(partial_trace(rho, 2, 0), 0.5 * ComplexMatrix::Identity(2, 2)),
            1e-15);
}

// Brute force over amplitude indices, independent of the density matrix.
static ComplexMatrix marginal_from_amplitudes(const std::vector<Complex>& psi, int n, int keep) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  const std::size_t dim = psi.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      bool same_rest = true;
      for (int q = 0; q < n; ++q) {
        if (q == keep) continue;
        const int shift = n - 1 - q;
        same_rest = same_rest && (((i >> shift) & 1) == ((j >> shift) & 1));
      }
      if (!same_rest) continue;
      const int a = static_cast<int>((i >> (n - 1 - keep)) & 1);
      const int b = static_cast<int>((j >> (n - 1 - keep)) & 1);
      out(a, b) += psi[i] * std::conj(psi[j]);
    }
  }
  return out;
}

TEST(partial_trace, w_state_matches_index_summation) {
  const auto amps = lucheck::testing::w_amplitudes();
  const ComplexMatrix oracle = marginal_from_amplitudes(amps, 3, 0);
  ComplexMatrix frozen = ComplexMatrix::Zero(2, 2);
  frozen(0, 0) = 2.0 / 3.0;
  frozen(1, 1) = 1.0 / 3.0;
  EXPECT_LE(frobenius_distance(oracle, frozen), 1e-15);
  const ComplexMatrix rho = lucheck::testing::w_state().matrix();
  for (int q = 0; q < 3; ++q) {
    EXPECT_LE(frobenius_distance(partial_trace(rho, 3, q), marginal_from_amplitudes(amps, 3, q)),
              1e-14);
  }
}

TEST(partial_trace, preserves_trace_on_random_states) {
  Rng rng(17);
  for (int n = 1; n <= 4; ++n) {
    const auto s = lucheck::random_mixed_state(n, 3 > (1 << n) ? 1 : 3, rng);
    for (int q = 0; q < n; ++q) {
      EXPECT_NEAR(partial_trace(s.matrix(), n, q).trace().real(), 1.0, 1e-12);
    }
  }
}

TEST(partial_trace, errors) {
  const ComplexMatrix rect = ComplexMatrix::Zero(4, 2);
  EXPECT_THROW(partial_trace(rect, 2, 0), DimensionError);
  const ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
  EXPECT_THROW(partial_trace(rho, 2, 2), std::out_of_range);
  EXPECT_THROW(partial_trace(rho, 2, -1), std::out_of_range);
  EXPECT_THROW(partial_trace(rho, 3, 0), DimensionError);
}

TEST(eig_hermitian_2x2, already_diagonal) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 0.7;
  h(1, 1) = 0.3;
  const auto e = eig_hermitian_2x2(h);
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], 0.7);
  EXPECT_DOUBLE_EQ(e.eigenvalues[1], 0.3);
  EXPECT_LE((e.vectors - Matrix2c::Identity()).norm(), 1e-15);
  EXPECT_FALSE(e.degenerate);
}

TEST(eig_hermitian_2x2, sigma_x_eigenpair) {
  const ComplexMatrix h = 0.5 * (pauli(0) + 0.8 * pauli(1));
  const auto e = eig_hermitian_2x2(h);
  EXPECT_NEAR(e.eigenvalues[0], 0.9, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 0.1, 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2c expected;
  expected << r, r, r, -r;
  EXPECT_LE((e.vectors - expected).norm(), 1e-15);
}

TEST(eig_hermitian_2x2, maximally_mixed_is_degenerate) {
  const auto e = eig_hermitian_2x2(0.5 * ComplexMatrix::Identity(2, 2));
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], 0.5);
  EXPECT_DOUBLE_EQ(e.eigenvalues[1], 0.5);
  EXPECT_TRUE(e.degenerate);
}

TEST(eig_hermitian_2x2, random_reconstruction_and_conventions) {
  Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexMatrix h = random_hermitian(2, rng);
    const auto e = eig_hermitian_2x2(h);
    ASSERT_GE(e.eigenvalues[0], e.eigenvalues[1]);
    Matrix2c d = Matrix2c::Zero();
    d(0, 0) = e.eigenvalues[0];
    d(1, 1) = e.eigenvalues[1];
    EXPECT_LE((e.vectors * d * e.vectors.adjoint() - h).norm(), 1e-12);
    EXPECT_LE((e.vectors.adjoint() * e.vectors - Matrix2c::Identity()).norm(), 1e-12);
    for (int col = 0; col < 2; ++col) {
      const int row =
          std::abs(e.vectors(1, col)) > std::abs(e.vectors(0, col)) * (1 + 1e-12) ? 1 : 0;
      EXPECT_EQ(e.vectors(row, col).imag(), 0.0);
      EXPECT_GE(e.vectors(row, col).real(), 0.0);
    }
  }
}

TEST(eig_hermitian_2x2, rejects_non_hermitian) {
  ComplexMatrix h = ComplexMatrix::Identity(2, 2);
  h(0, 1) = 0.3;
  EXPECT_THROW(eig_hermitian_2x2(h), std::invalid_argument);
  EXPECT_THROW(eig_hermitian_2x2(ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST(frobenius_distance, basic_values) {
  Rng rng(3);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  EXPECT_EQ(frobenius_distance(a, a), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_distance(pauli(0), pauli(1)), 2.0);
  EXPECT_THROW(frobenius_distance(a, ComplexMatrix::Zero(2, 2)), DimensionError);
}

TEST(frobenius_distance, triangle_inequality) {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix a = random_matrix(4, 4, rng);
    const ComplexMatrix b = random_matrix(4, 4, rng);
    const ComplexMatrix c = random_matrix(4, 4, rng);
    EXPECT_LE(frobenius_distance(a, c),
              frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-12);
  }
}
