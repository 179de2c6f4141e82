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
#include <numbers>

#include "gtest/gtest.h"

#include "lucheck/oracle.hpp"
#include "test_util.hpp"

using namespace lucheck;
using namespace lucheck::testing;

namespace {

// Tr(rho sigma_alpha) / 2^n by building each Pauli string explicitly.
std::vector<double> brute_force_coefficients(const ComplexMatrix& rho, int n) {
  const std::size_t total = std::size_t{1} << (2 * n);
  std::vector<double> out(total);
  for (std::size_t alpha = 0; alpha < total; ++alpha) {
    std::vector<Matrix2c> factors;
    for (int q = 0; q < n; ++q) {
      factors.push_back(pauli(static_cast<int>((alpha >> (2 * (n - 1 - q))) & 3u)));
    }
    const ComplexMatrix string = kron_all(factors);
    out[alpha] = (rho * string).trace().real() / std::ldexp(1.0, n);
  }
  return out;
}

double max_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace

TEST(pauli_label, digits) {
  EXPECT_EQ(pauli_label(0, 2), "II");
  EXPECT_EQ(pauli_label(1, 2), "IX");
  EXPECT_EQ(pauli_label(4 * 2 + 3, 2), "YZ");
  EXPECT_EQ(pauli_label(0b11100100, 4), "ZYXI");
}

TEST(expand, single_qubit_examples) {
  const auto zero = expand(pure({1.0, 0.0}));
  EXPECT_NEAR(zero[0], 0.5, 1e-15);
  EXPECT_NEAR(zero[1], 0.0, 1e-15);
  EXPECT_NEAR(zero[2], 0.0, 1e-15);
  EXPECT_NEAR(zero[3], 0.5, 1e-15);

  const auto plus_i = expand(pure({1.0, Complex(0.0, 1.0)}));
  EXPECT_NEAR(plus_i[2], 0.5, 1e-15);
}

TEST(expand, bell_coefficients) {
  const auto p = expand(bell_state());
  ASSERT_EQ(p.size(), 16u);
  for (std::size_t alpha = 0; alpha < 16; ++alpha) {
    const std::string label = pauli_label(alpha, 2);
    double expected = 0.0;
    if (label == "II" || label == "XX" || label == "ZZ") expected = 0.25;
    if (label == "YY") expected = -0.25;
    EXPECT_NEAR(p[alpha], expected, 1e-15) << label;
  }
}

TEST(expand, matches_trace_oracle) {
  Rng rng(61);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto s = capped_random_state(n, 1 + trial % 3, rng);
      const auto p = expand(s);
      EXPECT_LE(max_difference(p.c, brute_force_coefficients(s.matrix(), n)), 1e-14);
    }
  }
}

TEST(expand, rejects_non_hermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(expand_operator(m), NonHermitianCoefficients);
  EXPECT_THROW(expand_operator(ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST(reconstruct, round_trip) {
  Rng rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const auto s = capped_random_state(n, 1 + trial % 4, rng);
    EXPECT_LE(frobenius_distance(reconstruct(expand(s)), s.matrix()), 1e-12);
  }
}

TEST(expand, linear) {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h1 = random_hermitian(8, rng);
    const auto h2 = random_hermitian(8, rng);
    const double a = rng.normal();
    const double b = rng.normal();
    const auto lhs = expand_operator(a * h1 + b * h2);
    const auto p1 = expand_operator(h1);
    const auto p2 = expand_operator(h2);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      EXPECT_NEAR(lhs[k], a * p1[k] + b * p2[k], 1e-12);
    }
  }
}

TEST(rotate_phase, examples) {
  const double pi = std::numbers::pi;
  auto p = PauliCoefficients::zeros(1);
  p[0] = 0.5;
  p[1] = 0.5;
  const auto q = rotate_phase(p, 0, pi / 4);
  EXPECT_NEAR(q[1], 0.0, 1e-15);
  EXPECT_NEAR(q[2], -0.5, 1e-15);

  const auto same = rotate_phase(p, 0, pi);
  EXPECT_NEAR(same[1], 0.5, 1e-15);
  EXPECT_NEAR(same[2], 0.0, 1e-15);

  EXPECT_THROW(rotate_phase(p, 1, 0.1), std::out_of_range);
}

TEST(rotate_phase, matches_direct_conjugation) {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const auto s = capped_random_state(n, 1 + trial % 3, rng);
    const int k = trial % n;
    const double omega = 2 * std::numbers::pi * rng.uniform();
    std::vector<Matrix2c> factors(static_cast<std::size_t>(n), Matrix2c::Identity());
    factors[static_cast<std::size_t>(k)] = phase_unitary(omega);
    const auto direct = expand_operator(conjugate_local(s.matrix(), factors));
    EXPECT_LE(max_difference(rotate_phase(expand(s), k, omega).c, direct.c), 1e-13);
  }
}

TEST(rotate_phase, group_properties) {
  Rng rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const auto p = expand(random_state(n, 2, rng));
    const int k = trial % n;
    const double w1 = 4 * rng.uniform();
    const double w2 = 4 * rng.uniform();
    const auto rotated = rotate_phase(p, k, w1);
    double before = 0.0;
    double after = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) {
      before += p[a] * p[a];
      after += rotated[a] * rotated[a];
    }
    EXPECT_NEAR(before, after, 1e-14);
    EXPECT_LE(max_difference(rotate_phase(p, k, w1 + std::numbers::pi).c, rotated.c), 1e-13);
    EXPECT_LE(max_difference(rotate_phase(rotated, k, w2).c, rotate_phase(p, k, w1 + w2).c),
              1e-13);
    EXPECT_LE(max_difference(rotate_phase(rotated, k, -w1).c, p.c), 1e-13);
  }
}

TEST(operator_distance, matches_frobenius) {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = random_state(n, 2, rng);
    const auto b = random_state(n, 1, rng);
    EXPECT_NEAR(operator_distance(expand(a), expand(b)),
                frobenius_distance(a.matrix(), b.matrix()), 1e-12);
  }
}
