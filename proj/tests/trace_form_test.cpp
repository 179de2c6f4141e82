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

#include "lucheck/trace_form.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "lucheck/oracle.hpp"
#include "test_util.hpp"

using namespace lucheck;
using namespace lucheck::testing;

TEST(to_trace_form, product_of_plus_states) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto plus_plus = pure({0.5, 0.5, 0.5, 0.5});
  const auto t = to_trace_form(plus_plus);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  EXPECT_LE(frobenius_distance(t.state.matrix(), expected), 1e-14);
  for (const auto& f : t.frames) {
    EXPECT_FALSE(f.maximally_mixed);
    EXPECT_NEAR(std::abs(f.V(0, 0)), r, 1e-14);
  }
}

TEST(to_trace_form, schmidt_eigenvalues) {
  const auto t = to_trace_form(schmidt_state(std::numbers::pi / 8));
  // cos^2(pi/8) and sin^2(pi/8)
  const double major = (2.0 + std::sqrt(2.0)) / 4.0;
  for (const auto& f : t.frames) {
    EXPECT_NEAR(f.eigenvalues[0], major, 1e-15);
    EXPECT_NEAR(f.eigenvalues[1], 1.0 - major, 1e-15);
    EXPECT_FALSE(f.maximally_mixed);
  }
  EXPECT_LE(frobenius_distance(t.state.matrix(), schmidt_state(std::numbers::pi / 8).matrix()),
            1e-14);
}

TEST(to_trace_form, ghz_marginals_are_flagged) {
  const auto t = to_trace_form(ghz_state(3));
  const auto mask = t.maximally_mixed_mask();
  ASSERT_EQ(mask.size(), 3u);
  for (std::size_t q = 0; q < 3; ++q) {
    EXPECT_TRUE(mask[q]);
    EXPECT_EQ(t.frames[q].V, Matrix2c::Identity());
  }
  EXPECT_EQ(t.state.matrix(), ghz_state(3).matrix());
}

TEST(to_trace_form, invariants) {
  Rng rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const auto s = capped_random_state(n, 1 + trial % 3, rng);
    const auto t = to_trace_form(s);
    ASSERT_EQ(t.frames.size(), static_cast<std::size_t>(n));
    const auto before = s.spectrum();
    const auto after = t.state.spectrum();
    for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(before[k], after[k], 1e-12);
    for (int q = 0; q < n; ++q) {
      const auto& f = t.frames[static_cast<std::size_t>(q)];
      const ComplexMatrix m = reduced_qubit(t.state, q);
      EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-12);
      EXPECT_NEAR(m(0, 0).real(), f.eigenvalues[0], 1e-12);
      EXPECT_NEAR(m(1, 1).real(), f.eigenvalues[1], 1e-12);
      EXPECT_GE(f.eigenvalues[0], f.eigenvalues[1]);
      EXPECT_LE((f.V.adjoint() * f.V - Matrix2c::Identity()).norm(), 1e-12);
      EXPECT_NEAR(f.eigenvalues[0] - f.eigenvalues[1], f.bloch.norm, 1e-12);
    }
  }
}

TEST(to_trace_form, idempotent_and_deterministic) {
  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_state(3, 2, rng);
    const auto t1 = to_trace_form(s);
    const auto t2 = to_trace_form(s);
    EXPECT_EQ(t1.state.matrix(), t2.state.matrix());
    const auto again = to_trace_form(t1.state);
    EXPECT_LE(frobenius_distance(again.state.matrix(), t1.state.matrix()), 1e-12);
    for (const auto& f : again.frames) {
      EXPECT_LE((f.V - Matrix2c::Identity()).norm(), 1e-10);
    }
  }
}

TEST(to_trace_form, local_unitary_orbits_differ_by_diagonal_phases) {
  Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const auto s = capped_random_state(n, 1 + trial % 2, rng);
    const auto rotated = apply_local_unitaries(s, haar_local_unitaries(n, rng));
    const ComplexMatrix a = to_trace_form(s).state.matrix();
    const ComplexMatrix b = to_trace_form(rotated).state.matrix();
    EXPECT_LE((a.cwiseAbs() - b.cwiseAbs()).norm(), 1e-9);
  }
}

TEST(conjugate_local, matches_kron) {
  Rng rng(103);
  const auto s = random_state(2, 3, rng);
  const auto us = haar_local_unitaries(2, rng);
  const ComplexMatrix u = kron(us[0], us[1]);
  EXPECT_LE(frobenius_distance(conjugate_local(s.matrix(), us), u * s.matrix() * u.adjoint()),
            1e-14);
}
