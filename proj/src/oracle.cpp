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

#include "lucheck/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lucheck/optimize.hpp"
#include "lucheck/trace_form.hpp"

namespace lucheck {

std::vector<Complex> random_pure_amplitudes(int n, Rng& rng) {
  if (n < 1 || n > kDefaultMaxQubits) {
    throw std::out_of_range("random_pure_amplitudes: n = " + std::to_string(n));
  }
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = rng.complex_normal();
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) {
    a *= inv;
  }
  return amps;
}

NQubitState random_pure_state(int n, Rng& rng) {
  const auto amps = random_pure_amplitudes(n, rng);
  return from_pure_amplitudes(amps);
}

NQubitState random_pure_state(int n, Seed seed) {
  Rng rng(seed);
  return random_pure_state(n, rng);
}

NQubitState random_mixed_state(int n, int rank, Rng& rng) {
  if (n < 1 || n > kDefaultMaxQubits) {
    throw std::out_of_range("random_mixed_state: n = " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (rank < 1 || rank > dim) {
    throw std::out_of_range("random_mixed_state: rank " + std::to_string(rank) +
                            " not in [1, " + std::to_string(dim) + "]");
  }
  ComplexMatrix g(dim, rank);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < rank; ++c) {
      g(r, c) = rng.complex_normal();
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_state(rho);
}

NQubitState random_mixed_state(int n, int rank, Seed seed) {
  Rng rng(seed);
  return random_mixed_state(n, rank, rng);
}

NQubitState random_state(int n, int rank, Rng& rng) {
  return rank == 1 ? random_pure_state(n, rng) : random_mixed_state(n, rank, rng);
}

NQubitState random_state_min_bloch(int n, int rank, double min_bloch, Rng& rng,
                                   int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    NQubitState s = random_state(n, rank, rng);
    bool ok = true;
    for (int q = 0; q < n && ok; ++q) {
      ok = bloch_vector(reduced_qubit(s, q)).norm >= min_bloch;
    }
    if (ok) {
      return s;
    }
  }
  throw std::runtime_error("random_state_min_bloch: no state with all Bloch norms >= " +
                           std::to_string(min_bloch) + " after " +
                           std::to_string(max_attempts) + " attempts");
}

Matrix2c haar_local_unitary(Rng& rng) {
  Eigen::Vector2cd z1(rng.complex_normal(), rng.complex_normal());
  Eigen::Vector2cd z2(rng.complex_normal(), rng.complex_normal());
  // Gram-Schmidt leaves R's diagonal real and positive.
  const Eigen::Vector2cd q1 = z1 / z1.norm();
  Eigen::Vector2cd q2 = z2 - q1.dot(z2) * q1;
  q2 /= q2.norm();
  Matrix2c u;
  u.col(0) = q1;
  u.col(1) = q2;
  return u;
}

Matrix2c haar_local_unitary(Seed seed) {
  Rng rng(seed);
  return haar_local_unitary(rng);
}

ComplexMatrix haar_unitary(Eigen::Index dim, Rng& rng) {
  ComplexMatrix z(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      z(r, c) = rng.complex_normal();
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) {
      q.col(i) *= d / std::abs(d);
    }
  }
  return q;
}

std::vector<Matrix2c> haar_local_unitaries(int n, Rng& rng) {
  std::vector<Matrix2c> us;
  us.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    us.push_back(haar_local_unitary(rng));
  }
  return us;
}

Matrix2c euler_unitary(double alpha, double beta, double gamma) {
  Matrix2c y;
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  y << c, s, -s, c;
  const Matrix2c za = Eigen::Vector2cd(std::polar(1.0, 0.5 * alpha),
                                       std::polar(1.0, -0.5 * alpha))
                          .asDiagonal();
  const Matrix2c zg = Eigen::Vector2cd(std::polar(1.0, 0.5 * gamma),
                                       std::polar(1.0, -0.5 * gamma))
                          .asDiagonal();
  return za * y * zg;
}

NQubitState apply_local_unitaries(const NQubitState& s, std::span<const Matrix2c> us,
                                  double unitarity_tol) {
  if (static_cast<int>(us.size()) != s.num_qubits()) {
    throw DimensionError("apply_local_unitaries: expected " +
                         std::to_string(s.num_qubits()) + " unitaries, got " +
                         std::to_string(us.size()));
  }
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double err = (us[i].adjoint() * us[i] - Matrix2c::Identity()).norm();
    if (!(err <= unitarity_tol)) {
      throw std::invalid_argument("apply_local_unitaries: factor " + std::to_string(i) +
                                  " is not unitary (residual " + std::to_string(err) + ")");
    }
  }
  return validate_state(conjugate_local(s.matrix(), us), s.num_qubits());
}

OracleResult lu_fit_oracle(const NQubitState& a, const NQubitState& b,
                           const OracleOptions& options) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("lu_fit_oracle: qubit counts differ");
  }
  const int n = a.num_qubits();
  const ComplexMatrix& ma = a.matrix();
  const ComplexMatrix& mb = b.matrix();

  auto unitaries_of = [n](const Eigen::VectorXd& x) {
    std::vector<Matrix2c> us;
    us.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      us.push_back(euler_unitary(x(3 * q), x(3 * q + 1), x(3 * q + 2)));
    }
    return us;
  };
  auto objective = [&](const Eigen::VectorXd& x) {
    const auto us = unitaries_of(x);
    return (mb - conjugate_local(ma, us)).squaredNorm();
  };

  optimize::NelderMeadOptions nm;
  nm.max_evaluations = options.max_evaluations_per_start;
  nm.f_target = options.tolerance * options.tolerance;
  nm.f_tol = nm.f_target;
  nm.x_tol = options.tolerance;

  Rng rng(options.seed);
  OracleResult out;
  out.residual = INFINITY;
  for (int start = 0; start < std::max(1, options.restarts); ++start) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(3 * n);
    if (start > 0) {
      for (Eigen::Index i = 0; i < x0.size(); ++i) {
        x0(i) = 4.0 * std::numbers::pi * rng.uniform();
      }
    }
    const auto r = optimize::nelder_mead(objective, x0, nm);
    out.evaluations += r.evaluations;
    out.budget_exhausted = out.budget_exhausted || r.budget_exhausted;
    const double residual = std::sqrt(std::max(r.f, 0.0));
    if (residual < out.residual) {
      out.residual = residual;
      out.unitaries = unitaries_of(r.x);
    }
    if (out.residual <= options.tolerance) {
      break;
    }
  }
  return out;
}

}  // namespace lucheck
