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

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace lucheck::optimize {

struct NelderMeadOptions {
  double initial_step = 0.5;
  // Converged when f_max - f_min <= f_tol (plus 1e-14 relative) or the
  // simplex diameter drops to x_tol.
  double f_tol = 1e-20;
  double x_tol = 1e-10;
  long max_evaluations = 20000;
  // Restart from the best vertex after convergence (fresh simplex), guards
  // against collapsed simplices.
  int max_rebuilds = 3;
  // Stop immediately once f drops to this value.
  double f_target = 0.0;
};

struct MinimizeResult {
  Eigen::VectorXd x;
  double f = 0.0;
  long evaluations = 0;
  bool budget_exhausted = false;
};

MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

/// Minimum of f on [lo, hi] by golden-section search to the given resolution.
/// Returns {argmin, f(argmin)}.
std::pair<double, double> golden_section(const std::function<double(double)>& f, double lo,
                                         double hi, double resolution);

struct LeastSquaresOptions {
  int max_iterations = 100;
  double fd_step = 1e-6;
  double step_tol = 1e-15;
  double residual_target = 0.0;
};

/// Levenberg-Marquardt on ||r(x)||^2 with a central-difference Jacobian.
MinimizeResult levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residuals,
    const Eigen::VectorXd& start, const LeastSquaresOptions& options = {});

}  // namespace lucheck::optimize
