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

#include "lucheck/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lucheck::optimize {

MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  const Eigen::Index dim = start.size();
  MinimizeResult best{start, 0.0, 0, false};
  auto eval = [&](const Eigen::VectorXd& x) {
    ++best.evaluations;
    return f(x);
  };
  best.f = eval(start);
  if (dim == 0 || best.f <= options.f_target) {
    return best;
  }

  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(dim + 1));
  std::vector<double> values(simplex.size());
  std::vector<std::size_t> order(simplex.size());

  for (int rebuild = 0; rebuild <= options.max_rebuilds; ++rebuild) {
    simplex[0] = best.x;
    values[0] = best.f;
    for (Eigen::Index i = 0; i < dim; ++i) {
      simplex[static_cast<std::size_t>(i + 1)] = best.x;
      simplex[static_cast<std::size_t>(i + 1)](i) += options.initial_step;
      values[static_cast<std::size_t>(i + 1)] = eval(simplex[static_cast<std::size_t>(i + 1)]);
    }
    const double f_before = best.f;

    while (true) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t lo = order.front();
      const std::size_t hi = order.back();
      const std::size_t second = order[order.size() - 2];

      double diameter = 0.0;
      for (const auto& v : simplex) {
        diameter = std::max(diameter, (v - simplex[lo]).lpNorm<Eigen::Infinity>());
      }
      const double spread = values[hi] - values[lo];
      if (values[lo] <= options.f_target || diameter <= options.x_tol ||
          spread <= options.f_tol + 1e-14 * std::abs(values[lo])) {
        break;
      }
      if (best.evaluations >= options.max_evaluations) {
        best.budget_exhausted = true;
        break;
      }

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i != hi) centroid += simplex[i];
      }
      centroid /= static_cast<double>(dim);

      const Eigen::VectorXd reflected = centroid + (centroid - simplex[hi]);
      const double f_reflected = eval(reflected);
      if (f_reflected < values[lo]) {
        const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[hi]);
        const double f_expanded = eval(expanded);
        if (f_expanded < f_reflected) {
          simplex[hi] = expanded;
          values[hi] = f_expanded;
        } else {
          simplex[hi] = reflected;
          values[hi] = f_reflected;
        }
        continue;
      }
      if (f_reflected < values[second]) {
        simplex[hi] = reflected;
        values[hi] = f_reflected;
        continue;
      }
      const bool outside = f_reflected < values[hi];
      const Eigen::VectorXd contracted =
          outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                  : Eigen::VectorXd(centroid + 0.5 * (simplex[hi] - centroid));
      const double f_contracted = eval(contracted);
      if (f_contracted < (outside ? f_reflected : values[hi])) {
        simplex[hi] = contracted;
        values[hi] = f_contracted;
        continue;
      }
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i == lo) continue;
        simplex[i] = simplex[lo] + 0.5 * (simplex[i] - simplex[lo]);
        values[i] = eval(simplex[i]);
      }
    }

    const auto it = std::min_element(values.begin(), values.end());
    const std::size_t arg = static_cast<std::size_t>(it - values.begin());
    if (*it < best.f) {
      best.f = *it;
      best.x = simplex[arg];
    }
    if (best.budget_exhausted || best.f <= options.f_target ||
        !(best.f < f_before) || best.evaluations >= options.max_evaluations) {
      break;
    }
  }
  return best;
}

std::pair<double, double> golden_section(const std::function<double(double)>& f, double lo,
                                         double hi, double resolution) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > resolution) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

MinimizeResult levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residuals,
    const Eigen::VectorXd& start, const LeastSquaresOptions& options) {
  MinimizeResult out{start, 0.0, 0, false};
  Eigen::VectorXd r = residuals(start);
  ++out.evaluations;
  double cost = r.squaredNorm();
  out.f = cost;
  const Eigen::Index dim = start.size();
  if (dim == 0) {
    return out;
  }
  double lambda = 1e-3;
  Eigen::MatrixXd jac(r.size(), dim);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (std::sqrt(cost) <= options.residual_target) {
      break;
    }
    for (Eigen::Index k = 0; k < dim; ++k) {
      Eigen::VectorXd xp = out.x;
      Eigen::VectorXd xm = out.x;
      xp(k) += options.fd_step;
      xm(k) -= options.fd_step;
      jac.col(k) = (residuals(xp) - residuals(xm)) / (2.0 * options.fd_step);
      out.evaluations += 2;
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda * (jtj.diagonal().array() + 1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd candidate = out.x + step;
      const Eigen::VectorXd r_candidate = residuals(candidate);
      ++out.evaluations;
      const double c_candidate = r_candidate.squaredNorm();
      if (c_candidate < cost) {
        out.x = candidate;
        r = r_candidate;
        cost = c_candidate;
        lambda = std::max(lambda * 0.2, 1e-12);
        improved = true;
        if (step.lpNorm<Eigen::Infinity>() <= options.step_tol) {
          iter = options.max_iterations;
        }
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) {
      break;
    }
  }
  out.f = cost;
  return out;
}

}  // namespace lucheck::optimize
