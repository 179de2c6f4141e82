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

#include "lucheck/phase_match.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "lucheck/optimize.hpp"

namespace lucheck {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// In the charge basis each active slot's (c_x, c_y) pair is replaced by
//   a = (c_x - i c_y) / 2  (charge +1),  b = (c_x + i c_y) / 2  (charge -1),
// so conjugating qubit k by diag(e^{iw}, e^{-iw}) multiplies a term by
// e^{i q_k theta_k} with theta_k = 2 w. A real-basis squared norm equals the
// charge-basis one weighted by 2^(number of charged slots).
std::vector<Complex> to_charge_basis(const PauliCoefficients& p, const std::vector<bool>& active) {
  std::vector<Complex> t(p.c.begin(), p.c.end());
  const Complex i_unit(0.0, 1.0);
  for (int q = 0; q < p.n; ++q) {
    if (!active[static_cast<std::size_t>(q)]) continue;
    const std::size_t stride = p.stride(q);
    for (std::size_t base = 0; base < t.size(); base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t ix = base + off + stride;
        const Complex cx = t[ix];
        const Complex cy = t[ix + stride];
        t[ix] = 0.5 * (cx - i_unit * cy);
        t[ix + stride] = 0.5 * (cx + i_unit * cy);
      }
    }
  }
  return t;
}

struct Term {
  std::size_t index;
  Complex a;
  Complex a_prime;
  double weight;
};

// Sum over terms of w |a' - a e^{i q.theta}|^2, with the theta-independent
// part folded into a constant.
class ChargeProblem {
 public:
  ChargeProblem(const PauliCoefficients& p, const PauliCoefficients& p_prime,
                const std::vector<bool>& active)
      : n_(p.n), scale_(static_cast<double>(std::size_t{1} << p.n)) {
    for (int q = 0; q < n_; ++q) {
      if (active[static_cast<std::size_t>(q)]) qubits_.push_back(q);
    }
    const auto a = to_charge_basis(p, active);
    const auto ap = to_charge_basis(p_prime, active);
    const std::size_t m = qubits_.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == Complex(0.0) && ap[i] == Complex(0.0)) continue;
      std::vector<std::int8_t> q(m, 0);
      int charged = 0;
      for (std::size_t s = 0; s < m; ++s) {
        const int d = p.digit(i, qubits_[s]);
        q[s] = d == 1 ? 1 : (d == 2 ? -1 : 0);
        charged += q[s] != 0;
      }
      const double w = static_cast<double>(1u << charged);
      if (charged == 0 || a[i] == Complex(0.0)) {
        constant_ += w * std::norm(ap[i] - a[i]);
      }
      if (charged == 0) continue;
      all_terms_.push_back(Term{i, a[i], ap[i], w});
      all_charges_.insert(all_charges_.end(), q.begin(), q.end());
    }
  }

  int n() const { return n_; }
  std::size_t num_slots() const { return qubits_.size(); }
  int qubit(std::size_t slot) const { return qubits_[slot]; }
  std::size_t num_terms() const { return all_terms_.size(); }
  const Term& term(std::size_t t) const { return all_terms_[t]; }
  int charge(std::size_t t, std::size_t slot) const {
    return all_charges_[t * qubits_.size() + slot];
  }

  double residual(const std::vector<double>& theta) {
    ++evaluations_;
    double sum = constant_;
    const std::size_t m = qubits_.size();
    for (std::size_t t = 0; t < all_terms_.size(); ++t) {
      const Term& term = all_terms_[t];
      if (term.a == Complex(0.0)) continue;
      double phi = 0.0;
      const std::int8_t* q = &all_charges_[t * m];
      for (std::size_t s = 0; s < m; ++s) phi += q[s] * theta[s];
      sum += term.weight * std::norm(term.a_prime - term.a * std::polar(1.0, phi));
    }
    return std::sqrt(scale_ * std::max(sum, 0.0));
  }

  // Gauss-Newton on the angles in `slots`, pseudo-inverse for the
  // rank-deficient directions a symmetric state leaves.
  void polish(std::vector<double>& theta, const std::vector<std::size_t>& slots) {
    if (slots.empty()) return;
    const std::size_t m = qubits_.size();
    const auto k = static_cast<Eigen::Index>(slots.size());
    double current = residual(theta);
    for (int iter = 0; iter < 30 && current > 0.0; ++iter) {
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
      Eigen::VectorXd g = Eigen::VectorXd::Zero(k);
      for (std::size_t t = 0; t < all_terms_.size(); ++t) {
        const Term& term = all_terms_[t];
        if (term.a == Complex(0.0)) continue;
        const std::int8_t* q = &all_charges_[t * m];
        double phi = 0.0;
        for (std::size_t s = 0; s < m; ++s) phi += q[s] * theta[s];
        const Complex rotated = term.a * std::polar(1.0, phi);
        const Complex r = term.a_prime - rotated;
        // dr/dtheta_s = -i q_s rotated
        const double gi = term.weight * (Complex(0.0, 1.0) * std::conj(rotated) * r).real();
        const double hw = term.weight * std::norm(term.a);
        for (Eigen::Index x = 0; x < k; ++x) {
          const int qx = q[slots[static_cast<std::size_t>(x)]];
          if (qx == 0) continue;
          g(x) += qx * gi;
          for (Eigen::Index y = 0; y < k; ++y) {
            h(x, y) += qx * q[slots[static_cast<std::size_t>(y)]] * hw;
          }
        }
      }
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(h);
      cod.setThreshold(1e-12);
      const Eigen::VectorXd step = cod.solve(-g);
      if (!step.allFinite()) break;
      std::vector<double> candidate = theta;
      for (Eigen::Index x = 0; x < k; ++x) {
        candidate[slots[static_cast<std::size_t>(x)]] += step(x);
      }
      const double next = residual(candidate);
      if (!(next < current)) break;
      theta = std::move(candidate);
      current = next;
      if (step.lpNorm<Eigen::Infinity>() < 1e-15) break;
    }
  }

  long evaluations() const { return evaluations_; }

 private:
  int n_;
  double scale_;
  std::vector<int> qubits_;
  std::vector<Term> all_terms_;
  std::vector<std::int8_t> all_charges_;
  double constant_ = 0.0;
  long evaluations_ = 0;
};

struct PeelResult {
  std::vector<std::optional<double>> theta;  // per slot
  std::vector<bool> is_free;                 // per slot
  int anchored = 0;
  int peeled = 0;
  int free = 0;
};

// Solves angles from terms with exactly one unresolved charged slot. The
// first round uses only the resolved-free terms, i.e. single-qubit anchors.
PeelResult peel(const ChargeProblem& problem, const std::vector<bool>& term_allowed,
                double floor, bool detect_free) {
  const std::size_t m = problem.num_slots();
  PeelResult out;
  out.theta.assign(m, std::nullopt);
  out.is_free.assign(m, false);

  if (detect_free) {
    std::vector<bool> depends(m, false);
    for (std::size_t t = 0; t < problem.num_terms(); ++t) {
      const Term& term = problem.term(t);
      if (std::max(std::abs(term.a), std::abs(term.a_prime)) <= floor) continue;
      for (std::size_t s = 0; s < m; ++s) {
        if (problem.charge(t, s) != 0) depends[s] = true;
      }
    }
    for (std::size_t s = 0; s < m; ++s) {
      if (!depends[s]) {
        out.theta[s] = 0.0;
        out.is_free[s] = true;
        ++out.free;
      }
    }
  }

  for (int round = 0;; ++round) {
    const auto known = out.theta;
    std::vector<std::size_t> best(m, problem.num_terms());
    std::vector<double> best_mag(m, floor);
    for (std::size_t t = 0; t < problem.num_terms(); ++t) {
      if (!term_allowed[t]) continue;
      std::size_t slot = m;
      int unresolved = 0;
      for (std::size_t s = 0; s < m && unresolved < 2; ++s) {
        if (problem.charge(t, s) != 0 && !known[s]) {
          slot = s;
          ++unresolved;
        }
      }
      if (unresolved != 1) continue;
      const double mag = std::abs(problem.term(t).a);
      if (mag > best_mag[slot]) {
        best_mag[slot] = mag;
        best[slot] = t;
      }
    }
    int solved = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (known[s] || best[s] == problem.num_terms()) continue;
      const std::size_t t = best[s];
      const Term& term = problem.term(t);
      double phase = std::arg(term.a_prime * std::conj(term.a));
      for (std::size_t j = 0; j < m; ++j) {
        if (j != s && known[j]) phase -= problem.charge(t, j) * *known[j];
      }
      out.theta[s] = problem.charge(t, s) * phase;
      ++solved;
    }
    if (solved == 0) break;
    (round == 0 ? out.anchored : out.peeled) += solved;
  }
  return out;
}

std::vector<bool> allow_all(const ChargeProblem& problem) {
  return std::vector<bool>(problem.num_terms(), true);
}

}  // namespace

PhaseAssignment PhaseAssignment::zeros(int n) {
  return PhaseAssignment{std::vector<double>(static_cast<std::size_t>(n), 0.0),
                         std::vector<bool>(static_cast<std::size_t>(n), false)};
}

double reduce_mod_pi(double omega) {
  double r = std::fmod(omega, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  if (r >= std::numbers::pi) r -= std::numbers::pi;
  return r;
}

const char* to_string(PhaseMatchStatus status) {
  switch (status) {
    case PhaseMatchStatus::kMatched:
      return "matched";
    case PhaseMatchStatus::kNoSolution:
      return "no_solution";
    case PhaseMatchStatus::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

PauliCoefficients apply_phases(const PauliCoefficients& p, const PhaseAssignment& phases) {
  PauliCoefficients out = p;
  for (int q = 0; q < p.n; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    if (q < static_cast<int>(phases.active.size()) && phases.active[uq] &&
        phases.omegas[uq] != 0.0) {
      out = rotate_phase(out, q, phases.omegas[uq]);
    }
  }
  return out;
}

std::vector<std::optional<double>> anchor_phases(const PauliCoefficients& p,
                                                 const PauliCoefficients& p_prime,
                                                 const std::vector<bool>& active,
                                                 const std::vector<bool>& identity_required,
                                                 double floor) {
  ChargeProblem problem(p, p_prime, active);
  std::vector<bool> allowed(problem.num_terms(), true);
  for (std::size_t t = 0; t < problem.num_terms(); ++t) {
    for (int q = 0; q < p.n; ++q) {
      if (identity_required[static_cast<std::size_t>(q)] &&
          p.digit(problem.term(t).index, q) != 0) {
        allowed[t] = false;
        break;
      }
    }
  }
  const PeelResult peeled = peel(problem, allowed, floor, false);
  std::vector<std::optional<double>> out(static_cast<std::size_t>(p.n));
  for (std::size_t s = 0; s < problem.num_slots(); ++s) {
    if (peeled.theta[s]) {
      out[static_cast<std::size_t>(problem.qubit(s))] = reduce_mod_pi(0.5 * *peeled.theta[s]);
    }
  }
  return out;
}

PhaseMatchResult match_phases(const PauliCoefficients& p, const PauliCoefficients& p_prime,
                              const std::vector<bool>& active, double tol,
                              const PhaseSearchOptions& options) {
  if (p.n != p_prime.n || static_cast<int>(active.size()) != p.n) {
    throw DimensionError("match_phases: qubit counts differ");
  }
  ChargeProblem problem(p, p_prime, active);
  const std::size_t m = problem.num_slots();

  PhaseMatchResult out;
  out.phases = PhaseAssignment::zeros(p.n);
  out.phases.active = active;

  const PeelResult peeled = peel(problem, allow_all(problem), options.anchor_floor, true);
  out.anchored = peeled.anchored;
  out.peeled = peeled.peeled;
  out.free = peeled.free;

  std::vector<double> theta(m, 0.0);
  std::vector<std::size_t> stuck;
  std::vector<std::size_t> movable;
  for (std::size_t s = 0; s < m; ++s) {
    if (peeled.theta[s]) {
      theta[s] = *peeled.theta[s];
    } else {
      stuck.push_back(s);
    }
    if (!peeled.is_free[s]) {
      movable.push_back(s);
    }
  }

  bool budget_exceeded = false;
  bool grid_exhaustive = true;
  if (!stuck.empty()) {
    const int g = std::max(1, options.grid_points);
    const double step = kTwoPi / g;
    double best = problem.residual(theta);
    const std::size_t block_size =
        static_cast<std::size_t>(std::max(1, options.max_exhaustive_block));
    grid_exhaustive = stuck.size() <= block_size;
    const int sweeps = grid_exhaustive ? 1 : std::max(1, options.max_sweeps);
    for (int sweep = 0; sweep < sweeps && !budget_exceeded; ++sweep) {
      const double sweep_start = best;
      for (std::size_t b0 = 0; b0 < stuck.size() && !budget_exceeded; b0 += block_size) {
        const std::size_t b1 = std::min(stuck.size(), b0 + block_size);
        const std::size_t width = b1 - b0;
        long combos = 1;
        for (std::size_t i = 0; i < width; ++i) combos *= g;
        std::vector<double> best_theta = theta;
        std::vector<double> trial = theta;
        for (long c = 0; c < combos; ++c) {
          if (problem.evaluations() >= options.max_evaluations) {
            budget_exceeded = true;
            break;
          }
          long rem = c;
          for (std::size_t i = b0; i < b1; ++i) {
            trial[stuck[i]] = step * static_cast<double>(rem % g);
            rem /= g;
          }
          const double r = problem.residual(trial);
          if (r < best) {
            best = r;
            best_theta = trial;
          }
        }
        theta = best_theta;
      }
      if (!(best < sweep_start)) break;
    }
    out.grid_qubits.reserve(stuck.size());
    for (std::size_t s : stuck) out.grid_qubits.push_back(problem.qubit(s));

    // Coordinate golden-section refinement around the grid optimum.
    const double resolution = 2.0 * options.angle_resolution;
    for (int sweep = 0; sweep < 8; ++sweep) {
      const double before = problem.residual(theta);
      for (std::size_t s : stuck) {
        auto line = [&](double x) {
          std::vector<double> trial = theta;
          trial[s] = x;
          return problem.residual(trial);
        };
        const auto [x, fx] = optimize::golden_section(line, theta[s] - step, theta[s] + step,
                                                      resolution);
        if (fx < problem.residual(theta)) theta[s] = x;
      }
      if (!(problem.residual(theta) < before * (1.0 - 1e-9))) break;
    }
  }
  problem.polish(theta, movable);

  for (std::size_t s = 0; s < m; ++s) {
    out.phases.omegas[static_cast<std::size_t>(problem.qubit(s))] = reduce_mod_pi(0.5 * theta[s]);
  }
  out.residual = operator_distance(apply_phases(p, out.phases), p_prime);
  out.evaluations = problem.evaluations();
  out.exhaustive = !budget_exceeded && grid_exhaustive;
  if (out.residual <= tol) {
    out.status = PhaseMatchStatus::kMatched;
  } else {
    out.status = budget_exceeded ? PhaseMatchStatus::kBudgetExceeded : PhaseMatchStatus::kNoSolution;
  }
  return out;
}

PhaseMatchResult phase_match(const TraceForm& t, const TraceForm& t_prime, double tol,
                             const PhaseSearchOptions& options) {
  if (t.state.num_qubits() != t_prime.state.num_qubits()) {
    throw DimensionError("phase_match: qubit counts differ");
  }
  const int n = t.state.num_qubits();
  std::vector<bool> active(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    active[uq] = !t.frames[uq].maximally_mixed && !t_prime.frames[uq].maximally_mixed;
  }
  return match_phases(expand(t.state), expand(t_prime.state), active, tol, options);
}

}  // namespace lucheck
