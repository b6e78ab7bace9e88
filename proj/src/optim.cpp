// Copyright 2026 The Wigtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wigtomo/optim.hpp"

#include <cmath>

#include "wigtomo/errors.hpp"

namespace wigtomo {

Eigen::VectorXd central_gradient(const Objective& f, const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd p = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    p(i) = x(i) + h;
    const double fp = f(p);
    p(i) = x(i) - h;
    const double fm = f(p);
    p(i) = x(i);
    g(i) = (fp - fm) / (2.0 * h);
  }
  return g;
}

OptimResult minimize_bfgs(const Objective& f, const Eigen::VectorXd& x0, const OptimOptions& opts) {
  const Eigen::Index n = x0.size();
  OptimResult out;
  out.x = x0;
  out.value = f(x0);
  if (!std::isfinite(out.value)) throw DomainError("objective is not finite at the start point");
  out.cost_trace.push_back(out.value);
  out.x_trace.push_back(x0);

  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd g = central_gradient(f, out.x, opts.finite_difference_step);

  for (int it = 0; it < opts.max_iterations; ++it) {
    if (!g.allFinite()) throw DomainError("objective gradient is not finite");
    if (g.norm() < opts.gradient_tolerance) {
      out.converged = true;
      break;
    }
    Eigen::VectorXd dir = -h_inv * g;
    double slope = g.dot(dir);
    if (slope >= 0.0) {
      // Curvature estimate went bad; fall back to steepest descent.
      h_inv.setIdentity();
      dir = -g;
      slope = -g.squaredNorm();
    }

    double step = 1.0;
    double trial = 0.0;
    Eigen::VectorXd x_new;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_new = out.x + step * dir;
      trial = f(x_new);
      if (std::isfinite(trial) && trial <= out.value + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || trial > out.value) {
      out.converged = true;  // no descent available at this resolution
      break;
    }

    const double gain = out.value - trial;
    const double scale = std::abs(out.value);
    const Eigen::VectorXd g_new = central_gradient(f, x_new, opts.finite_difference_step);
    const Eigen::VectorXd s = x_new - out.x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-16 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
      h_inv = (id - rho * s * y.transpose()) * h_inv * (id - rho * y * s.transpose()) +
              rho * s * s.transpose();
    }

    out.x = x_new;
    out.value = trial;
    g = g_new;
    ++out.iterations;
    out.cost_trace.push_back(out.value);
    out.x_trace.push_back(out.x);
    if (gain <= opts.cost_tolerance * scale) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace wigtomo
