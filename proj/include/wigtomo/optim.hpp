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


// Quasi-Newton (BFGS) minimization with central finite-difference gradients
// and Armijo backtracking. Accepted costs never increase.

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace wigtomo {

struct OptimOptions {
  double finite_difference_step = 1e-6;
  double gradient_tolerance = 1e-10;
  double cost_tolerance = 1e-15;  // stop when a step gains less than this fraction of the cost
  int max_iterations = 200;
};

struct OptimResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> cost_trace;         // initial value plus one per accepted step
  std::vector<Eigen::VectorXd> x_trace;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

Eigen::VectorXd central_gradient(const Objective& f, const Eigen::VectorXd& x, double h);

/// DomainError if the objective is not finite at x0.
OptimResult minimize_bfgs(const Objective& f, const Eigen::VectorXd& x0, const OptimOptions& opts);

}  // namespace wigtomo
