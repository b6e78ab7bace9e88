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


// Reconstruction of an unknown gate from scaled droplets or scaled matrices:
// correlation-matrix start value, matched-filter iteration, cost
// minimization over quaternions or Pauli coefficients, and the adaptive
// single-rotation scheme.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wigtomo/droplet.hpp"
#include "wigtomo/tomography.hpp"

namespace wigtomo {

struct CostParams {
  double tolerance = 1e-4;  // max quaternion component change between iterations
  int max_iterations = 50;
  double finite_difference_step = 1e-6;
  int optimizer_max_iterations = 200;
  double gradient_tolerance = 1e-10;

  void validate() const;
};

struct ReconstructionReport {
  Quaternion estimate;                          // normalized, canonical (N = 1)
  std::optional<PauliCoefficients> coefficients;  // generalized path
  OperatorMatrix unitary;
  int iterations = 0;
  std::vector<Quaternion> quaternion_trace;     // iterations + 1 entries
  std::vector<double> cost_trace;               // iterations + 1 entries
  std::vector<double> fidelity_trace;           // filled only with a reference
  std::vector<bool> low_confidence;             // per component sign flags
  double noise_floor = 0.0;
  std::vector<std::string> warnings;
  // Adaptive scheme.
  std::vector<Complex> epsilon_trace;           // tr(U_a^dagger G_r) / 2^N per iteration
  std::vector<double> epsilon_magnitude_data;   // |eps| seen in the data
};

struct ZeroOrder {
  Quaternion q;
  std::vector<bool> low_confidence;
  int reference = 0;
};

/// Square roots of the (clamped) diagonal, signs from the row of the largest
/// component. Signs with |M[p][ref]| < 3 * noise_floor are flagged.
/// DegenerateInputError for an all-zero matrix.
ZeroOrder zero_order_detail(const CorrelationMatrix& m);
Quaternion zero_order_estimate(const CorrelationMatrix& m);

/// Matched-filter iteration on the four phase-adjusted droplets.
ReconstructionReport iterate_reconstruction(const std::vector<Droplet>& f_hat,
                                            const CostParams& params,
                                            const std::optional<OperatorMatrix>& reference = {});

/// sum_k || U_hat_k - q_k Q(q) ||_F^2 for an unnormalized real 4-vector q.
double quaternion_cost(const std::vector<OperatorMatrix>& u_hat, const Quaternion& q);

/// Minimizes quaternion_cost from `init`; estimate normalized on exit.
ReconstructionReport optimize_cost(const std::vector<OperatorMatrix>& u_hat, const Quaternion& init,
                                   const CostParams& params,
                                   const std::optional<OperatorMatrix>& reference = {});

/// Coefficient vector used by the generalized cost: V = polar(sum c_k sigma_k),
/// c_hat = |c| pauli_coefficients(V), cost sum_k || U_k - conj(c_hat_k) V ||^2.
double generalized_cost_value(const std::vector<OperatorMatrix>& u_k, const Eigen::VectorXcd& c);

/// Start coefficients from M_pq = tr(U_p^dagger U_q) / 2^N.
PauliCoefficients zero_order_coefficients(const std::vector<OperatorMatrix>& u_k);

/// Joint minimization over the 4^N complex coefficients. `u_k` are the raw
/// scaled matrices eps_k U with G_k in Pauli-string order.
ReconstructionReport generalized_cost(const std::vector<OperatorMatrix>& u_k,
                                      const std::optional<PauliCoefficients>& init,
                                      const CostParams& params,
                                      const std::optional<OperatorMatrix>& reference = {});

/// Matrices droplet_to_operator(f_k) for a list of droplets.
std::vector<OperatorMatrix> droplets_to_operators(const std::vector<Droplet>& f);

struct AdaptiveConfig {
  SphereGrid grid = lebedev_grid(50);
  std::optional<long> shots;  // per circuit setting, whole run; split over iterations
  std::uint64_t seed = 0;
  NoiseModel noise;
  double correction = 0.0;
  int iterations = 1;
  double epsilon_floor = 0.05;
};

/// Iteration 1 scans with G = guess, later ones with G = previous estimate.
/// fidelity_trace is measured against u_actual (entry 0 is the guess).
ReconstructionReport adaptive_reconstruct(const OperatorMatrix& u_actual,
                                          const OperatorMatrix& u_guess,
                                          const AdaptiveConfig& cfg);

}  // namespace wigtomo
