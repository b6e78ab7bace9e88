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


// Droplet functions: spherical sample sets, one per label, that represent an
// operator through its rotated axial-tensor overlaps.

#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "wigtomo/sphere.hpp"
#include "wigtomo/spin_ops.hpp"

namespace wigtomo {

struct Droplet {
  int num_qubits = 1;
  SphereGrid grid;
  std::map<Label, Eigen::VectorXcd> samples;

  /// All-zero droplet with every admissible label of an n-qubit operator.
  static Droplet zero(const SphereGrid& grid, int n);

  Droplet& operator+=(const Droplet& other);
  Droplet& operator*=(Complex s);
  double max_abs() const;
};

Droplet operator*(Complex s, Droplet f);
Droplet operator+(Droplet f, const Droplet& g);
Droplet operator-(Droplet f, const Droplet& g);
/// Largest pointwise |f - g| over all labels; DomainError on layout mismatch.
double max_difference(const Droplet& f, const Droplet& g);

/// Samples f^(l)(theta_i, phi_i) = sum_j s_j tr(T_j(alpha=phi, beta=theta)^dagger A)
/// with T_j rotated by R(alpha, beta) and s_j = sqrt((2j + 1) / 4 pi).
Droplet operator_to_droplet(const OperatorMatrix& a, const SphereGrid& grid);

struct TensorCoefficient {
  TensorIndex index;
  Complex value;
};

/// c_jm^(l) = sum_i 4 pi w_i conj(Y_jm(theta_i, phi_i)) f^(l)_i for every
/// admissible (l, j, m), equal to tr(T_jm^dagger A) for a droplet of A.
std::vector<TensorCoefficient> tensor_coefficients(const Droplet& f);

/// Quadrature expansion c_jm = sum_i 4 pi w_i conj(Y_jm) f and
/// A = sum c_jm T_jm. Inverts operator_to_droplet on grids exact to degree 2j.
OperatorMatrix droplet_to_operator(const Droplet& f);

/// <f|g> = 2^-N sum_l sum_i 4 pi w_i conj(f) g, so <f_A|f_B> = tr(A^dagger B) / 2^N.
Complex scalar_product(const Droplet& f, const Droplet& g);

struct CorrelationMatrix {
  Eigen::MatrixXd m;          // Re <f_p|f_q>
  double noise_floor = 0.0;   // RMS of the discarded off-diagonal imaginary parts
};

CorrelationMatrix correlation_matrix(const std::vector<Droplet>& droplets);

/// Pointwise sum_k w_k f_k.
Droplet combine(const std::vector<Droplet>& droplets, const std::vector<double>& weights);

/// |tr(U V^dagger)| / d.
double fidelity(const OperatorMatrix& u, const OperatorMatrix& v);

/// i for k in {1, 2, 3}, 1 for k = 4.
Complex phase_factor(int k);
Droplet phase_adjust(const Droplet& f, int k);
OperatorMatrix phase_adjust(const OperatorMatrix& m, int k);

}  // namespace wigtomo
