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


#include "wigtomo/droplet.hpp"

#include <algorithm>
#include <cmath>

#include "wigtomo/errors.hpp"

namespace wigtomo {

namespace {

constexpr double kFourPi = 4.0 * kPi;

void check_compatible(const Droplet& f, const Droplet& g) {
  if (f.num_qubits != g.num_qubits) throw DomainError("droplets differ in qubit count");
  if (!(f.grid == g.grid)) throw DomainError("droplets live on different grids");
  if (f.samples.size() != g.samples.size()) throw DomainError("droplets differ in labels");
  for (const auto& [label, v] : f.samples) {
    auto it = g.samples.find(label);
    if (it == g.samples.end() || it->second.size() != v.size()) {
      throw DomainError("droplets differ in labels");
    }
  }
}

double rank_scale(int j) { return std::sqrt((2.0 * j + 1.0) / kFourPi); }

}  // namespace

Droplet Droplet::zero(const SphereGrid& grid, int n) {
  Droplet f;
  f.num_qubits = n;
  f.grid = grid;
  for (const auto& lr : admissible_tensors(n)) {
    f.samples[lr.label] = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid.size()));
  }
  return f;
}

Droplet& Droplet::operator+=(const Droplet& other) {
  check_compatible(*this, other);
  for (auto& [label, v] : samples) v += other.samples.at(label);
  return *this;
}

Droplet& Droplet::operator*=(Complex s) {
  for (auto& [label, v] : samples) v *= s;
  return *this;
}

double Droplet::max_abs() const {
  double m = 0.0;
  for (const auto& [label, v] : samples) {
    if (v.size() > 0) m = std::max(m, v.cwiseAbs().maxCoeff());
  }
  return m;
}

Droplet operator*(Complex s, Droplet f) { return f *= s; }
Droplet operator+(Droplet f, const Droplet& g) { return f += g; }
Droplet operator-(Droplet f, const Droplet& g) { return f += Complex(-1.0) * g; }

double max_difference(const Droplet& f, const Droplet& g) {
  check_compatible(f, g);
  double m = 0.0;
  for (const auto& [label, v] : f.samples) {
    const Eigen::VectorXcd d = v - g.samples.at(label);
    if (d.size() > 0) m = std::max(m, d.cwiseAbs().maxCoeff());
  }
  return m;
}

Droplet operator_to_droplet(const OperatorMatrix& a, const SphereGrid& grid) {
  const int n = qubit_count(a);
  const auto& tensors = admissible_tensors(n);
  Droplet f = Droplet::zero(grid, n);

  struct Axial {
    Label label;
    double scale;
    OperatorMatrix t;
  };
  std::vector<Axial> axial;
  for (const auto& lr : tensors) {
    for (int j : lr.ranks) axial.push_back({lr.label, rank_scale(j), axial_tensor(n, {lr.label, j, 0})});
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const SphereNode& node = grid.nodes[i];
    const OperatorMatrix r = rotation_operator(n, node.phi, node.theta);
    // tr((R T R^dagger)^dagger A) = tr(T R^dagger A R) for Hermitian T.
    const OperatorMatrix back = r.adjoint() * a * r;
    for (const Axial& ax : axial) {
      f.samples[ax.label](static_cast<Eigen::Index>(i)) +=
          ax.scale * (ax.t.adjoint() * back).trace();
    }
  }
  return f;
}

std::vector<TensorCoefficient> tensor_coefficients(const Droplet& f) {
  std::vector<TensorCoefficient> out;
  for (const auto& lr : admissible_tensors(f.num_qubits)) {
    auto it = f.samples.find(lr.label);
    if (it == f.samples.end()) continue;
    const Eigen::VectorXcd& v = it->second;
    if (static_cast<std::size_t>(v.size()) != f.grid.size()) {
      throw DomainError("droplet sample count does not match its grid");
    }
    for (int j : lr.ranks) {
      for (int m = -j; m <= j; ++m) {
        Complex c = 0.0;
        for (std::size_t i = 0; i < f.grid.size(); ++i) {
          const SphereNode& node = f.grid.nodes[i];
          c += kFourPi * node.weight *
               std::conj(spherical_harmonic(j, m, node.theta, node.phi)) *
               v(static_cast<Eigen::Index>(i));
        }
        out.push_back({{lr.label, j, m}, c});
      }
    }
  }
  return out;
}

OperatorMatrix droplet_to_operator(const Droplet& f) {
  const int n = f.num_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
  for (const TensorCoefficient& tc : tensor_coefficients(f)) {
    a += tc.value * tensor_operator(n, tc.index);
  }
  return a;
}

Complex scalar_product(const Droplet& f, const Droplet& g) {
  check_compatible(f, g);
  Complex s = 0.0;
  for (const auto& [label, fv] : f.samples) {
    const Eigen::VectorXcd& gv = g.samples.at(label);
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
      const auto idx = static_cast<Eigen::Index>(i);
      s += kFourPi * f.grid.nodes[i].weight * std::conj(fv(idx)) * gv(idx);
    }
  }
  return s / static_cast<double>(Eigen::Index{1} << f.num_qubits);
}

CorrelationMatrix correlation_matrix(const std::vector<Droplet>& droplets) {
  const auto count = static_cast<Eigen::Index>(droplets.size());
  if (count == 0) throw DomainError("correlation matrix needs at least one droplet");
  CorrelationMatrix out;
  out.m = Eigen::MatrixXd::Zero(count, count);
  double imag_sq = 0.0;
  int off = 0;
  for (Eigen::Index p = 0; p < count; ++p) {
    for (Eigen::Index q = p; q < count; ++q) {
      const Complex s = scalar_product(droplets[p], droplets[q]);
      out.m(p, q) = out.m(q, p) = s.real();
      if (p != q) {
        imag_sq += s.imag() * s.imag();
        ++off;
      }
    }
  }
  out.noise_floor = off > 0 ? std::sqrt(imag_sq / off) : 0.0;
  return out;
}

Droplet combine(const std::vector<Droplet>& droplets, const std::vector<double>& weights) {
  if (droplets.empty() || droplets.size() != weights.size()) {
    throw DomainError("combine: droplet and weight counts differ");
  }
  Droplet out = droplets.front();
  out *= weights.front();
  for (std::size_t k = 1; k < droplets.size(); ++k) out += Complex(weights[k]) * droplets[k];
  return out;
}

double fidelity(const OperatorMatrix& u, const OperatorMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw DomainError("fidelity: dimension mismatch");
  }
  const double f = std::abs((u * v.adjoint()).trace()) / static_cast<double>(u.rows());
  return std::min(f, 1.0);
}

Complex phase_factor(int k) {
  if (k < 1 || k > 4) throw DomainError("phase_adjust index must be in 1..4");
  return k == 4 ? Complex(1.0) : kImag;
}

Droplet phase_adjust(const Droplet& f, int k) { return phase_factor(k) * f; }

OperatorMatrix phase_adjust(const OperatorMatrix& m, int k) { return phase_factor(k) * m; }

}  // namespace wigtomo
