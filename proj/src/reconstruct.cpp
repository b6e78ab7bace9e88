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


#include "wigtomo/reconstruct.hpp"

#include <cmath>
#include <limits>

#include "wigtomo/errors.hpp"
#include "wigtomo/optim.hpp"

namespace wigtomo {

namespace {

const std::vector<OperatorMatrix>& pauli_basis(int n) {
  static const std::vector<OperatorMatrix> one = [] {
    std::vector<OperatorMatrix> v;
    for (std::size_t k = 0; k < 4; ++k) v.push_back(pauli_string_matrix(1, k));
    return v;
  }();
  static const std::vector<OperatorMatrix> two = [] {
    std::vector<OperatorMatrix> v;
    for (std::size_t k = 0; k < 16; ++k) v.push_back(pauli_string_matrix(2, k));
    return v;
  }();
  if (n == 1) return one;
  if (n == 2) return two;
  throw UnimplementedError("generalized reconstruction supports N <= 2");
}

Quaternion to_quaternion(const Eigen::VectorXd& x) { return {x(0), x(1), x(2), x(3)}; }

Eigen::VectorXd to_vector(const Quaternion& q) {
  Eigen::VectorXd x(4);
  x << q.a, q.b, q.c, q.d;
  return x;
}

void push_state(ReconstructionReport& r, const Quaternion& q, double cost,
                const std::optional<OperatorMatrix>& reference) {
  r.quaternion_trace.push_back(q);
  r.cost_trace.push_back(cost);
  if (reference) r.fidelity_trace.push_back(fidelity(quaternion_matrix(q), *reference));
}

}  // namespace

void CostParams::validate() const {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iterations < 1 || optimizer_max_iterations < 0) throw DomainError("iteration limits must be positive");
  if (!(finite_difference_step > 0.0)) throw DomainError("finite-difference step must be positive");
}

ZeroOrder zero_order_detail(const CorrelationMatrix& cm) {
  const Eigen::MatrixXd& m = cm.m;
  if (m.rows() != 4 || m.cols() != 4) throw DomainError("zero-order estimate needs a 4x4 matrix");
  std::array<double, 4> mag{};
  for (int p = 0; p < 4; ++p) mag[p] = std::sqrt(std::max(m(p, p), 0.0));
  // Reference: largest magnitude, ties resolved D, A, B, C.
  int ref = 3;
  for (int p : {3, 0, 1, 2}) {
    if (mag[p] > mag[ref] + 1e-12) ref = p;
  }
  if (!(mag[ref] > 1e-12)) throw DegenerateInputError("correlation matrix carries no signal");

  ZeroOrder out;
  out.reference = ref;
  out.low_confidence.assign(4, false);
  Quaternion q;
  for (int p = 0; p < 4; ++p) {
    double sign = 1.0;
    if (p != ref) {
      sign = m(p, ref) < 0.0 ? -1.0 : 1.0;
      out.low_confidence[p] = mag[p] > 0.0 && std::abs(m(p, ref)) < 3.0 * cm.noise_floor;
    }
    q[p] = sign * mag[p];
  }
  out.q = q.normalized().canonical();
  return out;
}

Quaternion zero_order_estimate(const CorrelationMatrix& m) { return zero_order_detail(m).q; }

std::vector<OperatorMatrix> droplets_to_operators(const std::vector<Droplet>& f) {
  std::vector<OperatorMatrix> out;
  out.reserve(f.size());
  for (const Droplet& d : f) out.push_back(droplet_to_operator(d));
  return out;
}

double quaternion_cost(const std::vector<OperatorMatrix>& u_hat, const Quaternion& q) {
  if (u_hat.size() != 4) throw DomainError("quaternion cost needs four scaled matrices");
  const OperatorMatrix uq = quaternion_matrix(q);
  double j = 0.0;
  for (std::size_t k = 0; k < 4; ++k) j += (u_hat[k] - q[k] * uq).squaredNorm();
  return j;
}

ReconstructionReport iterate_reconstruction(const std::vector<Droplet>& f_hat,
                                            const CostParams& params,
                                            const std::optional<OperatorMatrix>& reference) {
  params.validate();
  if (f_hat.size() != 4) throw DomainError("reconstruction needs four scaled droplets");
  const CorrelationMatrix cm = correlation_matrix(f_hat);
  const ZeroOrder zo = zero_order_detail(cm);
  const std::vector<OperatorMatrix> u_hat = droplets_to_operators(f_hat);

  ReconstructionReport r;
  r.low_confidence = zo.low_confidence;
  r.noise_floor = cm.noise_floor;
  for (int p = 0; p < 4; ++p) {
    if (zo.low_confidence[p]) {
      r.warnings.push_back("sign of component " + std::string(1, "ABCD"[p]) +
                           " is below three times the noise floor");
    }
  }
  Quaternion q = zo.q;
  push_state(r, q, quaternion_cost(u_hat, q), reference);

  for (int it = 1; it <= params.max_iterations; ++it) {
    const Droplet comb = combine(f_hat, {q.a, q.b, q.c, q.d});
    const OperatorMatrix m = droplet_to_operator(comb);
    if (m.norm() < 1e-8) throw DegenerateInputError("combined droplet maps to a vanishing matrix");
    const Quaternion next = unitary_to_quaternion(polar_unitary(m));
    const double change = quaternion_distance(next, q);
    q = next;
    r.iterations = it;
    push_state(r, q, quaternion_cost(u_hat, q), reference);
    if (change < params.tolerance) break;
  }
  r.estimate = q;
  r.unitary = quaternion_matrix(q);
  return r;
}

ReconstructionReport optimize_cost(const std::vector<OperatorMatrix>& u_hat, const Quaternion& init,
                                   const CostParams& params,
                                   const std::optional<OperatorMatrix>& reference) {
  params.validate();
  if (u_hat.size() != 4) throw DomainError("quaternion cost needs four scaled matrices");
  for (const auto& u : u_hat) {
    if (u.rows() != 2 || u.cols() != 2) throw DomainError("scaled matrices must be 2x2");
  }
  const Objective f = [&](const Eigen::VectorXd& x) {
    const double j = quaternion_cost(u_hat, to_quaternion(x));
    if (!std::isfinite(j)) throw DomainError("cost is not finite");
    return j;
  };
  OptimOptions opts;
  opts.finite_difference_step = params.finite_difference_step;
  opts.gradient_tolerance = params.gradient_tolerance;
  opts.max_iterations = params.optimizer_max_iterations;
  const OptimResult res = minimize_bfgs(f, to_vector(init), opts);

  ReconstructionReport r;
  r.iterations = res.iterations;
  for (std::size_t i = 0; i < res.x_trace.size(); ++i) {
    r.quaternion_trace.push_back(to_quaternion(res.x_trace[i]).normalized().canonical());
    r.cost_trace.push_back(res.cost_trace[i]);
    if (reference) {
      r.fidelity_trace.push_back(fidelity(quaternion_matrix(r.quaternion_trace.back()), *reference));
    }
  }
  r.estimate = r.quaternion_trace.back();
  r.unitary = quaternion_matrix(r.estimate);
  return r;
}

double generalized_cost_value(const std::vector<OperatorMatrix>& u_k, const Eigen::VectorXcd& c) {
  if (u_k.empty()) throw DomainError("generalized cost needs scaled matrices");
  const int n = qubit_count(u_k.front());
  const auto& basis = pauli_basis(n);
  if (static_cast<std::size_t>(c.size()) != basis.size() || u_k.size() != basis.size()) {
    throw DomainError("generalized cost needs 4^N matrices and coefficients");
  }
  const Eigen::Index dim = u_k.front().rows();
  OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < basis.size(); ++k) a += c(static_cast<Eigen::Index>(k)) * basis[k];
  const OperatorMatrix v = polar_unitary(a);
  const double scale = c.norm() / static_cast<double>(dim);
  double j = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    // conj(c_hat_k) = |c| conj(tr(sigma_k V) / 2^N)
    const Complex coeff = scale * std::conj((basis[k] * v).trace());
    j += (u_k[k] - coeff * v).squaredNorm();
  }
  return j;
}

PauliCoefficients zero_order_coefficients(const std::vector<OperatorMatrix>& u_k) {
  if (u_k.empty()) throw DomainError("need scaled matrices");
  const int n = qubit_count(u_k.front());
  const auto count = static_cast<Eigen::Index>(u_k.size());
  const double dim = static_cast<double>(u_k.front().rows());
  std::vector<double> diag(u_k.size());
  Eigen::Index ref = 0;
  for (Eigen::Index p = 0; p < count; ++p) {
    diag[p] = u_k[p].squaredNorm() / dim;
    if (diag[p] > diag[ref]) ref = p;
  }
  if (!(diag[ref] > 1e-16)) throw DegenerateInputError("all scaled matrices vanish");
  PauliCoefficients pc;
  pc.num_qubits = n;
  pc.c.resize(count);
  const double norm_ref = std::sqrt(diag[ref]);
  for (Eigen::Index q = 0; q < count; ++q) {
    const Complex mrq = (u_k[ref].adjoint() * u_k[q]).trace() / dim;
    pc.c(q) = std::conj(mrq / norm_ref);
  }
  return pc;
}

ReconstructionReport generalized_cost(const std::vector<OperatorMatrix>& u_k,
                                      const std::optional<PauliCoefficients>& init,
                                      const CostParams& params,
                                      const std::optional<OperatorMatrix>& reference) {
  params.validate();
  if (u_k.empty()) throw DomainError("need scaled matrices");
  const int n = qubit_count(u_k.front());
  const auto& basis = pauli_basis(n);
  if (u_k.size() != basis.size()) throw DomainError("generalized cost needs 4^N scaled matrices");
  for (const auto& u : u_k) {
    if (u.rows() != u_k.front().rows() || u.cols() != u_k.front().cols()) {
      throw DomainError("scaled matrices differ in dimension");
    }
  }
  const PauliCoefficients start = init ? *init : zero_order_coefficients(u_k);
  const auto count = static_cast<Eigen::Index>(basis.size());
  if (start.c.size() != count) throw DomainError("initial coefficient vector has the wrong length");

  auto unpack = [count](const Eigen::VectorXd& x) {
    Eigen::VectorXcd c(count);
    for (Eigen::Index i = 0; i < count; ++i) c(i) = Complex(x(i), x(count + i));
    return c;
  };
  auto unitary_of = [&](const Eigen::VectorXcd& c) {
    OperatorMatrix a = OperatorMatrix::Zero(u_k.front().rows(), u_k.front().cols());
    for (Eigen::Index k = 0; k < count; ++k) a += c(k) * basis[static_cast<std::size_t>(k)];
    return polar_unitary(a);
  };
  const Objective f = [&](const Eigen::VectorXd& x) {
    const double j = generalized_cost_value(u_k, unpack(x));
    if (!std::isfinite(j)) throw DomainError("cost is not finite");
    return j;
  };
  Eigen::VectorXd x0(2 * count);
  for (Eigen::Index i = 0; i < count; ++i) {
    x0(i) = start.c(i).real();
    x0(count + i) = start.c(i).imag();
  }
  OptimOptions opts;
  opts.finite_difference_step = params.finite_difference_step;
  opts.gradient_tolerance = params.gradient_tolerance;
  opts.max_iterations = params.optimizer_max_iterations;
  const OptimResult res = minimize_bfgs(f, x0, opts);

  ReconstructionReport r;
  r.iterations = res.iterations;
  for (std::size_t i = 0; i < res.x_trace.size(); ++i) {
    const OperatorMatrix v = unitary_of(unpack(res.x_trace[i]));
    r.cost_trace.push_back(res.cost_trace[i]);
    if (n == 1) r.quaternion_trace.push_back(unitary_to_quaternion(v));
    if (reference) r.fidelity_trace.push_back(fidelity(v, *reference));
  }
  r.unitary = unitary_of(unpack(res.x));
  r.coefficients = pauli_coefficients(r.unitary);
  if (n == 1) r.estimate = unitary_to_quaternion(r.unitary);
  return r;
}

ReconstructionReport adaptive_reconstruct(const OperatorMatrix& u_actual,
                                          const OperatorMatrix& u_guess,
                                          const AdaptiveConfig& cfg) {
  if (cfg.iterations < 1) throw DomainError("adaptive scheme needs at least one iteration");
  if (qubit_count(u_actual) != 1 || qubit_count(u_guess) != 1) {
    throw UnimplementedError("adaptive scanning is built for single-qubit gates only");
  }
  std::optional<long> per_iteration;
  if (cfg.shots) per_iteration = *cfg.shots / cfg.iterations;

  ReconstructionReport r;
  OperatorMatrix g = u_guess;
  const double dim = 2.0;
  auto residual = [](const OperatorMatrix& m, const OperatorMatrix& v) {
    const Complex eps = (v.adjoint() * m).trace() / 2.0;
    return (m - eps * v).squaredNorm();
  };

  for (int it = 1; it <= cfg.iterations; ++it) {
    ScanConfig sc;
    sc.grid = cfg.grid;
    sc.shots = per_iteration;
    sc.rotations = {g};
    sc.seed = splitmix64(cfg.seed + static_cast<std::uint64_t>(it));
    sc.noise = cfg.noise;
    sc.correction = cfg.correction;
    const ScanResult scan_out = scan(u_actual, sc);
    const OperatorMatrix m = droplet_to_operator(scan_out.raw.front());
    if (m.norm() < 1e-8) throw DegenerateInputError("tomographed droplet maps to a vanishing matrix");

    const Complex eps = scaling_factor(u_actual, g);
    const double eps_data = m.norm() / std::sqrt(dim);
    r.epsilon_trace.push_back(eps);
    r.epsilon_magnitude_data.push_back(eps_data);
    if (eps_data < cfg.epsilon_floor) {
      r.warnings.push_back("iteration " + std::to_string(it) + ": |epsilon| = " +
                           std::to_string(eps_data) + " is below the blind-spot floor");
    }
    if (it == 1) {
      r.quaternion_trace.push_back(unitary_to_quaternion(g));
      r.cost_trace.push_back(residual(m, g));
      r.fidelity_trace.push_back(fidelity(g, u_actual));
    }
    const OperatorMatrix est = polar_unitary(m);
    r.quaternion_trace.push_back(unitary_to_quaternion(est));
    r.cost_trace.push_back(residual(m, est));
    r.fidelity_trace.push_back(fidelity(est, u_actual));
    r.iterations = it;
    r.unitary = est;
    g = est;
  }
  r.estimate = r.quaternion_trace.back();
  return r;
}

}  // namespace wigtomo
