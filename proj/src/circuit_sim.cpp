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


#include "wigtomo/circuit_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wigtomo/errors.hpp"

namespace wigtomo {

namespace {

int position_bit(int position, int num_positions) { return num_positions - 1 - position; }

// Gathers the bits at `positions` (first is most significant) from `index`.
Eigen::Index gather(Eigen::Index index, const std::vector<int>& positions, int num_positions) {
  Eigen::Index out = 0;
  for (int p : positions) out = (out << 1) | ((index >> position_bit(p, num_positions)) & 1);
  return out;
}

Eigen::Index mask_of(const std::vector<int>& positions, int num_positions) {
  Eigen::Index m = 0;
  for (int p : positions) m |= Eigen::Index{1} << position_bit(p, num_positions);
  return m;
}

}  // namespace

Gate Gate::make(OperatorMatrix u, std::vector<int> targets) {
  if (targets.empty()) throw DomainError("gate needs at least one target");
  if (u.rows() != (Eigen::Index{1} << targets.size()) || u.cols() != u.rows()) {
    throw DomainError("gate size does not match its target count");
  }
  if (!is_unitary(u, 1e-10)) throw DomainError("gate matrix is not unitary");
  auto sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0) {
    throw DomainError("gate targets must be distinct nonnegative positions");
  }
  return Gate{std::move(u), std::move(targets)};
}

OperatorMatrix expand_gate(const Gate& g, int num_positions) {
  for (int t : g.targets) {
    if (t >= num_positions) throw DomainError("gate target outside register");
  }
  const Eigen::Index dim = Eigen::Index{1} << num_positions;
  const Eigen::Index tmask = mask_of(g.targets, num_positions);
  OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index si = gather(i, g.targets, num_positions);
    for (Eigen::Index j = 0; j < dim; ++j) {
      if ((i & ~tmask) != (j & ~tmask)) continue;
      out(i, j) = g.unitary(si, gather(j, g.targets, num_positions));
    }
  }
  return out;
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g) {
  const int positions = qubit_count(rho);
  const OperatorMatrix full = expand_gate(g, positions);
  return full * rho * full.adjoint();
}

DensityMatrix run_circuit(const Circuit& c, DensityMatrix rho) {
  if (qubit_count(rho) != c.num_positions) throw DomainError("state does not match circuit register");
  for (const Gate& g : c.gates) rho = apply_gate(rho, g);
  return rho;
}

Gate cswap(int n) {
  if (n < 1) throw DomainError("cswap needs n >= 1");
  const int positions = 2 * n + 1;
  const Eigen::Index dim = Eigen::Index{1} << positions;
  const Eigen::Index half = dim / 2;
  const Eigen::Index block = Eigen::Index{1} << n;
  OperatorMatrix m = OperatorMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < half; ++i) m(i, i) = 1.0;
  for (Eigen::Index s = 0; s < block; ++s) {
    for (Eigen::Index a = 0; a < block; ++a) {
      m(half + s * block + a, half + a * block + s) = 1.0;
    }
  }
  std::vector<int> targets(positions);
  for (int p = 0; p < positions; ++p) targets[p] = p;
  return Gate::make(std::move(m), std::move(targets));
}

Gate controlled(const OperatorMatrix& u, int control, const std::vector<int>& targets) {
  const Eigen::Index d = u.rows();
  OperatorMatrix m = OperatorMatrix::Identity(2 * d, 2 * d);
  m.bottomRightCorner(d, d) = u;
  std::vector<int> all{control};
  all.insert(all.end(), targets.begin(), targets.end());
  return Gate::make(std::move(m), std::move(all));
}

Circuit mapping_circuit(const OperatorMatrix& u, const OperatorMatrix& g) {
  if (u.rows() != g.rows() || u.cols() != g.cols()) throw DomainError("U and G differ in dimension");
  const int n = qubit_count(u);
  std::vector<int> ancilla(n);
  for (int q = 0; q < n; ++q) ancilla[q] = n + 1 + q;
  Circuit c;
  c.num_positions = 2 * n + 1;
  c.gates.push_back(cswap(n));
  c.gates.push_back(Gate::make(u, ancilla));
  c.gates.push_back(cswap(n));
  c.gates.push_back(controlled(g, 0, ancilla));
  return c;
}

namespace {

OperatorMatrix plus_state() { return OperatorMatrix::Constant(2, 2, 0.5); }

}  // namespace

DensityMatrix prepared_state(int n, std::uint32_t basis) {
  if (n < 1) throw DomainError("n must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  if (basis >= static_cast<std::uint32_t>(dim)) throw DomainError("basis index out of range");
  OperatorMatrix reg = OperatorMatrix::Zero(dim, dim);
  reg(basis, basis) = 1.0;
  return kron(plus_state(), reg);
}

DensityMatrix mixed_input_state(int n) {
  if (n < 1) throw DomainError("n must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  return kron(plus_state(), OperatorMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int positions = qubit_count(rho);
  if (keep.empty() || static_cast<int>(keep.size()) > positions) {
    throw DomainError("partial_trace: keep set must be a nonempty proper subset");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 0 ||
      kept.back() >= positions) {
    throw DomainError("partial_trace: invalid keep positions");
  }
  const Eigen::Index dim = rho.rows();
  const Eigen::Index kmask = mask_of(kept, positions);
  const Eigen::Index out_dim = Eigen::Index{1} << kept.size();
  OperatorMatrix out = OperatorMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if ((i & ~kmask) != (j & ~kmask)) continue;
      out(gather(i, kept, positions), gather(j, kept, positions)) += rho(i, j);
    }
  }
  return out;
}

double expectation(const DensityMatrix& rho, const OperatorMatrix& obs) {
  if (obs.rows() != rho.rows() || obs.cols() != rho.cols()) {
    throw DomainError("observable and state differ in dimension");
  }
  if (!is_hermitian(obs, 1e-12)) throw DomainError("observable is not Hermitian");
  return (obs * rho).trace().real();
}

CircuitFamily CircuitFamily::complete(int n, Circuit body) {
  CircuitFamily f;
  f.n = n;
  f.body = std::move(body);
  const std::uint32_t count = 1u << (2 * n);
  for (std::uint32_t b = 0; b < count; ++b) f.preparations.push_back(b);
  return f;
}

double temporal_average(const CircuitFamily& family, const OperatorMatrix& obs) {
  const std::uint32_t count = 1u << (2 * family.n);
  std::vector<std::uint32_t> sorted = family.preparations;
  std::sort(sorted.begin(), sorted.end());
  bool complete = sorted.size() == count;
  for (std::uint32_t b = 0; complete && b < count; ++b) complete = sorted[b] == b;
  if (!complete) throw DomainError("temporal averaging needs every basis preparation exactly once");
  double sum = 0.0;
  for (std::uint32_t b : family.preparations) {
    sum += expectation(run_circuit(family.body, prepared_state(family.n, b)), obs);
  }
  return sum / static_cast<double>(count);
}

double mixed_expectation(const Circuit& body, int n, const OperatorMatrix& obs) {
  return expectation(run_circuit(body, mixed_input_state(n)), obs);
}

// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, int k, int observable, std::size_t grid_index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  h = splitmix64(h ^ static_cast<std::uint64_t>(observable));
  return splitmix64(h ^ static_cast<std::uint64_t>(grid_index));
}

double sample_shots(double p_true, long shots, std::mt19937_64& rng) {
  if (shots < 1) throw DomainError("shot count must be >= 1");
  if (!(std::abs(p_true) <= 1.0 + 1e-9)) throw DomainError("expectation outside [-1, 1]");
  const double prob = std::clamp((1.0 + p_true) / 2.0, 0.0, 1.0);
  std::binomial_distribution<long> dist(shots, prob);
  const long k = dist(rng);
  return 2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0;
}

double sample_shots(double p_true, const ShotEstimator& est) {
  std::mt19937_64 rng(est.seed);
  return sample_shots(p_true, est.shots, rng);
}

}  // namespace wigtomo
