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


// Dense density-matrix simulation of the mapping and scanning circuits.
//
// Register layout for an N-qubit unknown gate: position 0 is the control
// q0, positions 1..N the system qubits, N+1..2N the ancillas. Position 0 is
// the most significant tensor factor.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wigtomo/spin_ops.hpp"

namespace wigtomo {

using DensityMatrix = OperatorMatrix;

struct Gate {
  OperatorMatrix unitary;
  std::vector<int> targets;  // register positions; targets[0] is most significant

  /// Throws DomainError if `u` is not unitary to 1e-10 or its size does not
  /// match the target count.
  static Gate make(OperatorMatrix u, std::vector<int> targets);
};

struct Circuit {
  int num_positions = 0;
  std::vector<Gate> gates;
};

/// Full-register matrix of `g` on a register of `num_positions` qubits.
OperatorMatrix expand_gate(const Gate& g, int num_positions);

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g);
DensityMatrix run_circuit(const Circuit& c, DensityMatrix rho);

/// Block-diagonal [1, swap] controlled on position 0, exchanging the system
/// block (1..n) with the ancilla block (n+1..2n).
Gate cswap(int n);

/// diag(1, U) on [control, targets...].
Gate controlled(const OperatorMatrix& u, int control, const std::vector<int>& targets);

/// CSWAP, U on the ancilla block, CSWAP, controlled-G (control q0) on the
/// ancilla block. The Hadamard on q0 belongs to the preparation.
Circuit mapping_circuit(const OperatorMatrix& u, const OperatorMatrix& g);

/// |+><+| on q0 times the computational basis state `basis` on the 2N
/// register qubits (bit 2N-1 of `basis` is q1).
DensityMatrix prepared_state(int n, std::uint32_t basis);
/// |+><+| on q0 times the maximally mixed state on the 2N register qubits.
DensityMatrix mixed_input_state(int n);

/// Reduced state on the listed positions (ascending order in the output).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// tr(obs rho); DomainError if obs is not Hermitian.
double expectation(const DensityMatrix& rho, const OperatorMatrix& obs);

/// Circuits that differ only in the basis preparation of the 2N register
/// qubits.
struct CircuitFamily {
  int n = 1;
  Circuit body;
  std::vector<std::uint32_t> preparations;

  /// Family over all 2^(2N) basis preparations.
  static CircuitFamily complete(int n, Circuit body);
};

/// Mean over preparations of tr(obs rho_out). DomainError unless every basis
/// preparation appears exactly once.
double temporal_average(const CircuitFamily& family, const OperatorMatrix& obs);

/// tr(obs rho_out) for the maximally mixed input.
double mixed_expectation(const Circuit& body, int n, const OperatorMatrix& obs);

// ---------------------------------------------------------------------------
// Shot noise

/// Stateless splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for one (k, observable, grid node) work item.
std::uint64_t derive_seed(std::uint64_t seed, int k, int observable, std::size_t grid_index);

struct ShotEstimator {
  std::uint64_t seed = 0;
  long shots = 1;
};

/// 2 k / N_s - 1 with k ~ Binomial(N_s, (1 + p) / 2) drawn from
/// mt19937_64(est.seed). Values of |p| slightly above 1 from rounding are
/// clamped; DomainError if |p| > 1 + 1e-9 or shots < 1.
double sample_shots(double p_true, const ShotEstimator& est);

/// Same draw from a caller-owned generator.
double sample_shots(double p_true, long shots, std::mt19937_64& rng);

}  // namespace wigtomo
