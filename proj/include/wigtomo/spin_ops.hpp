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

// Operator algebra for small qubit registers: Pauli strings, spherical tensor
// operators, collective rotations and the quaternion form of SU(2).
//
// Register convention: qubit 1 is the most significant tensor factor
// (big-endian), so sigma_1z on two qubits is kron(Z, I).
//
// Pauli strings are indexed lexicographically with per-qubit order
// (x, y, z, I), identity last. For one qubit the index runs x=0, y=1, z=2,
// I=3; for two qubits xx=0, xy=1, ..., II=15.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace wigtomo {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

inline constexpr Complex kImag{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Matrix helpers

/// Number of qubits n for a square 2^n x 2^n matrix; throws DomainError
/// otherwise (n >= 1 required).
int qubit_count(const OperatorMatrix& m);

double max_norm(const OperatorMatrix& m);
bool is_unitary(const OperatorMatrix& m, double tol = 1e-12);
bool is_hermitian(const OperatorMatrix& m, double tol = 1e-12);

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// Unitary factor W of the polar decomposition m = W P. This is the
/// Frobenius-closest unitary to m.
OperatorMatrix polar_unitary(const OperatorMatrix& m);

/// exp(-i t H) for Hermitian H.
OperatorMatrix expm_hermitian(const OperatorMatrix& h, double t);

// ---------------------------------------------------------------------------
// Paulis

enum class Pauli : std::uint8_t { X = 0, Y = 1, Z = 2, I = 3 };

OperatorMatrix pauli(Pauli p);

/// Single-qubit operator `op` placed on qubit `k` (1-based) of an n-qubit
/// register.
OperatorMatrix embed(const OperatorMatrix& op, int k, int n);

/// Factors of Pauli string `index` for n qubits, qubit 1 first.
std::vector<Pauli> pauli_string(int n, std::size_t index);
OperatorMatrix pauli_string_matrix(int n, std::size_t index);
/// e.g. "x", "I", "zx", "II".
std::string pauli_string_name(int n, std::size_t index);

/// Collective spin component F_a = 1/2 sum_k sigma_ka.
OperatorMatrix collective_spin(int n, Pauli axis);

struct PauliCoefficients {
  int num_qubits = 1;
  Eigen::VectorXcd c;  // length 4^n, Pauli-string order
};

/// c_k = tr(sigma_k^dagger U) / 2^N.
PauliCoefficients pauli_coefficients(const OperatorMatrix& u);
OperatorMatrix from_pauli_coefficients(const PauliCoefficients& pc);

/// epsilon = tr(U^dagger G) / 2^N.
Complex scaling_factor(const OperatorMatrix& u, const OperatorMatrix& g);

// ---------------------------------------------------------------------------
// Quaternions

/// Components (A, B, C, D) of U = [[D + iC, B + iA], [-B + iA, D - iC]].
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double& operator[](std::size_t i);
  double operator[](std::size_t i) const;
  double norm() const;
  Quaternion normalized() const;
  /// Sign flipped so the largest-magnitude component is positive; ties are
  /// resolved in the order D, A, B, C.
  Quaternion canonical() const;
  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  std::array<double, 4> as_array() const { return {a, b, c, d}; }
};

/// Raw quaternion matrix for any real 4-vector (no normalization).
OperatorMatrix quaternion_matrix(const Quaternion& q);

struct QuaternionUnitary {
  OperatorMatrix unitary;
  bool renormalized = false;  // input was not unit length within 1e-10
};

QuaternionUnitary quaternion_to_unitary(const Quaternion& q);

/// Inverse of quaternion_matrix after removing the global phase sqrt(det U) (principal
/// branch). Result is canonical.
Quaternion unitary_to_quaternion(const OperatorMatrix& u);

/// Largest absolute component difference between p and +q or -q, whichever is
/// closer.
double quaternion_distance(const Quaternion& p, const Quaternion& q);

// ---------------------------------------------------------------------------
// Spherical tensor operators

/// Qubit subset a droplet or tensor component refers to, stored as a bitmask
/// with qubit 1 in bit 0. The empty set labels the identity part.
struct Label {
  std::uint32_t mask = 0;

  static Label empty() { return {0}; }
  static Label of(std::initializer_list<int> qubits);
  /// "empty", "1", "2", "12", ...
  std::string to_string() const;
  static Label parse(std::string_view s);

  auto operator<=>(const Label&) const = default;
};

struct TensorIndex {
  Label label;
  int rank = 0;
  int order = 0;
};

struct LabelRanks {
  Label label;
  std::vector<int> ranks;
};

/// Admissible (label, rank) set for n in {1, 2}; DomainError for larger n.
const std::vector<LabelRanks>& admissible_tensors(int n);

/// Hermitian axial tensor T_j0^(l) with tr(T^dagger T) = 1.
OperatorMatrix axial_tensor(int n, const TensorIndex& idx);

/// T_jm^(l) built from the axial tensor with collective ladder operators
/// (Condon-Shortley phase): [F+-, T_jm] = sqrt(j(j+1) - m(m+-1)) T_j,m+-1.
OperatorMatrix tensor_operator(int n, const TensorIndex& idx);

// ---------------------------------------------------------------------------
// Rotations and named gates

/// R(alpha, beta) = exp(-i alpha F_z) exp(-i beta F_y) on n qubits.
OperatorMatrix rotation_operator(int n, double alpha, double beta);

/// cos(gamma/2) I - i sin(gamma/2) (n . sigma); axis normalized internally.
OperatorMatrix axis_angle_unitary(double gamma, const std::array<double, 3>& axis);

namespace gates {
OperatorMatrix identity(int n = 1);
OperatorMatrix x();
OperatorMatrix y();
OperatorMatrix z();
OperatorMatrix hadamard();
OperatorMatrix s();
OperatorMatrix t();
/// (I - i sigma_x)/sqrt(2), the special-unitary representative.
OperatorMatrix sqrt_not();
OperatorMatrix cnot();
/// U3(theta, phi, lambda) = RZ(phi) RY(theta) RZ(lambda) in the phase
/// convention [[cos, -e^{i lambda} sin], [e^{i phi} sin, e^{i(phi+lambda)} cos]].
OperatorMatrix u3(double theta, double phi, double lambda);
/// U3(0, 0, lambda) = diag(1, e^{i lambda}).
OperatorMatrix rz(double lambda);

/// Lookup by name: I, X, Y, Z, H, S, T, SX (alias SQRT_NOT), CNOT.
/// Throws DomainError for unknown names.
OperatorMatrix by_name(std::string_view name);
}  // namespace gates

}  // namespace wigtomo
