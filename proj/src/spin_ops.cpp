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


#include "wigtomo/spin_ops.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "wigtomo/errors.hpp"

namespace wigtomo {

int qubit_count(const OperatorMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw DomainError("operator must be square with dimension >= 2");
  }
  const Eigen::Index dim = m.rows();
  if ((dim & (dim - 1)) != 0) throw DomainError("dimension is not a power of two");
  int n = 0;
  for (Eigen::Index d = dim; d > 1; d >>= 1) ++n;
  return n;
}

double max_norm(const OperatorMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const OperatorMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const OperatorMatrix id = OperatorMatrix::Identity(m.rows(), m.cols());
  return max_norm(m.adjoint() * m - id) <= tol;
}

bool is_hermitian(const OperatorMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(m - m.adjoint()) <= tol;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

OperatorMatrix polar_unitary(const OperatorMatrix& m) {
  Eigen::JacobiSVD<OperatorMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

OperatorMatrix expm_hermitian(const OperatorMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) phases(i) = std::exp(-kImag * (t * ev(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------

OperatorMatrix pauli(Pauli p) {
  OperatorMatrix m(2, 2);
  switch (p) {
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kImag, kImag, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
    case Pauli::I: m << 1, 0, 0, 1; break;
  }
  return m;
}

OperatorMatrix embed(const OperatorMatrix& op, int k, int n) {
  if (k < 1 || k > n) throw DomainError("qubit index out of range");
  OperatorMatrix out = OperatorMatrix::Identity(1, 1);
  for (int q = 1; q <= n; ++q) {
    out = kron(out, q == k ? op : OperatorMatrix(OperatorMatrix::Identity(2, 2)));
  }
  return out;
}

std::vector<Pauli> pauli_string(int n, std::size_t index) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  const std::size_t total = std::size_t{1} << (2 * n);
  if (index >= total) throw DomainError("Pauli string index out of range");
  std::vector<Pauli> out(n);
  for (int q = n - 1; q >= 0; --q) {
    out[q] = static_cast<Pauli>(index & 3u);
    index >>= 2;
  }
  return out;
}

OperatorMatrix pauli_string_matrix(int n, std::size_t index) {
  OperatorMatrix out = OperatorMatrix::Identity(1, 1);
  for (Pauli p : pauli_string(n, index)) out = kron(out, pauli(p));
  return out;
}

std::string pauli_string_name(int n, std::size_t index) {
  static constexpr char kNames[] = {'x', 'y', 'z', 'I'};
  std::string s;
  for (Pauli p : pauli_string(n, index)) s.push_back(kNames[static_cast<int>(p)]);
  return s;
}

OperatorMatrix collective_spin(int n, Pauli axis) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  OperatorMatrix f = OperatorMatrix::Zero(dim, dim);
  if (axis == Pauli::I) throw DomainError("collective spin axis must be x, y or z");
  for (int k = 1; k <= n; ++k) f += 0.5 * embed(pauli(axis), k, n);
  return f;
}

PauliCoefficients pauli_coefficients(const OperatorMatrix& u) {
  const int n = qubit_count(u);
  const std::size_t count = std::size_t{1} << (2 * n);
  const double dim = static_cast<double>(u.rows());
  PauliCoefficients pc;
  pc.num_qubits = n;
  pc.c.resize(static_cast<Eigen::Index>(count));
  for (std::size_t k = 0; k < count; ++k) {
    pc.c(static_cast<Eigen::Index>(k)) =
        (pauli_string_matrix(n, k).adjoint() * u).trace() / dim;
  }
  return pc;
}

OperatorMatrix from_pauli_coefficients(const PauliCoefficients& pc) {
  const std::size_t count = std::size_t{1} << (2 * pc.num_qubits);
  if (static_cast<std::size_t>(pc.c.size()) != count) {
    throw DomainError("coefficient vector length does not match 4^N");
  }
  const Eigen::Index dim = Eigen::Index{1} << pc.num_qubits;
  OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < count; ++k) {
    out += pc.c(static_cast<Eigen::Index>(k)) * pauli_string_matrix(pc.num_qubits, k);
  }
  return out;
}

Complex scaling_factor(const OperatorMatrix& u, const OperatorMatrix& g) {
  if (u.rows() != g.rows() || u.cols() != g.cols()) {
    throw DomainError("scaling_factor: dimension mismatch");
  }
  qubit_count(u);
  return (u.adjoint() * g).trace() / static_cast<double>(u.rows());
}

// ---------------------------------------------------------------------------

double& Quaternion::operator[](std::size_t i) {
  switch (i) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
  }
  throw DomainError("quaternion index out of range");
}

double Quaternion::operator[](std::size_t i) const {
  return const_cast<Quaternion&>(*this)[i];
}

double Quaternion::norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize a zero quaternion");
  return {a / n, b / n, c / n, d / n};
}

Quaternion Quaternion::canonical() const {
  constexpr double kTie = 1e-12;
  // Tie-break order D, A, B, C.
  const std::size_t order[] = {3, 0, 1, 2};
  std::size_t best = order[0];
  for (std::size_t i : order) {
    if (std::abs((*this)[i]) > std::abs((*this)[best]) + kTie) best = i;
  }
  return (*this)[best] < 0.0 ? -*this : *this;
}

OperatorMatrix quaternion_matrix(const Quaternion& q) {
  OperatorMatrix u(2, 2);
  u << Complex(q.d, q.c), Complex(q.b, q.a), Complex(-q.b, q.a), Complex(q.d, -q.c);
  return u;
}

QuaternionUnitary quaternion_to_unitary(const Quaternion& q) {
  QuaternionUnitary out;
  const double n = q.norm();
  out.renormalized = std::abs(n - 1.0) > 1e-10;
  out.unitary = quaternion_matrix(out.renormalized ? q.normalized() : q);
  return out;
}

Quaternion unitary_to_quaternion(const OperatorMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DomainError("unitary_to_quaternion needs a 2x2 matrix");
  const Complex det = u.determinant();
  if (std::abs(det) < 1e-12) throw DomainError("unitary_to_quaternion: singular matrix");
  const OperatorMatrix s = u / std::sqrt(det);
  Quaternion q;
  q.a = std::imag(s(0, 1) + s(1, 0)) / 2.0;
  q.b = std::real(s(0, 1) - s(1, 0)) / 2.0;
  q.c = std::imag(s(0, 0) - s(1, 1)) / 2.0;
  q.d = std::real(s(0, 0) + s(1, 1)) / 2.0;
  return q.normalized().canonical();
}

double quaternion_distance(const Quaternion& p, const Quaternion& q) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(p[i] - q[i]));
    minus = std::max(minus, std::abs(p[i] + q[i]));
  }
  return std::min(plus, minus);
}

// ---------------------------------------------------------------------------

Label Label::of(std::initializer_list<int> qubits) {
  Label l;
  for (int q : qubits) {
    if (q < 1 || q > 32) throw DomainError("qubit index out of range");
    l.mask |= 1u << (q - 1);
  }
  return l;
}

std::string Label::to_string() const {
  if (mask == 0) return "empty";
  std::string s;
  for (int q = 1; q <= 32; ++q) {
    if (mask & (1u << (q - 1))) s += std::to_string(q);
  }
  return s;
}

Label Label::parse(std::string_view s) {
  if (s == "empty" || s == "0") return empty();
  if (s.empty()) throw DomainError("empty droplet label");
  Label l;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') {
      throw DomainError("invalid droplet label: " + std::string(s));
    }
    l.mask |= 1u << (ch - '1');
  }
  return l;
}

const std::vector<LabelRanks>& admissible_tensors(int n) {
  static const std::vector<LabelRanks> one = {{Label::empty(), {0}}, {Label::of({1}), {1}}};
  static const std::vector<LabelRanks> two = {{Label::empty(), {0}},
                                              {Label::of({1}), {1}},
                                              {Label::of({2}), {1}},
                                              {Label::of({1, 2}), {0, 1, 2}}};
  if (n == 1) return one;
  if (n == 2) return two;
  if (n >= 3) throw UnimplementedError("tensor sets for three or more qubits are not built");
  throw DomainError("qubit count must be >= 1");
}

namespace {

bool admissible(int n, const TensorIndex& idx) {
  for (const auto& lr : admissible_tensors(n)) {
    if (lr.label == idx.label) {
      return std::find(lr.ranks.begin(), lr.ranks.end(), idx.rank) != lr.ranks.end();
    }
  }
  return false;
}

OperatorMatrix two_qubit(Pauli p1, Pauli p2) { return kron(pauli(p1), pauli(p2)); }

}  // namespace

OperatorMatrix axial_tensor(int n, const TensorIndex& idx) {
  if (idx.order != 0) throw DomainError("axial tensor requires m = 0");
  if (!admissible(n, idx)) throw DomainError("inadmissible tensor index");
  const std::uint32_t l = idx.label.mask;
  if (n == 1) {
    if (l == 0) return pauli(Pauli::I) / std::sqrt(2.0);
    return pauli(Pauli::Z) / std::sqrt(2.0);
  }
  using P = Pauli;
  switch (l) {
    case 0: return two_qubit(P::I, P::I) / 2.0;
    case 1: return two_qubit(P::Z, P::I) / 2.0;
    case 2: return two_qubit(P::I, P::Z) / 2.0;
    default: break;
  }
  const OperatorMatrix xx = two_qubit(P::X, P::X);
  const OperatorMatrix yy = two_qubit(P::Y, P::Y);
  const OperatorMatrix zz = two_qubit(P::Z, P::Z);
  switch (idx.rank) {
    case 0: return (xx + yy + zz) / (2.0 * std::sqrt(3.0));
    case 1: return (two_qubit(P::X, P::Y) - two_qubit(P::Y, P::X)) / (2.0 * std::sqrt(2.0));
    default: return -(xx + yy - 2.0 * zz) / (2.0 * std::sqrt(6.0));
  }
}

OperatorMatrix tensor_operator(int n, const TensorIndex& idx) {
  const int j = idx.rank;
  const int m = idx.order;
  if (std::abs(m) > j) throw DomainError("tensor order |m| exceeds rank");
  OperatorMatrix t = axial_tensor(n, {idx.label, j, 0});
  if (m == 0) return t;
  const OperatorMatrix fx = collective_spin(n, Pauli::X);
  const OperatorMatrix fy = collective_spin(n, Pauli::Y);
  const int step = m > 0 ? 1 : -1;
  const OperatorMatrix ladder = fx + static_cast<double>(step) * kImag * fy;
  for (int cur = 0; cur != m; cur += step) {
    const double coeff = std::sqrt(static_cast<double>(j * (j + 1) - cur * (cur + step)));
    t = (ladder * t - t * ladder) / coeff;
  }
  return t;
}

// ---------------------------------------------------------------------------

OperatorMatrix rotation_operator(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("qubit count must be >= 1");
  return expm_hermitian(collective_spin(n, Pauli::Z), alpha) *
         expm_hermitian(collective_spin(n, Pauli::Y), beta);
}

OperatorMatrix axis_angle_unitary(double gamma, const std::array<double, 3>& axis) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (len == 0.0) throw DomainError("rotation axis has zero length");
  const OperatorMatrix ns = (axis[0] * pauli(Pauli::X) + axis[1] * pauli(Pauli::Y) +
                             axis[2] * pauli(Pauli::Z)) /
                            len;
  return std::cos(gamma / 2.0) * pauli(Pauli::I) - kImag * std::sin(gamma / 2.0) * ns;
}

namespace gates {

OperatorMatrix identity(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return OperatorMatrix::Identity(dim, dim);
}
OperatorMatrix x() { return pauli(Pauli::X); }
OperatorMatrix y() { return pauli(Pauli::Y); }
OperatorMatrix z() { return pauli(Pauli::Z); }

OperatorMatrix hadamard() {
  OperatorMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

OperatorMatrix s() {
  OperatorMatrix m(2, 2);
  m << 1, 0, 0, kImag;
  return m;
}

OperatorMatrix t() {
  OperatorMatrix m(2, 2);
  m << 1, 0, 0, std::exp(kImag * (kPi / 4.0));
  return m;
}

OperatorMatrix sqrt_not() {
  OperatorMatrix m(2, 2);
  m << 1, -kImag, -kImag, 1;
  return m / std::sqrt(2.0);
}

OperatorMatrix cnot() {
  OperatorMatrix m = OperatorMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

OperatorMatrix u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double sn = std::sin(theta / 2.0);
  OperatorMatrix m(2, 2);
  m << c, -std::exp(kImag * lambda) * sn, std::exp(kImag * phi) * sn,
      std::exp(kImag * (phi + lambda)) * c;
  return m;
}

OperatorMatrix rz(double lambda) { return u3(0.0, 0.0, lambda); }

OperatorMatrix by_name(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  if (up == "I" || up == "ID") return identity(1);
  if (up == "X" || up == "NOT") return x();
  if (up == "Y") return y();
  if (up == "Z") return z();
  if (up == "H") return hadamard();
  if (up == "S") return s();
  if (up == "T") return t();
  if (up == "SX" || up == "SQRT_NOT") return sqrt_not();
  if (up == "CNOT" || up == "CX") return cnot();
  throw DomainError("unknown gate name: " + std::string(name));
}

}  // namespace gates

}  // namespace wigtomo
