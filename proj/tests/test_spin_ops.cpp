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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wigtomo/errors.hpp"
#include "wigtomo/spin_ops.hpp"

namespace wigtomo {
namespace {

using testing::mat2;
using testing::max_abs;

const Complex I(0.0, 1.0);
const double kR2 = std::sqrt(2.0);

OperatorMatrix X() { return mat2(0, 1, 1, 0); }
OperatorMatrix Y() { return mat2(0, -I, I, 0); }
OperatorMatrix Z() { return mat2(1, 0, 0, -1); }
OperatorMatrix Id() { return mat2(1, 0, 0, 1); }

TEST(AxialTensor, SingleQubitForms) {
  EXPECT_LT(max_abs(axial_tensor(1, {Label::empty(), 0, 0}) - Id() / kR2), 1e-15);
  EXPECT_LT(max_abs(axial_tensor(1, {Label::of({1}), 1, 0}) - Z() / kR2), 1e-15);
}

TEST(AxialTensor, TwoQubitBilinearRankOne) {
  const OperatorMatrix expect =
      (kron(X(), Y()) - kron(Y(), X())) / (2.0 * std::sqrt(2.0));
  EXPECT_LT(max_abs(axial_tensor(2, {Label::of({1, 2}), 1, 0}) - expect), 1e-15);
  const OperatorMatrix t20 =
      -(kron(X(), X()) + kron(Y(), Y()) - 2.0 * kron(Z(), Z())) / (2.0 * std::sqrt(6.0));
  EXPECT_LT(max_abs(axial_tensor(2, {Label::of({1, 2}), 2, 0}) - t20), 1e-15);
  EXPECT_LT(max_abs(axial_tensor(2, {Label::of({2}), 1, 0}) - kron(Id(), Z()) / 2.0), 1e-15);
}

TEST(AxialTensor, HermitianUnitNormAndOrthogonal) {
  for (int n : {1, 2}) {
    std::vector<OperatorMatrix> all;
    for (const auto& lr : admissible_tensors(n)) {
      for (int j : lr.ranks) {
        const OperatorMatrix t = axial_tensor(n, {lr.label, j, 0});
        EXPECT_TRUE(is_hermitian(t));
        EXPECT_NEAR((t.adjoint() * t).trace().real(), 1.0, 1e-14);
        all.push_back(t);
      }
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        EXPECT_LT(std::abs((all[a].adjoint() * all[b]).trace()), 1e-14);
      }
    }
  }
}

TEST(AxialTensor, RejectsInadmissible) {
  EXPECT_THROW(axial_tensor(1, {Label::of({1}), 0, 0}), DomainError);
  EXPECT_THROW(axial_tensor(1, {Label::of({1}), 1, 1}), DomainError);
  EXPECT_THROW(axial_tensor(2, {Label::of({1}), 2, 0}), DomainError);
  EXPECT_THROW(axial_tensor(3, {Label::empty(), 0, 0}), UnimplementedError);
}

TEST(TensorOperator, LadderMatchesRaisingAndLowering) {
  const OperatorMatrix sp = (X() + I * Y()) / 2.0;
  const OperatorMatrix sm = (X() - I * Y()) / 2.0;
  EXPECT_LT(max_abs(tensor_operator(1, {Label::of({1}), 1, 1}) + sp), 1e-14);
  EXPECT_LT(max_abs(tensor_operator(1, {Label::of({1}), 1, -1}) - sm), 1e-14);
}

TEST(TensorOperator, FullBasisIsOrthonormal) {
  for (int n : {1, 2}) {
    std::vector<OperatorMatrix> all;
    for (const auto& lr : admissible_tensors(n)) {
      for (int j : lr.ranks) {
        for (int m = -j; m <= j; ++m) all.push_back(tensor_operator(n, {lr.label, j, m}));
      }
    }
    ASSERT_EQ(all.size(), std::size_t{1} << (2 * n));
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        const Complex ip = (all[a].adjoint() * all[b]).trace();
        EXPECT_NEAR(std::abs(ip), a == b ? 1.0 : 0.0, 1e-13);
      }
    }
  }
}

TEST(Rotation, IdentityAtOrigin) {
  EXPECT_LT(max_abs(rotation_operator(1, 0.0, 0.0) - Id()), 1e-15);
}

TEST(Rotation, BetaPiMatchesSeries) {
  const OperatorMatrix expect = testing::taylor_exp(-I * kPi * Y() / 2.0);
  EXPECT_LT(max_abs(rotation_operator(1, 0.0, kPi) - expect), 1e-13);
  EXPECT_LT(max_abs(expect - mat2(0, -1, 1, 0)), 1e-13);
}

TEST(Rotation, GeneralAnglesMatchSeries) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(-4.0, 4.0);
  for (int t = 0; t < 20; ++t) {
    const double a = ang(rng), b = ang(rng);
    for (int n : {1, 2}) {
      OperatorMatrix fz = OperatorMatrix::Zero(1 << n, 1 << n);
      OperatorMatrix fy = fz;
      for (int k = 1; k <= n; ++k) {
        OperatorMatrix ez = OperatorMatrix::Identity(1, 1), ey = ez;
        for (int q = 1; q <= n; ++q) {
          ez = kron(ez, q == k ? Z() : Id());
          ey = kron(ey, q == k ? Y() : Id());
        }
        fz += ez / 2.0;
        fy += ey / 2.0;
      }
      const OperatorMatrix expect =
          testing::taylor_exp(-I * a * fz) * testing::taylor_exp(-I * b * fy);
      EXPECT_LT(max_abs(rotation_operator(n, a, b) - expect), 1e-12);
    }
  }
}

TEST(Rotation, TwoQubitIsTensorSquare) {
  for (double a : {0.3, 1.7, -2.2}) {
    for (double b : {0.0, 0.9, 2.8}) {
      const OperatorMatrix r1 = rotation_operator(1, a, b);
      EXPECT_LT(max_abs(rotation_operator(2, a, b) - kron(r1, r1)), 1e-13);
    }
  }
}

TEST(Rotation, UnitaryAndComposes) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(-7.0, 7.0);
  for (int t = 0; t < 50; ++t) {
    const double a = ang(rng), b = ang(rng);
    const OperatorMatrix r = rotation_operator(1, a, b);
    EXPECT_TRUE(is_unitary(r, 1e-12));
    EXPECT_LT(max_abs(rotation_operator(1, a, 0.0) * rotation_operator(1, 0.0, b) - r), 1e-12);
  }
}

TEST(Quaternion, ToUnitaryExamples) {
  EXPECT_LT(max_abs(quaternion_to_unitary({0, 0, 0, 1}).unitary - Id()), 1e-15);
  EXPECT_LT(max_abs(quaternion_to_unitary({1, 0, 0, 0}).unitary - I * X()), 1e-15);
  EXPECT_FALSE(quaternion_to_unitary({1, 0, 0, 0}).renormalized);
  const auto r = quaternion_to_unitary({2, 0, 0, 0});
  EXPECT_TRUE(r.renormalized);
  EXPECT_LT(max_abs(r.unitary - I * X()), 1e-15);
}

TEST(Quaternion, SampleGateRoundTrips) {
  const Quaternion q{0.5198, -0.3462, -0.7424, 0.2425};
  const auto u = quaternion_to_unitary(q);
  EXPECT_TRUE(is_unitary(u.unitary, 1e-3));
  const Quaternion back = unitary_to_quaternion(u.unitary);
  const Quaternion qn = q.normalized();
  EXPECT_LT(quaternion_distance(back, qn), 1e-12);
}

TEST(Quaternion, FromUnitaryExamples) {
  const Quaternion id = unitary_to_quaternion(Id());
  EXPECT_NEAR(id.d, 1.0, 1e-15);
  const OperatorMatrix h = mat2(1, 1, 1, -1) / kR2;
  const Quaternion qh = unitary_to_quaternion(h);
  EXPECT_LT(quaternion_distance(qh, {-1 / kR2, 0, -1 / kR2, 0}), 1e-12);
}

TEST(Quaternion, NotGateCanonicalSign) {
  // gamma = pi about x gives -i sigma_x, i.e. A = -1 before canonicalization.
  const OperatorMatrix not_gate = axis_angle_unitary(kPi, {1, 0, 0});
  EXPECT_LT(max_abs(not_gate + I * X()), 1e-15);
  const Quaternion q = unitary_to_quaternion(not_gate);
  EXPECT_NEAR(q.a, 1.0, 1e-15);
  EXPECT_NEAR(q.d, 0.0, 1e-15);
}

TEST(Quaternion, CanonicalTieBreakOrder) {
  const Quaternion q = Quaternion{-0.5, -0.5, -0.5, -0.5}.canonical();
  EXPECT_GT(q.d, 0.0);
  const Quaternion r = Quaternion{-0.6, 0.6, 0.0, 0.2}.canonical();
  EXPECT_GT(r.a, 0.0);
}

TEST(Quaternion, RandomRoundTripUpToSign) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (int t = 0; t < 200; ++t) {
    const OperatorMatrix u = testing::random_su2(rng);
    const OperatorMatrix back = quaternion_to_unitary(unitary_to_quaternion(u)).unitary;
    EXPECT_LT(std::min(max_abs(back - u), max_abs(back + u)), 1e-12);
    // A global phase is removed before reading components.
    const OperatorMatrix v = std::polar(1.0, phase(rng)) * u;
    EXPECT_LT(quaternion_distance(unitary_to_quaternion(v), unitary_to_quaternion(u)), 1e-12);
  }
}

TEST(Pauli, OrderingAndNames) {
  EXPECT_EQ(pauli_string_name(1, 0), "x");
  EXPECT_EQ(pauli_string_name(1, 3), "I");
  EXPECT_EQ(pauli_string_name(2, 0), "xx");
  EXPECT_EQ(pauli_string_name(2, 3), "xI");
  EXPECT_EQ(pauli_string_name(2, 12), "Ix");
  EXPECT_EQ(pauli_string_name(2, 15), "II");
  EXPECT_LT(max_abs(pauli_string_matrix(2, 9) - kron(Z(), Y())), 1e-15);
}

TEST(PauliCoefficients, Examples) {
  const auto c_id = pauli_coefficients(Id()).c;
  EXPECT_LT((c_id - Eigen::Vector4cd(0, 0, 0, 1)).norm(), 1e-15);

  // Hadamard with the phase i: i (sigma_x + sigma_z) / sqrt(2).
  const OperatorMatrix ih = I * mat2(1, 1, 1, -1) / kR2;
  const auto c_h = pauli_coefficients(ih).c;
  EXPECT_LT(std::abs(c_h(0) - I / kR2), 1e-15);
  EXPECT_LT(std::abs(c_h(1)), 1e-15);
  EXPECT_LT(std::abs(c_h(2) - I / kR2), 1e-15);
  EXPECT_LT(std::abs(c_h(3)), 1e-15);
}

TEST(PauliCoefficients, CnotSupport) {
  OperatorMatrix cnot = OperatorMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const auto c = pauli_coefficients(cnot).c;
  // Direct trace oracle: CNOT = (II + Ix + zI - zx) / 2.
  for (std::size_t k = 0; k < 16; ++k) {
    const std::string name = pauli_string_name(2, k);
    Complex expect = 0.0;
    if (name == "II" || name == "Ix" || name == "zI") expect = 0.5;
    if (name == "zx") expect = -0.5;
    EXPECT_LT(std::abs(c(static_cast<Eigen::Index>(k)) - expect), 1e-15) << name;
  }
}

TEST(PauliCoefficients, LinearBijectionOnRandomMatrices) {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < 10; ++t) {
      const OperatorMatrix m = testing::random_matrix(rng, 1 << n);
      EXPECT_LT(max_abs(from_pauli_coefficients(pauli_coefficients(m)) - m), 1e-12);
    }
  }
}

TEST(PauliCoefficients, UnitNormForUnitaries) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const OperatorMatrix u = testing::random_su2(rng);
    EXPECT_NEAR(pauli_coefficients(u).c.squaredNorm(), 1.0, 1e-12);
    const OperatorMatrix u2 = kron(u, testing::random_su2(rng)) * gates::cnot();
    EXPECT_NEAR(pauli_coefficients(u2).c.squaredNorm(), 1.0, 1e-12);
  }
}

TEST(ScalingFactor, Examples) {
  const OperatorMatrix sqrt_not = (Id() - I * X()) / kR2;
  EXPECT_LT(std::abs(scaling_factor(sqrt_not, Id()) - 1.0 / kR2), 1e-15);
  EXPECT_EQ(std::abs(scaling_factor(X(), Id())), 0.0);
  EXPECT_THROW(scaling_factor(Id(), gates::cnot()), DomainError);
}

TEST(ScalingFactor, QuaternionComponents) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const OperatorMatrix u = testing::random_su2(rng);
    // Read components straight from the matrix entries.
    const double a = u(0, 1).imag(), b = u(0, 1).real(), c = u(0, 0).imag(), d = u(0, 0).real();
    EXPECT_LT(std::abs(scaling_factor(u, X()) + I * a), 1e-14);
    EXPECT_LT(std::abs(scaling_factor(u, Y()) + I * b), 1e-14);
    EXPECT_LT(std::abs(scaling_factor(u, Z()) + I * c), 1e-14);
    EXPECT_LT(std::abs(scaling_factor(u, Id()) - d), 1e-14);
    double sum = 0.0;
    for (const auto& g : {X(), Y(), Z(), Id()}) sum += std::norm(scaling_factor(u, g));
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(ScalingFactor, BlindSpotLawOverGammaSweep) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    const double gamma = 4.0 * kPi * i / 400.0;
    const std::array<double, 3> axis{nd(rng), nd(rng), nd(rng)};
    const Complex eps = scaling_factor(axis_angle_unitary(gamma, axis), Id());
    EXPECT_NEAR(eps.real(), std::cos(gamma / 2.0), 1e-12);
    EXPECT_NEAR(eps.imag(), 0.0, 1e-12);
  }
}

TEST(Label, RoundTrip) {
  for (const char* s : {"empty", "1", "2", "12"}) EXPECT_EQ(Label::parse(s).to_string(), s);
  EXPECT_THROW(Label::parse("x"), DomainError);
}

TEST(Gates, NamedLookup) {
  EXPECT_LT(max_abs(gates::by_name("h") - mat2(1, 1, 1, -1) / kR2), 1e-15);
  EXPECT_LT(max_abs(gates::by_name("S") - mat2(1, 0, 0, I)), 1e-15);
  EXPECT_THROW(gates::by_name("nope"), DomainError);
  for (const char* g : {"I", "X", "Y", "Z", "H", "S", "T", "SX"}) {
    EXPECT_TRUE(is_unitary(gates::by_name(g)));
  }
}

TEST(Gates, U3MatchesEulerProduct) {
  // RZ(phi) RY(theta) RZ(lambda) with RZ(x) = diag(1, e^{ix}) and RY real.
  auto ry = [](double t) {
    return mat2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
  };
  auto rz = [](double l) { return mat2(1, 0, 0, std::polar(1.0, l)); };
  for (double th : {0.0, 0.4, -kPi / 2}) {
    for (double ph : {0.0, 1.1}) {
      for (double la : {0.0, kPi / 2, 2.5}) {
        EXPECT_LT(max_abs(gates::u3(th, ph, la) - rz(ph) * ry(th) * rz(la)), 1e-15);
      }
    }
  }
  EXPECT_LT(max_abs(gates::u3(0, 0, 0) - Id()), 1e-15);
}

}  // namespace
}  // namespace wigtomo
