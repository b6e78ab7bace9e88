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


// Monte-Carlo studies: random gates, the standard process-tomography
// baseline, and shot-budget-matched comparisons of the reconstruction
// schemes.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wigtomo/reconstruct.hpp"

namespace wigtomo {

/// Uniform quaternion on S^3 (four standard normals, normalized).
Quaternion random_quaternion(std::mt19937_64& rng);
OperatorMatrix random_unitary(std::uint64_t seed);

/// Rotation axis of a single-qubit unitary (unit vector) and its angle gamma
/// in [0, 2 pi] for the form cos(gamma/2) - i sin(gamma/2) n.sigma.
struct AxisAngle {
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double gamma = 0.0;
};
AxisAngle axis_angle(const OperatorMatrix& u);

/// Same rotation angle, axis tilted by `tilt` radians toward a seeded
/// direction orthogonal to the original axis.
OperatorMatrix tilt_axis(const OperatorMatrix& u, double tilt, std::uint64_t seed);

/// Inputs {|0>, |1>, |+>, |+i>} x Pauli bases {x, y, z}; `shots` is the total
/// budget (floor of shots/12 per setting, remainder round-robin). Linear
/// inversion, Choi matrix, leading eigenvector, polar projection.
/// Exact expectations when `shots` is empty.
OperatorMatrix standard_tomography(const OperatorMatrix& u_actual, std::optional<long> shots,
                                   std::uint64_t seed);

enum class Scenario { FullWigner, AdaptiveTwoIter, NonIterative, Standard };
std::string scenario_name(Scenario s);
Scenario parse_scenario(const std::string& s);

/// Circuit settings N_p per reconstruction: nodes x 2 detection settings x
/// rotations for Wigner schemes (both iterations for the adaptive one), 12
/// for the standard baseline.
long circuit_settings(Scenario s, int grid_order);

struct StudyConfig {
  Scenario scenario = Scenario::FullWigner;
  std::vector<long> shots_grid;  // N_tot values, or N_s values if shots_per_setting
  bool shots_per_setting = false;
  bool exact = false;            // ignore shots_grid values, use exact expectations
  int gates = 1;
  int noise_instances = 1;
  int grid_order = 26;
  bool optimize = false;          // full_wigner: also run the cost optimizer
  double adaptive_tilt = 30.0 * kPi / 180.0;
  double non_iterative_tilt = 2.0 * kPi / 180.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TrialRecord {
  long shots_value = 0;
  int gate = 0;
  int instance = 0;
  long total_shots = 0;
  double fidelity = 0.0;
  std::optional<double> fidelity_optimized;
};

struct ShotSummary {
  long shots_value = 0;
  long total_shots = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::optional<double> mean_optimized;
  std::optional<double> stddev_optimized;
  double mean_error() const { return 1.0 - mean; }
};

struct StudyResult {
  std::vector<ShotSummary> summary;
  std::vector<TrialRecord> trials;
  std::string metric = "error = 1 - mean process fidelity";
};

StudyResult run_study(const StudyConfig& cfg);

}  // namespace wigtomo
