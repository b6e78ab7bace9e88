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


// Scanning engine: simulated expectation values over a sphere grid are
// assembled into one droplet per controlled rotation G_k. Single-qubit
// gates are supported; larger registers raise UnimplementedError.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wigtomo/circuit_sim.hpp"
#include "wigtomo/droplet.hpp"

namespace wigtomo {

enum class Observable : int { X0 = 0, Y0 = 1, X0Z1 = 2, Y0Z1 = 3 };
inline constexpr int kObservableCount = 4;
std::string observable_name(Observable o);

enum class DetectionAxis { X, Y };

struct NoiseModel {
  double amplitude_scale = 1.0;  // s in (0, 1]
  double ancilla_phase = 0.0;    // lambda, radians, RZ on q0 before detection

  void validate() const;
};

struct ScanConfig {
  SphereGrid grid = lebedev_grid(50);
  std::optional<long> shots;  // empty selects exact expectations
  std::vector<OperatorMatrix> rotations;
  std::uint64_t seed = 0;
  NoiseModel noise;
  double correction = 0.0;  // RZ(-correction) on q0 after the noise phase

  void validate() const;
};

/// The four rotations of the single-qubit scheme: sigma_x, sigma_y, sigma_z, 1.
std::vector<OperatorMatrix> standard_rotations();

struct ExpectationRecord {
  std::size_t grid_index = 0;
  double theta = 0.0;
  double phi = 0.0;
  double weight = 0.0;
  int k = 1;  // 1-based rotation index
  Observable observable = Observable::X0;
  double ideal = 0.0;
  double estimate = 0.0;
  long shots = 0;  // 0 in exact mode
  std::uint64_t seed = 0;
};

/// Exact per-preparation expectations for every (k, node, observable). Shot
/// sampling draws from these without re-simulating.
struct IdealScan {
  SphereGrid grid;
  int num_rotations = 0;
  double amplitude_scale = 1.0;
  // values[k][node][observable][preparation], before amplitude scaling.
  std::vector<std::vector<std::array<std::array<double, 4>, kObservableCount>>> values;

  /// Temporal average (times amplitude scale) for one item.
  double ideal(int k0, std::size_t node, Observable o) const;
};

struct ScanResult {
  std::vector<Droplet> raw;       // f_k
  std::vector<Droplet> adjusted;  // f_hat_k
  std::vector<ExpectationRecord> records;  // ordered by (k, observable, node)
};

/// U3(-pi/2, 0, 0) for x, U3(pi/2, 0, pi/2) for y, on q0.
Gate detection_rotation(DetectionAxis axis);

/// Full circuit for one setting: mapping block, R(alpha, beta)^dagger on the
/// system qubits, noise and correction phases on q0, detection rotation. The
/// Hadamard on q0 and the basis preparation are part of the input state.
Circuit scan_circuit(const OperatorMatrix& u, const OperatorMatrix& g, const SphereNode& node,
                     DetectionAxis axis, const NoiseModel& noise, double correction);

/// Appends RZ(lambda) on q0; the amplitude scale acts on expectations.
Circuit apply_noise(Circuit c, const NoiseModel& noise);

/// Adds an RZ(-lambda_corr) compensation; repeated calls accumulate.
ScanConfig apply_correction(ScanConfig cfg, double lambda_corr);

IdealScan ideal_scan(const OperatorMatrix& u_actual, const ScanConfig& cfg);
ScanResult sample_scan(const IdealScan& ideal, const ScanConfig& cfg);
ScanResult scan(const OperatorMatrix& u_actual, const ScanConfig& cfg);

/// Shots of preparation `prep` when `shots` are split evenly over `count`
/// preparations, remainder assigned round-robin from the first.
long split_shots(long shots, int count, int prep);

// ---------------------------------------------------------------------------
// Calibration

struct CalibrationResult {
  double lambda_corr = 0.0;  // in [-pi, pi)
  double fit_residual = 0.0;  // RMS residual of the first-harmonic fit
  double amplitude = 0.0;     // mean fitted first-harmonic amplitude
};

/// Uniform sweep of `count` angles over [0, 2 pi).
std::vector<double> uniform_sweep(int count);

/// Runs the calibration circuits (U = X, controlled-X, beta = pi/2, alpha = 0,
/// extra RZ(lambda) per sweep point) under cfg.noise and cfg.shots, then
/// recovers the ancilla phase from the first Fourier coefficient of the
/// X0Z1 and Y0Z1 channels relative to a noiseless reference.
CalibrationResult calibrate(const ScanConfig& cfg, const std::vector<double>& lambda_sweep);

/// Wraps to [-pi, pi).
double wrap_angle(double x);

}  // namespace wigtomo
