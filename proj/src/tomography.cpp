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


#include "wigtomo/tomography.hpp"

#include <cmath>

#include "wigtomo/errors.hpp"

namespace wigtomo {

namespace {

constexpr int kPreparations = 4;
constexpr double kTwoPi = 2.0 * kPi;

void require_single_qubit(const OperatorMatrix& u) {
  const int n = qubit_count(u);
  if (n != 1) {
    throw UnimplementedError("scanning circuits are built for single-qubit gates only (got N = " +
                             std::to_string(n) + ")");
  }
}

OperatorMatrix q0_block(DetectionAxis axis, const NoiseModel& noise, double correction) {
  return detection_rotation(axis).unitary * gates::rz(-correction) *
         gates::rz(noise.ancilla_phase);
}

}  // namespace

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::X0: return "X0";
    case Observable::Y0: return "Y0";
    case Observable::X0Z1: return "X0Z1";
    case Observable::Y0Z1: return "Y0Z1";
  }
  return "?";
}

void NoiseModel::validate() const {
  if (!(amplitude_scale > 0.0 && amplitude_scale <= 1.0)) {
    throw DomainError("noise amplitude scale must lie in (0, 1]");
  }
  if (!std::isfinite(ancilla_phase)) throw DomainError("noise phase must be finite");
}

void ScanConfig::validate() const {
  if (rotations.empty()) throw DomainError("scan needs at least one controlled rotation");
  if (grid.nodes.empty()) throw DomainError("scan grid is empty");
  if (shots && *shots < kPreparations) {
    throw DomainError("shot mode needs at least 4 shots per circuit setting");
  }
  noise.validate();
}

std::vector<OperatorMatrix> standard_rotations() {
  return {gates::x(), gates::y(), gates::z(), gates::identity(1)};
}

double IdealScan::ideal(int k0, std::size_t node, Observable o) const {
  const auto& p = values.at(k0).at(node)[static_cast<int>(o)];
  double sum = 0.0;
  for (double v : p) sum += v;
  return amplitude_scale * sum / kPreparations;
}

Gate detection_rotation(DetectionAxis axis) {
  if (axis == DetectionAxis::X) return Gate::make(gates::u3(-kPi / 2.0, 0.0, 0.0), {0});
  return Gate::make(gates::u3(kPi / 2.0, 0.0, kPi / 2.0), {0});
}

Circuit apply_noise(Circuit c, const NoiseModel& noise) {
  c.gates.push_back(Gate::make(gates::rz(noise.ancilla_phase), {0}));
  return c;
}

ScanConfig apply_correction(ScanConfig cfg, double lambda_corr) {
  cfg.correction += lambda_corr;
  return cfg;
}

Circuit scan_circuit(const OperatorMatrix& u, const OperatorMatrix& g, const SphereNode& node,
                     DetectionAxis axis, const NoiseModel& noise, double correction) {
  const int n = qubit_count(u);
  Circuit c = mapping_circuit(u, g);
  std::vector<int> system(n);
  for (int q = 0; q < n; ++q) system[q] = 1 + q;
  c.gates.push_back(Gate::make(rotation_operator(n, node.phi, node.theta).adjoint(), system));
  c = apply_noise(std::move(c), noise);
  if (correction != 0.0) c.gates.push_back(Gate::make(gates::rz(-correction), {0}));
  c.gates.push_back(detection_rotation(axis));
  return c;
}

long split_shots(long shots, int count, int prep) {
  return shots / count + (prep < shots % count ? 1 : 0);
}

IdealScan ideal_scan(const OperatorMatrix& u_actual, const ScanConfig& cfg) {
  cfg.validate();
  require_single_qubit(u_actual);
  if (!is_unitary(u_actual, 1e-10)) throw DomainError("scanned gate is not unitary");

  IdealScan out;
  out.grid = cfg.grid;
  out.num_rotations = static_cast<int>(cfg.rotations.size());
  out.amplitude_scale = cfg.noise.amplitude_scale;
  out.values.resize(cfg.rotations.size());

  // Z0 and Z0 Z1 on the 3-qubit register [q0, q1, q1a].
  const Eigen::VectorXd z0 = (Eigen::VectorXd(8) << 1, 1, 1, 1, -1, -1, -1, -1).finished();
  const Eigen::VectorXd z0z1 = (Eigen::VectorXd(8) << 1, 1, -1, -1, -1, -1, 1, 1).finished();
  const OperatorMatrix id2 = gates::identity(1);
  const OperatorMatrix q0x = q0_block(DetectionAxis::X, cfg.noise, cfg.correction);
  const OperatorMatrix q0y = q0_block(DetectionAxis::Y, cfg.noise, cfg.correction);

  for (std::size_t k = 0; k < cfg.rotations.size(); ++k) {
    const Circuit mapping = mapping_circuit(u_actual, cfg.rotations[k]);
    std::array<DensityMatrix, kPreparations> mapped;
    for (int b = 0; b < kPreparations; ++b) {
      mapped[b] = run_circuit(mapping, prepared_state(1, static_cast<std::uint32_t>(b)));
    }
    auto& per_node = out.values[k];
    per_node.resize(cfg.grid.size());
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
      const SphereNode& node = cfg.grid.nodes[i];
      const OperatorMatrix sys = kron(rotation_operator(1, node.phi, node.theta).adjoint(), id2);
      const OperatorMatrix vx = kron(q0x, sys);
      const OperatorMatrix vy = kron(q0y, sys);
      for (int b = 0; b < kPreparations; ++b) {
        const Eigen::VectorXd px = (vx * mapped[b] * vx.adjoint()).diagonal().real();
        const Eigen::VectorXd py = (vy * mapped[b] * vy.adjoint()).diagonal().real();
        per_node[i][static_cast<int>(Observable::X0)][b] = px.dot(z0);
        per_node[i][static_cast<int>(Observable::Y0)][b] = py.dot(z0);
        per_node[i][static_cast<int>(Observable::X0Z1)][b] = px.dot(z0z1);
        per_node[i][static_cast<int>(Observable::Y0Z1)][b] = py.dot(z0z1);
      }
    }
  }
  return out;
}

ScanResult sample_scan(const IdealScan& ideal, const ScanConfig& cfg) {
  cfg.validate();
  if (!(ideal.grid == cfg.grid) || ideal.num_rotations != static_cast<int>(cfg.rotations.size())) {
    throw DomainError("ideal scan does not match the configuration");
  }
  const std::size_t nodes = ideal.grid.size();
  const double s = ideal.amplitude_scale;
  ScanResult out;
  out.records.reserve(static_cast<std::size_t>(ideal.num_rotations) * kObservableCount * nodes);

  // estimates[obs][node] for the current k.
  std::array<Eigen::VectorXd, kObservableCount> est;
  for (int k0 = 0; k0 < ideal.num_rotations; ++k0) {
    const int k = k0 + 1;
    for (int o = 0; o < kObservableCount; ++o) {
      est[o].resize(static_cast<Eigen::Index>(nodes));
      for (std::size_t i = 0; i < nodes; ++i) {
        const auto& p = ideal.values[k0][i][o];
        ExpectationRecord r;
        r.grid_index = i;
        r.theta = ideal.grid.nodes[i].theta;
        r.phi = ideal.grid.nodes[i].phi;
        r.weight = ideal.grid.nodes[i].weight;
        r.k = k;
        r.observable = static_cast<Observable>(o);
        r.ideal = ideal.ideal(k0, i, r.observable);
        if (cfg.shots) {
          r.shots = *cfg.shots;
          r.seed = derive_seed(cfg.seed, k, o, i);
          std::mt19937_64 rng(r.seed);
          double sum = 0.0;
          for (int b = 0; b < kPreparations; ++b) {
            sum += sample_shots(s * p[b], split_shots(r.shots, kPreparations, b), rng);
          }
          r.estimate = sum / kPreparations;
        } else {
          r.estimate = r.ideal;
        }
        est[o](static_cast<Eigen::Index>(i)) = r.estimate;
        out.records.push_back(r);
      }
    }

    // Scale 4 = 2^(N+1) turns the sigma_0^+ overlaps into droplet samples.
    const double c0 = std::sqrt(1.0 / (2.0 * kPi));
    const double c1 = std::sqrt(3.0 / (2.0 * kPi));
    Droplet f = Droplet::zero(ideal.grid, 1);
    auto& f_empty = f.samples[Label::empty()];
    auto& f_one = f.samples[Label::of({1})];
    for (std::size_t i = 0; i < nodes; ++i) {
      const auto idx = static_cast<Eigen::Index>(i);
      f_empty(idx) = c0 * Complex(est[0](idx), est[1](idx));
      f_one(idx) = c1 * Complex(est[2](idx), est[3](idx));
    }
    out.adjusted.push_back(ideal.num_rotations == 4 ? phase_adjust(f, k) : f);
    out.raw.push_back(std::move(f));
  }
  return out;
}

ScanResult scan(const OperatorMatrix& u_actual, const ScanConfig& cfg) {
  return sample_scan(ideal_scan(u_actual, cfg), cfg);
}

// ---------------------------------------------------------------------------

double wrap_angle(double x) {
  double y = std::fmod(x + kPi, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  double out = y - kPi;
  if (out >= kPi) out -= kTwoPi;
  return out;
}

std::vector<double> uniform_sweep(int count) {
  if (count < 1) throw DomainError("sweep needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = kTwoPi * i / count;
  return out;
}

namespace {

struct Channels {
  std::vector<double> x;  // X0Z1
  std::vector<double> y;  // Y0Z1
};

Channels run_calibration(const ScanConfig& base, const std::vector<double>& sweep) {
  Channels ch;
  SphereGrid g;
  g.order = 0;
  g.nodes = {{kPi / 2.0, 0.0, 1.0}};
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    ScanConfig cfg = base;
    cfg.grid = g;
    cfg.rotations = {gates::x()};
    cfg.noise.ancilla_phase = base.noise.ancilla_phase + sweep[i];
    cfg.seed = splitmix64(base.seed ^ (0xca11b0a7ULL + i));
    const ScanResult r = scan(gates::x(), cfg);
    for (const auto& rec : r.records) {
      if (rec.observable == Observable::X0Z1) ch.x.push_back(rec.estimate);
      if (rec.observable == Observable::Y0Z1) ch.y.push_back(rec.estimate);
    }
  }
  return ch;
}

Complex first_harmonic(const std::vector<double>& y, const std::vector<double>& sweep) {
  Complex c = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) c += y[i] * std::polar(1.0, -sweep[i]);
  return 2.0 * c / static_cast<double>(y.size());
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

CalibrationResult calibrate(const ScanConfig& cfg, const std::vector<double>& lambda_sweep) {
  if (lambda_sweep.size() < 8) throw DomainError("calibration sweep needs at least 8 points");
  for (double l : lambda_sweep) {
    if (!(l >= 0.0 && l < kTwoPi)) throw DomainError("calibration sweep must lie in [0, 2 pi)");
  }
  cfg.noise.validate();

  ScanConfig reference_cfg = cfg;
  reference_cfg.noise = NoiseModel{};
  reference_cfg.correction = 0.0;
  reference_cfg.shots.reset();
  const Channels data = run_calibration(cfg, lambda_sweep);
  const Channels ref = run_calibration(reference_cfg, lambda_sweep);

  const Complex cx = first_harmonic(data.x, lambda_sweep);
  const Complex cy = first_harmonic(data.y, lambda_sweep);
  const Complex rx = first_harmonic(ref.x, lambda_sweep);
  const Complex ry = first_harmonic(ref.y, lambda_sweep);
  constexpr double kFloor = 1e-9;
  if (std::abs(rx) < kFloor || std::abs(ry) < kFloor) {
    throw CalibrationError("calibration reference signal vanishes");
  }
  if (std::abs(cx) < kFloor && std::abs(cy) < kFloor) {
    throw CalibrationError("calibration signal is zero; no phase can be fitted");
  }
  const Complex joint = std::polar(1.0, std::arg(cx) - std::arg(rx)) +
                        std::polar(1.0, std::arg(cy) - std::arg(ry));
  if (std::abs(joint) < kFloor) throw CalibrationError("calibration channels disagree");

  CalibrationResult out;
  out.lambda_corr = wrap_angle(std::arg(joint));
  out.amplitude = 0.5 * (std::abs(cx) + std::abs(cy));

  double sq = 0.0;
  const double mx = mean(data.x);
  const double my = mean(data.y);
  for (std::size_t i = 0; i < lambda_sweep.size(); ++i) {
    const Complex e = std::polar(1.0, lambda_sweep[i]);
    const double fx = mx + (cx * e).real();
    const double fy = my + (cy * e).real();
    sq += (data.x[i] - fx) * (data.x[i] - fx) + (data.y[i] - fy) * (data.y[i] - fy);
  }
  out.fit_residual = std::sqrt(sq / (2.0 * static_cast<double>(lambda_sweep.size())));
  return out;
}

}  // namespace wigtomo
