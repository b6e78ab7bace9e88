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


#include "wigtomo/bench.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "wigtomo/errors.hpp"

namespace wigtomo {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::pair<double, double> mean_std(const std::vector<double>& v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  const double mean = s.value() / static_cast<double>(v.size());
  CompensatedSum sq;
  for (double x : v) sq.add((x - mean) * (x - mean));
  const double var = v.size() > 1 ? sq.value() / static_cast<double>(v.size() - 1) : 0.0;
  return {mean, std::sqrt(var)};
}

OperatorMatrix ket_projector(const Eigen::Vector2cd& v) { return v * v.adjoint(); }

}  // namespace

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Quaternion q;
  do {
    q = {normal(rng), normal(rng), normal(rng), normal(rng)};
  } while (q.norm() < 1e-12);
  return q.normalized();
}

OperatorMatrix random_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return quaternion_matrix(random_quaternion(rng));
}

AxisAngle axis_angle(const OperatorMatrix& u) {
  const Quaternion q = unitary_to_quaternion(u);
  AxisAngle out;
  out.gamma = 2.0 * std::acos(std::clamp(q.d, -1.0, 1.0));
  const double s = std::sin(out.gamma / 2.0);
  if (std::abs(s) > 1e-14) out.axis = {-q.a / s, -q.b / s, -q.c / s};
  return out;
}

OperatorMatrix tilt_axis(const OperatorMatrix& u, double tilt, std::uint64_t seed) {
  const AxisAngle aa = axis_angle(u);
  const Eigen::Vector3d n(aa.axis[0], aa.axis[1], aa.axis[2]);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector3d w;
  do {
    w = Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
    w -= w.dot(n) * n;
  } while (w.norm() < 1e-6);
  w.normalize();
  const Eigen::Vector3d m = std::cos(tilt) * n + std::sin(tilt) * w;
  return axis_angle_unitary(aa.gamma, {m(0), m(1), m(2)});
}

OperatorMatrix standard_tomography(const OperatorMatrix& u_actual, std::optional<long> shots,
                                   std::uint64_t seed) {
  if (u_actual.rows() != 2 || u_actual.cols() != 2) {
    throw DomainError("standard tomography baseline is single-qubit only");
  }
  if (shots && *shots < 12) throw DomainError("standard tomography needs at least 12 shots");
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Eigen::Vector2cd, 4> inputs = {
      Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0), Eigen::Vector2cd(r, r),
      Eigen::Vector2cd(r, Complex(0.0, r))};
  const std::array<OperatorMatrix, 3> bases = {pauli(Pauli::X), pauli(Pauli::Y), pauli(Pauli::Z)};

  std::array<OperatorMatrix, 4> out_states;
  std::mt19937_64 rng(splitmix64(seed ^ 0x57a2da4dULL));
  int setting = 0;
  for (std::size_t s = 0; s < inputs.size(); ++s) {
    const OperatorMatrix rho = u_actual * ket_projector(inputs[s]) * u_actual.adjoint();
    OperatorMatrix est = OperatorMatrix::Identity(2, 2) / 2.0;
    for (std::size_t b = 0; b < bases.size(); ++b, ++setting) {
      double p = (bases[b] * rho).trace().real();
      if (shots) p = sample_shots(std::clamp(p, -1.0, 1.0), split_shots(*shots, 12, setting), rng);
      est += 0.5 * p * bases[b];
    }
    out_states[s] = est;
  }
  const OperatorMatrix& e00 = out_states[0];
  const OperatorMatrix& e11 = out_states[1];
  const OperatorMatrix sum = e00 + e11;
  const OperatorMatrix e01 = out_states[2] + kImag * out_states[3] - Complex(0.5, 0.5) * sum;
  const OperatorMatrix e10 = out_states[2] - kImag * out_states[3] - Complex(0.5, -0.5) * sum;

  OperatorMatrix choi = OperatorMatrix::Zero(4, 4);
  choi.block(0, 0, 2, 2) = e00;
  choi.block(0, 2, 2, 2) = e01;
  choi.block(2, 0, 2, 2) = e10;
  choi.block(2, 2, 2, 2) = e11;
  choi = 0.5 * (choi + choi.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<OperatorMatrix> es(choi);
  if (!(es.eigenvalues()(3) > 1e-12)) throw DegenerateInputError("Choi matrix has no positive eigenvalue");
  const Eigen::VectorXcd v = es.eigenvectors().col(3);
  OperatorMatrix u(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) u(k, i) = v(2 * i + k);
  }
  return polar_unitary(u);
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::FullWigner: return "full_wigner";
    case Scenario::AdaptiveTwoIter: return "adaptive_two_iter";
    case Scenario::NonIterative: return "non_iterative";
    case Scenario::Standard: return "standard";
  }
  return "?";
}

Scenario parse_scenario(const std::string& s) {
  for (Scenario sc : {Scenario::FullWigner, Scenario::AdaptiveTwoIter, Scenario::NonIterative,
                      Scenario::Standard}) {
    if (scenario_name(sc) == s) return sc;
  }
  throw DomainError("unknown scenario '" + s + "'");
}

long circuit_settings(Scenario s, int grid_order) {
  switch (s) {
    case Scenario::FullWigner: return 2L * grid_order * 4;
    case Scenario::AdaptiveTwoIter: return 2L * 2 * grid_order;
    case Scenario::NonIterative: return 2L * grid_order;
    case Scenario::Standard: return 12;
  }
  return 0;
}

void StudyConfig::validate() const {
  if (gates < 1 || noise_instances < 1) throw DomainError("study counts must be >= 1");
  if (!exact && shots_grid.empty()) throw DomainError("study needs at least one shot value");
  for (long s : shots_grid) {
    if (s < 1) throw DomainError("shot values must be positive");
  }
  if (scenario != Scenario::Standard) lebedev_grid(grid_order);
}

StudyResult run_study(const StudyConfig& cfg) {
  cfg.validate();
  const std::vector<long> shot_values = cfg.exact ? std::vector<long>{0} : cfg.shots_grid;
  const long np = circuit_settings(cfg.scenario, cfg.grid_order);
  const SphereGrid grid =
      cfg.scenario == Scenario::Standard ? SphereGrid{} : lebedev_grid(cfg.grid_order);
  const bool wants_opt = cfg.optimize && cfg.scenario == Scenario::FullWigner;

  const std::size_t per_value = static_cast<std::size_t>(cfg.gates) * cfg.noise_instances;
  StudyResult result;
  result.trials.resize(shot_values.size() * per_value);

  for (int g = 0; g < cfg.gates; ++g) {
    const std::uint64_t gate_seed = splitmix64(cfg.seed ^ (0x9a7e0000ULL + static_cast<std::uint64_t>(g)));
    const OperatorMatrix target = random_unitary(gate_seed);
    OperatorMatrix actual = target;
    OperatorMatrix rotation = target;  // controlled rotation for single-G schemes
    if (cfg.scenario == Scenario::NonIterative) {
      actual = tilt_axis(target, cfg.non_iterative_tilt, splitmix64(gate_seed + 1));
    }
    if (cfg.scenario == Scenario::AdaptiveTwoIter) {
      rotation = tilt_axis(target, cfg.adaptive_tilt, splitmix64(gate_seed + 2));
    }

    ScanConfig sc;
    sc.grid = grid;
    std::optional<IdealScan> ideal;
    if (cfg.scenario == Scenario::FullWigner) {
      sc.rotations = standard_rotations();
      ideal = ideal_scan(actual, sc);
    } else if (cfg.scenario == Scenario::NonIterative) {
      sc.rotations = {rotation};
      ideal = ideal_scan(actual, sc);
    }

    for (std::size_t si = 0; si < shot_values.size(); ++si) {
      const long value = shot_values[si];
      // Shots per circuit setting for the whole run, and the total actually spent.
      long per_setting = 0;
      long total = 0;
      if (!cfg.exact) {
        if (cfg.scenario == Scenario::Standard) {
          total = cfg.shots_per_setting ? value * 12 : value;
        } else {
          per_setting = cfg.shots_per_setting ? value : value / np;
          if (cfg.scenario == Scenario::AdaptiveTwoIter) {
            // np counts both iterations; AdaptiveConfig splits the budget again.
            per_setting *= 2;
          }
          total = (cfg.shots_per_setting ? value : value / np) * np;
        }
      }

      for (int inst = 0; inst < cfg.noise_instances; ++inst) {
        const std::uint64_t trial_seed =
            derive_seed(cfg.seed, static_cast<int>(si) + 1, inst, static_cast<std::size_t>(g));
        TrialRecord rec;
        rec.shots_value = value;
        rec.gate = g;
        rec.instance = inst;
        rec.total_shots = total;
        const std::optional<long> shots =
            cfg.exact ? std::nullopt : std::optional<long>(per_setting);
        try {
          switch (cfg.scenario) {
            case Scenario::FullWigner: {
              sc.shots = shots;
              sc.seed = trial_seed;
              const ScanResult sr = sample_scan(*ideal, sc);
              const ReconstructionReport rep = iterate_reconstruction(sr.adjusted, CostParams{});
              rec.fidelity = fidelity(rep.unitary, actual);
              if (wants_opt) {
                const ReconstructionReport opt =
                    optimize_cost(droplets_to_operators(sr.adjusted), rep.estimate, CostParams{});
                rec.fidelity_optimized = fidelity(opt.unitary, actual);
              }
              break;
            }
            case Scenario::NonIterative: {
              sc.shots = shots;
              sc.seed = trial_seed;
              const ScanResult sr = sample_scan(*ideal, sc);
              const OperatorMatrix m = droplet_to_operator(sr.raw.front());
              if (m.norm() < 1e-8) throw DegenerateInputError("vanishing droplet");
              rec.fidelity = fidelity(polar_unitary(m), actual);
              break;
            }
            case Scenario::AdaptiveTwoIter: {
              AdaptiveConfig ac;
              ac.grid = grid;
              ac.shots = shots;
              ac.seed = trial_seed;
              ac.iterations = 2;
              rec.fidelity = adaptive_reconstruct(actual, rotation, ac).fidelity_trace.back();
              break;
            }
            case Scenario::Standard: {
              const std::optional<long> budget =
                  cfg.exact ? std::nullopt : std::optional<long>(total);
              rec.fidelity = fidelity(standard_tomography(actual, budget, trial_seed), actual);
              break;
            }
          }
        } catch (const DegenerateInputError&) {
          rec.fidelity = 0.0;
          if (wants_opt) rec.fidelity_optimized = 0.0;
        }
        result.trials[si * per_value + static_cast<std::size_t>(g) * cfg.noise_instances + inst] = rec;
      }
    }
  }

  for (std::size_t si = 0; si < shot_values.size(); ++si) {
    std::vector<double> f, fo;
    for (std::size_t t = 0; t < per_value; ++t) {
      const TrialRecord& rec = result.trials[si * per_value + t];
      f.push_back(rec.fidelity);
      if (rec.fidelity_optimized) fo.push_back(*rec.fidelity_optimized);
    }
    ShotSummary s;
    s.shots_value = shot_values[si];
    s.total_shots = result.trials[si * per_value].total_shots;
    std::tie(s.mean, s.stddev) = mean_std(f);
    if (!fo.empty()) {
      const auto [m, sd] = mean_std(fo);
      s.mean_optimized = m;
      s.stddev_optimized = sd;
    }
    result.summary.push_back(s);
  }
  return result;
}

}  // namespace wigtomo
