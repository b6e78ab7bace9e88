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


#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "wigtomo/cli.hpp"
#include "wigtomo/errors.hpp"

namespace wigtomo::cli {

using nlohmann::json;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Complex entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw ConfigError("matrix entries must be numbers or [re, im] pairs");
}

std::array<double, 3> vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("axis must have three components");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

GateSpec rotation_spec(const json& j) {
  if (j.is_string()) {
    const std::string s = lower(j.get<std::string>());
    if (s == "x") return {"x", gates::x()};
    if (s == "y") return {"y", gates::y()};
    if (s == "z") return {"z", gates::z()};
    if (s == "id" || s == "i") return {"id", gates::identity(1)};
    throw ConfigError("rotation must be one of x, y, z, id or a gate object, got '" + s + "'");
  }
  return parse_gate(j);
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  return j[key].get<T>();
}

StudyConfig parse_bench(const json& b, std::uint64_t seed) {
  if (!b.is_object()) throw ConfigError("bench must be an object");
  StudyConfig s;
  s.scenario = parse_scenario(get_or<std::string>(b, "scenario", "full_wigner"));
  s.exact = get_or<bool>(b, "exact", false);
  if (b.contains("shots")) s.shots_grid = b["shots"].get<std::vector<long>>();
  s.shots_per_setting = get_or<bool>(b, "shots_per_setting", false);
  s.gates = get_or<int>(b, "gates", 10);
  s.noise_instances = get_or<int>(b, "noise_instances", 10);
  s.grid_order = get_or<int>(b, "grid_order", 26);
  s.optimize = get_or<bool>(b, "optimize", false);
  if (b.contains("adaptive_tilt_deg")) s.adaptive_tilt = b["adaptive_tilt_deg"].get<double>() * kPi / 180.0;
  if (b.contains("non_iterative_tilt_deg")) {
    s.non_iterative_tilt = b["non_iterative_tilt_deg"].get<double>() * kPi / 180.0;
  }
  s.seed = seed;
  s.validate();
  return s;
}

}  // namespace

GateSpec parse_gate(const json& j) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      return {name, gates::by_name(name)};
    }
    if (!j.is_object()) throw ConfigError("gate must be a name or an object");
    if (j.contains("name")) return {j["name"].get<std::string>(), gates::by_name(j["name"].get<std::string>())};
    if (j.contains("quaternion")) {
      const auto q = j["quaternion"].get<std::vector<double>>();
      if (q.size() != 4) throw ConfigError("quaternion needs four components [A, B, C, D]");
      const Quaternion quat{q[0], q[1], q[2], q[3]};
      if (!(quat.norm() > 0.0)) throw ConfigError("quaternion must be nonzero");
      return {"custom", quaternion_to_unitary(quat).unitary};
    }
    if (j.contains("axis_angle")) {
      const json& a = j["axis_angle"];
      return {"custom", axis_angle_unitary(a.at("gamma").get<double>(), vec3(a.at("axis")))};
    }
    if (j.contains("matrix")) {
      const json& m = j["matrix"];
      if (!m.is_array() || m.empty()) throw ConfigError("matrix must be a nonempty list of rows");
      const auto dim = static_cast<Eigen::Index>(m.size());
      OperatorMatrix u(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (!m[r].is_array() || static_cast<Eigen::Index>(m[r].size()) != dim) {
          throw ConfigError("matrix must be square");
        }
        for (Eigen::Index c = 0; c < dim; ++c) u(r, c) = entry(m[r][c]);
      }
      qubit_count(u);
      if (!is_unitary(u, 1e-8)) throw ConfigError("gate matrix is not unitary");
      return {"custom", u};
    }
    throw ConfigError("gate object needs one of name, quaternion, axis_angle, matrix");
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid gate: ") + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid gate: ") + e.what());
  }
}

ScanConfig RunConfig::scan_config() const {
  ScanConfig sc;
  sc.grid = lebedev_grid(grid_order);
  sc.shots = shots;
  for (const auto& r : rotations) sc.rotations.push_back(r.unitary);
  sc.seed = seed;
  sc.noise = noise;
  sc.correction = correction;
  return sc;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  cfg.source = j;
  try {
    cfg.gate = j.contains("gate") ? parse_gate(j["gate"]) : GateSpec{"H", gates::hadamard()};
    cfg.grid_order = get_or<int>(j, "grid_order", 50);
    if (cfg.grid_order != 6 && cfg.grid_order != 26 && cfg.grid_order != 50) {
      throw ConfigError("grid_order must be 6, 26 or 50");
    }
    const bool exact = get_or<bool>(j, "exact", false);
    if (j.contains("shots") && !j["shots"].is_null()) {
      if (exact) throw ConfigError("shots and exact are mutually exclusive");
      const long s = j["shots"].get<long>();
      if (s < 4) throw ConfigError("shots must be at least 4 per circuit setting");
      cfg.shots = s;
    } else if (!exact) {
      cfg.shots.reset();  // no shot count: exact expectations
    }
    if (j.contains("rotations")) {
      const json& r = j["rotations"];
      if (!r.is_array() || r.empty()) throw ConfigError("rotations must be a nonempty list");
      for (const json& e : r) cfg.rotations.push_back(rotation_spec(e));
    } else {
      cfg.rotations = {{"x", gates::x()}, {"y", gates::y()}, {"z", gates::z()}, {"id", gates::identity(1)}};
    }
    cfg.seed = get_or<std::uint64_t>(j, "seed", kDefaultSeed);
    if (j.contains("noise")) {
      const json& n = j["noise"];
      if (!n.is_object()) throw ConfigError("noise must be an object {s, lambda}");
      cfg.noise.amplitude_scale = get_or<double>(n, "s", 1.0);
      cfg.noise.ancilla_phase = get_or<double>(n, "lambda", 0.0);
      cfg.noise.validate();
    }
    cfg.correction = get_or<double>(j, "correction", 0.0);
    cfg.calibrate_first = get_or<bool>(j, "calibrate", false);
    cfg.calibration_points = get_or<int>(j, "calibration_points", 16);
    if (cfg.calibration_points < 8) throw ConfigError("calibration_points must be at least 8");
    cfg.out_dir = get_or<std::string>(j, "out_dir", cfg.out_dir);
    if (j.contains("guess")) cfg.guess = parse_gate(j["guess"]);
    cfg.iterations = get_or<int>(j, "iterations", 1);
    if (cfg.iterations < 1) throw ConfigError("iterations must be at least 1");
    cfg.epsilon_floor = get_or<double>(j, "epsilon_floor", 0.05);
    if (j.contains("bench")) cfg.bench = parse_bench(j["bench"], cfg.seed);
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

void apply_overrides(RunConfig& cfg, const Overrides& o) {
  if (o.seed) {
    cfg.seed = *o.seed;
    if (cfg.bench) cfg.bench->seed = *o.seed;
  }
  if (o.out) cfg.out_dir = *o.out;
  if (o.exact && o.shots) throw ConfigError("--exact and --shots are mutually exclusive");
  if (o.exact) {
    cfg.shots.reset();
    if (cfg.bench) cfg.bench->exact = true;
  }
  if (o.shots) {
    if (*o.shots < 4) throw ConfigError("--shots must be at least 4");
    cfg.shots = *o.shots;
    if (cfg.bench) {
      cfg.bench->shots_grid = {*o.shots};
      cfg.bench->exact = false;
    }
  }
  if (o.grid) {
    if (*o.grid != 6 && *o.grid != 26 && *o.grid != 50) throw ConfigError("--grid must be 6, 26 or 50");
    cfg.grid_order = *o.grid;
    if (cfg.bench) cfg.bench->grid_order = *o.grid;
  }
}

}  // namespace wigtomo::cli
