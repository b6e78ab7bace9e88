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


// Command-line layer: JSON run configs, run manifests, SVG droplet rendering
// and the subcommand dispatcher behind the `wigtomo` tool.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wigtomo/bench.hpp"
#include "wigtomo/droplet.hpp"
#include "wigtomo/tomography.hpp"

namespace wigtomo::cli {

inline constexpr const char* kToolVersion = "0.1.0";
/// Seed used when neither the config nor --seed provides one.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitUnsupported = 3,
  kExitMismatch = 4,
  kExitDegenerate = 5,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Config

struct GateSpec {
  std::string name;  // "custom" for matrices and quaternions
  OperatorMatrix unitary;
};

/// "H", {"name": "H"}, {"quaternion": [A, B, C, D]},
/// {"axis_angle": {"axis": [x, y, z], "gamma": g}} or
/// {"matrix": [[entry, ...], ...]} with entries real or [re, im].
GateSpec parse_gate(const nlohmann::json& j);

struct RunConfig {
  GateSpec gate;
  int grid_order = 50;
  std::optional<long> shots;  // empty: exact mode
  std::vector<GateSpec> rotations;
  std::uint64_t seed = kDefaultSeed;
  NoiseModel noise;
  double correction = 0.0;
  bool calibrate_first = false;
  int calibration_points = 16;
  std::string out_dir = "wigtomo_out";
  // adaptive
  std::optional<GateSpec> guess;
  int iterations = 1;
  double epsilon_floor = 0.05;
  // bench
  std::optional<StudyConfig> bench;

  nlohmann::json source;  // config as read, for the manifest digest

  ScanConfig scan_config() const;
};

/// Throws ConfigError on any schema or value problem.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Flag overrides shared by the config-driven commands.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  bool exact = false;
  std::optional<long> shots;
  std::optional<int> grid;
};
void apply_overrides(RunConfig& cfg, const Overrides& o);

// ---------------------------------------------------------------------------
// Manifest

std::string sha256_hex(const std::string& bytes);
std::string file_sha256(const std::string& path);
/// Digest of the compact dump of `j`; object keys are stored sorted, so the
/// digest does not depend on key order in the source text.
std::string json_digest(const nlohmann::json& j);

struct RunManifest {
  std::string command;
  std::string config_digest;
  std::uint64_t seed = 0;
  int exit_code = 0;
  std::string started;
  std::string finished;
  std::vector<std::string> outputs;
  nlohmann::json inputs = nlohmann::json::object();  // path -> sha256
  nlohmann::json settings = nlohmann::json::object();

  nlohmann::json to_json() const;
};

std::string utc_timestamp();

// ---------------------------------------------------------------------------
// Rendering

enum class Projection { Mollweide, LatLong };
Projection parse_projection(const std::string& s);

/// Droplet values on a cols x rows raster of one projection; cells outside
/// the Mollweide ellipse are empty. Values come from the harmonic expansion
/// of the samples, so the raster is smooth between grid nodes.
struct Raster {
  int cols = 0;
  int rows = 0;
  std::vector<std::optional<Complex>> cells;  // row-major, row 0 at the north pole

  const std::optional<Complex>& at(int col, int row) const { return cells[row * cols + col]; }
};
Raster raster(const Droplet& f, Label label, Projection p, int cols, int rows);

/// One panel per label; hue encodes arg f, luminance |f| relative to the
/// largest magnitude over all labels. An all-zero droplet yields the legend
/// alone and a warning.
std::string render_svg(const Droplet& f, Projection p, std::vector<std::string>& warnings);

// ---------------------------------------------------------------------------
// Dispatcher

/// Full command line including argv[0]. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wigtomo::cli
