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


#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "wigtomo/cli.hpp"
#include "wigtomo/droplet_io.hpp"
#include "wigtomo/errors.hpp"

namespace wigtomo::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wigtomo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    static std::atomic<int> counter{0};
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("wigtomo_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_config(const std::string& name, json j) {
    if (!j.contains("out_dir")) j["out_dir"] = path(name + "_out");
    std::ofstream(path(name + ".json")) << j.dump();
    return path(name + ".json");
  }

  std::vector<std::string> droplet_paths(const std::string& out) const {
    std::vector<std::string> v;
    for (int k = 1; k <= 4; ++k) v.push_back((fs::path(out) / ("droplet_k" + std::to_string(k) + ".json")).string());
    return v;
  }

  void write_file(const std::string& name, const OperatorMatrix& a, int k, int order = 50) {
    DropletFile f;
    f.droplet = operator_to_droplet(a, lebedev_grid(order));
    f.meta.k = k;
    f.meta.gate_name = "test";
    write_droplet(path(name), f);
  }

  fs::path dir_;
};

TEST_F(CliTest, ScanHadamardExactWritesFourDroplets) {
  const auto cfg = write_config("h", {{"gate", "H"}, {"grid_order", 50}, {"exact", true}});
  const Result r = invoke({"scan", "--config", cfg});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto files = droplet_paths(path("h_out"));
  std::vector<double> mags;
  for (const auto& f : files) {
    ASSERT_TRUE(fs::exists(f));
    const DropletFile d = read_droplet(f);
    EXPECT_EQ(d.droplet.grid.size(), 50u);
    mags.push_back(d.droplet.max_abs());
  }
  EXPECT_GT(mags[0], 0.1);
  EXPECT_LT(mags[1], 1e-12);
  EXPECT_GT(mags[2], 0.1);
  EXPECT_LT(mags[3], 1e-12);
  EXPECT_TRUE(fs::exists(path("h_out/records.csv")));
  EXPECT_TRUE(fs::exists(path("h_out/scan_manifest.json")));
}

TEST_F(CliTest, RecordsCsvLayout) {
  const auto cfg = write_config("h", {{"gate", "H"}, {"grid_order", 6}, {"exact", true}});
  ASSERT_EQ(invoke({"scan", "--config", cfg}).code, kExitOk);
  std::istringstream csv(slurp(path("h_out/records.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "grid_index,theta,phi,weight,k,observable,ideal,estimate,shots,seed");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 6 * 4 * 4);  // nodes x rotations x observables
}

TEST_F(CliTest, MissingConfigIsConfigError) {
  EXPECT_EQ(invoke({"scan", "--config", path("absent.json")}).code, kExitConfig);
  EXPECT_EQ(invoke({"scan"}).code, kExitConfig);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitConfig);
}

TEST_F(CliTest, InvalidConfigsAreConfigErrors) {
  std::ofstream(path("bad.json")) << "{ not json";
  EXPECT_EQ(invoke({"scan", "--config", path("bad.json")}).code, kExitConfig);
  EXPECT_EQ(invoke({"scan", "--config", write_config("g", {{"gate", "NOPE"}})}).code, kExitConfig);
  EXPECT_EQ(invoke({"scan", "--config", write_config("o", {{"grid_order", 7}})}).code, kExitConfig);
  EXPECT_EQ(invoke({"scan", "--config", write_config("s", {{"shots", 2}})}).code, kExitConfig);
  EXPECT_EQ(invoke({"scan", "--config", write_config("n", {{"noise", {{"s", 1.5}}}})}).code, kExitConfig);
  const Result r = invoke({"scan", "--config", write_config("x", {{"exact", true}}), "--grid", "7"});
  EXPECT_EQ(r.code, kExitConfig);
}

TEST_F(CliTest, SameSeedGivesByteIdenticalCsv) {
  const json base = {{"gate", "S"}, {"grid_order", 6}, {"shots", 64}, {"seed", 11}};
  json a = base, b = base;
  a["out_dir"] = path("a");
  b["out_dir"] = path("b");
  ASSERT_EQ(invoke({"scan", "--config", write_config("a", a)}).code, kExitOk);
  ASSERT_EQ(invoke({"scan", "--config", write_config("b", b)}).code, kExitOk);
  EXPECT_EQ(slurp(path("a/records.csv")), slurp(path("b/records.csv")));
  EXPECT_EQ(slurp(path("a/droplet_k1.json")), slurp(path("b/droplet_k1.json")));
  ASSERT_EQ(invoke({"scan", "--config", write_config("a", a), "--seed", "12", "--out", path("c")}).code, kExitOk);
  EXPECT_NE(slurp(path("a/records.csv")), slurp(path("c/records.csv")));
}

TEST_F(CliTest, DefaultSeedIsDocumentedConstant) {
  const auto cfg = write_config("d", {{"gate", "H"}, {"grid_order", 6}, {"shots", 16}});
  ASSERT_EQ(invoke({"scan", "--config", cfg}).code, kExitOk);
  const json m = json::parse(slurp(path("d_out/scan_manifest.json")));
  EXPECT_EQ(m["seed"].get<std::uint64_t>(), kDefaultSeed);
  EXPECT_EQ(m["tool_version"], kToolVersion);
  EXPECT_EQ(m["exit_code"], 0);
  EXPECT_EQ(m["outputs"].size(), 5u);
  EXPECT_EQ(m["config_digest"].get<std::string>().size(), 64u);
}

TEST_F(CliTest, ReconstructExactX) {
  ASSERT_EQ(invoke({"scan", "--config", write_config("x", {{"gate", "X"}, {"exact", true}})}).code, kExitOk);
  auto args = droplet_paths(path("x_out"));
  args.insert(args.begin(), "reconstruct");
  args.insert(args.end(), {"--out", path("rx"), "--reference", "X"});
  const Result r = invoke(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rep = json::parse(slurp(path("rx/report.json")));
  const auto q = rep["estimate"].get<std::vector<double>>();
  const double s = q[0] >= 0 ? 1.0 : -1.0;
  EXPECT_NEAR(s * q[0], 1.0, 1e-9);
  EXPECT_NEAR(q[1], 0.0, 1e-9);
  EXPECT_NEAR(q[2], 0.0, 1e-9);
  EXPECT_NEAR(q[3], 0.0, 1e-9);
  EXPECT_NEAR(rep["fidelity_vs_reference"].get<double>(), 1.0, 1e-9);
}

TEST_F(CliTest, ReconstructOrdersFilesByK) {
  ASSERT_EQ(invoke({"scan", "--config", write_config("h", {{"gate", "H"}, {"exact", true}})}).code, kExitOk);
  auto files = droplet_paths(path("h_out"));
  std::reverse(files.begin(), files.end());
  files.insert(files.begin(), "reconstruct");
  files.insert(files.end(), {"--out", path("r"), "--reference", "H"});
  ASSERT_EQ(invoke(files).code, kExitOk);
  EXPECT_NEAR(json::parse(slurp(path("r/report.json")))["fidelity_vs_reference"].get<double>(), 1.0, 1e-9);
}

// Shot-mode pipeline with both error channels and calibration first.
TEST_F(CliTest, NoisyShotPipelineHadamardAndZ) {
  for (const std::string gate : {"H", "Z"}) {
    const json cfg = {{"gate", gate},      {"grid_order", 50},
                      {"shots", 4096},     {"seed", 13},
                      {"calibrate", true}, {"noise", {{"s", 0.5}, {"lambda", 0.3473}}},
                      {"out_dir", path(gate)}};
    ASSERT_EQ(invoke({"scan", "--config", write_config(gate, cfg)}).code, kExitOk);
    auto args = droplet_paths(path(gate));
    args.insert(args.begin(), "reconstruct");
    args.insert(args.end(), {"--out", path(gate + "_rec"), "--reference", gate, "--optimize"});
    const Result r = invoke(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const json rep = json::parse(slurp(path(gate + "_rec/report.json")));
    EXPECT_GE(rep["fidelity_vs_reference"].get<double>(), 0.99) << gate;
    EXPECT_GE(rep["optimized"]["fidelity_vs_reference"].get<double>(), 0.99) << gate;
    const json m = json::parse(slurp(path(gate + "/scan_manifest.json")));
    EXPECT_NEAR(m["settings"]["calibration"]["lambda_corr"].get<double>(), 0.3473, 0.05);
  }
}

TEST_F(CliTest, ReconstructGridMismatchIsInputError) {
  write_file("k1.json", gates::x(), 1, 50);
  write_file("k2.json", gates::y(), 2, 50);
  write_file("k3.json", gates::z(), 3, 26);
  write_file("k4.json", gates::identity(1), 4, 50);
  const Result r =
      invoke({"reconstruct", path("k1.json"), path("k2.json"), path("k3.json"), path("k4.json"), "--out", path("r")});
  EXPECT_EQ(r.code, kExitMismatch);
  EXPECT_TRUE(fs::exists(path("r/reconstruct_manifest.json")));
  EXPECT_EQ(json::parse(slurp(path("r/reconstruct_manifest.json")))["exit_code"], kExitMismatch);
}

TEST_F(CliTest, ReconstructDuplicateOrMissingKIsInputError) {
  write_file("k1.json", gates::x(), 1);
  write_file("k1b.json", gates::x(), 1);
  write_file("k3.json", gates::z(), 3);
  write_file("k4.json", gates::identity(1), 4);
  EXPECT_EQ(invoke({"reconstruct", path("k1.json"), path("k1b.json"), path("k3.json"), path("k4.json"), "--out",
                    path("r")})
                .code,
            kExitMismatch);
  EXPECT_EQ(invoke({"reconstruct", path("k1.json"), path("k3.json"), path("k4.json"), "--out", path("r")}).code,
            kExitMismatch);
  EXPECT_EQ(invoke({"reconstruct", path("absent.json"), "--out", path("r")}).code, kExitConfig);
}

TEST_F(CliTest, ReconstructZeroDropletsIsDegenerate) {
  const OperatorMatrix zero = OperatorMatrix::Zero(2, 2);
  for (int k = 1; k <= 4; ++k) write_file("z" + std::to_string(k) + ".json", zero, k);
  const Result r = invoke(
      {"reconstruct", path("z1.json"), path("z2.json"), path("z3.json"), path("z4.json"), "--out", path("r")});
  EXPECT_EQ(r.code, kExitDegenerate);
}

TEST_F(CliTest, ScanTwoQubitGateIsUnsupported) {
  const Result r = invoke({"scan", "--config", write_config("c", {{"gate", "CNOT"}, {"exact", true}})});
  EXPECT_EQ(r.code, kExitUnsupported);
}

TEST_F(CliTest, CalibrateRecoversInjectedPhase) {
  const json cfg = {{"gate", "X"}, {"shots", 4096}, {"seed", 5}, {"noise", {{"s", 0.5}, {"lambda", 0.3473}}}};
  ASSERT_EQ(invoke({"calibrate", "--config", write_config("cal", cfg)}).code, kExitOk);
  const json j = json::parse(slurp(path("cal_out/calibration.json")));
  EXPECT_NEAR(j["lambda_corr"].get<double>(), 0.3473, 0.02);
  EXPECT_TRUE(fs::exists(path("cal_out/calibrate_manifest.json")));
}

TEST_F(CliTest, AdaptiveReportsScalingFactor) {
  // Actual gate: pi/2 about (0.8, 0, 0.6); guess: -i sigma_x.
  json cfg = json::parse(R"({"guess": {"matrix": [[0, [0, -1]], [[0, -1], 0]]}, "exact": true})");
  cfg["gate"] = {{"axis_angle", {{"axis", {0.8, 0.0, 0.6}}, {"gamma", kPi / 2}}}};
  const Result r = invoke({"adaptive", "--config", write_config("ad", cfg)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(slurp(path("ad_out/adaptive.json")));
  EXPECT_NEAR(j["epsilon_magnitude"][0].get<double>(), 0.5657, 1e-4);
  EXPECT_NEAR(j["fidelity_trace"].back().get<double>(), 1.0, 1e-9);
}

TEST_F(CliTest, AdaptiveNeedsGuess) {
  EXPECT_EQ(invoke({"adaptive", "--config", write_config("ad", {{"gate", "H"}, {"exact", true}})}).code,
            kExitConfig);
}

TEST_F(CliTest, BenchStandardExactIsPerfect) {
  const json cfg = {{"bench", {{"scenario", "standard"}, {"exact", true}, {"gates", 4}, {"noise_instances", 2}}}};
  ASSERT_EQ(invoke({"bench", "--config", write_config("b", cfg)}).code, kExitOk);
  const json s = json::parse(slurp(path("b_out/bench_summary.json")));
  EXPECT_NEAR(s["summary"][0]["mean_fidelity"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(s["metric"], "error = 1 - mean process fidelity");
  std::istringstream csv(slurp(path("b_out/bench_trials.csv")));
  std::string line;
  int rows = -1;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 8);
}

TEST_F(CliTest, BenchNeedsSection) {
  EXPECT_EQ(invoke({"bench", "--config", write_config("b", {{"gate", "H"}})}).code, kExitConfig);
}

TEST_F(CliTest, RenderIsDeterministic) {
  write_file("s.json", gates::s(), 1);
  ASSERT_EQ(invoke({"render", path("s.json"), "--out", path("r1")}).code, kExitOk);
  ASSERT_EQ(invoke({"render", path("s.json"), "--out", path("r2")}).code, kExitOk);
  const std::string a = slurp(path("r1/s_mollweide.svg"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(path("r2/s_mollweide.svg")));
  ASSERT_EQ(invoke({"render", path("s.json"), "--out", path("r1"), "--projection", "latlong"}).code, kExitOk);
  EXPECT_EQ(slurp(path("r1/s_latlong.svg")).rfind("<?xml", 0), 0u);
  EXPECT_EQ(invoke({"render", path("s.json"), "--projection", "orthographic"}).code, kExitConfig);
}

TEST_F(CliTest, RenderEmptyDropletGivesLegendAndWarning) {
  write_file("z.json", OperatorMatrix::Zero(2, 2), 2);
  const Result r = invoke({"render", path("z.json"), "--out", path("r")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const std::string svg = slurp(path("r/z_mollweide.svg"));
  EXPECT_NE(svg.find("phase"), std::string::npos);
  EXPECT_EQ(svg.find("label "), std::string::npos);
}

TEST_F(CliTest, CommandsDoNotMutateInputs) {
  const auto cfg = write_config("h", {{"gate", "H"}, {"grid_order", 26}, {"shots", 32}, {"out_dir", path("")}});
  const std::string cfg_before = slurp(cfg);
  ASSERT_EQ(invoke({"scan", "--config", cfg}).code, kExitOk);
  EXPECT_EQ(slurp(cfg), cfg_before);
  const auto files = droplet_paths(path(""));
  std::vector<std::string> before;
  for (const auto& f : files) before.push_back(slurp(f));
  auto args = files;
  args.insert(args.begin(), "reconstruct");
  args.insert(args.end(), {"--out", path(""), "--optimize"});
  ASSERT_EQ(invoke(args).code, kExitOk);
  for (const auto& f : files) ASSERT_EQ(invoke({"render", f, "--out", path("")}).code, kExitOk);
  for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(slurp(files[i]), before[i]);
}

// ---------------------------------------------------------------------------
// Library-level pieces of the command layer.

TEST(CliManifest, Sha256KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CliManifest, DigestStableUnderKeyReordering) {
  const json a = json::parse(R"({"gate": "H", "grid_order": 50, "noise": {"s": 0.5, "lambda": 0.1}})");
  const json b = json::parse(R"({"noise": {"lambda": 0.1, "s": 0.5}, "grid_order": 50, "gate": "H"})");
  EXPECT_EQ(json_digest(a), json_digest(b));
  const json c = json::parse(R"({"gate": "H", "grid_order": 26, "noise": {"s": 0.5, "lambda": 0.1}})");
  EXPECT_NE(json_digest(a), json_digest(c));
}

TEST(CliConfig, GateForms) {
  const double r = std::sqrt(0.5);
  EXPECT_LT(max_norm(parse_gate(json("H")).unitary - gates::hadamard()), 1e-15);
  EXPECT_LT(max_norm(parse_gate(json{{"name", "S"}}).unitary - gates::s()), 1e-15);
  OperatorMatrix mx(2, 2);  // -i sigma_x
  mx << 0, Complex(0, -1), Complex(0, -1), 0;
  // (A, B, C, D) = (1, 0, 0, 0) puts i on the off-diagonal: +i sigma_x.
  EXPECT_LT(max_norm(parse_gate(json{{"quaternion", {1, 0, 0, 0}}}).unitary + mx), 1e-15);
  const json m = {{"matrix", {{r, r}, {r, -r}}}};
  EXPECT_LT(max_norm(parse_gate(m).unitary - gates::hadamard()), 1e-15);
  const json aa = {{"axis_angle", {{"axis", {1, 0, 0}}, {"gamma", kPi}}}};
  EXPECT_LT(max_norm(parse_gate(aa).unitary - mx), 1e-15);
  EXPECT_THROW(parse_gate(json{{"matrix", {{1, 1}, {0, 1}}}}), ConfigError);
  EXPECT_THROW(parse_gate(json{{"matrix", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}), ConfigError);
  EXPECT_THROW(parse_gate(json{{"quaternion", {0, 0, 0, 0}}}), ConfigError);
  EXPECT_THROW(parse_gate(json(3)), ConfigError);
}

TEST(CliConfig, DefaultsAndOverrides) {
  RunConfig cfg = parse_config(json::object());
  EXPECT_EQ(cfg.seed, kDefaultSeed);
  EXPECT_EQ(cfg.grid_order, 50);
  EXPECT_FALSE(cfg.shots.has_value());
  EXPECT_EQ(cfg.rotations.size(), 4u);
  Overrides o;
  o.seed = 99;
  o.shots = 128;
  o.grid = 6;
  apply_overrides(cfg, o);
  EXPECT_EQ(cfg.seed, 99u);
  EXPECT_EQ(cfg.shots.value(), 128);
  EXPECT_EQ(cfg.scan_config().grid.size(), 6u);
  Overrides both;
  both.exact = true;
  both.shots = 8;
  EXPECT_THROW(apply_overrides(cfg, both), ConfigError);
  EXPECT_THROW(parse_config(json{{"shots", 10}, {"exact", true}}), ConfigError);
}

TEST(CliConfig, RotationSubset) {
  const RunConfig cfg = parse_config(json{{"rotations", {"x", "id"}}});
  ASSERT_EQ(cfg.rotations.size(), 2u);
  EXPECT_LT(max_norm(cfg.rotations[1].unitary - gates::identity(1)), 1e-15);
  EXPECT_THROW(parse_config(json{{"rotations", {"w"}}}), ConfigError);
  EXPECT_THROW(parse_config(json{{"rotations", json::array()}}), ConfigError);
}

TEST(CliRender, IdentityDropletIsUniform) {
  const Droplet f = operator_to_droplet(gates::identity(1), lebedev_grid(50));
  for (const Projection p : {Projection::Mollweide, Projection::LatLong}) {
    const Raster r = raster(f, Label::empty(), p, 40, 20);
    std::optional<Complex> first;
    int filled = 0;
    for (const auto& c : r.cells) {
      if (!c) continue;
      ++filled;
      if (!first) first = c;
      EXPECT_LT(std::abs(*c - *first), 1e-12);
    }
    EXPECT_GT(filled, 0);
    EXPECT_GT(std::abs(*first), 0.1);
    // Rank-0 droplet of the identity: s_0 tr(T00) = sqrt(1/4pi) sqrt(2).
    EXPECT_NEAR(first->real(), std::sqrt(2.0 / (4.0 * kPi)), 1e-12);
    const Raster r1 = raster(f, Label::of({1}), p, 40, 20);
    for (const auto& c : r1.cells) {
      if (c) EXPECT_LT(std::abs(*c), 1e-12);
    }
  }
}

TEST(CliRender, SGateRankOnePanelIsOddAboutEquator) {
  const Droplet f = operator_to_droplet(gates::s(), lebedev_grid(50));
  const int cols = 36, rows = 18;
  const Raster r = raster(f, Label::of({1}), Projection::LatLong, cols, rows);
  double peak = 0.0;
  for (const auto& c : r.cells) peak = std::max(peak, std::abs(*c));
  ASSERT_GT(peak, 0.1);
  for (int row = 0; row < rows; ++row) {
    const double lat = kPi / 2 - (row + 0.5) * kPi / rows;
    for (int col = 0; col < cols; ++col) {
      const Complex v = *r.at(col, row);
      EXPECT_LT(std::abs(v + *r.at(col, rows - 1 - row)), 1e-12);
      // Pure cos(theta) profile with constant phase, independent of longitude.
      EXPECT_LT(std::abs(v - *r.at(0, row)), 1e-12);
      EXPECT_NEAR(std::abs(v), peak * std::abs(std::sin(lat)) / std::sin(kPi / 2 - 0.5 * kPi / rows), 1e-9);
    }
  }
}

TEST(CliRender, MollweideLeavesCornersEmpty) {
  const Droplet f = operator_to_droplet(gates::hadamard(), lebedev_grid(26));
  const Raster r = raster(f, Label::of({1}), Projection::Mollweide, 40, 20);
  EXPECT_FALSE(r.at(0, 0).has_value());
  EXPECT_FALSE(r.at(39, 19).has_value());
  EXPECT_TRUE(r.at(20, 10).has_value());
  EXPECT_THROW(raster(f, Label::of({2}), Projection::Mollweide, 40, 20), DomainError);
}

TEST(CliRender, SvgValueMatchesSampledDropletAtNode) {
  // The harmonic expansion reproduces the samples at the grid nodes.
  const Droplet f = operator_to_droplet(gates::t(), lebedev_grid(50));
  for (const auto& c : tensor_coefficients(f)) EXPECT_TRUE(std::isfinite(std::abs(c.value)));
  const auto& node = f.grid.nodes[7];
  Complex v{0, 0};
  for (const auto& c : tensor_coefficients(f)) {
    if (c.index.label == Label::of({1})) v += c.value * spherical_harmonic(c.index.rank, c.index.order, node.theta, node.phi);
  }
  EXPECT_LT(std::abs(v - f.samples.at(Label::of({1}))(7)), 1e-12);
}

}  // namespace
}  // namespace wigtomo::cli
