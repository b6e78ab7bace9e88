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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "wigtomo/cli.hpp"
#include "wigtomo/droplet_io.hpp"
#include "wigtomo/errors.hpp"

namespace wigtomo::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  bool exact = false;
  std::optional<long> shots;
  std::optional<int> grid;
  bool optimize = false;
  std::optional<double> tolerance;
  std::optional<std::string> reference;
  std::string projection = "mollweide";
  std::vector<std::string> files;
};

// Where a DomainError is blamed: on the config or on the input files.
enum class Blame { Config, Input };

struct Context {
  RunManifest manifest;
  std::string out_dir;
  Blame blame = Blame::Config;
  std::ostream* out = nullptr;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const OperatorMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json quaternion_json(const Quaternion& q) { return json::array({q.a, q.b, q.c, q.d}); }

json noise_json(const NoiseModel& n) { return {{"s", n.amplitude_scale}, {"lambda", n.ancilla_phase}}; }

void write_text(Context& ctx, const std::string& name, const std::string& text) {
  fs::create_directories(ctx.out_dir);
  const fs::path path = fs::path(ctx.out_dir) / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + path.string());
  os << text;
  if (!os) throw ConfigError("failed writing " + path.string());
  ctx.manifest.outputs.push_back(path.string());
}

void write_json(Context& ctx, const std::string& name, const json& j) { write_text(ctx, name, j.dump(2) + "\n"); }

void write_manifest(Context& ctx) {
  if (ctx.out_dir.empty()) return;
  ctx.manifest.finished = utc_timestamp();
  fs::create_directories(ctx.out_dir);
  std::ofstream os(fs::path(ctx.out_dir) / (ctx.manifest.command + "_manifest.json"), std::ios::binary);
  os << ctx.manifest.to_json().dump(2) << "\n";
}

Overrides overrides(const Flags& f) { return {f.seed, f.out, f.exact, f.shots, f.grid}; }

RunConfig config_for(Context& ctx, const Flags& f) {
  RunConfig cfg = load_config(f.config);
  apply_overrides(cfg, overrides(f));
  ctx.out_dir = cfg.out_dir;
  ctx.manifest.seed = cfg.seed;
  ctx.manifest.config_digest = json_digest(cfg.source);
  ctx.manifest.inputs[f.config] = file_sha256(f.config);
  return cfg;
}

json scan_settings(const RunConfig& cfg) {
  json j;
  j["gate"] = cfg.gate.name;
  j["grid_order"] = cfg.grid_order;
  j["shots"] = cfg.shots ? json(*cfg.shots) : json(nullptr);
  j["rotations"] = json::array();
  for (const auto& r : cfg.rotations) j["rotations"].push_back(r.name);
  j["noise"] = noise_json(cfg.noise);
  j["correction"] = cfg.correction;
  return j;
}

// ---------------------------------------------------------------------------

void cmd_scan(Context& ctx, const Flags& f) {
  RunConfig cfg = config_for(ctx, f);
  ScanConfig sc = cfg.scan_config();
  json settings = scan_settings(cfg);
  if (cfg.calibrate_first) {
    const CalibrationResult cal = calibrate(sc, uniform_sweep(cfg.calibration_points));
    sc = apply_correction(sc, cal.lambda_corr);
    settings["calibration"] = {{"lambda_corr", cal.lambda_corr}, {"fit_residual", cal.fit_residual}};
  }
  settings["correction_applied"] = sc.correction;
  ctx.manifest.settings = settings;

  const ScanResult res = scan(cfg.gate.unitary, sc);
  for (std::size_t k = 0; k < res.adjusted.size(); ++k) {
    DropletFile file;
    file.droplet = res.adjusted[k];
    file.meta.k = static_cast<int>(k) + 1;
    file.meta.gate_name = cfg.gate.name;
    file.meta.shots = cfg.shots;
    file.meta.seed = cfg.seed;
    file.meta.phase_adjusted = true;
    write_json(ctx, "droplet_k" + std::to_string(k + 1) + ".json", droplet_to_json(file));
  }
  std::ostringstream csv;
  csv << "grid_index,theta,phi,weight,k,observable,ideal,estimate,shots,seed\n";
  for (const auto& r : res.records) {
    csv << r.grid_index << ',' << fmt(r.theta) << ',' << fmt(r.phi) << ',' << fmt(r.weight) << ',' << r.k << ','
        << observable_name(r.observable) << ',' << fmt(r.ideal) << ',' << fmt(r.estimate) << ',' << r.shots << ','
        << r.seed << '\n';
  }
  write_text(ctx, "records.csv", csv.str());
  *ctx.out << "scan: wrote " << res.adjusted.size() << " droplets to " << ctx.out_dir << "\n";
}

void cmd_reconstruct(Context& ctx, const Flags& f) {
  ctx.blame = Blame::Input;
  ctx.out_dir = f.out.value_or("wigtomo_out");
  ctx.manifest.seed = f.seed.value_or(kDefaultSeed);
  if (f.files.empty()) throw ConfigError("reconstruct needs droplet files");

  std::vector<DropletFile> files;
  for (const auto& path : f.files) {
    if (!fs::exists(path)) throw ConfigError("droplet file '" + path + "' does not exist");
    ctx.manifest.inputs[path] = file_sha256(path);
    files.push_back(read_droplet(path));
  }
  std::sort(files.begin(), files.end(),
            [](const DropletFile& a, const DropletFile& b) { return a.meta.k < b.meta.k; });
  if (files.size() != 4) throw DomainError("reconstruct needs exactly 4 droplet files (k = 1..4)");
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files[i].meta.k != static_cast<int>(i) + 1) {
      throw DomainError("droplet files must carry k = 1, 2, 3, 4 exactly once");
    }
    if (!(files[i].droplet.grid == files[0].droplet.grid)) throw DomainError("droplet files use different grids");
    if (files[i].droplet.num_qubits != 1) throw UnimplementedError("reconstruction from files supports N = 1 only");
  }
  std::vector<Droplet> f_hat;
  for (const auto& file : files) {
    f_hat.push_back(file.meta.phase_adjusted ? file.droplet : phase_adjust(file.droplet, file.meta.k));
  }

  CostParams params;
  if (f.tolerance) params.tolerance = *f.tolerance;
  params.validate();
  std::optional<OperatorMatrix> ref;
  if (f.reference) {
    ctx.blame = Blame::Config;
    ref = parse_gate(json(*f.reference)).unitary;
    ctx.blame = Blame::Input;
  }

  json settings = {{"optimize", f.optimize}, {"tolerance", params.tolerance}};
  settings["reference"] = f.reference ? json(*f.reference) : json(nullptr);
  ctx.manifest.settings = settings;
  ctx.manifest.config_digest = json_digest(settings);

  const ReconstructionReport rep = iterate_reconstruction(f_hat, params, ref);
  json report;
  report["estimate"] = quaternion_json(rep.estimate);
  report["unitary"] = matrix_json(rep.unitary);
  report["iterations"] = rep.iterations;
  report["quaternion_trace"] = json::array();
  for (const auto& q : rep.quaternion_trace) report["quaternion_trace"].push_back(quaternion_json(q));
  report["cost_trace"] = rep.cost_trace;
  report["low_confidence"] = rep.low_confidence;
  report["noise_floor"] = rep.noise_floor;
  report["warnings"] = rep.warnings;
  if (ref) report["fidelity_vs_reference"] = fidelity(rep.unitary, *ref);
  if (f.optimize) {
    const ReconstructionReport opt = optimize_cost(droplets_to_operators(f_hat), rep.estimate, params, ref);
    json o;
    o["estimate"] = quaternion_json(opt.estimate);
    o["unitary"] = matrix_json(opt.unitary);
    o["iterations"] = opt.iterations;
    o["cost_trace"] = opt.cost_trace;
    if (ref) o["fidelity_vs_reference"] = fidelity(opt.unitary, *ref);
    report["optimized"] = o;
  }
  report["settings"] = settings;
  report["input_digests"] = ctx.manifest.inputs;
  write_json(ctx, "report.json", report);
  *ctx.out << "reconstruct: estimate [" << fmt(rep.estimate.a) << ", " << fmt(rep.estimate.b) << ", "
           << fmt(rep.estimate.c) << ", " << fmt(rep.estimate.d) << "]";
  if (ref) *ctx.out << " fidelity " << fmt(fidelity(rep.unitary, *ref));
  *ctx.out << "\n";
}

void cmd_calibrate(Context& ctx, const Flags& f) {
  RunConfig cfg = config_for(ctx, f);
  const ScanConfig sc = cfg.scan_config();
  ctx.manifest.settings = {{"calibration_points", cfg.calibration_points},
                           {"shots", cfg.shots ? json(*cfg.shots) : json(nullptr)},
                           {"noise", noise_json(cfg.noise)}};
  const CalibrationResult cal = calibrate(sc, uniform_sweep(cfg.calibration_points));
  json j;
  j["lambda_corr"] = cal.lambda_corr;
  j["fit_residual"] = cal.fit_residual;
  j["amplitude"] = cal.amplitude;
  j["points"] = cfg.calibration_points;
  j["shots"] = cfg.shots ? json(*cfg.shots) : json(nullptr);
  j["injected_noise"] = noise_json(cfg.noise);
  write_json(ctx, "calibration.json", j);
  *ctx.out << "calibrate: lambda_corr " << fmt(cal.lambda_corr) << "\n";
}

void cmd_adaptive(Context& ctx, const Flags& f) {
  RunConfig cfg = config_for(ctx, f);
  if (!cfg.guess) throw ConfigError("adaptive needs a guess gate");
  AdaptiveConfig ac;
  ac.grid = lebedev_grid(cfg.grid_order);
  ac.shots = cfg.shots;
  ac.seed = cfg.seed;
  ac.noise = cfg.noise;
  ac.correction = cfg.correction;
  ac.iterations = cfg.iterations;
  ac.epsilon_floor = cfg.epsilon_floor;
  json settings = scan_settings(cfg);
  settings.erase("rotations");
  settings["guess"] = cfg.guess->name;
  settings["iterations"] = cfg.iterations;
  settings["epsilon_floor"] = cfg.epsilon_floor;
  ctx.manifest.settings = settings;

  const ReconstructionReport rep = adaptive_reconstruct(cfg.gate.unitary, cfg.guess->unitary, ac);
  json j;
  j["estimate"] = quaternion_json(rep.estimate);
  j["unitary"] = matrix_json(rep.unitary);
  j["iterations"] = rep.iterations;
  j["epsilon"] = json::array();
  j["epsilon_magnitude"] = json::array();
  for (const Complex e : rep.epsilon_trace) {
    j["epsilon"].push_back(complex_json(e));
    j["epsilon_magnitude"].push_back(std::abs(e));
  }
  j["epsilon_magnitude_data"] = rep.epsilon_magnitude_data;
  j["fidelity_trace"] = rep.fidelity_trace;
  j["cost_trace"] = rep.cost_trace;
  j["warnings"] = rep.warnings;
  write_json(ctx, "adaptive.json", j);
  for (const auto& w : rep.warnings) *ctx.out << "warning: " << w << "\n";
  *ctx.out << "adaptive: fidelity " << (rep.fidelity_trace.empty() ? 0.0 : rep.fidelity_trace.back()) << "\n";
}

void cmd_bench(Context& ctx, const Flags& f) {
  RunConfig cfg = config_for(ctx, f);
  if (!cfg.bench) throw ConfigError("bench needs a 'bench' section in the config");
  const StudyConfig& sc = *cfg.bench;
  sc.validate();
  ctx.manifest.settings = {{"scenario", scenario_name(sc.scenario)},
                           {"shots", sc.shots_grid},
                           {"shots_per_setting", sc.shots_per_setting},
                           {"exact", sc.exact},
                           {"gates", sc.gates},
                           {"noise_instances", sc.noise_instances},
                           {"grid_order", sc.grid_order},
                           {"optimize", sc.optimize}};
  const StudyResult res = run_study(sc);

  std::ostringstream csv;
  csv << "shots_value,gate,instance,total_shots,fidelity,fidelity_optimized\n";
  for (const auto& t : res.trials) {
    csv << t.shots_value << ',' << t.gate << ',' << t.instance << ',' << t.total_shots << ',' << fmt(t.fidelity)
        << ',' << (t.fidelity_optimized ? fmt(*t.fidelity_optimized) : std::string()) << '\n';
  }
  write_text(ctx, "bench_trials.csv", csv.str());

  json summary = json::array();
  for (const auto& s : res.summary) {
    json e = {{"shots_value", s.shots_value}, {"total_shots", s.total_shots}, {"mean_fidelity", s.mean},
              {"stddev", s.stddev}, {"error", s.mean_error()}};
    if (s.mean_optimized) {
      e["mean_fidelity_optimized"] = *s.mean_optimized;
      e["stddev_optimized"] = *s.stddev_optimized;
    }
    summary.push_back(e);
  }
  write_json(ctx, "bench_summary.json",
             {{"scenario", scenario_name(sc.scenario)}, {"metric", res.metric}, {"summary", summary}});
  for (const auto& s : res.summary) {
    *ctx.out << "bench: " << scenario_name(sc.scenario) << " shots " << s.shots_value << " mean fidelity "
             << fmt(s.mean) << "\n";
  }
}

void cmd_render(Context& ctx, const Flags& f, std::ostream& err) {
  ctx.blame = Blame::Input;
  ctx.out_dir = f.out.value_or("wigtomo_out");
  ctx.manifest.seed = f.seed.value_or(kDefaultSeed);
  if (f.files.size() != 1) throw ConfigError("render takes exactly one droplet file");
  const std::string& path = f.files.front();
  if (!fs::exists(path)) throw ConfigError("droplet file '" + path + "' does not exist");
  ctx.blame = Blame::Config;
  const Projection p = parse_projection(f.projection);
  ctx.blame = Blame::Input;
  ctx.manifest.inputs[path] = file_sha256(path);
  ctx.manifest.settings = {{"projection", f.projection}};
  ctx.manifest.config_digest = json_digest(ctx.manifest.settings);

  const DropletFile file = read_droplet(path);
  std::vector<std::string> warnings;
  const std::string svg = render_svg(file.droplet, p, warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  ctx.manifest.settings["warnings"] = warnings;
  const std::string name = fs::path(path).stem().string() + "_" + f.projection + ".svg";
  write_text(ctx, name, svg);
  *ctx.out << "render: wrote " << (fs::path(ctx.out_dir) / name).string() << "\n";
}

int guarded(Context& ctx, std::ostream& err, const std::function<void()>& body) {
  int code = kExitOk;
  try {
    body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitConfig;
  } catch (const UnimplementedError& e) {
    err << "unsupported: " << e.what() << "\n";
    code = kExitUnsupported;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    code = ctx.blame == Blame::Input ? kExitMismatch : kExitConfig;
  } catch (const DegenerateInputError& e) {
    err << "degenerate input: " << e.what() << "\n";
    code = kExitDegenerate;
  } catch (const CalibrationError& e) {
    err << "degenerate input: " << e.what() << "\n";
    code = kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  }
  ctx.manifest.exit_code = code;
  try {
    write_manifest(ctx);
  } catch (const std::exception& e) {
    err << "error: cannot write manifest: " << e.what() << "\n";
    if (code == kExitOk) code = 1;
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wigner tomography of simulated single-qubit gates", "wigtomo"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Flags f;

  auto common = [&f](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "Random seed (default " + std::to_string(kDefaultSeed) + ")");
    sub->add_option("--out", f.out, "Output directory");
  };
  auto config_flags = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "JSON run config")->required();
    common(sub);
    sub->add_flag("--exact", f.exact, "Exact expectation values");
    sub->add_option("--shots", f.shots, "Shots per circuit setting");
    sub->add_option("--grid", f.grid, "Lebedev grid order")->check(CLI::IsMember({6, 26, 50}));
  };

  CLI::App* scan_cmd = app.add_subcommand("scan", "Scan a gate into droplet files");
  config_flags(scan_cmd);
  CLI::App* cal_cmd = app.add_subcommand("calibrate", "Estimate the ancilla phase error");
  config_flags(cal_cmd);
  CLI::App* ad_cmd = app.add_subcommand("adaptive", "Scan against a guess gate and reconstruct");
  config_flags(ad_cmd);
  CLI::App* bench_cmd = app.add_subcommand("bench", "Fidelity study over random gates");
  config_flags(bench_cmd);

  CLI::App* rec_cmd = app.add_subcommand("reconstruct", "Estimate a gate from four droplet files");
  rec_cmd->add_option("files", f.files, "Droplet files")->required();
  common(rec_cmd);
  rec_cmd->add_flag("--optimize", f.optimize, "Refine with the cost optimizer");
  rec_cmd->add_option("--tolerance", f.tolerance, "Iteration tolerance");
  rec_cmd->add_option("--reference", f.reference, "Reference gate name for the fidelity");

  CLI::App* render_cmd = app.add_subcommand("render", "Render a droplet file to SVG");
  render_cmd->add_option("file", f.files, "Droplet file")->required();
  common(render_cmd);
  render_cmd->add_option("--projection", f.projection, "mollweide or latlong")
      ->check(CLI::IsMember({"mollweide", "latlong"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  Context ctx;
  ctx.out = &out;
  ctx.manifest.started = utc_timestamp();
  if (scan_cmd->parsed()) {
    ctx.manifest.command = "scan";
    return guarded(ctx, err, [&] { cmd_scan(ctx, f); });
  }
  if (cal_cmd->parsed()) {
    ctx.manifest.command = "calibrate";
    return guarded(ctx, err, [&] { cmd_calibrate(ctx, f); });
  }
  if (ad_cmd->parsed()) {
    ctx.manifest.command = "adaptive";
    return guarded(ctx, err, [&] { cmd_adaptive(ctx, f); });
  }
  if (bench_cmd->parsed()) {
    ctx.manifest.command = "bench";
    return guarded(ctx, err, [&] { cmd_bench(ctx, f); });
  }
  if (rec_cmd->parsed()) {
    ctx.manifest.command = "reconstruct";
    return guarded(ctx, err, [&] { cmd_reconstruct(ctx, f); });
  }
  ctx.manifest.command = "render";
  return guarded(ctx, err, [&] { cmd_render(ctx, f, err); });
}

}  // namespace wigtomo::cli
