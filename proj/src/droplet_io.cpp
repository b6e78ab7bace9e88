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


#include "wigtomo/droplet_io.hpp"

#include <fstream>

#include "wigtomo/errors.hpp"

namespace wigtomo {

using nlohmann::json;

json grid_to_json(const SphereGrid& grid) {
  json nodes = json::array();
  for (const SphereNode& n : grid.nodes) nodes.push_back({n.theta, n.phi, n.weight});
  return {{"order", grid.order}, {"nodes", std::move(nodes)}};
}

SphereGrid grid_from_json(const json& j) {
  try {
    SphereGrid g;
    g.order = j.at("order").get<int>();
    for (const json& n : j.at("nodes")) {
      if (!n.is_array() || n.size() != 3) throw DomainError("grid node must be [theta, phi, weight]");
      g.nodes.push_back({n[0].get<double>(), n[1].get<double>(), n[2].get<double>()});
    }
    return g;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed grid: ") + e.what());
  }
}

json droplet_to_json(const DropletFile& file) {
  const Droplet& f = file.droplet;
  json labels = json::object();
  for (const auto& [label, v] : f.samples) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back({v(i).real(), v(i).imag()});
    labels[label.to_string()] = std::move(arr);
  }
  json meta = {{"k", file.meta.k},
               {"gate_name", file.meta.gate_name},
               {"seed", file.meta.seed},
               {"num_qubits", f.num_qubits},
               {"phase_adjusted", file.meta.phase_adjusted}};
  meta["shots"] = file.meta.shots ? json(*file.meta.shots) : json(nullptr);
  return {{"grid", grid_to_json(f.grid)}, {"labels", std::move(labels)}, {"meta", std::move(meta)}};
}

DropletFile droplet_from_json(const json& j) {
  DropletFile out;
  try {
    out.droplet.grid = grid_from_json(j.at("grid"));
    const json& meta = j.value("meta", json::object());
    out.meta.k = meta.value("k", 0);
    out.meta.gate_name = meta.value("gate_name", std::string());
    out.meta.seed = meta.value("seed", std::uint64_t{0});
    out.meta.phase_adjusted = meta.value("phase_adjusted", true);
    if (meta.contains("shots") && !meta["shots"].is_null()) out.meta.shots = meta["shots"].get<long>();
    std::uint32_t all = 0;
    for (const auto& [name, arr] : j.at("labels").items()) {
      const Label label = Label::parse(name);
      all |= label.mask;
      Eigen::VectorXcd v(static_cast<Eigen::Index>(arr.size()));
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_array() || arr[i].size() != 2) throw DomainError("sample must be [re, im]");
        v(static_cast<Eigen::Index>(i)) = Complex(arr[i][0].get<double>(), arr[i][1].get<double>());
      }
      if (static_cast<std::size_t>(v.size()) != out.droplet.grid.size()) {
        throw DomainError("label '" + name + "' has a different length than the grid");
      }
      out.droplet.samples[label] = std::move(v);
    }
    int n = 1;
    while (n < 32 && (all >> n) != 0) ++n;
    out.droplet.num_qubits = meta.value("num_qubits", n);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed droplet file: ") + e.what());
  }
  return out;
}

void write_droplet(const std::string& path, const DropletFile& file) {
  std::ofstream os(path);
  if (!os) throw DomainError("cannot open " + path + " for writing");
  os << droplet_to_json(file).dump(1) << '\n';
}

DropletFile read_droplet(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open droplet file " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw DomainError("droplet file " + path + " is not valid JSON: " + e.what());
  }
  return droplet_from_json(j);
}

}  // namespace wigtomo
