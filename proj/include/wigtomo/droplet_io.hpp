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


// JSON form of droplets:
//   {"grid": {"order": 50, "nodes": [[theta, phi, weight], ...]},
//    "labels": {"empty": [[re, im], ...], "1": [...]},
//    "meta": {"k": 1, "gate_name": "H", "shots": 4096, "seed": 7, ...}}
// Doubles are written in shortest round-trip form, so a write/read cycle is
// bit-exact.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "wigtomo/droplet.hpp"

namespace wigtomo {

struct DropletMeta {
  int k = 0;
  std::string gate_name;
  std::optional<long> shots;  // empty in exact mode
  std::uint64_t seed = 0;
  bool phase_adjusted = true;
};

struct DropletFile {
  Droplet droplet;
  DropletMeta meta;
};

nlohmann::json grid_to_json(const SphereGrid& grid);
SphereGrid grid_from_json(const nlohmann::json& j);

nlohmann::json droplet_to_json(const DropletFile& file);
/// DomainError on malformed input (missing fields, length mismatch).
DropletFile droplet_from_json(const nlohmann::json& j);

void write_droplet(const std::string& path, const DropletFile& file);
DropletFile read_droplet(const std::string& path);

}  // namespace wigtomo
