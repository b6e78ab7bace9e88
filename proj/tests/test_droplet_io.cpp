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


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wigtomo/droplet_io.hpp"
#include "wigtomo/errors.hpp"

namespace wigtomo {
namespace {

TEST(DropletIo, JsonRoundTripIsBitExact) {
  std::mt19937_64 rng(61);
  DropletFile file;
  file.droplet = operator_to_droplet(testing::random_su2(rng) * 0.123456789, lebedev_grid(50));
  file.meta.k = 3;
  file.meta.gate_name = "H";
  file.meta.shots = 4096;
  file.meta.seed = 0xffffffffffffffffULL;
  file.meta.phase_adjusted = false;
  const DropletFile back = droplet_from_json(nlohmann::json::parse(droplet_to_json(file).dump()));
  EXPECT_EQ(back.droplet.grid, file.droplet.grid);
  EXPECT_EQ(back.droplet.num_qubits, 1);
  for (const auto& [label, v] : file.droplet.samples) {
    const auto& w = back.droplet.samples.at(label);
    ASSERT_EQ(v.size(), w.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) EXPECT_EQ(v(i), w(i));
  }
  EXPECT_EQ(back.meta.k, 3);
  EXPECT_EQ(back.meta.gate_name, "H");
  EXPECT_EQ(back.meta.shots, 4096);
  EXPECT_EQ(back.meta.seed, file.meta.seed);
  EXPECT_FALSE(back.meta.phase_adjusted);
}

TEST(DropletIo, TwoQubitLabelsAndExactMode) {
  std::mt19937_64 rng(62);
  DropletFile file;
  file.droplet = operator_to_droplet(testing::random_matrix(rng, 4), lebedev_grid(26));
  const nlohmann::json j = droplet_to_json(file);
  EXPECT_TRUE(j["labels"].contains("12"));
  EXPECT_TRUE(j["labels"].contains("empty"));
  const DropletFile back = droplet_from_json(j);
  EXPECT_FALSE(back.meta.shots.has_value());
  EXPECT_EQ(back.droplet.num_qubits, 2);
  EXPECT_EQ(max_difference(back.droplet, file.droplet), 0.0);
}

TEST(DropletIo, FileRoundTripAndMalformedInput) {
  DropletFile file;
  file.droplet = operator_to_droplet(gates::hadamard(), lebedev_grid(6));
  const std::string path = (std::filesystem::temp_directory_path() / "wigtomo_io_test.json").string();
  write_droplet(path, file);
  EXPECT_EQ(max_difference(read_droplet(path).droplet, file.droplet), 0.0);
  std::filesystem::remove(path);
  EXPECT_THROW(read_droplet(path), DomainError);

  nlohmann::json j = droplet_to_json(file);
  j["labels"]["1"].erase(0);
  EXPECT_THROW(droplet_from_json(j), DomainError);
  nlohmann::json k = droplet_to_json(file);
  k.erase("grid");
  EXPECT_THROW(droplet_from_json(k), DomainError);
  EXPECT_THROW(droplet_from_json(nlohmann::json::parse("[1, 2]")), DomainError);
}

}  // namespace
}  // namespace wigtomo
