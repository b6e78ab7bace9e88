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


// Quadrature grids on the unit sphere and complex spherical harmonics.

#pragma once

#include <complex>
#include <vector>

namespace wigtomo {

struct SphereNode {
  double theta = 0.0;   // polar angle in [0, pi]
  double phi = 0.0;     // azimuth in [0, 2 pi)
  double weight = 0.0;  // weights of a grid sum to 1

  bool operator==(const SphereNode&) const = default;
};

struct SphereGrid {
  int order = 0;  // node count of the rule; 0 for ad hoc grids
  std::vector<SphereNode> nodes;

  std::size_t size() const { return nodes.size(); }
  bool operator==(const SphereGrid&) const = default;
};

/// Lebedev rule with 6, 26 or 50 nodes (degrees 3, 7, 11). DomainError for
/// any other order.
SphereGrid lebedev_grid(int order);

/// Orthonormal Y_jm with the Condon-Shortley phase. DomainError if |m| > j.
std::complex<double> spherical_harmonic(int j, int m, double theta, double phi);

}  // namespace wigtomo
