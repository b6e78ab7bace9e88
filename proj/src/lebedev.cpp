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
#include <cmath>
#include <string>

#include "wigtomo/errors.hpp"
#include "wigtomo/sphere.hpp"

namespace wigtomo {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

struct Point {
  double x, y, z;
};

void add_point(SphereGrid& g, Point p, double w) {
  const double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
  const double z = std::clamp(p.z / r, -1.0, 1.0);
  double phi = std::atan2(p.y, p.x);
  if (phi < 0.0) phi += kTwoPi;
  // Poles have no defined azimuth; use 0 so output is reproducible.
  if (std::abs(p.x) == 0.0 && std::abs(p.y) == 0.0) phi = 0.0;
  g.nodes.push_back({std::acos(z), phi, w});
}

// Octahedron vertices.
void add_a1(SphereGrid& g, double w) {
  for (int axis = 0; axis < 3; ++axis) {
    for (double s : {1.0, -1.0}) {
      Point p{0, 0, 0};
      (axis == 0 ? p.x : axis == 1 ? p.y : p.z) = s;
      add_point(g, p, w);
    }
  }
}

// Edge midpoints (+-1, +-1, 0)/sqrt(2) and permutations.
void add_a2(SphereGrid& g, double w) {
  const double a = 1.0 / std::sqrt(2.0);
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      add_point(g, {0, s1 * a, s2 * a}, w);
      add_point(g, {s1 * a, 0, s2 * a}, w);
      add_point(g, {s1 * a, s2 * a, 0}, w);
    }
  }
}

// Cube vertices (+-1, +-1, +-1)/sqrt(3).
void add_a3(SphereGrid& g, double w) {
  const double a = 1.0 / std::sqrt(3.0);
  for (double sx : {1.0, -1.0}) {
    for (double sy : {1.0, -1.0}) {
      for (double sz : {1.0, -1.0}) add_point(g, {sx * a, sy * a, sz * a}, w);
    }
  }
}

// (+-l, +-l, +-m) and permutations, 24 points.
void add_b(SphereGrid& g, double l, double m, double w) {
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      for (double s3 : {1.0, -1.0}) {
        add_point(g, {s1 * l, s2 * l, s3 * m}, w);
        add_point(g, {s1 * l, s2 * m, s3 * l}, w);
        add_point(g, {s1 * m, s2 * l, s3 * l}, w);
      }
    }
  }
}

}  // namespace

SphereGrid lebedev_grid(int order) {
  SphereGrid g;
  g.order = order;
  switch (order) {
    case 6:
      add_a1(g, 1.0 / 6.0);
      break;
    case 26:
      add_a1(g, 1.0 / 21.0);
      add_a2(g, 4.0 / 105.0);
      add_a3(g, 9.0 / 280.0);
      break;
    case 50:
      add_a1(g, 4.0 / 315.0);
      add_a2(g, 64.0 / 2835.0);
      add_a3(g, 27.0 / 1280.0);
      add_b(g, 1.0 / std::sqrt(11.0), 3.0 / std::sqrt(11.0), 14641.0 / 725760.0);
      break;
    default:
      throw DomainError("unsupported Lebedev order " + std::to_string(order) +
                        " (expected 6, 26 or 50)");
  }
  return g;
}

std::complex<double> spherical_harmonic(int j, int m, double theta, double phi) {
  if (j < 0 || std::abs(m) > j) throw DomainError("spherical harmonic needs |m| <= j");
  const int am = std::abs(m);
  const double legendre = std::sph_legendre(static_cast<unsigned>(j), static_cast<unsigned>(am), theta);
  const std::complex<double> y = legendre * std::polar(1.0, am * phi);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

}  // namespace wigtomo
