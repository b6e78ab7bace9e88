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
#include <cstdio>
#include <sstream>

#include "wigtomo/cli.hpp"
#include "wigtomo/errors.hpp"

namespace wigtomo::cli {

namespace {

constexpr int kCols = 96;
constexpr int kRows = 48;
constexpr int kCell = 4;
constexpr int kMargin = 16;
constexpr int kTitle = 18;
constexpr int kLegendHeight = 64;

struct Rgb {
  int r = 0;
  int g = 0;
  int b = 0;
  bool operator==(const Rgb&) const = default;
};

// Hue from the phase, value from the relative magnitude, full saturation.
Rgb color_of(Complex v, double max_abs) {
  const double mag = std::clamp(std::abs(v) / max_abs, 0.0, 1.0);
  double hue = std::arg(v) / (2.0 * kPi);
  if (hue < 0.0) hue += 1.0;
  const double h6 = hue * 6.0;
  const int sector = static_cast<int>(std::floor(h6)) % 6;
  const double f = h6 - std::floor(h6);
  double r = 0.0, g = 0.0, b = 0.0;
  switch (sector) {
    case 0: r = 1; g = f; b = 0; break;
    case 1: r = 1 - f; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = f; break;
    case 3: r = 0; g = 1 - f; b = 1; break;
    case 4: r = f; g = 0; b = 1; break;
    default: r = 1; g = 0; b = 1 - f; break;
  }
  auto q = [mag](double c) { return static_cast<int>(std::lround(255.0 * c * mag)); };
  return {q(r), q(g), q(b)};
}

std::string hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

// Inverse projection of a cell center to (theta, phi); false outside the map.
bool cell_direction(Projection p, int col, int row, int cols, int rows, double& theta, double& phi) {
  const double u = -1.0 + (2.0 * col + 1.0) / cols;  // [-1, 1], west to east
  const double v = 1.0 - (2.0 * row + 1.0) / rows;   // [-1, 1], north to south
  double lat = 0.0;
  double lon = 0.0;
  if (p == Projection::LatLong) {
    lat = v * kPi / 2.0;
    lon = u * kPi;
  } else {
    if (u * u + v * v > 1.0) return false;
    const double aux = std::asin(v);
    lat = std::asin(std::clamp((2.0 * aux + std::sin(2.0 * aux)) / kPi, -1.0, 1.0));
    const double c = std::cos(aux);
    lon = c > 0.0 ? kPi * u / c : 0.0;
  }
  theta = kPi / 2.0 - lat;
  phi = lon < 0.0 ? lon + 2.0 * kPi : lon;
  return true;
}

}  // namespace

Projection parse_projection(const std::string& s) {
  if (s == "mollweide") return Projection::Mollweide;
  if (s == "latlong") return Projection::LatLong;
  throw ConfigError("projection must be mollweide or latlong, got '" + s + "'");
}

Raster raster(const Droplet& f, Label label, Projection p, int cols, int rows) {
  if (cols < 1 || rows < 1) throw DomainError("raster size must be positive");
  if (!f.samples.count(label)) throw DomainError("droplet has no label " + label.to_string());
  std::vector<TensorCoefficient> coeffs;
  for (const auto& c : tensor_coefficients(f)) {
    if (c.index.label == label) coeffs.push_back(c);
  }
  Raster out;
  out.cols = cols;
  out.rows = rows;
  out.cells.resize(static_cast<std::size_t>(cols) * rows);
  for (int row = 0; row < rows; ++row) {
    for (int col = 0; col < cols; ++col) {
      double theta = 0.0, phi = 0.0;
      if (!cell_direction(p, col, row, cols, rows, theta, phi)) continue;
      Complex v{0.0, 0.0};
      for (const auto& c : coeffs) v += c.value * spherical_harmonic(c.index.rank, c.index.order, theta, phi);
      out.cells[static_cast<std::size_t>(row) * cols + col] = v;
    }
  }
  return out;
}

std::string render_svg(const Droplet& f, Projection p, std::vector<std::string>& warnings) {
  std::vector<std::pair<Label, Raster>> panels;
  for (const auto& [label, values] : f.samples) panels.emplace_back(label, raster(f, label, p, kCols, kRows));

  double max_abs = 0.0;
  for (const auto& [label, r] : panels) {
    for (const auto& c : r.cells) {
      if (c) max_abs = std::max(max_abs, std::abs(*c));
    }
  }
  const bool empty = !(max_abs > 1e-12);
  if (empty) {
    warnings.push_back("droplet is zero everywhere; rendering the legend only");
    panels.clear();
  }

  const int panel_w = kCols * kCell;
  const int panel_h = kRows * kCell;
  const int width = panel_w + 2 * kMargin;
  const int height = kMargin + static_cast<int>(panels.size()) * (panel_h + kTitle + kMargin) + kLegendHeight;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  int y0 = kMargin;
  for (const auto& [label, r] : panels) {
    os << "<text x=\"" << kMargin << "\" y=\"" << y0 + 12
       << "\" font-family=\"sans-serif\" font-size=\"12\">label " << label.to_string() << "</text>\n";
    os << "<g transform=\"translate(" << kMargin << ',' << y0 + kTitle << ")\" shape-rendering=\"crispEdges\">\n";
    for (int row = 0; row < r.rows; ++row) {
      int col = 0;
      while (col < r.cols) {
        if (!r.at(col, row)) {
          ++col;
          continue;
        }
        const Rgb c = color_of(*r.at(col, row), max_abs);
        int end = col + 1;
        while (end < r.cols && r.at(end, row) && color_of(*r.at(end, row), max_abs) == c) ++end;
        os << "<rect x=\"" << col * kCell << "\" y=\"" << row * kCell << "\" width=\"" << (end - col) * kCell
           << "\" height=\"" << kCell << "\" fill=\"" << hex(c) << "\"/>\n";
        col = end;
      }
    }
    os << "</g>\n";
    y0 += panel_h + kTitle + kMargin;
  }

  // Legend: phase hue bar at full magnitude, magnitude bar at zero phase.
  const int bar = 128;
  os << "<g transform=\"translate(" << kMargin << ',' << y0 << ")\" shape-rendering=\"crispEdges\">\n";
  for (int i = 0; i < bar; ++i) {
    const double ph = -kPi + 2.0 * kPi * (i + 0.5) / bar;
    os << "<rect x=\"" << i << "\" y=\"0\" width=\"1\" height=\"12\" fill=\""
       << hex(color_of(std::polar(1.0, ph), 1.0)) << "\"/>\n";
  }
  for (int i = 0; i < bar; ++i) {
    const double m = (i + 0.5) / bar;
    os << "<rect x=\"" << i + bar + 32 << "\" y=\"0\" width=\"1\" height=\"12\" fill=\""
       << hex(color_of(Complex(m, 0.0), 1.0)) << "\"/>\n";
  }
  os << "<text x=\"0\" y=\"28\" font-family=\"sans-serif\" font-size=\"11\">phase -pi .. pi</text>\n";
  os << "<text x=\"" << bar + 32 << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"11\">|f| 0 .. ";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", empty ? 0.0 : max_abs);
  os << buf << "</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace wigtomo::cli
