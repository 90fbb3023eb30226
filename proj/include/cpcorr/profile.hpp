// Copyright 2026 The cpcorr Authors. All Rights Reserved.
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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cpcorr {

// Corrugation height functions h(x). All lengths share one (arbitrary) unit;
// rescale() maps a profile into units of a chosen distance.

struct PlanarShape {};

// h(x) = A sin(omega x + phase)
struct SineShape {
  double amplitude = 1.0;
  double omega = 1.0;
  double phase = 0.0;
};

// One period [0, wavelength): rises linearly from 0 at x = 0 to `amplitude`
// at x = 0.8 wavelength, then falls linearly back to 0 at x = wavelength.
// Each corner is replaced by two cubic Hermite pieces of width `smoothing`
// that reach the corner value with zero slope, so min h = 0 and max h = A
// exactly and h is C1. `shift` translates the pattern: h(x) = saw(x - shift).
struct SawtoothShape {
  double amplitude = 1.0;
  double wavelength = 2.8;
  double smoothing = 0.14;
  double shift = 0.0;

  static constexpr double kPeakFraction = 0.8;
};

// Monotone piecewise-cubic (Fritsch-Carlson) interpolant of (x, h) samples.
struct TabulatedShape {
  std::vector<double> xs;
  std::vector<double> hs;
  std::vector<double> slopes;  // interpolant derivative at each knot
};

enum class ProfileKind { kPlanar, kSine, kSawtooth, kTabulated };

std::string to_string(ProfileKind kind);

class HeightProfile {
 public:
  HeightProfile() = default;

  static HeightProfile planar();
  static HeightProfile sine(double amplitude, double omega, double phase = 0.0);
  // smoothing defaults to 5% of the wavelength.
  static HeightProfile sawtooth(double amplitude, double wavelength,
                                std::optional<double> smoothing = std::nullopt,
                                double shift = 0.0);
  // Requires >= 2 samples with strictly increasing x.
  static HeightProfile tabulated(std::vector<double> xs, std::vector<double> hs);
  // Two-column text, whitespace- or comma-separated; '#' starts a comment.
  static HeightProfile load_table(const std::filesystem::path& path);

  ProfileKind kind() const;

  double height(double x) const;
  double slope(double x) const;
  // sqrt(1 + h'(x)^2), the line element of the surface along x.
  double metric_factor(double x) const;

  // Vertical translation added to every height value.
  double offset() const { return offset_; }
  HeightProfile with_offset(double offset) const;

  // Shortest corrugation wavelength, if the profile is periodic.
  std::optional<double> dominant_wavelength() const;

  const SineShape* as_sine() const { return std::get_if<SineShape>(&shape_); }
  const SawtoothShape* as_sawtooth() const { return std::get_if<SawtoothShape>(&shape_); }
  const TabulatedShape* as_tabulated() const { return std::get_if<TabulatedShape>(&shape_); }

  friend HeightProfile rescale(const HeightProfile& profile, double scale);

 private:
  using Shape = std::variant<PlanarShape, SineShape, SawtoothShape, TabulatedShape>;
  explicit HeightProfile(Shape shape) : shape_(std::move(shape)) {}

  Shape shape_ = PlanarShape{};
  double offset_ = 0.0;
};

// Dimensionless profile h~(x~) = h(x~ * scale) / scale. Throws DomainError for
// scale <= 0.
HeightProfile rescale(const HeightProfile& profile, double scale);

}  // namespace cpcorr
