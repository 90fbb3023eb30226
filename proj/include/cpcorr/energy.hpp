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

#include <optional>
#include <string>

#include "cpcorr/extrapolate.hpp"
#include "cpcorr/profile.hpp"

namespace cpcorr {

// A profile in physical units together with the sphere's mean height above
// the profile's zero line. Lateral position is encoded in the profile (sine
// phase, sawtooth shift) so the sphere always sits at x = 0.
struct GeometryConfig {
  HeightProfile profile;
  double mean_height = 1.0;  // H-bar

  // Distance along the normal, H = H-bar - h(0).
  double distance() const { return mean_height - profile.height(0.0); }

  // Geometry for a given distance H instead of a given mean height.
  static GeometryConfig at_distance(HeightProfile profile, double distance);
};

// Dimensionless profile in units of H, translated so that h~(0) = 0. The
// sphere then sits at (0, 1) for every profile and lateral position. Throws
// GeometryError unless H > 0.
HeightProfile rescaled_geometry(const GeometryConfig& config);

struct EnergyResult {
  double alpha0 = 0.0;
  double distance = 0.0;  // H
  double radius = 0.0;    // r, a prefactor only
  // E / (hbar c r / H^2) = -alpha0 / 2
  double scaled_energy = 0.0;
  std::optional<std::string> warning;

  // Energy in units of hbar c, i.e. -alpha0 r / (2 H^2).
  double energy_over_hbar_c() const { return scaled_energy * radius / (distance * distance); }
};

// Throws DomainError for non-positive inputs. Flags r / H > 0.1 in `warning`.
EnergyResult casimir_polder_energy(double alpha0, double distance, double radius);

// alpha0_corr / alpha0_planar. Throws DomainError unless both are positive.
double normalized_ratio(double alpha0_corrugated, double alpha0_planar);

// As above, and throws ProtocolError if the two estimates were produced with
// different numerical plans.
double normalized_ratio(const AlphaEstimate& corrugated, const AlphaEstimate& planar);

}  // namespace cpcorr
