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

#include "cpcorr/energy.hpp"

#include <cmath>
#include <sstream>

#include "cpcorr/error.hpp"

namespace cpcorr {

GeometryConfig GeometryConfig::at_distance(HeightProfile profile, double distance) {
  const double h0 = profile.height(0.0);
  return {std::move(profile), distance + h0};
}

HeightProfile rescaled_geometry(const GeometryConfig& config) {
  const double distance = config.distance();
  if (!(distance > 0.0)) {
    std::ostringstream msg;
    msg << "sphere at mean height " << config.mean_height
        << " touches or penetrates the surface (H = " << distance << ")";
    throw GeometryError(msg.str());
  }
  const HeightProfile shifted = config.profile.with_offset(config.profile.offset() -
                                                           config.profile.height(0.0));
  return rescale(shifted, distance);
}

EnergyResult casimir_polder_energy(double alpha0, double distance, double radius) {
  if (!(alpha0 > 0.0) || !(distance > 0.0) || !(radius > 0.0)) {
    throw DomainError("alpha0, H and r must be positive");
  }
  EnergyResult out{alpha0, distance, radius, -0.5 * alpha0, std::nullopt};
  if (radius / distance > 0.1) {
    std::ostringstream msg;
    msg << "r/H = " << radius / distance << " is outside the small-sphere limit";
    out.warning = msg.str();
  }
  return out;
}

double normalized_ratio(double alpha0_corrugated, double alpha0_planar) {
  if (!(alpha0_corrugated > 0.0) || !(alpha0_planar > 0.0)) {
    throw DomainError("normalized ratio needs positive geometry factors");
  }
  return alpha0_corrugated / alpha0_planar;
}

double normalized_ratio(const AlphaEstimate& corrugated, const AlphaEstimate& planar) {
  if (!(corrugated.plan == planar.plan)) {
    throw ProtocolError("corrugated and planar estimates use different numerical plans");
  }
  return normalized_ratio(corrugated.alpha0, planar.alpha0);
}

}  // namespace cpcorr
