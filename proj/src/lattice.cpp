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

#include "cpcorr/lattice.hpp"

#include <cmath>
#include <string>

#include "cpcorr/error.hpp"

namespace cpcorr {

ContinuumSchedule::ContinuumSchedule(double reference_spacing, int reference_sites)
    : a0_(reference_spacing), n0_(reference_sites) {
  if (!(a0_ > 0.0) || !std::isfinite(a0_)) {
    throw ConfigError("schedule reference spacing must be positive");
  }
  if (n0_ < 2 || n0_ % 2 != 0) {
    throw ConfigError("schedule reference site count must be even and >= 2, got " +
                      std::to_string(n0_));
  }
}

double ContinuumSchedule::half_length(int sites) const {
  return 0.5 * a0_ * std::sqrt(static_cast<double>(sites) * n0_);
}

double ContinuumSchedule::spacing(int sites) const {
  return a0_ * std::sqrt(static_cast<double>(n0_) / sites);
}

Lattice::Lattice(int sites, double half_length)
    : half_length_(half_length), spacing_(0.0) {
  if (sites < 1 || !(half_length > 0.0) || !std::isfinite(half_length)) {
    throw ConfigError("lattice needs >= 1 site and a positive half-length");
  }
  spacing_ = 2.0 * half_length / sites;
  nodes_.resize(static_cast<std::size_t>(sites));
  // Mirror the two halves explicitly so the node set is exactly symmetric.
  for (int i = 0; i < sites; ++i) {
    const int mirror = sites - 1 - i;
    if (mirror < i) {
      nodes_[i] = -nodes_[mirror];
    } else {
      nodes_[i] = -half_length + spacing_ * (i + 0.5);
    }
  }
  if (sites % 2 == 1) nodes_[sites / 2] = 0.0;
}

Lattice Lattice::from_schedule(const ContinuumSchedule& schedule, int sites) {
  if (sites % 2 != 0) {
    throw ConfigError("lattice site count must be even, got " + std::to_string(sites));
  }
  if (sites < schedule.reference_sites()) {
    throw ConfigError("lattice site count " + std::to_string(sites) +
                      " is below the schedule reference " +
                      std::to_string(schedule.reference_sites()));
  }
  return Lattice(sites, schedule.half_length(sites));
}

}  // namespace cpcorr
