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

#include <span>
#include <vector>

namespace cpcorr {

// Couples box size and spacing to the site count so that a single parameter
// drives both the continuum and the infinite-length limit:
//   L(N) = (a0 / 2) sqrt(N N0),   a(N) = a0 sqrt(N0 / N).
class ContinuumSchedule {
 public:
  // Defaults give L(N0) = 2 in units of the sphere distance.
  static constexpr double kDefaultSpacing = 0.05;
  static constexpr int kDefaultSites = 80;

  ContinuumSchedule() = default;
  // Throws ConfigError unless a0 > 0 and N0 >= 2 is even.
  ContinuumSchedule(double reference_spacing, int reference_sites);

  double reference_spacing() const { return a0_; }
  int reference_sites() const { return n0_; }

  double half_length(int sites) const;
  double spacing(int sites) const;

  friend bool operator==(const ContinuumSchedule&, const ContinuumSchedule&) = default;

 private:
  double a0_ = kDefaultSpacing;
  int n0_ = kDefaultSites;
};

// Cell-centred uniform grid on (-L, L): node_i = -L + a (i + 1/2).
class Lattice {
 public:
  // Direct construction; sites >= 1 and half_length > 0.
  Lattice(int sites, double half_length);

  // Sites must be even and >= the schedule's reference count.
  static Lattice from_schedule(const ContinuumSchedule& schedule, int sites);

  int sites() const { return static_cast<int>(nodes_.size()); }
  double half_length() const { return half_length_; }
  double spacing() const { return spacing_; }
  std::span<const double> nodes() const { return nodes_; }

 private:
  double half_length_;
  double spacing_;
  std::vector<double> nodes_;
};

}  // namespace cpcorr
