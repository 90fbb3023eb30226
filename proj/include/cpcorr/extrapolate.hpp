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

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpcorr/alpha.hpp"
#include "cpcorr/lattice.hpp"
#include "cpcorr/profile.hpp"

namespace cpcorr {

// Two lattice sizes for the 1/N -> 0 step and two regulator values for the
// eps -> 0 step.
struct ExtrapolationPlan {
  std::array<int, 2> sites{80, 100};
  std::array<double, 2> epsilons{0.02, 0.025};

  // The finer pair used to estimate the numerical uncertainty.
  static ExtrapolationPlan verification() { return {{180, 200}, {0.02, 0.025}}; }

  // Throws ConfigError for coincident or non-positive entries.
  void validate() const;

  friend bool operator==(const ExtrapolationPlan&, const ExtrapolationPlan&) = default;
};

// Everything that must agree between a corrugated estimate and the planar
// baseline it is normalised against.
struct NumericalPlan {
  ExtrapolationPlan extrapolation;
  ContinuumSchedule schedule;
  int momentum_nodes = MomentumQuadrature::kDefaultNodes;
  double momentum_cutoff = MomentumQuadrature::kDefaultCutoff;

  void validate() const;
  MomentumQuadrature quadrature() const {
    return build_momentum_quadrature(momentum_nodes, momentum_cutoff);
  }

  friend bool operator==(const NumericalPlan&, const NumericalPlan&) = default;
};

struct EpsilonIntercept {
  double epsilon = 0.0;
  double alpha = 0.0;  // continuum (1/N -> 0) value at this epsilon
};

struct RegulatorLine {
  double alpha0 = 0.0;  // value at eps = 0
  double alpha1 = 0.0;  // slope in eps
};

struct AlphaEstimate {
  NumericalPlan plan;
  // Ordered (sites[0], eps[0]), (sites[1], eps[0]), (sites[0], eps[1]), (sites[1], eps[1]).
  std::array<AlphaSample, 4> samples{};
  std::array<EpsilonIntercept, 2> intercepts{};
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  // |alpha0 - alpha0 of the verification plan|; zero when not computed.
  double spread = 0.0;
};

// Value at 1/N = 0 of the line through the two samples. Samples must share
// epsilon; equal N raises DegenerateInputError.
double extrapolate_continuum(const AlphaSample& first, const AlphaSample& second);

// Line through two (eps, alpha) intercepts evaluated at eps = 0.
RegulatorLine extrapolate_regulator(EpsilonIntercept first, EpsilonIntercept second);

// Least-squares variants over >= 2 points, for diagnostics.
double extrapolate_continuum_lsq(std::span<const AlphaSample> samples);
RegulatorLine extrapolate_regulator_lsq(std::span<const EpsilonIntercept> points);

// Composes four samples into an estimate (pure arithmetic, no solves).
AlphaEstimate compose_estimate(const NumericalPlan& plan,
                               const std::array<AlphaSample, 4>& samples);

// Runs the four lattice/regulator samples and both extrapolation stages.
AlphaEstimate estimate_alpha(const HeightProfile& rescaled_profile, const NumericalPlan& plan,
                             int workers = 1);

// Continuum intercepts over a list of regulator values.
struct LinearityScan {
  std::vector<EpsilonIntercept> rows;
  bool nonlinear = false;  // second differences exceed 10% of first differences
  std::string message;
};

LinearityScan linearity_scan(const HeightProfile& rescaled_profile,
                             const ContinuumSchedule& schedule, std::array<int, 2> sites,
                             std::span<const double> epsilons,
                             const MomentumQuadrature& quadrature, int workers = 1,
                             std::array<double, 2> window = {0.01, 0.04});

// Two-column CSV: epsilon,alpha_intercept
void write_linearity_csv(const LinearityScan& scan, std::ostream& out);

// Points per wavelength below which the lattice under-resolves a corrugation.
inline constexpr double kMinPointsPerWavelength = 8.0;

// Warning text if a(N) exceeds 1/8 of the profile's dominant wavelength.
std::optional<std::string> resolution_warning(const HeightProfile& rescaled_profile,
                                              const ContinuumSchedule& schedule, int sites);

// Scales both site counts by a common factor (keeping them even and their
// ratio) until the coarser lattice resolves the dominant wavelength with
// `points_per_wavelength` sites. Returns the plan unchanged for aperiodic
// profiles or when already resolved.
ExtrapolationPlan resolve_corrugation(const ExtrapolationPlan& plan,
                                      const HeightProfile& rescaled_profile,
                                      const ContinuumSchedule& schedule,
                                      double points_per_wavelength = kMinPointsPerWavelength);

}  // namespace cpcorr
