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

#include "cpcorr/extrapolate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cpcorr/error.hpp"

namespace cpcorr {

void ExtrapolationPlan::validate() const {
  if (sites[0] == sites[1]) throw ConfigError("extrapolation site counts must differ");
  if (sites[0] <= 0 || sites[1] <= 0) throw ConfigError("site counts must be positive");
  if (!(epsilons[0] > 0.0) || !(epsilons[1] > 0.0)) {
    throw ConfigError("regulator values must be positive");
  }
  if (epsilons[0] == epsilons[1]) throw ConfigError("regulator values must differ");
}

void NumericalPlan::validate() const {
  extrapolation.validate();
  for (int n : extrapolation.sites) {
    if (n < schedule.reference_sites() || n % 2 != 0) {
      throw ConfigError("site count " + std::to_string(n) +
                        " must be even and >= the schedule reference " +
                        std::to_string(schedule.reference_sites()));
    }
  }
  build_momentum_quadrature(momentum_nodes, momentum_cutoff);
}

double extrapolate_continuum(const AlphaSample& first, const AlphaSample& second) {
  if (first.sites == second.sites) {
    throw DegenerateInputError("continuum extrapolation needs two distinct site counts");
  }
  if (first.epsilon != second.epsilon) {
    throw DomainError("continuum extrapolation samples must share epsilon");
  }
  const double u1 = 1.0 / first.sites;
  const double u2 = 1.0 / second.sites;
  return second.alpha + (second.alpha - first.alpha) * u2 / (u1 - u2);
}

RegulatorLine extrapolate_regulator(EpsilonIntercept first, EpsilonIntercept second) {
  if (first.epsilon == second.epsilon) {
    throw DegenerateInputError("regulator extrapolation needs two distinct epsilons");
  }
  const double slope = (second.alpha - first.alpha) / (second.epsilon - first.epsilon);
  return {first.alpha - slope * first.epsilon, slope};
}

namespace {

// Ordinary least squares y = a + b x; returns {a, b}.
std::pair<double, double> line_fit(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DegenerateInputError("least-squares fit needs distinct abscissae");
  const double b = sxy / sxx;
  return {my - b * mx, b};
}

}  // namespace

double extrapolate_continuum_lsq(std::span<const AlphaSample> samples) {
  if (samples.size() < 2) throw DegenerateInputError("need at least two samples");
  std::vector<double> x, y;
  for (const auto& s : samples) {
    if (s.epsilon != samples.front().epsilon) {
      throw DomainError("continuum extrapolation samples must share epsilon");
    }
    x.push_back(1.0 / s.sites);
    y.push_back(s.alpha);
  }
  return line_fit(x, y).first;
}

RegulatorLine extrapolate_regulator_lsq(std::span<const EpsilonIntercept> points) {
  if (points.size() < 2) throw DegenerateInputError("need at least two intercepts");
  std::vector<double> x, y;
  for (const auto& p : points) {
    x.push_back(p.epsilon);
    y.push_back(p.alpha);
  }
  const auto [a, b] = line_fit(x, y);
  return {a, b};
}

AlphaEstimate compose_estimate(const NumericalPlan& plan,
                               const std::array<AlphaSample, 4>& samples) {
  AlphaEstimate est;
  est.plan = plan;
  est.samples = samples;
  for (int e = 0; e < 2; ++e) {
    est.intercepts[e] = {plan.extrapolation.epsilons[e],
                         extrapolate_continuum(samples[2 * e], samples[2 * e + 1])};
  }
  const RegulatorLine line = extrapolate_regulator(est.intercepts[0], est.intercepts[1]);
  est.alpha0 = line.alpha0;
  est.alpha1 = line.alpha1;
  return est;
}

AlphaEstimate estimate_alpha(const HeightProfile& profile, const NumericalPlan& plan,
                             int workers) {
  plan.validate();
  const MomentumQuadrature quadrature = plan.quadrature();
  std::array<AlphaSample, 4> samples{};
  for (int e = 0; e < 2; ++e) {
    for (int s = 0; s < 2; ++s) {
      samples[2 * e + s] =
          alpha_sample(profile, plan.schedule, plan.extrapolation.sites[s],
                       plan.extrapolation.epsilons[e], quadrature, workers);
    }
  }
  return compose_estimate(plan, samples);
}

LinearityScan linearity_scan(const HeightProfile& profile, const ContinuumSchedule& schedule,
                             std::array<int, 2> sites, std::span<const double> epsilons,
                             const MomentumQuadrature& quadrature, int workers,
                             std::array<double, 2> window) {
  LinearityScan scan;
  std::vector<double> sorted(epsilons.begin(), epsilons.end());
  std::sort(sorted.begin(), sorted.end());
  for (double eps : sorted) {
    const AlphaSample a = alpha_sample(profile, schedule, sites[0], eps, quadrature, workers);
    const AlphaSample b = alpha_sample(profile, schedule, sites[1], eps, quadrature, workers);
    scan.rows.push_back({eps, extrapolate_continuum(a, b)});
  }

  // Slopes between consecutive in-window points; curvature shows up as a
  // change of slope.
  std::vector<EpsilonIntercept> in;
  for (const auto& r : scan.rows) {
    if (r.epsilon >= window[0] && r.epsilon <= window[1]) in.push_back(r);
  }
  if (in.size() >= 3) {
    std::vector<double> slopes;
    for (std::size_t k = 0; k + 1 < in.size(); ++k) {
      slopes.push_back((in[k + 1].alpha - in[k].alpha) / (in[k + 1].epsilon - in[k].epsilon));
    }
    double mean = 0.0;
    for (double s : slopes) mean += s;
    mean /= static_cast<double>(slopes.size());
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < slopes.size(); ++k) {
      worst = std::max(worst, std::abs(slopes[k + 1] - slopes[k]));
    }
    if (worst > 0.1 * std::abs(mean)) {
      scan.nonlinear = true;
      std::ostringstream msg;
      msg << "intercepts deviate from linearity in [" << window[0] << ", " << window[1]
          << "]: slope change " << worst << " vs mean slope " << mean;
      scan.message = msg.str();
    }
  }
  return scan;
}

void write_linearity_csv(const LinearityScan& scan, std::ostream& out) {
  out << "epsilon,alpha_intercept\n";
  out << std::setprecision(17);
  for (const auto& r : scan.rows) out << r.epsilon << ',' << r.alpha << '\n';
}

std::optional<std::string> resolution_warning(const HeightProfile& profile,
                                              const ContinuumSchedule& schedule, int sites) {
  const auto lambda = profile.dominant_wavelength();
  if (!lambda) return std::nullopt;
  const double a = schedule.spacing(sites);
  if (a <= *lambda / kMinPointsPerWavelength) return std::nullopt;
  std::ostringstream msg;
  msg << "lattice spacing " << a << " at N = " << sites
      << " exceeds 1/8 of the corrugation wavelength " << *lambda;
  return msg.str();
}

ExtrapolationPlan resolve_corrugation(const ExtrapolationPlan& plan,
                                      const HeightProfile& profile,
                                      const ContinuumSchedule& schedule,
                                      double points_per_wavelength) {
  const auto lambda = profile.dominant_wavelength();
  const int coarse = std::min(plan.sites[0], plan.sites[1]);
  if (!lambda || !(points_per_wavelength > 0.0)) return plan;
  const double target = *lambda / points_per_wavelength;
  if (schedule.spacing(coarse) <= target) return plan;
  // a(N) = a0 sqrt(N0 / N) <= target  <=>  N >= N0 (a0 / target)^2
  const double ratio = schedule.reference_spacing() / target;
  const double needed = schedule.reference_sites() * ratio * ratio;
  const double factor = needed / coarse;
  ExtrapolationPlan out = plan;
  for (int& n : out.sites) {
    n = 2 * static_cast<int>(std::ceil(0.5 * n * factor));
  }
  if (out.sites[0] == out.sites[1]) out.sites[1] += 2;
  return out;
}

}  // namespace cpcorr
