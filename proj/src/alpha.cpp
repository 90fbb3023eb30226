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

#include "cpcorr/alpha.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cpcorr/error.hpp"
#include "cpcorr/greens.hpp"
#include "cpcorr/parallel.hpp"
#include "cpcorr/simd.hpp"
#include "cpcorr/specfun.hpp"

namespace cpcorr {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      // Final derivative at the converged root.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

MomentumQuadrature build_momentum_quadrature(int nodes, double cutoff) {
  if (nodes < 8) throw ConfigError("momentum quadrature needs at least 8 nodes");
  if (!(cutoff > 5.0) || !std::isfinite(cutoff)) {
    throw ConfigError("momentum cutoff must exceed 5");
  }
  MomentumQuadrature rule;
  rule.cutoff = cutoff;
  gauss_legendre(nodes, rule.nodes, rule.weights);
  const double half = 0.5 * cutoff;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    rule.nodes[k] = half * (rule.nodes[k] + 1.0);
    rule.weights[k] *= half;
  }
  return rule;
}

AlphaSample alpha_sample(const HeightProfile& profile, const ContinuumSchedule& schedule,
                         int sites, double epsilon, const MomentumQuadrature& quadrature,
                         int workers) {
  const RegularizationParams reg(epsilon);
  const Lattice lattice = Lattice::from_schedule(schedule, sites);
  const SurfaceGeometry geometry(profile, lattice);

  std::vector<double> inner(quadrature.nodes.size());
  parallel_for(inner.size(), workers, [&](std::size_t k) {
    const KernelSystem system = assemble(geometry, quadrature.nodes[k], reg);
    const GreensSolution solution = solve(system);
    // M21 coincides with the right-hand side M12.
    inner[k] = simd::dot3(system.weights, solution.values, system.rhs);
  });

  double sum = 0.0;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    sum += quadrature.weights[k] * quadrature.nodes[k] * inner[k];
    if (!std::isfinite(sum)) {
      std::ostringstream msg;
      msg << "non-finite alpha partial sum (q = " << quadrature.nodes[k]
          << ", N = " << sites << ", eps = " << epsilon << ")";
      throw NumericalError(msg.str());
    }
  }
  return {sites, epsilon, 2.0 * sum};
}

double analytic_planar_integrand(double q, double x) {
  if (!(q > 0.0)) throw DomainError("analytic_planar_integrand: q must be positive");
  const double s = std::sqrt(1.0 + x * x);
  const double z = q * s;
  const double dm12 = (q / s) * specfun::bessel_k1(z) / std::numbers::pi;
  const double m21 = 0.5 * specfun::bessel_k0(z) / std::numbers::pi;
  return 2.0 * q * dm12 * m21;
}

double analytic_planar_alpha(int order) {
  std::vector<double> t, w;
  gauss_legendre(order, t, w);

  // x = tan(theta) maps the line onto (-pi/2, pi/2); the integrand decays
  // like (1 + x^2)^-2, so the mapped integrand is smooth at the ends.
  auto x_integral = [&](double q) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double theta = 0.5 * std::numbers::pi * t[i];
      const double c = std::cos(theta);
      s += w[i] * analytic_planar_integrand(q, std::tan(theta)) / (c * c);
    }
    return 0.5 * std::numbers::pi * s;
  };

  // q panels, geometrically graded towards the logarithmic endpoint q = 0.
  std::vector<double> edges{0.0};
  for (double e = 1e-6; e < 1.0; e *= 4.0) edges.push_back(e);
  for (double e : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) edges.push_back(e);

  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double lo = edges[p];
    const double hi = edges[p + 1];
    double panel = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const double q = lo + 0.5 * (hi - lo) * (t[k] + 1.0);
      panel += w[k] * x_integral(q);
    }
    total += 0.5 * (hi - lo) * panel;
  }
  return total;
}

}  // namespace cpcorr
