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

#include <vector>

#include "cpcorr/kernel.hpp"
#include "cpcorr/lattice.hpp"
#include "cpcorr/profile.hpp"

namespace cpcorr {

// Gauss-Legendre rule on [0, cutoff] for the momentum integral.
struct MomentumQuadrature {
  static constexpr int kDefaultNodes = 64;
  static constexpr double kDefaultCutoff = 30.0;

  std::vector<double> nodes;    // strictly increasing in (0, cutoff)
  std::vector<double> weights;
  double cutoff = 0.0;
};

// Requires nodes >= 8 and cutoff > 5; throws ConfigError otherwise.
MomentumQuadrature build_momentum_quadrature(int nodes = MomentumQuadrature::kDefaultNodes,
                                             double cutoff = MomentumQuadrature::kDefaultCutoff);

// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct AlphaSample {
  int sites = 0;
  double epsilon = 0.0;
  double alpha = 0.0;
};

// Geometry factor at finite lattice and regulator:
//   alpha = 2 sum_k w_k q_k sum_j sqrt(g_j) a dM12(q_k; x_j) M21(q_k; x_j)
// `rescaled_profile` is in units of the sphere distance with the sphere at
// (0, 1). The momentum solves run on up to `workers` threads; the outer sum
// is always accumulated in ascending node order.
AlphaSample alpha_sample(const HeightProfile& rescaled_profile,
                         const ContinuumSchedule& schedule, int sites, double epsilon,
                         const MomentumQuadrature& quadrature, int workers = 1);

// Closed-form planar integrand 2 q dM12 M21 with
//   dM12 = (1/pi) q / s K1(q s),  M21 = (1/2pi) K0(q s),  s = sqrt(1 + x^2).
double analytic_planar_integrand(double q, double x);

// Direct two-dimensional quadrature of the closed-form planar integrand over
// q in (0, inf) and x in (-inf, inf), bypassing the linear solver. Converges
// to 1/(4 pi).
double analytic_planar_alpha(int order = 48);

}  // namespace cpcorr
