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
#include <cmath>
#include <numbers>

#include "doctest.h"

#include "cpcorr/alpha.hpp"
#include "cpcorr/error.hpp"

using namespace cpcorr;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(10, x, w);
  for (int k = 0; k < 20; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], k);
    const double exact = k % 2 == 0 ? 2.0 / (k + 1) : 0.0;
    CHECK(sum == doctest::Approx(exact).epsilon(1e-14));
  }
  for (std::size_t i = 1; i < x.size(); ++i) CHECK(x[i] > x[i - 1]);
}

TEST_CASE("momentum rule") {
  const auto m = build_momentum_quadrature();
  CHECK(m.nodes.size() == 64);
  CHECK(m.cutoff == 30.0);
  CHECK(m.nodes.front() > 0.0);
  CHECK(m.nodes.back() < 30.0);
  double sum = 0.0;
  for (double w : m.weights) sum += w;
  CHECK(sum == doctest::Approx(30.0));
  CHECK_THROWS_AS(build_momentum_quadrature(4, 30.0), ConfigError);
  CHECK_THROWS_AS(build_momentum_quadrature(64, 2.0), ConfigError);
}

TEST_CASE("closed-form planar integrand integrates to 1/(4 pi)") {
  CHECK(analytic_planar_alpha() == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-6));
}

TEST_CASE("planar sample is close to 1/(4 pi) already at finite N") {
  const auto s = alpha_sample(HeightProfile::planar(), {}, 100, 0.02, build_momentum_quadrature());
  CHECK(s.sites == 100);
  CHECK(s.epsilon == 0.02);
  CHECK(s.alpha == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(0.1));
}

TEST_CASE("sample is independent of the worker count") {
  const auto p = HeightProfile::sine(0.3, 2.0, -0.5);
  const auto quad = build_momentum_quadrature(16, 30.0);
  const auto a = alpha_sample(p, {}, 80, 0.02, quad, 1);
  const auto b = alpha_sample(p, {}, 80, 0.02, quad, 3);
  CHECK(a.alpha == b.alpha);
}
