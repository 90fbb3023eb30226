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
#include <sstream>

#include "doctest.h"

#include "cpcorr/error.hpp"
#include "cpcorr/extrapolate.hpp"

using namespace cpcorr;

TEST_CASE("continuum step recovers an exact 1/N law") {
  const double a_inf = 0.0795, c = 0.37;
  const AlphaSample s1{80, 0.02, a_inf + c / 80};
  const AlphaSample s2{100, 0.02, a_inf + c / 100};
  CHECK(extrapolate_continuum(s1, s2) == doctest::Approx(a_inf).epsilon(1e-14));
  CHECK(extrapolate_continuum(s2, s1) == doctest::Approx(a_inf).epsilon(1e-14));
  // Worked example: (0.0125, 0.07) and (0.01, 0.072) meet 1/N = 0 at 0.08.
  CHECK(extrapolate_continuum({80, 0.02, 0.07}, {100, 0.02, 0.072}) == doctest::Approx(0.08));
  CHECK_THROWS_AS(extrapolate_continuum(s1, s1), DegenerateInputError);
  CHECK_THROWS_AS(extrapolate_continuum(s1, {100, 0.025, 0.08}), DomainError);
}

TEST_CASE("regulator step recovers an exact linear law") {
  const auto line = extrapolate_regulator({0.02, 0.08}, {0.025, 0.0805});
  CHECK(line.alpha0 == doctest::Approx(0.078));
  CHECK(line.alpha1 == doctest::Approx(0.1));
  CHECK_THROWS_AS(extrapolate_regulator({0.02, 0.08}, {0.02, 0.09}), DegenerateInputError);
}

TEST_CASE("least-squares variants reduce to the two-point formulas") {
  const std::vector<AlphaSample> two{{80, 0.02, 0.081}, {100, 0.02, 0.0805}};
  CHECK(extrapolate_continuum_lsq(two) ==
        doctest::Approx(extrapolate_continuum(two[0], two[1])).epsilon(1e-13));
  std::vector<EpsilonIntercept> pts;
  for (double e : {0.01, 0.02, 0.03, 0.04}) pts.push_back({e, 0.079 + 0.05 * e});
  const auto line = extrapolate_regulator_lsq(pts);
  CHECK(line.alpha0 == doctest::Approx(0.079).epsilon(1e-13));
  CHECK(line.alpha1 == doctest::Approx(0.05).epsilon(1e-12));
  CHECK_THROWS_AS(extrapolate_continuum_lsq(std::vector<AlphaSample>{two[0]}), DegenerateInputError);
}

TEST_CASE("composition of both stages is exact for a bilinear law") {
  // alpha(N, eps) = a0 + b eps + c / N
  const double a0 = 0.0796, b = 0.11, c = 0.5;
  NumericalPlan plan;
  std::array<AlphaSample, 4> s{};
  for (int e = 0; e < 2; ++e) {
    for (int k = 0; k < 2; ++k) {
      const int n = plan.extrapolation.sites[k];
      const double eps = plan.extrapolation.epsilons[e];
      s[2 * e + k] = {n, eps, a0 + b * eps + c / n};
    }
  }
  const auto est = compose_estimate(plan, s);
  CHECK(est.alpha0 == doctest::Approx(a0).epsilon(1e-13));
  CHECK(est.alpha1 == doctest::Approx(b).epsilon(1e-10));
  CHECK(est.intercepts[1].alpha == doctest::Approx(a0 + b * 0.025).epsilon(1e-13));
}

TEST_CASE("plan validation") {
  CHECK_NOTHROW(NumericalPlan{}.validate());
  NumericalPlan p;
  p.extrapolation.sites = {80, 80};
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p.extrapolation.sites = {60, 100};
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p.extrapolation.sites = {80, 100};
  p.extrapolation.epsilons = {0.02, -0.01};
  CHECK_THROWS_AS(p.validate(), ConfigError);
  CHECK(ExtrapolationPlan::verification().sites == std::array<int, 2>{180, 200});
}

TEST_CASE("resolution guard and adaptive site pair") {
  const ContinuumSchedule sched;
  const auto coarse = HeightProfile::sine(0.1, 1.0);
  CHECK_FALSE(resolution_warning(coarse, sched, 80).has_value());
  CHECK(resolve_corrugation({}, coarse, sched) == ExtrapolationPlan{});
  CHECK(resolve_corrugation({}, HeightProfile::planar(), sched) == ExtrapolationPlan{});

  const auto fine = HeightProfile::sine(0.1, 30.0);  // wavelength 0.209
  CHECK(resolution_warning(fine, sched, 80).has_value());
  const auto plan = resolve_corrugation({}, fine, sched);
  CHECK(plan.sites[0] % 2 == 0);
  CHECK(plan.sites[1] % 2 == 0);
  CHECK(sched.spacing(plan.sites[0]) <= 2 * std::numbers::pi / 30.0 / 8.0 * (1 + 1e-12));
  CHECK(static_cast<double>(plan.sites[1]) / plan.sites[0] == doctest::Approx(1.25).epsilon(0.01));
  CHECK_FALSE(resolution_warning(fine, sched, plan.sites[0]).has_value());
  CHECK(plan.epsilons == ExtrapolationPlan{}.epsilons);
}

TEST_CASE("linearity scan table") {
  std::vector<double> eps{0.02, 0.01, 0.03};
  const auto scan = linearity_scan(HeightProfile::planar(), {}, {80, 100}, eps,
                                   build_momentum_quadrature(16, 30.0));
  REQUIRE(scan.rows.size() == 3);
  CHECK(scan.rows[0].epsilon == 0.01);
  CHECK(scan.rows[2].epsilon == 0.03);
  std::ostringstream out;
  write_linearity_csv(scan, out);
  CHECK(out.str().rfind("epsilon,alpha_intercept\n", 0) == 0);
}
