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
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "cpcorr/error.hpp"
#include "cpcorr/fit.hpp"

using namespace cpcorr;

namespace {

SweepCurve curve_of(double (*f)(double), double lo = 0.1, double hi = 15.0, int n = 30) {
  SweepCurve c;
  for (int i = 0; i < n; ++i) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    c.points.push_back({x, f(x)});
  }
  return c;
}

}  // namespace

TEST_CASE("exact power law") {
  const auto c = curve_of([](double x) { return 2.0 * std::pow(x, -0.2); });
  const auto r = fit_eta(c, {0.5, 12.0});
  CHECK(r.kind == FitKind::kAnomalousDimension);
  CHECK(r.value == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(r.residual_rms < 1e-12);
  CHECK(r.point_count >= 3);
  // Shrinking the window leaves the exponent unchanged.
  CHECK(fit_eta(c, {1.0, 3.0}).value == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("constant ratio and scale covariance") {
  const auto flat = curve_of([](double) { return 1.0; });
  CHECK(std::abs(fit_eta(flat, {0.1, 15.0}).value) < 1e-14);
  auto c = curve_of([](double x) { return 1.0 + 0.3 / (1.0 + x * x); });
  const double eta = fit_eta(c, {1.0, 10.0}).value;
  for (auto& p : c.points) p.ratio *= 3.7;
  CHECK(fit_eta(c, {1.0, 10.0}).value == doctest::Approx(eta).epsilon(1e-12));
}

TEST_CASE("small-distance slope") {
  const auto c = curve_of([](double x) { return 1.0 + 0.5 * x; }, 0.01, 1.0, 25);
  const auto r = fit_beta(c, {0.05, 0.25});
  CHECK(r.kind == FitKind::kLinearSlope);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(fit_beta(c, {0.05, 0.5}), FitError);
}

TEST_CASE("too few points") {
  const auto c = curve_of([](double) { return 1.0; }, 0.1, 15.0, 5);
  CHECK_THROWS_AS(fit_eta(c, {2.0, 3.0}), FitError);
}

TEST_CASE("curve invariants") {
  SweepCurve c;
  c.points = {{1.0, 1.0}, {0.5, 1.0}, {2.0, 1.0}};
  CHECK_THROWS_AS(fit_eta(c, {0.1, 3.0}), FitError);
  c.points = {{0.5, 1.0}, {1.0, -1.0}, {2.0, 1.0}};
  CHECK_THROWS_AS(fit_eta(c, {0.1, 3.0}), FitError);
}

TEST_CASE("extremum detection") {
  const auto peaked = curve_of([](double x) { return 1.0 + x / (1.0 + x * x); }, 0.01, 100.0, 41);
  const auto peak = detect_extremum(peaked, ExtremumKind::kMaximum);
  REQUIRE(peak.has_value());
  CHECK(peak->h_over_a == doctest::Approx(1.0));
  const auto dip = curve_of([](double x) { return 1.0 - x / (1.0 + x * x); }, 0.01, 100.0, 41);
  CHECK(detect_extremum(dip, ExtremumKind::kMinimum)->h_over_a == doctest::Approx(1.0));
  CHECK_FALSE(detect_extremum(dip, ExtremumKind::kMaximum).has_value());
  const auto flat = curve_of([](double) { return 1.0; });
  CHECK_FALSE(detect_extremum(flat, ExtremumKind::kMaximum).has_value());
  const auto narrow = curve_of([](double) { return 1.0; }, 1.0, 5.0, 10);
  CHECK_THROWS_AS(detect_extremum(narrow, ExtremumKind::kMaximum), FitError);
}

TEST_CASE("default windows") {
  const auto w = DefaultWindows::beyond_extremum(1.0);
  CHECK(w.lo == doctest::Approx(1.2));
  CHECK(w.hi == doctest::Approx(5.0));
  CHECK(DefaultWindows::beyond_extremum(3.0).hi == doctest::Approx(9.0));
  CHECK(DefaultWindows::toward_extremum(2.0).hi == doctest::Approx(1.0));
  CHECK(DefaultWindows::universal().lo == 8.0);
}

TEST_CASE("fit summary JSON") {
  const auto c = curve_of([](double x) { return std::pow(x, -0.4); });
  const auto j = to_json(fit_eta(c, {1.0, 5.0}), {{"profile", "sine"}});
  CHECK(j["kind"] == "anomalous_dimension");
  CHECK(j["value"].get<double>() == doctest::Approx(0.4));
  CHECK(j["window"][1] == 5.0);
  CHECK(j["n_points"].get<int>() >= 3);
  CHECK(j["metadata"]["profile"] == "sine");
}

TEST_CASE("curve from a sweep CSV drops error rows") {
  const auto path = std::filesystem::temp_directory_path() / "cpcorr_fit_curve.csv";
  {
    std::ofstream f(path);
    f << "profile,omega_A,phi,H_over_A,Hbar_over_A,alpha0_corr,alpha0_planar,ratio,spread,"
         "seconds,error\n"
      << "sine,1,-1.57,2,1,0.09,0.08,1.125,0,0.1,\n"
      << "sine,1,-1.57,1,0,0.1,0.08,1.25,0,0.1,\n"
      << "sine,1,-1.57,3,2,nan,nan,nan,nan,0.1,singular\n";
  }
  const auto c = load_curve(path);
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].h_over_a == 1.0);
  CHECK(c.points[1].ratio == 1.125);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_curve(path), IoError);
}
