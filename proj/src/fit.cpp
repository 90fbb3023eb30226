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

#include "cpcorr/fit.hpp"

#include <algorithm>
#include <cmath>

#include "cpcorr/error.hpp"
#include "cpcorr/sweep.hpp"

namespace cpcorr {

void SweepCurve::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].ratio > 0.0)) throw FitError("curve ratios must be positive");
    if (!(points[i].h_over_a > 0.0)) throw FitError("curve abscissae must be positive");
    if (i > 0 && !(points[i].h_over_a > points[i - 1].h_over_a)) {
      throw FitError("curve abscissae must be strictly increasing");
    }
  }
}

std::string to_string(FitKind kind) {
  return kind == FitKind::kAnomalousDimension ? "anomalous_dimension" : "linear_slope";
}

namespace {

std::vector<CurvePoint> in_window(const SweepCurve& curve, FitWindow w) {
  curve.validate();
  if (!(w.hi > w.lo)) throw FitError("fit window must have hi > lo");
  std::vector<CurvePoint> out;
  for (const auto& p : curve.points) {
    if (p.h_over_a >= w.lo && p.h_over_a <= w.hi) out.push_back(p);
  }
  if (out.size() < 3) {
    throw FitError("fit window [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) +
                   "] holds " + std::to_string(out.size()) + " points, need 3");
  }
  return out;
}

}  // namespace

FitResult fit_eta(const SweepCurve& curve, FitWindow window) {
  const auto pts = in_window(curve, window);
  const double n = static_cast<double>(pts.size());
  double mx = 0, my = 0;
  for (const auto& p : pts) {
    mx += std::log(p.h_over_a);
    my += std::log(p.ratio);
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    const double dx = std::log(p.h_over_a) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(p.ratio) - my);
  }
  const double slope = sxy / sxx;
  double ss = 0;
  for (const auto& p : pts) {
    const double r = std::log(p.ratio) - (my + slope * (std::log(p.h_over_a) - mx));
    ss += r * r;
  }
  return {FitKind::kAnomalousDimension, -slope, window, std::sqrt(ss / n),
          static_cast<int>(pts.size())};
}

FitResult fit_beta(const SweepCurve& curve, FitWindow window) {
  if (window.hi > 0.3) throw FitError("small-distance window must lie within H/A <= 0.3");
  const auto pts = in_window(curve, window);
  double sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    sxx += p.h_over_a * p.h_over_a;
    sxy += p.h_over_a * (p.ratio - 1.0);
  }
  const double beta = sxy / sxx;
  double ss = 0;
  for (const auto& p : pts) {
    const double r = p.ratio - 1.0 - beta * p.h_over_a;
    ss += r * r;
  }
  return {FitKind::kLinearSlope, beta, window, std::sqrt(ss / static_cast<double>(pts.size())),
          static_cast<int>(pts.size())};
}

std::optional<Extremum> detect_extremum(const SweepCurve& curve, ExtremumKind kind) {
  curve.validate();
  if (curve.points.size() < 3 ||
      curve.points.back().h_over_a < 10.0 * curve.points.front().h_over_a) {
    throw FitError("extremum search needs a curve spanning at least one decade");
  }
  const auto& pts = curve.points;
  const auto cmp = [&](const CurvePoint& a, const CurvePoint& b) {
    return kind == ExtremumKind::kMaximum ? a.ratio < b.ratio : a.ratio > b.ratio;
  };
  const auto it = std::max_element(pts.begin(), pts.end(), cmp);
  const auto [lo, hi] = std::minmax_element(
      pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.ratio < b.ratio; });
  if (hi->ratio - lo->ratio <= 1e-12 * hi->ratio) return std::nullopt;
  if (it == pts.begin() || it == pts.end() - 1) return std::nullopt;
  return Extremum{it->h_over_a, it->ratio};
}

FitWindow DefaultWindows::beyond_extremum(double extremum) {
  return {1.2 * extremum, std::max(5.0, 3.0 * extremum)};
}

nlohmann::json to_json(const FitResult& fit, const nlohmann::json& metadata) {
  return {{"kind", to_string(fit.kind)},
          {"value", fit.value},
          {"window", {fit.window.lo, fit.window.hi}},
          {"residual_rms", fit.residual_rms},
          {"n_points", fit.point_count},
          {"metadata", metadata.is_null() ? nlohmann::json::object() : metadata}};
}

SweepCurve load_curve(const std::filesystem::path& csv) {
  const auto records = read_sweep_csv(csv);
  SweepCurve curve;
  for (const auto& r : records) {
    if (!r.error.empty()) continue;
    curve.points.push_back({r.h_over_a, r.ratio});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const auto& a, const auto& b) { return a.h_over_a < b.h_over_a; });
  if (!records.empty()) {
    curve.metadata = {{"source", csv.string()},
                      {"profile", records.front().profile},
                      {"omega_A", records.front().omega_a},
                      {"phi", records.front().phi}};
  }
  return curve;
}

}  // namespace cpcorr
