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

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cpcorr {

struct CurvePoint {
  double h_over_a = 0.0;
  double ratio = 0.0;
};

// (H/A, ratio) pairs with strictly increasing H/A and positive ratios.
struct SweepCurve {
  std::vector<CurvePoint> points;
  nlohmann::json metadata = nlohmann::json::object();

  // Throws FitError if the invariants do not hold.
  void validate() const;
};

struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

enum class FitKind { kAnomalousDimension, kLinearSlope };

std::string to_string(FitKind kind);

struct FitResult {
  FitKind kind = FitKind::kAnomalousDimension;
  double value = 0.0;  // eta or beta
  FitWindow window;    // requested window
  double residual_rms = 0.0;
  int point_count = 0;
};

// eta = -d ln(ratio) / d ln(H/A) by least squares over points in the window.
// Throws FitError with fewer than 3 points in the window.
FitResult fit_eta(const SweepCurve& curve, FitWindow window);

// beta from ratio - 1 = beta H/A, least squares through the origin. The
// window must lie within H/A <= 0.3.
FitResult fit_beta(const SweepCurve& curve, FitWindow window);

enum class ExtremumKind { kMaximum, kMinimum };

struct Extremum {
  double h_over_a = 0.0;
  double ratio = 0.0;
};

// Interior discrete maximum or minimum of the ratio; nullopt when the
// extreme value sits at an end of the curve or the curve is flat. Throws
// FitError if the curve spans less than a decade.
std::optional<Extremum> detect_extremum(const SweepCurve& curve, ExtremumKind kind);

// Default windows anchored on a well peak (or crest dip).
struct DefaultWindows {
  static FitWindow toward_extremum(double extremum) { return {0.1, 0.5 * extremum}; }
  // Reaches at least to H/A = 5 but spans a factor 2.5 or more.
  static FitWindow beyond_extremum(double extremum);
  static FitWindow universal() { return {8.0, 15.0}; }
  static FitWindow small_distance() { return {0.05, 0.25}; }
};

nlohmann::json to_json(const FitResult& fit, const nlohmann::json& metadata = {});

// Curve from a sweep CSV; rows carrying an error are dropped. Throws IoError.
SweepCurve load_curve(const std::filesystem::path& csv);

}  // namespace cpcorr
