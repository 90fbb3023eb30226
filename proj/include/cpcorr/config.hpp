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
#include <vector>

#include "json.hpp"

#include "cpcorr/extrapolate.hpp"
#include "cpcorr/profile.hpp"

namespace cpcorr {

// Profile kind plus parameters, in units where the amplitude is A.
struct ProfileSpec {
  std::string kind = "sine";  // planar | sine | sawtooth | table
  double amplitude = 1.0;
  double omega = 1.0;        // sine
  double phase = -1.5707963267948966;  // sine; -pi/2 puts a well under the sphere
  double wavelength = 2.8;   // sawtooth
  std::optional<double> smoothing;     // sawtooth corner half-width
  double shift = 0.0;        // sawtooth
  std::string table;         // table: path to a two-column file

  // Profile at lateral position phi (sine phase, or sawtooth shift
  // phi * wavelength / 2pi); nullopt keeps the configured position.
  HeightProfile build(std::optional<double> phi = std::nullopt) const;

  // Length unit of H/A: the amplitude, or half the peak-to-peak height of a
  // table, or 1 for a plane.
  double reference_amplitude() const;
  // omega A for sines, 2 pi A / lambda for sawtooth, 0 otherwise.
  double omega_a() const;
  // The configured lateral coordinate in radians.
  double lateral_position() const;
};

enum class SweepMode { kVertical, kLateral, kSingle };

std::string to_string(SweepMode mode);

struct SweepSpec {
  SweepMode mode = SweepMode::kVertical;
  std::vector<double> h_over_a;  // vertical and single
  std::vector<double> phi;       // lateral
  double hbar_over_a = 4.0;      // lateral
};

struct PlanSpec {
  NumericalPlan plan;
  // Grow the site pair until the corrugation is resolved.
  bool adaptive = true;
  double points_per_wavelength = kMinPointsPerWavelength;
  // Also run the {180, 200} pair and report the spread.
  bool verify = false;
};

struct OutputSpec {
  std::string csv = "sweep.csv";
  std::string fit_json;
  std::string plot_script;
};

struct RunConfig {
  ProfileSpec profile;
  SweepSpec sweep;
  PlanSpec numerics;
  OutputSpec output;
  int workers = 0;  // 0: CPCORR_THREADS or hardware concurrency

  // Throws ConfigError or GeometryError.
  void validate() const;
  int resolved_workers() const;
};

// Log-spaced values from lo to hi inclusive.
std::vector<double> log_space(double lo, double hi, int count);

// Missing keys keep their defaults. Unknown keys raise ConfigError.
RunConfig config_from_json(const nlohmann::json& doc, RunConfig base = {});
nlohmann::json to_json(const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

}  // namespace cpcorr
