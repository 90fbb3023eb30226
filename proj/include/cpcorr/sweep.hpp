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
#include <iosfwd>
#include <list>
#include <mutex>
#include <string>
#include <vector>

#include "cpcorr/config.hpp"
#include "cpcorr/energy.hpp"
#include "cpcorr/extrapolate.hpp"

namespace cpcorr {

// One CSV row. An empty error means the point succeeded.
struct SweepRecord {
  std::string profile;
  double omega_a = 0.0;
  double phi = 0.0;
  double h_over_a = 0.0;
  double hbar_over_a = 0.0;
  double alpha0_corr = 0.0;
  double alpha0_planar = 0.0;
  double ratio = 0.0;
  double spread = 0.0;
  double seconds = 0.0;
  std::string error;
};

inline constexpr const char* kSweepCsvHeader =
    "profile,omega_A,phi,H_over_A,Hbar_over_A,alpha0_corr,alpha0_planar,ratio,spread,seconds,"
    "error";

void write_record(std::ostream& out, const SweepRecord& record);
// Throws IoError for a missing file, a wrong header or malformed rows.
std::vector<SweepRecord> read_sweep_csv(const std::filesystem::path& path);

// Numerical plan for one rescaled profile: the configured plan, with the
// site pair grown to resolve the corrugation when `adaptive` is set.
NumericalPlan plan_for(const PlanSpec& spec, const HeightProfile& rescaled_profile);

// Planar estimates keyed by numerical plan, computed once and shared.
class PlanarBaselines {
 public:
  const AlphaEstimate& get(const NumericalPlan& plan, int workers = 1);

 private:
  std::mutex mutex_;
  std::list<std::pair<NumericalPlan, AlphaEstimate>> cache_;
};

struct PointResult {
  AlphaEstimate corrugated;
  AlphaEstimate planar;
  double ratio = 0.0;
  double spread = 0.0;  // |ratio - ratio of the verification plan|, 0 unless verified
};

PointResult evaluate_point(const GeometryConfig& geometry, const PlanSpec& spec,
                           PlanarBaselines& baselines, int workers = 1);

// Geometry of each sweep point, in sweep order.
std::vector<GeometryConfig> sweep_geometries(const RunConfig& config);

struct SweepSummary {
  std::vector<SweepRecord> records;
  int failures = 0;
};

// Validates the config, then evaluates every point on a worker pool. Rows are
// written to `csv` (header first) in sweep order as soon as all earlier rows
// are done. Per-point failures become rows with an error message. Progress
// lines go to `log` when given.
SweepSummary run_sweep(const RunConfig& config, std::ostream& csv, std::ostream* log = nullptr);

}  // namespace cpcorr
