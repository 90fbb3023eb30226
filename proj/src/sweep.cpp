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

#include "cpcorr/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "cpcorr/error.hpp"
#include "cpcorr/parallel.hpp"

namespace cpcorr {

namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, const std::string& where) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw IoError("malformed number '" + s + "' in " + where);
  }
  return v;
}

ExtrapolationPlan scaled_sites(const ExtrapolationPlan& plan, double factor) {
  ExtrapolationPlan out = plan;
  for (int& n : out.sites) n = 2 * static_cast<int>(std::ceil(0.5 * n * factor));
  return out;
}

// The finer pair, grown by the same factor as the primary pair.
NumericalPlan verification_plan(const PlanSpec& spec, const NumericalPlan& primary) {
  NumericalPlan v = primary;
  const double factor = static_cast<double>(primary.extrapolation.sites[0]) /
                        spec.plan.extrapolation.sites[0];
  v.extrapolation = scaled_sites(ExtrapolationPlan::verification(), std::max(factor, 1.0));
  v.extrapolation.epsilons = primary.extrapolation.epsilons;
  return v;
}

}  // namespace

void write_record(std::ostream& out, const SweepRecord& r) {
  std::ostringstream line;
  line << std::setprecision(std::numeric_limits<double>::max_digits10);
  line << r.profile << ',' << r.omega_a << ',' << r.phi << ',' << r.h_over_a << ','
       << r.hbar_over_a << ',' << r.alpha0_corr << ',' << r.alpha0_planar << ',' << r.ratio
       << ',' << r.spread << ',' << std::setprecision(4) << std::fixed << r.seconds << ','
       << sanitize(r.error) << '\n';
  out << line.str();
}

std::vector<SweepRecord> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sweep CSV " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw IoError(path.string() + " is empty");
  const std::string base_header(kSweepCsvHeader, std::string_view(kSweepCsvHeader).rfind(','));
  if (line != kSweepCsvHeader && line != base_header) {
    throw IoError(path.string() + " does not start with the sweep CSV header");
  }
  std::vector<SweepRecord> out;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line);
    const std::string where = path.string() + " row " + std::to_string(row);
    if (cells.size() != 10 && cells.size() != 11) {
      throw IoError("wrong number of columns in " + where);
    }
    SweepRecord r;
    r.profile = cells[0];
    r.omega_a = parse_number(cells[1], where);
    r.phi = parse_number(cells[2], where);
    r.h_over_a = parse_number(cells[3], where);
    r.hbar_over_a = parse_number(cells[4], where);
    r.alpha0_corr = parse_number(cells[5], where);
    r.alpha0_planar = parse_number(cells[6], where);
    r.ratio = parse_number(cells[7], where);
    r.spread = parse_number(cells[8], where);
    r.seconds = parse_number(cells[9], where);
    if (cells.size() == 11) r.error = cells[10];
    out.push_back(std::move(r));
  }
  return out;
}

NumericalPlan plan_for(const PlanSpec& spec, const HeightProfile& rescaled) {
  NumericalPlan plan = spec.plan;
  if (spec.adaptive) {
    plan.extrapolation = resolve_corrugation(plan.extrapolation, rescaled, plan.schedule,
                                             spec.points_per_wavelength);
  }
  return plan;
}

const AlphaEstimate& PlanarBaselines::get(const NumericalPlan& plan, int workers) {
  {
    std::lock_guard lock(mutex_);
    for (const auto& [p, est] : cache_) {
      if (p == plan) return est;
    }
  }
  AlphaEstimate est = estimate_alpha(HeightProfile::planar(), plan, workers);
  std::lock_guard lock(mutex_);
  for (const auto& [p, e] : cache_) {
    if (p == plan) return e;
  }
  cache_.emplace_back(plan, std::move(est));
  return cache_.back().second;
}

PointResult evaluate_point(const GeometryConfig& geometry, const PlanSpec& spec,
                           PlanarBaselines& baselines, int workers) {
  const HeightProfile rescaled = rescaled_geometry(geometry);
  const NumericalPlan plan = plan_for(spec, rescaled);
  PointResult out;
  out.corrugated = estimate_alpha(rescaled, plan, workers);
  out.planar = baselines.get(plan, workers);
  out.ratio = normalized_ratio(out.corrugated, out.planar);
  if (spec.verify) {
    const NumericalPlan vplan = verification_plan(spec, plan);
    const AlphaEstimate vc = estimate_alpha(rescaled, vplan, workers);
    const AlphaEstimate& vp = baselines.get(vplan, workers);
    out.corrugated.spread = std::abs(out.corrugated.alpha0 - vc.alpha0);
    out.spread = std::abs(out.ratio - normalized_ratio(vc, vp));
  }
  return out;
}

std::vector<GeometryConfig> sweep_geometries(const RunConfig& config) {
  const double amp = config.profile.reference_amplitude();
  std::vector<GeometryConfig> out;
  if (config.sweep.mode == SweepMode::kLateral) {
    for (double phi : config.sweep.phi) {
      out.push_back({config.profile.build(phi), config.sweep.hbar_over_a * amp});
    }
  } else {
    const HeightProfile profile = config.profile.build();
    for (double x : config.sweep.h_over_a) {
      out.push_back(GeometryConfig::at_distance(profile, x * amp));
    }
  }
  return out;
}

SweepSummary run_sweep(const RunConfig& config, std::ostream& csv, std::ostream* log) {
  config.validate();
  const int workers = config.resolved_workers();
  const std::vector<GeometryConfig> points = sweep_geometries(config);
  const double amp = config.profile.reference_amplitude();
  const std::size_t n = points.size();

  SweepSummary summary;
  summary.records.resize(n);
  std::vector<double> phis(n, config.profile.lateral_position());
  if (config.sweep.mode == SweepMode::kLateral) phis = config.sweep.phi;

  // Planar baselines first, one per distinct plan.
  PlanarBaselines baselines;
  std::vector<NumericalPlan> distinct;
  for (const auto& g : points) {
    try {
      const NumericalPlan p = plan_for(config.numerics, rescaled_geometry(g));
      std::vector<NumericalPlan> needed{p};
      if (config.numerics.verify) needed.push_back(verification_plan(config.numerics, p));
      for (const auto& q : needed) {
        if (std::find(distinct.begin(), distinct.end(), q) == distinct.end()) {
          distinct.push_back(q);
        }
      }
    } catch (const Error&) {
      // reported when the point itself is evaluated
    }
  }
  const int baseline_inner = std::max(1, workers / static_cast<int>(std::max<std::size_t>(distinct.size(), 1)));
  parallel_for(distinct.size(), workers,
               [&](std::size_t i) { baselines.get(distinct[i], baseline_inner); });

  csv << kSweepCsvHeader << '\n';
  std::mutex write_mutex;
  std::vector<bool> done(n, false);
  std::size_t next_to_write = 0;
  const int inner = std::max(1, workers / static_cast<int>(std::max<std::size_t>(n, 1)));

  parallel_for(n, workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    SweepRecord r;
    r.profile = config.profile.kind;
    r.omega_a = config.profile.omega_a();
    r.phi = phis[i];
    r.h_over_a = points[i].distance() / amp;
    r.hbar_over_a = points[i].mean_height / amp;
    try {
      const PointResult res = evaluate_point(points[i], config.numerics, baselines, inner);
      r.alpha0_corr = res.corrugated.alpha0;
      r.alpha0_planar = res.planar.alpha0;
      r.ratio = res.ratio;
      r.spread = res.spread;
    } catch (const Error& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      r.alpha0_corr = r.alpha0_planar = r.ratio = r.spread = nan;
      r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::lock_guard lock(write_mutex);
    summary.records[i] = std::move(r);
    done[i] = true;
    while (next_to_write < n && done[next_to_write]) {
      const SweepRecord& w = summary.records[next_to_write];
      write_record(csv, w);
      csv.flush();
      if (log) {
        *log << "[" << next_to_write + 1 << "/" << n << "] H/A=" << w.h_over_a
             << " phi=" << w.phi;
        if (w.error.empty()) {
          *log << " ratio=" << w.ratio;
        } else {
          *log << " error: " << w.error;
        }
        *log << " (" << w.seconds << " s)\n";
      }
      ++next_to_write;
    }
  });
  for (const auto& r : summary.records) {
    if (!r.error.empty()) ++summary.failures;
  }
  return summary;
}

}  // namespace cpcorr
