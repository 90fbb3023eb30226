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

#include "cpcorr/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "cpcorr/energy.hpp"
#include "cpcorr/error.hpp"
#include "cpcorr/parallel.hpp"

namespace cpcorr {

using nlohmann::json;

HeightProfile ProfileSpec::build(std::optional<double> phi) const {
  if (kind == "planar") return HeightProfile::planar();
  if (kind == "sine") return HeightProfile::sine(amplitude, omega, phi.value_or(phase));
  if (kind == "sawtooth") {
    const double s = phi ? *phi * wavelength / (2.0 * std::numbers::pi) : shift;
    return HeightProfile::sawtooth(amplitude, wavelength, smoothing, s);
  }
  if (kind == "table") {
    if (phi) throw ConfigError("tabulated profiles have no lateral coordinate");
    return HeightProfile::load_table(table);
  }
  throw ConfigError("unknown profile kind '" + kind + "'");
}

double ProfileSpec::reference_amplitude() const {
  if (kind == "planar") return 1.0;
  if (kind == "table") {
    const HeightProfile p = build();
    const auto& hs = p.as_tabulated()->hs;
    const auto [lo, hi] = std::minmax_element(hs.begin(), hs.end());
    if (!(*hi > *lo)) return 1.0;
    return 0.5 * (*hi - *lo);
  }
  return amplitude;
}

double ProfileSpec::omega_a() const {
  if (kind == "sine") return omega * amplitude;
  if (kind == "sawtooth") return 2.0 * std::numbers::pi * amplitude / wavelength;
  return 0.0;
}

double ProfileSpec::lateral_position() const {
  if (kind == "sine") return phase;
  if (kind == "sawtooth") return 2.0 * std::numbers::pi * shift / wavelength;
  return 0.0;
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::kVertical: return "vertical";
    case SweepMode::kLateral: return "lateral";
    case SweepMode::kSingle: return "single";
  }
  return "?";
}

std::vector<double> log_space(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) {
    throw ConfigError("log range needs 0 < from <= to and count >= 1");
  }
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = count == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  return out;
}

namespace {

std::vector<double> lin_space(double lo, double hi, int count) {
  if (count < 1) throw ConfigError("range count must be >= 1");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
  return out;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

// A list, or {"from", "to", "count"} expanded with `spacing`.
std::vector<double> read_values(const json& v, bool logarithmic, const std::string& where) {
  if (v.is_array()) return v.get<std::vector<double>>();
  check_keys(v, {"from", "to", "count"}, where);
  const double lo = v.at("from").get<double>();
  const double hi = v.at("to").get<double>();
  const int count = v.at("count").get<int>();
  return logarithmic ? log_space(lo, hi, count) : lin_space(lo, hi, count);
}

template <typename T>
void maybe(const json& obj, const char* key, T& target) {
  if (obj.contains(key)) target = obj.at(key).get<T>();
}

SweepMode parse_mode(const std::string& s) {
  if (s == "vertical") return SweepMode::kVertical;
  if (s == "lateral") return SweepMode::kLateral;
  if (s == "single") return SweepMode::kSingle;
  throw ConfigError("unknown sweep mode '" + s + "'");
}

}  // namespace

void RunConfig::validate() const {
  const auto& p = numerics.plan;
  p.validate();
  if (!(numerics.points_per_wavelength > 0.0)) {
    throw ConfigError("points_per_wavelength must be positive");
  }
  if (workers < 0) throw ConfigError("workers must be >= 0");
  static const std::set<std::string> kinds{"planar", "sine", "sawtooth", "table"};
  if (!kinds.contains(profile.kind)) {
    throw ConfigError("unknown profile kind '" + profile.kind + "'");
  }
  if (profile.kind == "table" && profile.table.empty()) {
    throw ConfigError("profile kind 'table' needs a table path");
  }
  profile.build();  // validates shape parameters
  const double amp = profile.reference_amplitude();

  switch (sweep.mode) {
    case SweepMode::kVertical:
    case SweepMode::kSingle:
      if (sweep.h_over_a.empty()) throw ConfigError("sweep list h_over_a is empty");
      if (sweep.mode == SweepMode::kSingle && sweep.h_over_a.size() != 1) {
        throw ConfigError("single-point mode takes exactly one h_over_a value");
      }
      for (double x : sweep.h_over_a) {
        if (!(x > 0.0) || !std::isfinite(x)) {
          throw GeometryError("H/A must be positive, got " + std::to_string(x));
        }
      }
      break;
    case SweepMode::kLateral:
      if (sweep.phi.empty()) throw ConfigError("sweep list phi is empty");
      if (profile.kind != "sine" && profile.kind != "sawtooth") {
        throw ConfigError("lateral sweeps need a sine or sawtooth profile");
      }
      for (double phi : sweep.phi) {
        rescaled_geometry({profile.build(phi), sweep.hbar_over_a * amp});
      }
      break;
  }
}

int RunConfig::resolved_workers() const { return workers > 0 ? workers : default_workers(); }

RunConfig config_from_json(const json& doc, RunConfig c) {
  try {
    check_keys(doc, {"profile", "sweep", "numerics", "output", "workers"}, "config");
    if (doc.contains("profile")) {
      const json& p = doc.at("profile");
      check_keys(p, {"kind", "amplitude", "omega", "phase", "wavelength", "smoothing", "shift",
                     "table"},
                 "profile");
      maybe(p, "kind", c.profile.kind);
      maybe(p, "amplitude", c.profile.amplitude);
      maybe(p, "omega", c.profile.omega);
      maybe(p, "phase", c.profile.phase);
      maybe(p, "wavelength", c.profile.wavelength);
      maybe(p, "shift", c.profile.shift);
      maybe(p, "table", c.profile.table);
      if (p.contains("smoothing")) {
        if (p.at("smoothing").is_null()) {
          c.profile.smoothing.reset();
        } else {
          c.profile.smoothing = p.at("smoothing").get<double>();
        }
      }
    }
    if (doc.contains("sweep")) {
      const json& s = doc.at("sweep");
      check_keys(s, {"mode", "h_over_a", "phi", "hbar_over_a"}, "sweep");
      if (s.contains("mode")) c.sweep.mode = parse_mode(s.at("mode").get<std::string>());
      if (s.contains("h_over_a")) c.sweep.h_over_a = read_values(s.at("h_over_a"), true, "h_over_a");
      if (s.contains("phi")) c.sweep.phi = read_values(s.at("phi"), false, "phi");
      maybe(s, "hbar_over_a", c.sweep.hbar_over_a);
    }
    if (doc.contains("numerics")) {
      const json& n = doc.at("numerics");
      check_keys(n, {"sites", "epsilons", "momentum_nodes", "momentum_cutoff",
                     "reference_spacing", "reference_sites", "adaptive",
                     "points_per_wavelength", "verify"},
                 "numerics");
      auto& plan = c.numerics.plan;
      maybe(n, "sites", plan.extrapolation.sites);
      maybe(n, "epsilons", plan.extrapolation.epsilons);
      maybe(n, "momentum_nodes", plan.momentum_nodes);
      maybe(n, "momentum_cutoff", plan.momentum_cutoff);
      double a0 = plan.schedule.reference_spacing();
      int n0 = plan.schedule.reference_sites();
      maybe(n, "reference_spacing", a0);
      maybe(n, "reference_sites", n0);
      plan.schedule = ContinuumSchedule(a0, n0);
      maybe(n, "adaptive", c.numerics.adaptive);
      maybe(n, "points_per_wavelength", c.numerics.points_per_wavelength);
      maybe(n, "verify", c.numerics.verify);
    }
    if (doc.contains("output")) {
      const json& o = doc.at("output");
      check_keys(o, {"csv", "fit_json", "plot_script"}, "output");
      maybe(o, "csv", c.output.csv);
      maybe(o, "fit_json", c.output.fit_json);
      maybe(o, "plot_script", c.output.plot_script);
    }
    maybe(doc, "workers", c.workers);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return c;
}

json to_json(const RunConfig& c) {
  json profile = {{"kind", c.profile.kind},           {"amplitude", c.profile.amplitude},
                  {"omega", c.profile.omega},         {"phase", c.profile.phase},
                  {"wavelength", c.profile.wavelength}, {"shift", c.profile.shift},
                  {"table", c.profile.table}};
  profile["smoothing"] = c.profile.smoothing ? json(*c.profile.smoothing) : json(nullptr);
  const auto& plan = c.numerics.plan;
  return {
      {"profile", profile},
      {"sweep",
       {{"mode", to_string(c.sweep.mode)},
        {"h_over_a", c.sweep.h_over_a},
        {"phi", c.sweep.phi},
        {"hbar_over_a", c.sweep.hbar_over_a}}},
      {"numerics",
       {{"sites", plan.extrapolation.sites},
        {"epsilons", plan.extrapolation.epsilons},
        {"momentum_nodes", plan.momentum_nodes},
        {"momentum_cutoff", plan.momentum_cutoff},
        {"reference_spacing", plan.schedule.reference_spacing()},
        {"reference_sites", plan.schedule.reference_sites()},
        {"adaptive", c.numerics.adaptive},
        {"points_per_wavelength", c.numerics.points_per_wavelength},
        {"verify", c.numerics.verify}}},
      {"output",
       {{"csv", c.output.csv},
        {"fit_json", c.output.fit_json},
        {"plot_script", c.output.plot_script}}},
      {"workers", c.workers},
  };
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::exception& e) {
    throw ConfigError("cannot parse " + path.string() + ": " + e.what());
  }
  return config_from_json(doc, std::move(base));
}

}  // namespace cpcorr
