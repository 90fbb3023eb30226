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

// cpcorr: Casimir-Polder potential of a point sphere above a corrugated
// Dirichlet surface.
//
// Exit codes: 0 success, 1 threshold failure, 2 configuration or input
// error, 3 numerical failure.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpcorr/config.hpp"
#include "cpcorr/energy.hpp"
#include "cpcorr/error.hpp"
#include "cpcorr/extrapolate.hpp"
#include "cpcorr/fit.hpp"
#include "cpcorr/plot.hpp"
#include "cpcorr/simd.hpp"
#include "cpcorr/sweep.hpp"

namespace {

using cpcorr::RunConfig;
using nlohmann::json;

constexpr int kExitThreshold = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Flags shared by the computing subcommands. Unset flags leave the config
// file (or the defaults) alone.
struct CommonFlags {
  std::string config_path;
  bool print_config = false;
  std::optional<std::string> profile;
  std::optional<double> amplitude, omega, phase, wavelength, smoothing, shift;
  std::optional<std::string> table;
  std::vector<int> sites;
  std::vector<double> epsilons;
  std::optional<int> q_nodes;
  std::optional<double> q_max, a0;
  std::optional<int> n0;
  bool fixed_sites = false;
  bool verify = false;
  std::optional<int> workers;
  std::optional<std::string> out;

  void attach(CLI::App* app) {
    app->add_option("-c,--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app->add_flag("--print-config", print_config, "Echo the resolved configuration and exit");
    auto* g = app->add_option_group("profile");
    g->add_option("--profile", profile, "planar | sine | sawtooth | table");
    g->add_option("--amplitude", amplitude, "Corrugation amplitude A");
    g->add_option("--omega", omega, "Sine angular wavenumber");
    g->add_option("--phase", phase, "Sine phase (radians)");
    g->add_option("--wavelength", wavelength, "Sawtooth period");
    g->add_option("--smoothing", smoothing, "Sawtooth corner half-width");
    g->add_option("--shift", shift, "Sawtooth translation");
    g->add_option("--table", table, "Two-column profile file");
    auto* n = app->add_option_group("numerics");
    n->add_option("--sites", sites, "Lattice site pair N1 N2")->expected(2);
    n->add_option("--eps", epsilons, "Regulator pair")->expected(2);
    n->add_option("--q-nodes", q_nodes, "Momentum quadrature nodes");
    n->add_option("--q-max", q_max, "Momentum cutoff");
    n->add_option("--a0", a0, "Reference lattice spacing");
    n->add_option("--n0", n0, "Reference site count");
    n->add_flag("--fixed-sites", fixed_sites, "Do not grow the site pair for fine corrugations");
    n->add_flag("--verify", verify, "Also run the finer site pair and report the spread");
    app->add_option("-j,--workers", workers, "Worker threads (0: automatic)");
    app->add_option("-o,--out", out, "Output file");
  }

  RunConfig resolve() const {
    RunConfig c = config_path.empty() ? RunConfig{} : cpcorr::load_config(config_path);
    if (profile) c.profile.kind = *profile;
    if (amplitude) c.profile.amplitude = *amplitude;
    if (omega) c.profile.omega = *omega;
    if (phase) c.profile.phase = *phase;
    if (wavelength) c.profile.wavelength = *wavelength;
    if (smoothing) c.profile.smoothing = *smoothing;
    if (shift) c.profile.shift = *shift;
    if (table) c.profile.table = *table;
    auto& plan = c.numerics.plan;
    if (!sites.empty()) plan.extrapolation.sites = {sites[0], sites[1]};
    if (!epsilons.empty()) plan.extrapolation.epsilons = {epsilons[0], epsilons[1]};
    if (q_nodes) plan.momentum_nodes = *q_nodes;
    if (q_max) plan.momentum_cutoff = *q_max;
    if (a0 || n0) {
      plan.schedule = cpcorr::ContinuumSchedule(a0.value_or(plan.schedule.reference_spacing()),
                                                n0.value_or(plan.schedule.reference_sites()));
    }
    if (fixed_sites) c.numerics.adaptive = false;
    if (verify) c.numerics.verify = true;
    if (workers) c.workers = *workers;
    if (out) c.output.csv = *out;
    return c;
  }
};

// Writes to the named file, or stdout when the name is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw cpcorr::IoError("cannot write " + path);
  f << text;
}

json estimate_json(const cpcorr::AlphaEstimate& e) {
  json samples = json::array();
  for (const auto& s : e.samples) {
    samples.push_back({{"sites", s.sites}, {"epsilon", s.epsilon}, {"alpha", s.alpha}});
  }
  json intercepts = json::array();
  for (const auto& i : e.intercepts) {
    intercepts.push_back({{"epsilon", i.epsilon}, {"alpha", i.alpha}});
  }
  return {{"sites", e.plan.extrapolation.sites},
          {"samples", samples},
          {"intercepts", intercepts},
          {"alpha0", e.alpha0},
          {"alpha1", e.alpha1}};
}

int run_planar_check(const CommonFlags& flags, bool skip_fine) {
  RunConfig c = flags.resolve();
  c.profile.kind = "planar";
  if (flags.print_config) {
    std::cout << cpcorr::to_json(c).dump(2) << '\n';
    return 0;
  }
  c.numerics.plan.validate();
  const double exact = 1.0 / (4.0 * std::numbers::pi);
  std::vector<cpcorr::NumericalPlan> plans{c.numerics.plan};
  if (!skip_fine) {
    cpcorr::NumericalPlan fine = c.numerics.plan;
    fine.extrapolation.sites = cpcorr::ExtrapolationPlan::verification().sites;
    plans.push_back(fine);
  }
  bool pass = true;
  std::cout << std::setprecision(7);
  for (const auto& plan : plans) {
    const auto est =
        cpcorr::estimate_alpha(cpcorr::HeightProfile::planar(), plan, c.resolved_workers());
    const double dev = (est.alpha0 - exact) / exact;
    const bool ok = std::abs(dev) < 0.01;
    pass = pass && ok;
    std::cout << "N = {" << plan.extrapolation.sites[0] << ", " << plan.extrapolation.sites[1]
              << "}  eps = {" << plan.extrapolation.epsilons[0] << ", "
              << plan.extrapolation.epsilons[1] << "}  alpha0 = " << est.alpha0
              << "  deviation = " << std::showpos << 100.0 * dev << std::noshowpos << "%  "
              << (ok ? "PASS" : "FAIL") << '\n';
  }
  std::cout << "analytic 1/(4 pi) = " << exact << '\n';
  return pass ? 0 : kExitThreshold;
}

int run_alpha(const CommonFlags& flags, double h_over_a, std::optional<double> hbar_over_a,
              double radius) {
  RunConfig c = flags.resolve();
  c.sweep.mode = cpcorr::SweepMode::kSingle;
  c.sweep.h_over_a = {h_over_a};
  if (flags.print_config) {
    std::cout << cpcorr::to_json(c).dump(2) << '\n';
    return 0;
  }
  c.validate();
  const cpcorr::HeightProfile profile = c.profile.build();
  const double amp = c.profile.reference_amplitude();
  const cpcorr::GeometryConfig geometry =
      hbar_over_a ? cpcorr::GeometryConfig{profile, *hbar_over_a * amp}
                  : cpcorr::GeometryConfig::at_distance(profile, h_over_a * amp);
  cpcorr::PlanarBaselines baselines;
  const auto res = cpcorr::evaluate_point(geometry, c.numerics, baselines, c.resolved_workers());
  const auto energy =
      cpcorr::casimir_polder_energy(res.corrugated.alpha0, geometry.distance(), radius);
  json out = {{"profile", c.profile.kind},
              {"H_over_A", geometry.distance() / amp},
              {"Hbar_over_A", geometry.mean_height / amp},
              {"corrugated", estimate_json(res.corrugated)},
              {"planar", estimate_json(res.planar)},
              {"ratio", res.ratio},
              {"spread", res.spread},
              {"energy",
               {{"scaled", energy.scaled_energy},
                {"units", "hbar c r / H^2"},
                {"r_over_H", radius / geometry.distance()}}}};
  if (energy.warning) out["energy"]["warning"] = *energy.warning;
  emit(flags.out.value_or(""), out.dump(2) + "\n");
  return 0;
}

int run_sweep_command(RunConfig c, bool print_config) {
  if (print_config) {
    std::cout << cpcorr::to_json(c).dump(2) << '\n';
    return 0;
  }
  c.validate();
  std::ofstream csv(c.output.csv);
  if (!csv) throw cpcorr::IoError("cannot write " + c.output.csv);
  const auto summary = cpcorr::run_sweep(c, csv, &std::cerr);
  std::cerr << summary.records.size() << " points written to " << c.output.csv;
  if (summary.failures > 0) std::cerr << ", " << summary.failures << " failed";
  std::cerr << '\n';
  return summary.failures > 0 ? kExitNumerical : 0;
}

std::vector<double> range_or_list(const std::vector<double>& range, const std::vector<double>& list,
                                  bool logarithmic) {
  if (!list.empty()) return list;
  if (range.empty()) return {};
  const int count = static_cast<int>(range[2]);
  if (logarithmic) return cpcorr::log_space(range[0], range[1], count);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = count == 1 ? range[0] : range[0] + (range[1] - range[0]) * i / (count - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder potential above a uniaxially corrugated Dirichlet surface"};
  app.require_subcommand(1);
  std::string simd;
  app.add_option("--simd", simd, "Force scalar | avx2 | neon kernels");

  // planar-check
  CommonFlags planar_flags;
  bool skip_fine = false;
  auto* planar = app.add_subcommand("planar-check", "Full pipeline on a plane against 1/(4 pi)");
  planar_flags.attach(planar);
  planar->add_flag("--coarse-only", skip_fine, "Skip the {180, 200} verification pair");

  // alpha
  CommonFlags alpha_flags;
  double alpha_h = 1.0;
  std::optional<double> alpha_hbar;
  double radius = 1e-3;
  auto* alpha = app.add_subcommand("alpha", "Geometry factor and ratio at one sphere position");
  alpha_flags.attach(alpha);
  alpha->add_option("--h-over-a", alpha_h, "Distance H/A along the normal");
  alpha->add_option("--hbar-over-a", alpha_hbar, "Mean height H-bar/A (overrides --h-over-a)");
  alpha->add_option("--radius", radius, "Sphere radius r, only used for the r/H check");

  // sweep (vertical)
  CommonFlags sweep_flags;
  std::vector<double> h_range, h_list;
  auto* sweep = app.add_subcommand("sweep", "Vertical sweep over H/A");
  sweep_flags.attach(sweep);
  sweep->add_option("--h-range", h_range, "Log-spaced H/A: FROM TO COUNT")->expected(3);
  sweep->add_option("--h-list", h_list, "Explicit H/A values");

  // lateral
  CommonFlags lateral_flags;
  std::vector<double> phi_range, phi_list;
  std::optional<double> lateral_hbar;
  auto* lateral = app.add_subcommand("lateral", "Lateral sweep over phi at fixed H-bar/A");
  lateral_flags.attach(lateral);
  lateral->add_option("--phi-range", phi_range, "Linear phi: FROM TO COUNT")->expected(3);
  lateral->add_option("--phi-list", phi_list, "Explicit phi values");
  lateral->add_option("--hbar-over-a", lateral_hbar, "Mean height H-bar/A");

  // fit
  std::string fit_csv, fit_out, fit_kind = "eta";
  std::vector<double> window;
  std::string anchor;
  bool crest = false;
  auto* fit = app.add_subcommand("fit", "Fit eta or beta on a sweep CSV");
  fit->add_option("csv", fit_csv, "Sweep CSV")->required();
  fit->add_option("--kind", fit_kind, "eta | beta")->check(CLI::IsMember({"eta", "beta"}));
  fit->add_option("--window", window, "H/A window LO HI")->expected(2);
  fit->add_option("--anchor", anchor, "Default window: toward | beyond | universal | small")
      ->check(CLI::IsMember({"toward", "beyond", "universal", "small"}));
  fit->add_flag("--crest", crest, "Anchor on a dip instead of a peak");
  fit->add_option("-o,--out", fit_out, "Fit-summary JSON file");

  // linearity-scan
  CommonFlags scan_flags;
  std::vector<double> scan_eps{0.003, 0.0045, 0.01, 0.015, 0.02, 0.025, 0.03, 0.035, 0.04};
  double scan_h = 1.0;
  auto* scan = app.add_subcommand("linearity-scan", "Continuum intercepts over a list of eps");
  scan_flags.attach(scan);
  scan->add_option("--eps-list", scan_eps, "Regulator values");
  scan->add_option("--h-over-a", scan_h, "Distance H/A for corrugated profiles");

  // plot
  std::string plot_csv, plot_out, plot_kind = "auto", plot_tool = "gnuplot", image = "figure.png";
  auto* plot = app.add_subcommand("plot", "Emit a plotting script for a sweep CSV");
  plot->add_option("csv", plot_csv, "Sweep CSV")->required();
  plot->add_option("--kind", plot_kind, "auto | vertical | lateral")
      ->check(CLI::IsMember({"auto", "vertical", "lateral"}));
  plot->add_option("--tool", plot_tool, "gnuplot | matplotlib")
      ->check(CLI::IsMember({"gnuplot", "matplotlib"}));
  plot->add_option("--image", image, "Image file written by the script");
  plot->add_option("-o,--out", plot_out, "Script file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (!simd.empty()) {
      const cpcorr::simd::Isa isa = simd == "scalar" ? cpcorr::simd::Isa::kScalar
                              : simd == "avx2" ? cpcorr::simd::Isa::kAvx2
                              : simd == "neon" ? cpcorr::simd::Isa::kNeon
                                               : throw cpcorr::ConfigError("unknown ISA " + simd);
      cpcorr::simd::set_active_isa(isa);
    }

    if (*planar) return run_planar_check(planar_flags, skip_fine);
    if (*alpha) return run_alpha(alpha_flags, alpha_h, alpha_hbar, radius);

    if (*sweep) {
      RunConfig c = sweep_flags.resolve();
      c.sweep.mode = cpcorr::SweepMode::kVertical;
      const auto values = range_or_list(h_range, h_list, true);
      if (!values.empty()) c.sweep.h_over_a = values;
      return run_sweep_command(c, sweep_flags.print_config);
    }

    if (*lateral) {
      RunConfig c = lateral_flags.resolve();
      c.sweep.mode = cpcorr::SweepMode::kLateral;
      const auto values = range_or_list(phi_range, phi_list, false);
      if (!values.empty()) c.sweep.phi = values;
      if (lateral_hbar) c.sweep.hbar_over_a = *lateral_hbar;
      return run_sweep_command(c, lateral_flags.print_config);
    }

    if (*fit) {
      const cpcorr::SweepCurve curve = cpcorr::load_curve(fit_csv);
      cpcorr::FitWindow w;
      json meta = curve.metadata;
      if (!window.empty()) {
        w = {window[0], window[1]};
      } else if (anchor == "universal") {
        w = cpcorr::DefaultWindows::universal();
      } else if (anchor == "small" || (anchor.empty() && fit_kind == "beta")) {
        w = cpcorr::DefaultWindows::small_distance();
      } else {
        const auto ext = cpcorr::detect_extremum(
            curve, crest ? cpcorr::ExtremumKind::kMinimum : cpcorr::ExtremumKind::kMaximum);
        if (!ext) throw cpcorr::FitError("curve has no interior extremum to anchor the window");
        meta["extremum"] = {{"H_over_A", ext->h_over_a}, {"ratio", ext->ratio}};
        w = anchor == "toward" ? cpcorr::DefaultWindows::toward_extremum(ext->h_over_a)
                               : cpcorr::DefaultWindows::beyond_extremum(ext->h_over_a);
      }
      const auto result = fit_kind == "beta" ? cpcorr::fit_beta(curve, w) : cpcorr::fit_eta(curve, w);
      emit(fit_out, cpcorr::to_json(result, meta).dump(2) + "\n");
      return 0;
    }

    if (*scan) {
      RunConfig c = scan_flags.resolve();
      if (scan_flags.print_config) {
        std::cout << cpcorr::to_json(c).dump(2) << '\n';
        return 0;
      }
      const auto& plan = c.numerics.plan;
      const double amp = c.profile.reference_amplitude();
      const auto rescaled = cpcorr::rescaled_geometry(
          cpcorr::GeometryConfig::at_distance(c.profile.build(), scan_h * amp));
      const auto scanned = cpcorr::linearity_scan(rescaled, plan.schedule, plan.extrapolation.sites,
                                                  scan_eps, plan.quadrature(), c.resolved_workers());
      std::ostringstream text;
      cpcorr::write_linearity_csv(scanned, text);
      emit(scan_flags.out.value_or(""), text.str());
      if (scanned.nonlinear) std::cerr << "warning: " << scanned.message << '\n';
      return 0;
    }

    if (*plot) {
      const auto records = cpcorr::read_sweep_csv(plot_csv);
      const cpcorr::FigureKind kind = plot_kind == "vertical" ? cpcorr::FigureKind::kVertical
                                      : plot_kind == "lateral"
                                          ? cpcorr::FigureKind::kLateral
                                          : cpcorr::infer_figure_kind(records);
      const cpcorr::PlotTool tool =
          plot_tool == "gnuplot" ? cpcorr::PlotTool::kGnuplot : cpcorr::PlotTool::kMatplotlib;
      emit(plot_out, cpcorr::plot_script(records, kind, tool, image));
      return 0;
    }
  } catch (const cpcorr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cpcorr::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cpcorr::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cpcorr::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cpcorr::FitError& e) {
    std::cerr << "fit error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cpcorr::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
