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

#include "cpcorr/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cpcorr/error.hpp"

namespace cpcorr {
namespace {

struct HermiteEnd {
  double y;
  double m;
};

// Cubic Hermite on [0, width] evaluated at local coordinate s.
double hermite(HermiteEnd a, HermiteEnd b, double width, double s) {
  const double t = s / width;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * a.y + (t3 - 2 * t2 + t) * width * a.m +
         (-2 * t3 + 3 * t2) * b.y + (t3 - t2) * width * b.m;
}

double hermite_slope(HermiteEnd a, HermiteEnd b, double width, double s) {
  const double t = s / width;
  const double t2 = t * t;
  return ((6 * t2 - 6 * t) * a.y + (-6 * t2 + 6 * t) * b.y) / width +
         (3 * t2 - 4 * t + 1) * a.m + (3 * t2 - 2 * t) * b.m;
}

// Returns {height, slope} of the smoothed sawtooth.
std::pair<double, double> sawtooth_eval(const SawtoothShape& s, double x) {
  const double lambda = s.wavelength;
  const double amp = s.amplitude;
  const double peak = SawtoothShape::kPeakFraction * lambda;
  const double rise = amp / peak;
  const double fall = -amp / (lambda - peak);
  const double d = s.smoothing;

  double u = std::fmod(x - s.shift, lambda);
  if (u < 0) u += lambda;

  auto blend = [&](HermiteEnd a, HermiteEnd b, double local) {
    return std::pair{hermite(a, b, d, local), hermite_slope(a, b, d, local)};
  };

  if (u < d) return blend({0.0, 0.0}, {rise * d, rise}, u);
  if (u <= peak - d) return {rise * u, rise};
  if (u <= peak) return blend({amp - rise * d, rise}, {amp, 0.0}, u - (peak - d));
  if (u < peak + d) return blend({amp, 0.0}, {amp + fall * d, fall}, u - peak);
  if (u <= lambda - d) return {amp + fall * (u - peak), fall};
  return blend({-fall * d, fall}, {0.0, 0.0}, u - (lambda - d));
}

std::vector<double> monotone_slopes(const std::vector<double>& xs,
                                    const std::vector<double>& hs) {
  const std::size_t n = xs.size();
  std::vector<double> width(n - 1), secant(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    width[k] = xs[k + 1] - xs[k];
    secant[k] = (hs[k + 1] - hs[k]) / width[k];
  }
  std::vector<double> d(n, 0.0);
  if (n == 2) {
    d[0] = d[1] = secant[0];
    return d;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (secant[k - 1] * secant[k] <= 0.0) continue;
    const double w1 = 2 * width[k] + width[k - 1];
    const double w2 = width[k] + 2 * width[k - 1];
    d[k] = (w1 + w2) / (w1 / secant[k - 1] + w2 / secant[k]);
  }
  // Shape-preserving three-point end conditions.
  auto end_slope = [](double h0, double h1, double m0, double m1) {
    double e = ((2 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (e * m0 <= 0.0) return 0.0;
    if (m0 * m1 <= 0.0 && std::abs(e) > 3 * std::abs(m0)) return 3 * m0;
    return e;
  };
  d[0] = end_slope(width[0], width[1], secant[0], secant[1]);
  d[n - 1] = end_slope(width[n - 2], width[n - 3], secant[n - 2], secant[n - 3]);
  return d;
}

std::size_t table_interval(const TabulatedShape& t, double x) {
  if (!(x >= t.xs.front() && x <= t.xs.back())) {
    std::ostringstream msg;
    msg << "tabulated profile queried at x = " << x << " outside ["
        << t.xs.front() << ", " << t.xs.back() << "]";
    throw DomainError(msg.str());
  }
  auto it = std::upper_bound(t.xs.begin(), t.xs.end(), x);
  std::size_t k = static_cast<std::size_t>(it - t.xs.begin());
  return k == 0 ? 0 : std::min(k - 1, t.xs.size() - 2);
}

}  // namespace

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kPlanar: return "planar";
    case ProfileKind::kSine: return "sine";
    case ProfileKind::kSawtooth: return "sawtooth";
    case ProfileKind::kTabulated: return "tabulated";
  }
  return "unknown";
}

HeightProfile HeightProfile::planar() { return HeightProfile(PlanarShape{}); }

HeightProfile HeightProfile::sine(double amplitude, double omega, double phase) {
  if (!std::isfinite(amplitude) || !(omega > 0.0) || !std::isfinite(phase)) {
    throw ConfigError("sine profile needs finite amplitude/phase and omega > 0");
  }
  return HeightProfile(SineShape{amplitude, omega, phase});
}

HeightProfile HeightProfile::sawtooth(double amplitude, double wavelength,
                                      std::optional<double> smoothing, double shift) {
  if (!(amplitude > 0.0) || !(wavelength > 0.0) || !std::isfinite(shift)) {
    throw ConfigError("sawtooth profile needs amplitude > 0 and wavelength > 0");
  }
  const double d = smoothing.value_or(0.05 * wavelength);
  // Both blends around the short falling flank must fit inside it.
  const double limit = 0.5 * (1.0 - SawtoothShape::kPeakFraction) * wavelength;
  if (!(d > 0.0) || d > limit * (1.0 + 1e-12)) {
    throw ConfigError("sawtooth smoothing must lie in (0, 0.1 wavelength]");
  }
  return HeightProfile(SawtoothShape{amplitude, wavelength, d, shift});
}

HeightProfile HeightProfile::tabulated(std::vector<double> xs, std::vector<double> hs) {
  if (xs.size() != hs.size() || xs.size() < 2) {
    throw ConfigError("tabulated profile needs >= 2 (x, h) pairs");
  }
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!std::isfinite(xs[k]) || !std::isfinite(hs[k])) {
      throw ConfigError("tabulated profile contains non-finite values");
    }
    if (k > 0 && !(xs[k] > xs[k - 1])) {
      throw ConfigError("tabulated profile x values must be strictly increasing");
    }
  }
  TabulatedShape t{std::move(xs), std::move(hs), {}};
  t.slopes = monotone_slopes(t.xs, t.hs);
  return HeightProfile(std::move(t));
}

HeightProfile HeightProfile::load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile table " + path.string());
  std::vector<double> xs, hs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double x = 0, h = 0;
    if (!(fields >> x)) continue;  // blank line
    if (!(fields >> h)) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": expected two columns");
    }
    xs.push_back(x);
    hs.push_back(h);
  }
  return tabulated(std::move(xs), std::move(hs));
}

ProfileKind HeightProfile::kind() const {
  return static_cast<ProfileKind>(shape_.index());
}

double HeightProfile::height(double x) const {
  const double h = std::visit(
      [x](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlanarShape>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, SineShape>) {
          return s.amplitude * std::sin(s.omega * x + s.phase);
        } else if constexpr (std::is_same_v<T, SawtoothShape>) {
          return sawtooth_eval(s, x).first;
        } else {
          const std::size_t k = table_interval(s, x);
          const double w = s.xs[k + 1] - s.xs[k];
          return hermite({s.hs[k], s.slopes[k]}, {s.hs[k + 1], s.slopes[k + 1]}, w,
                         x - s.xs[k]);
        }
      },
      shape_);
  return h + offset_;
}

double HeightProfile::slope(double x) const {
  return std::visit(
      [x](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlanarShape>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, SineShape>) {
          return s.amplitude * s.omega * std::cos(s.omega * x + s.phase);
        } else if constexpr (std::is_same_v<T, SawtoothShape>) {
          return sawtooth_eval(s, x).second;
        } else {
          const std::size_t k = table_interval(s, x);
          const double w = s.xs[k + 1] - s.xs[k];
          return hermite_slope({s.hs[k], s.slopes[k]}, {s.hs[k + 1], s.slopes[k + 1]},
                               w, x - s.xs[k]);
        }
      },
      shape_);
}

double HeightProfile::metric_factor(double x) const {
  const double s = slope(x);
  return std::sqrt(1.0 + s * s);
}

HeightProfile HeightProfile::with_offset(double offset) const {
  HeightProfile p = *this;
  p.offset_ = offset;
  return p;
}

std::optional<double> HeightProfile::dominant_wavelength() const {
  if (const auto* s = as_sine()) return 2.0 * std::numbers::pi / s->omega;
  if (const auto* s = as_sawtooth()) {
    // The short falling flank is the finest feature.
    return s->wavelength;
  }
  return std::nullopt;
}

HeightProfile rescale(const HeightProfile& profile, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("rescale: scale must be positive and finite");
  }
  const double inv = 1.0 / scale;
  HeightProfile out = std::visit(
      [&](const auto& s) -> HeightProfile {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlanarShape>) {
          return HeightProfile(PlanarShape{});
        } else if constexpr (std::is_same_v<T, SineShape>) {
          return HeightProfile(SineShape{s.amplitude * inv, s.omega * scale, s.phase});
        } else if constexpr (std::is_same_v<T, SawtoothShape>) {
          return HeightProfile(SawtoothShape{s.amplitude * inv, s.wavelength * inv,
                                             s.smoothing * inv, s.shift * inv});
        } else {
          // Slopes are invariant under uniform scaling.
          TabulatedShape t = s;
          for (double& x : t.xs) x *= inv;
          for (double& h : t.hs) h *= inv;
          return HeightProfile(std::move(t));
        }
      },
      profile.shape_);
  out.offset_ = profile.offset_ * inv;
  return out;
}

}  // namespace cpcorr
