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

#include "cpcorr/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cpcorr/error.hpp"

namespace cpcorr::specfun {
namespace {

constexpr double kSeriesLimit = 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct KPair {
  double k0;
  double k1;
};

void check_domain(double z, const char* name) {
  if (!(z > 0.0)) {
    throw DomainError(std::string(name) + ": argument must be positive, got " +
                      std::to_string(z));
  }
}

// Ascending series, z <= 2.
//   K0 = -(ln(z/2) + gamma) I0 + sum_k t^k/(k!)^2 H_k
//   K1 = 1/z + ln(z/2) I1 - (z/4) sum_k t^k/(k!(k+1)!) (H_k + H_{k+1} - 2 gamma)
// with t = z^2/4 and H_k the harmonic numbers.
KPair series(double z) {
  const double t = 0.25 * z * z;
  const double log_half = std::log(0.5 * z);

  double term0 = 1.0;  // t^k/(k!)^2
  double term1 = 1.0;  // t^k/(k!(k+1)!)
  double harmonic = 0.0;
  double i0 = 1.0;
  double s0 = 0.0;
  double i1_sum = 1.0;
  double s1 = 1.0 - 2.0 * kEulerGamma;  // k = 0: H_0 + H_1 - 2 gamma

  for (int k = 1; k < 60; ++k) {
    const double dk = k;
    term0 *= t / (dk * dk);
    term1 *= t / (dk * (dk + 1.0));
    harmonic += 1.0 / dk;
    i0 += term0;
    s0 += term0 * harmonic;
    i1_sum += term1;
    s1 += term1 * (2.0 * harmonic + 1.0 / (dk + 1.0) - 2.0 * kEulerGamma);
    if (term0 < kEps * 1e-3 * i0 && term1 < kEps * 1e-3 * i1_sum) break;
  }

  const double i1 = 0.5 * z * i1_sum;
  return {-(log_half + kEulerGamma) * i0 + s0,
          1.0 / z + log_half * i1 - 0.25 * z * s1};
}

// Trapezoidal rule on the integral representations
//   e^z K0(z) = int_0^inf exp(-z (cosh t - 1)) dt
//   e^z K1(z) = int_0^inf cosh t exp(-z (cosh t - 1)) dt
// after the substitution u = sqrt(2z) sinh(t/2), which turns them into
//   e^z K0(z) = int_0^inf 2 exp(-u^2) / sqrt(2z + u^2) du
//   e^z K1(z) = int_0^inf 2 (1 + u^2/z) exp(-u^2) / sqrt(2z + u^2) du.
// The nearest singularity sits at u = i sqrt(2z), so for z >= 2 the error
// is about exp(-2 pi sqrt(2z) / h) and the Gaussian factor fixes the node
// count.
// Beyond z = 8 the singularity is at least 4 away and the step can double.
struct TrapezoidRule {
  double step;
  int nodes;  // exp(-u^2) < 1e-18 beyond the last node
  std::array<double, 27> weights;
};

TrapezoidRule make_rule(double step, int nodes) {
  TrapezoidRule r{step, nodes, {}};
  for (int k = 0; k < nodes; ++k) {
    const double u = k * step;
    r.weights[k] = (k == 0 ? 1.0 : 2.0) * step * std::exp(-u * u);
  }
  return r;
}

KPair integral_scaled(double z) {
  static const TrapezoidRule fine = make_rule(0.25, 27);
  static const TrapezoidRule coarse = make_rule(0.5, 14);
  const TrapezoidRule& rule = z < 8.0 ? fine : coarse;
  const double two_z = 2.0 * z;
  const double inv_z = 1.0 / z;
  double s0 = 0.0;
  double s1 = 0.0;
  for (int k = 0; k < rule.nodes; ++k) {
    const double u = k * rule.step;
    const double f = rule.weights[k] / std::sqrt(two_z + u * u);
    s0 += f;
    s1 += f * (1.0 + u * u * inv_z);
  }
  return {s0, s1};
}

KPair evaluate_scaled(double z) {
  if (z <= kSeriesLimit) {
    const KPair k = series(z);
    const double e = std::exp(z);
    return {k.k0 * e, k.k1 * e};
  }
  return integral_scaled(z);
}

KPair evaluate(double z) {
  if (z <= kSeriesLimit) return series(z);
  const KPair k = integral_scaled(z);
  const double e = std::exp(-z);  // flushes to +0 past ~745
  return {k.k0 * e, k.k1 * e};
}

}  // namespace

double bessel_k0(double z) {
  check_domain(z, "bessel_k0");
  return evaluate(z).k0;
}

double bessel_k1(double z) {
  check_domain(z, "bessel_k1");
  return evaluate(z).k1;
}

double bessel_k0_scaled(double z) {
  check_domain(z, "bessel_k0_scaled");
  return evaluate_scaled(z).k0;
}

double bessel_k1_scaled(double z) {
  check_domain(z, "bessel_k1_scaled");
  return evaluate_scaled(z).k1;
}

}  // namespace cpcorr::specfun
