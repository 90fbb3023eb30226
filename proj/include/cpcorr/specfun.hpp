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

namespace cpcorr::specfun {

// Modified Bessel functions of the second kind for real z > 0.
//
// Ascending series for z <= 2, trapezoidal quadrature of the integral
// representation above.
// Relative accuracy is ~1e-15 over [1e-8, 700]; beyond exponential
// underflow the unscaled functions return +0.0. Both throw DomainError
// for z <= 0 or NaN.
double bessel_k0(double z);
double bessel_k1(double z);

// Exponentially scaled variants e^z K_n(z); never underflow.
double bessel_k0_scaled(double z);
double bessel_k1_scaled(double z);

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace cpcorr::specfun
