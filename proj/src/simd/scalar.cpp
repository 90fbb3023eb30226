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

// Portable reference kernels. The vector variants are tested against these.

#include <cmath>

#include "cpcorr/simd.hpp"

namespace cpcorr::simd::detail {
namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot3(const double* x, const double* y, const double* z, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i] * z[i];
  return s;
}

void multiply(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

std::size_t iamax(const double* x, std::size_t n) {
  std::size_t best = 0;
  double best_abs = n ? std::abs(x[0]) : 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = std::abs(x[i]);
    if (v > best_abs) {
      best_abs = v;
      best = i;
    }
  }
  return best;
}

constexpr KernelTable kTable{axpy, dot, dot3, multiply, iamax};

}  // namespace

const KernelTable& scalar_kernels() { return kTable; }

}  // namespace cpcorr::simd::detail
