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

#include "cpcorr/greens.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

#include "cpcorr/error.hpp"
#include "cpcorr/simd.hpp"

namespace cpcorr {
namespace {

constexpr double kResidualTarget = 1e-12;
constexpr double kResidualLimit = 1e-10;

std::string context(const KernelSystem& s) {
  std::ostringstream msg;
  msg << "(q = " << s.q << ", eps = " << s.epsilon << ", N = " << s.sites << ")";
  return msg.str();
}

// r = b - (M W) v, returns ||r||_inf.
double residual(const KernelSystem& s, std::span<const double> v, std::vector<double>& r) {
  const auto n = static_cast<std::size_t>(s.sites);
  std::vector<double> wv(n);
  simd::multiply(s.weights, v, wv);
  double worst = 0.0;
  r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::span<const double> row(s.matrix.data() + i * n, n);
    r[i] = s.rhs[i] - simd::dot(row, wv);
    worst = std::max(worst, std::abs(r[i]));
  }
  return worst;
}

}  // namespace

LuFactorization::LuFactorization(std::vector<double> a, int n)
    : n_(n), lu_(std::move(a)), pivots_(static_cast<std::size_t>(n)) {
  const auto un = static_cast<std::size_t>(n);
  if (n < 1 || lu_.size() != un * un) {
    throw DomainError("LuFactorization: matrix size mismatch");
  }
  double scale = 0.0;
  for (double v : lu_) {
    if (!std::isfinite(v)) throw NumericalError("LuFactorization: non-finite entry");
    scale = std::max(scale, std::abs(v));
  }
  const double tolerance = kPivotTolerance * scale;

  for (std::size_t k = 0; k < un; ++k) {
    double* col_k = lu_.data() + k * un;
    const std::size_t p = k + simd::iamax({col_k + k, un - k});
    pivots_[k] = static_cast<int>(p);
    if (!(std::abs(col_k[p]) > tolerance)) {
      std::ostringstream msg;
      msg << "pivot " << std::abs(col_k[p]) << " at step " << k
          << " is below the singularity threshold " << tolerance;
      throw ConditioningError(msg.str());
    }
    if (p != k) {
      for (std::size_t j = 0; j < un; ++j) std::swap(lu_[j * un + k], lu_[j * un + p]);
    }
    const double inv = 1.0 / col_k[k];
    const std::size_t tail = un - k - 1;
    for (std::size_t i = k + 1; i < un; ++i) col_k[i] *= inv;
    const std::span<const double> l(col_k + k + 1, tail);
    for (std::size_t j = k + 1; j < un; ++j) {
      double* col_j = lu_.data() + j * un;
      const double u = col_j[k];
      if (u != 0.0) simd::axpy(-u, l, {col_j + k + 1, tail});
    }
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  const auto un = static_cast<std::size_t>(n_);
  if (b.size() != un) throw DomainError("LuFactorization::solve: size mismatch");
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t k = 0; k < un; ++k) {
    std::swap(x[k], x[static_cast<std::size_t>(pivots_[k])]);
  }
  // Column-oriented substitutions keep the inner loop contiguous.
  for (std::size_t k = 0; k < un; ++k) {
    const double xk = x[k];
    if (xk != 0.0) {
      simd::axpy(-xk, {lu_.data() + k * un + k + 1, un - k - 1},
                 {x.data() + k + 1, un - k - 1});
    }
  }
  for (std::size_t k = un; k-- > 0;) {
    x[k] /= lu_[k * un + k];
    const double xk = x[k];
    if (xk != 0.0) simd::axpy(-xk, {lu_.data() + k * un, k}, {x.data(), k});
  }
  return x;
}

GreensSolution solve(const KernelSystem& system) {
  const int n = system.sites;
  const auto un = static_cast<std::size_t>(n);
  if (n < 1 || system.matrix.size() != un * un || system.rhs.size() != un ||
      system.weights.size() != un) {
    throw DomainError("solve: inconsistent kernel system " + context(system));
  }

  // The matrix is symmetric, so row j of M is column j of M; scaling it by
  // w_j gives column j of M W in column-major order.
  std::vector<double> composed(un * un);
  for (std::size_t j = 0; j < un; ++j) {
    const std::span<const double> row(system.matrix.data() + j * un, un);
    std::span<double> col(composed.data() + j * un, un);
    for (std::size_t i = 0; i < un; ++i) col[i] = row[i] * system.weights[j];
  }

  std::optional<LuFactorization> lu;
  try {
    lu.emplace(std::move(composed), n);
  } catch (const ConditioningError& e) {
    throw ConditioningError(std::string(e.what()) + " " + context(system));
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " " + context(system));
  }

  GreensSolution out;
  out.q = system.q;
  out.values = lu->solve(system.rhs);

  double rhs_norm = 0.0;
  for (double b : system.rhs) rhs_norm = std::max(rhs_norm, std::abs(b));
  if (rhs_norm == 0.0) rhs_norm = 1.0;

  std::vector<double> r;
  double res = residual(system, out.values, r) / rhs_norm;
  if (res > kResidualTarget) {
    // One step of iterative refinement.
    const std::vector<double> correction = lu->solve(r);
    for (std::size_t i = 0; i < un; ++i) out.values[i] += correction[i];
    res = residual(system, out.values, r) / rhs_norm;
  }
  if (!(res <= kResidualLimit)) {
    std::ostringstream msg;
    msg << "solve residual " << res << " exceeds " << kResidualLimit << " "
        << context(system);
    throw ConditioningError(msg.str());
  }
  out.residual = res;
  return out;
}

}  // namespace cpcorr
