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

#include <span>
#include <vector>

#include "cpcorr/kernel.hpp"

namespace cpcorr {

// Dense LU factorisation with partial pivoting, column-major storage.
class LuFactorization {
 public:
  // Relative pivot threshold: a pivot below this fraction of the largest
  // input entry raises ConditioningError.
  static constexpr double kPivotTolerance = 1e-14;

  // `column_major` holds n*n entries; column j occupies [j*n, (j+1)*n).
  LuFactorization(std::vector<double> column_major, int n);

  int size() const { return n_; }
  // Solves A x = b.
  std::vector<double> solve(std::span<const double> b) const;

 private:
  int n_;
  std::vector<double> lu_;
  std::vector<int> pivots_;
};

struct GreensSolution {
  double q = 0.0;
  std::vector<double> values;
  // ||(M W) values - rhs||_inf / ||rhs||_inf
  double residual = 0.0;
};

// Solves sum_j M(i,j) w(j) v(j) = rhs(i) for v. Throws ConditioningError
// (with q, eps and N in the message) when the system is numerically singular.
GreensSolution solve(const KernelSystem& system);

}  // namespace cpcorr
