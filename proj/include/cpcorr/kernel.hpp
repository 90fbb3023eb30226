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
#include <span>
#include <vector>

#include "cpcorr/lattice.hpp"
#include "cpcorr/profile.hpp"

namespace cpcorr {

// Short-distance cutoff of the surface propagator. Compared against the
// combined argument z = q * distance.
struct RegularizationParams {
  explicit RegularizationParams(double epsilon);
  double epsilon;
};

// Surface-to-surface propagator (1/2pi) K0(z) with its logarithmic
// singularity smoothed for z <= eps:
//   z >  eps : (1/2pi) K0(z)
//   z <= eps : -(1/2pi) (ln(z + eps) - K0(eps) - ln(2 eps))
// Continuous at z = eps and finite at z = 0.
double regularized_m11(double z, RegularizationParams reg);

// Geometric distance between two surface points of a rescaled profile.
double kernel_argument(const HeightProfile& profile, double x, double x_prime);

// Distance from the surface point above x' to the sphere at (0, 1). Throws
// GeometryError if the surface passes through the sphere position.
double rhs_argument(const HeightProfile& profile, double x_prime);

// q-independent part of a discretised surface: pairwise distances, distances
// to the sphere and the integration weights sqrt(g) * a.
class SurfaceGeometry {
 public:
  SurfaceGeometry(const HeightProfile& rescaled_profile, const Lattice& lattice);

  int sites() const { return sites_; }
  double spacing() const { return spacing_; }
  std::span<const double> nodes() const { return nodes_; }
  // Row-major, symmetric, zero diagonal.
  std::span<const double> distances() const { return distances_; }
  std::span<const double> sphere_distances() const { return sphere_distances_; }
  std::span<const double> weights() const { return weights_; }

 private:
  int sites_;
  double spacing_;
  std::vector<double> nodes_;
  std::vector<double> distances_;
  std::vector<double> sphere_distances_;
  std::vector<double> weights_;
};

// Discretised Green's-function equation at one momentum node:
//   sum_j matrix(i, j) weights(j) values(j) = rhs(i)
struct KernelSystem {
  double q = 0.0;
  double epsilon = 0.0;
  int sites = 0;
  std::vector<double> matrix;   // row-major sites x sites
  std::vector<double> rhs;
  std::vector<double> weights;

  double entry(int i, int j) const {
    return matrix[static_cast<std::size_t>(i) * sites + j];
  }
};

KernelSystem assemble(const SurfaceGeometry& geometry, double q, RegularizationParams reg);
KernelSystem assemble(const HeightProfile& rescaled_profile, const Lattice& lattice,
                      double q, RegularizationParams reg);

// Debug dump: little-endian float64 stream of [N, q, eps], the row-major
// matrix, rhs and weights.
void write_binary(const KernelSystem& system, const std::filesystem::path& path);
KernelSystem read_binary(const std::filesystem::path& path);

}  // namespace cpcorr
