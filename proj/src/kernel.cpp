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

#include "cpcorr/kernel.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cpcorr/error.hpp"
#include "cpcorr/specfun.hpp"

namespace cpcorr {
namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
constexpr double kContactTolerance = 1e-12;

}  // namespace

RegularizationParams::RegularizationParams(double eps) : epsilon(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ConfigError("regulator epsilon must be positive");
  }
}

double regularized_m11(double z, RegularizationParams reg) {
  if (!(z >= 0.0)) throw DomainError("regularized_m11: argument must be >= 0");
  const double eps = reg.epsilon;
  if (z > eps) return kInvTwoPi * specfun::bessel_k0(z);
  return -kInvTwoPi *
         (std::log(z + eps) - specfun::bessel_k0(eps) - std::log(2.0 * eps));
}

double kernel_argument(const HeightProfile& profile, double x, double x_prime) {
  const double dx = x_prime - x;
  const double dh = profile.height(x_prime) - profile.height(x);
  return std::hypot(dx, dh);
}

double rhs_argument(const HeightProfile& profile, double x_prime) {
  const double r = std::hypot(x_prime, profile.height(x_prime) - 1.0);
  if (!(r > kContactTolerance)) {
    std::ostringstream msg;
    msg << "surface touches the sphere at x = " << x_prime;
    throw GeometryError(msg.str());
  }
  return r;
}

SurfaceGeometry::SurfaceGeometry(const HeightProfile& profile, const Lattice& lattice)
    : sites_(lattice.sites()), spacing_(lattice.spacing()) {
  const auto nodes = lattice.nodes();
  const std::size_t n = nodes.size();
  nodes_.assign(nodes.begin(), nodes.end());

  std::vector<double> heights(n);
  weights_.resize(n);
  sphere_distances_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    heights[i] = profile.height(nodes[i]);
    weights_[i] = profile.metric_factor(nodes[i]) * spacing_;
    sphere_distances_[i] = rhs_argument(profile, nodes[i]);
  }

  distances_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(nodes[j] - nodes[i], heights[j] - heights[i]);
      distances_[i * n + j] = d;
      distances_[j * n + i] = d;
    }
  }
}

KernelSystem assemble(const SurfaceGeometry& geometry, double q, RegularizationParams reg) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("assemble: q must be positive");
  const int n = geometry.sites();
  const auto un = static_cast<std::size_t>(n);
  KernelSystem sys;
  sys.q = q;
  sys.epsilon = reg.epsilon;
  sys.sites = n;
  sys.matrix.resize(un * un);
  sys.rhs.resize(un);
  sys.weights.assign(geometry.weights().begin(), geometry.weights().end());

  const auto dist = geometry.distances();
  const double diagonal = regularized_m11(0.0, reg);
  for (std::size_t i = 0; i < un; ++i) {
    sys.matrix[i * un + i] = diagonal;
    for (std::size_t j = i + 1; j < un; ++j) {
      const double v = regularized_m11(q * dist[i * un + j], reg);
      sys.matrix[i * un + j] = v;
      sys.matrix[j * un + i] = v;
    }
    sys.rhs[i] = kInvTwoPi * specfun::bessel_k0(q * geometry.sphere_distances()[i]);
  }
  return sys;
}

KernelSystem assemble(const HeightProfile& profile, const Lattice& lattice, double q,
                      RegularizationParams reg) {
  return assemble(SurfaceGeometry(profile, lattice), q, reg);
}

namespace {

void put(std::ofstream& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  unsigned char bytes[8];
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<unsigned char>(bits >> (8 * k));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

double get(std::ifstream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
    throw IoError("kernel dump truncated");
  }
  std::uint64_t bits = 0;
  for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(bytes[k]) << (8 * k);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_binary(const KernelSystem& system, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write kernel dump " + path.string());
  put(out, static_cast<double>(system.sites));
  put(out, system.q);
  put(out, system.epsilon);
  for (double v : system.matrix) put(out, v);
  for (double v : system.rhs) put(out, v);
  for (double v : system.weights) put(out, v);
  if (!out) throw IoError("write failed for " + path.string());
}

KernelSystem read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open kernel dump " + path.string());
  KernelSystem sys;
  const double n = get(in);
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e5) {
    throw IoError("kernel dump has an invalid size header");
  }
  sys.sites = static_cast<int>(n);
  sys.q = get(in);
  sys.epsilon = get(in);
  const auto un = static_cast<std::size_t>(sys.sites);
  sys.matrix.resize(un * un);
  sys.rhs.resize(un);
  sys.weights.resize(un);
  for (double& v : sys.matrix) v = get(in);
  for (double& v : sys.rhs) v = get(in);
  for (double& v : sys.weights) v = get(in);
  return sys;
}

}  // namespace cpcorr
