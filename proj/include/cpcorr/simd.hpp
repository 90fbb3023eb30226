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

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops of the solver. Every kernel has a portable scalar
// reference implementation plus vectorised variants; the variant is chosen
// once at runtime from the CPU's capabilities and can be pinned for testing.
namespace cpcorr::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

struct KernelTable {
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // sum x_i y_i
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum x_i y_i z_i
  double (*dot3)(const double* x, const double* y, const double* z, std::size_t n);
  // out_i = x_i * y_i
  void (*multiply)(const double* x, const double* y, double* out, std::size_t n);
  // index of the first element of maximal magnitude (0 for n == 0)
  std::size_t (*iamax)(const double* x, std::size_t n);
};

bool isa_supported(Isa isa);
// Table for a specific ISA; throws ConfigError if unsupported on this CPU.
const KernelTable& kernels(Isa isa);

// The ISA used by the free functions below. Defaults to the best supported
// variant; CPCORR_SIMD=scalar|avx2|neon in the environment overrides it.
Isa active_isa();
void set_active_isa(Isa isa);

// Restores the previously active ISA on destruction.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

const KernelTable& active();

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline double dot3(std::span<const double> x, std::span<const double> y,
                   std::span<const double> z) {
  return active().dot3(x.data(), y.data(), z.data(), x.size());
}
inline void multiply(std::span<const double> x, std::span<const double> y,
                     std::span<double> out) {
  active().multiply(x.data(), y.data(), out.data(), x.size());
}
inline std::size_t iamax(std::span<const double> x) {
  return active().iamax(x.data(), x.size());
}

namespace detail {
const KernelTable& scalar_kernels();
const KernelTable* avx2_kernels();  // nullptr when not compiled in
const KernelTable* neon_kernels();  // nullptr when not compiled in
}  // namespace detail

}  // namespace cpcorr::simd
