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

#include <atomic>
#include <cstdlib>
#include <string>

#include "cpcorr/error.hpp"
#include "cpcorr/simd.hpp"

namespace cpcorr::simd {
namespace {

Isa best_supported() {
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_supported(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

Isa initial_isa() {
  if (const char* env = std::getenv("CPCORR_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Isa::kScalar;
    if (v == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
    if (v == "neon" && isa_supported(Isa::kNeon)) return Isa::kNeon;
  }
  return best_supported();
}

struct ActiveState {
  std::atomic<Isa> isa;
  std::atomic<const KernelTable*> table;
};

ActiveState& active_state() {
  static ActiveState state = [] {
    const Isa isa = initial_isa();
    return ActiveState{isa, &kernels(isa)};
  }();
  return state;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      if (detail::avx2_kernels() == nullptr) return false;
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
      return detail::neon_kernels() != nullptr;
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) {
    throw ConfigError("SIMD variant '" + std::string(to_string(isa)) +
                      "' is not supported on this CPU");
  }
  switch (isa) {
    case Isa::kAvx2: return *detail::avx2_kernels();
    case Isa::kNeon: return *detail::neon_kernels();
    case Isa::kScalar: break;
  }
  return detail::scalar_kernels();
}

Isa active_isa() { return active_state().isa.load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  const KernelTable* table = &kernels(isa);
  active_state().table.store(table, std::memory_order_relaxed);
  active_state().isa.store(isa, std::memory_order_relaxed);
}

const KernelTable& active() {
  return *active_state().table.load(std::memory_order_relaxed);
}

}  // namespace cpcorr::simd
