// Copyright 2026 The ldp-ibu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldp/kernels/kernels.h"

#include <atomic>
#include <cstdlib>
#include <vector>

#include "absl/strings/string_view.h"

namespace ldp {
namespace kernels {

#if defined(__x86_64__) || defined(_M_X64)
#define LDP_HAVE_AVX2_TU 1
#else
#define LDP_HAVE_AVX2_TU 0
#endif

#if defined(__aarch64__)
#define LDP_HAVE_NEON_TU 1
#else
#define LDP_HAVE_NEON_TU 0
#endif

namespace internal {
#if !LDP_HAVE_AVX2_TU
const KernelTable* Avx2Table() { return nullptr; }
#endif
#if !LDP_HAVE_NEON_TU
const KernelTable* NeonTable() { return nullptr; }
#endif
}  // namespace internal

namespace {

bool CpuHasAvx2() {
#if LDP_HAVE_AVX2_TU && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* SelectDefault() {
  if (const char* env = std::getenv("LDP_SIMD")) {
    const absl::string_view want(env);
    if (want == "scalar") return &internal::ScalarTable();
    if (want == "avx2" && TableFor(Isa::kAvx2)) return TableFor(Isa::kAvx2);
    if (want == "neon" && TableFor(Isa::kNeon)) return TableFor(Isa::kNeon);
  }
  if (const KernelTable* t = TableFor(Isa::kAvx2)) return t;
  if (const KernelTable* t = TableFor(Isa::kNeon)) return t;
  return &internal::ScalarTable();
}

std::atomic<const KernelTable*>& ActiveSlot() {
  static std::atomic<const KernelTable*> slot{SelectDefault()};
  return slot;
}

}  // namespace

absl::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* TableFor(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &internal::ScalarTable();
    case Isa::kAvx2:
      return CpuHasAvx2() ? internal::Avx2Table() : nullptr;
    case Isa::kNeon:
      // Advanced SIMD is mandatory on AArch64.
      return internal::NeonTable();
  }
  return nullptr;
}

std::vector<const KernelTable*> SupportedTables() {
  std::vector<const KernelTable*> out = {&internal::ScalarTable()};
  if (const KernelTable* t = TableFor(Isa::kAvx2)) out.push_back(t);
  if (const KernelTable* t = TableFor(Isa::kNeon)) out.push_back(t);
  return out;
}

const KernelTable& Active() {
  return *ActiveSlot().load(std::memory_order_relaxed);
}

bool SetActive(Isa isa) {
  const KernelTable* t = TableFor(isa);
  if (t == nullptr) return false;
  ActiveSlot().store(t, std::memory_order_relaxed);
  return true;
}

}  // namespace kernels
}  // namespace ldp
