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

#ifndef LDP_KERNELS_KERNELS_H_
#define LDP_KERNELS_KERNELS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/strings/string_view.h"

namespace ldp {
namespace kernels {

// Instruction-set variants of the dense inner loops. The scalar table is the
// reference; every other table is tested against it.
enum class Isa { kScalar, kAvx2, kNeon };

absl::string_view IsaName(Isa isa);

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // sum_i (a[i] - b[i])^2
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // sum_i |a[i] - b[i]|
  double (*abs_distance)(const double* a, const double* b, std::size_t n);
};

// Tables compiled into this binary whose ISA the running CPU supports.
// Always contains the scalar table first.
std::vector<const KernelTable*> SupportedTables();

// Returns the table for `isa`, or nullptr when it is not compiled in or the
// CPU lacks the instructions.
const KernelTable* TableFor(Isa isa);

// The table used by the library. Chosen on first use: the widest supported
// ISA, unless the environment variable LDP_SIMD is set to "scalar", "avx2"
// or "neon".
const KernelTable& Active();

// Overrides the active table (tests and benchmarks). Returns false when the
// requested ISA is unavailable; the active table is then left unchanged.
bool SetActive(Isa isa);

inline double Dot(std::span<const double> a, std::span<const double> b) {
  return Active().dot(a.data(), b.data(), a.size());
}
inline void Axpy(double alpha, std::span<const double> x,
                 std::span<double> y) {
  Active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double SquaredDistance(std::span<const double> a,
                              std::span<const double> b) {
  return Active().squared_distance(a.data(), b.data(), a.size());
}
inline double AbsDistance(std::span<const double> a,
                          std::span<const double> b) {
  return Active().abs_distance(a.data(), b.data(), a.size());
}

namespace internal {
const KernelTable& ScalarTable();
const KernelTable* Avx2Table();  // nullptr when not compiled in
const KernelTable* NeonTable();  // nullptr when not compiled in
}  // namespace internal

}  // namespace kernels
}  // namespace ldp

#endif  // LDP_KERNELS_KERNELS_H_
