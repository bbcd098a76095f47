// Copyright 2026 The triprof Authors.
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

// Sorted-set intersection kernels. Every operation in the library that needs
// |Γ(u) ∩ Γ(w)| or the set itself goes through here.
//
// Inputs are strictly increasing uint32 sequences. The scalar kernels are the
// reference; vector kernels must agree with them bit for bit. The active
// kernel set is chosen once from CPU features and can be overridden with
// ForceIsa() or the TRIPROF_SIMD environment variable (scalar|avx2|neon).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace triprof::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);
bool IsaSupported(Isa isa);
Isa ActiveIsa();
// Throws UsageError when the host cannot run `isa`.
void ForceIsa(Isa isa);

using CountFn = std::uint32_t (*)(const std::uint32_t* a, std::size_t na,
                                  const std::uint32_t* b, std::size_t nb);
// Writes the intersection to `out`, which must hold min(na, nb) entries.
// Returns the number written.
using IntersectFn = std::size_t (*)(const std::uint32_t* a, std::size_t na,
                                    const std::uint32_t* b, std::size_t nb,
                                    std::uint32_t* out);

struct Kernels {
  CountFn count;
  IntersectFn intersect;
};

// Kernels for a specific ISA; null members when not compiled in.
Kernels KernelsFor(Isa isa);
const Kernels& Active();

inline std::uint32_t IntersectCount(std::span<const std::uint32_t> a,
                                    std::span<const std::uint32_t> b) {
  return Active().count(a.data(), a.size(), b.data(), b.size());
}

inline std::size_t Intersect(std::span<const std::uint32_t> a,
                             std::span<const std::uint32_t> b, std::uint32_t* out) {
  return Active().intersect(a.data(), a.size(), b.data(), b.size(), out);
}

namespace scalar {
std::uint32_t IntersectCount(const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb);
std::size_t Intersect(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                      std::size_t nb, std::uint32_t* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
std::uint32_t IntersectCount(const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb);
std::size_t Intersect(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                      std::size_t nb, std::uint32_t* out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
std::uint32_t IntersectCount(const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb);
std::size_t Intersect(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                      std::size_t nb, std::uint32_t* out);
}  // namespace neon
#endif

}  // namespace triprof::simd
