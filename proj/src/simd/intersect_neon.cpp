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

// 4x4 block variant of the AVX2 kernel. NEON is baseline on AArch64, so no
// runtime probe is needed.

#include "triprof/simd/intersect.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace triprof::simd::neon {
namespace {

inline uint32x4_t MatchLanes(uint32x4_t va, uint32x4_t vb) {
  uint32x4_t hit = vceqq_u32(va, vb);
  hit = vorrq_u32(hit, vceqq_u32(va, vextq_u32(vb, vb, 1)));
  hit = vorrq_u32(hit, vceqq_u32(va, vextq_u32(vb, vb, 2)));
  hit = vorrq_u32(hit, vceqq_u32(va, vextq_u32(vb, vb, 3)));
  return hit;
}

}  // namespace

std::uint32_t IntersectCount(const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb) {
  std::uint32_t count = 0;
  std::size_t i = 0, j = 0;
  const std::size_t na4 = na & ~std::size_t{3};
  const std::size_t nb4 = nb & ~std::size_t{3};
  while (i < na4 && j < nb4) {
    const uint32x4_t hit = MatchLanes(vld1q_u32(a + i), vld1q_u32(b + j));
    count += vaddvq_u32(vshrq_n_u32(hit, 31));
    const std::uint32_t amax = a[i + 3];
    const std::uint32_t bmax = b[j + 3];
    i += amax <= bmax ? 4 : 0;
    j += bmax <= amax ? 4 : 0;
  }
  return count + scalar::IntersectCount(a + i, na - i, b + j, nb - j);
}

std::size_t Intersect(const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
                      std::size_t nb, std::uint32_t* out) {
  std::size_t k = 0;
  std::size_t i = 0, j = 0;
  const std::size_t na4 = na & ~std::size_t{3};
  const std::size_t nb4 = nb & ~std::size_t{3};
  std::uint32_t lanes[4];
  while (i < na4 && j < nb4) {
    const uint32x4_t hit = MatchLanes(vld1q_u32(a + i), vld1q_u32(b + j));
    if (vmaxvq_u32(hit) != 0) {
      vst1q_u32(lanes, hit);
      for (int lane = 0; lane < 4; ++lane) {
        if (lanes[lane] != 0) out[k++] = a[i + lane];
      }
    }
    const std::uint32_t amax = a[i + 3];
    const std::uint32_t bmax = b[j + 3];
    i += amax <= bmax ? 4 : 0;
    j += bmax <= amax ? 4 : 0;
  }
  return k + scalar::Intersect(a + i, na - i, b + j, nb - j, out + k);
}

}  // namespace triprof::simd::neon

#endif
