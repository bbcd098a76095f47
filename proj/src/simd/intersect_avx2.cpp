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

// 8x8 block all-pairs compare. Each block of `a` is compared against every
// lane of the current block of `b` using four in-lane rotations of b and four
// of its lane-swapped copy; whichever block has the smaller maximum advances.
// Because both inputs are strictly increasing, every matching pair is seen in
// exactly one block comparison, so counts and emitted values are exact.
//
// The file is compiled without -mavx2; only the functions below carry the
// target attribute, so no AVX2 code leaks into shared inline definitions.

#include "triprof/simd/intersect.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>
#include <cstring>

namespace triprof::simd::avx2 {
namespace {

// For every 8-bit match mask, the lane indices of the set bits packed to the
// front. Used to compress matched elements into contiguous output.
struct CompressTable {
  std::array<std::array<std::uint32_t, 8>, 256> idx{};
  constexpr CompressTable() {
    for (unsigned m = 0; m < 256; ++m) {
      unsigned k = 0;
      for (unsigned lane = 0; lane < 8; ++lane) {
        if (m & (1u << lane)) idx[m][k++] = lane;
      }
    }
  }
};
constexpr CompressTable kCompress;

__attribute__((target("avx2"))) inline unsigned MatchMask(__m256i va, __m256i vb) {
  const __m256i vb_swapped = _mm256_permute2x128_si256(vb, vb, 0x01);
  __m256i hit = _mm256_cmpeq_epi32(va, vb);
  hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb, 0x39)));
  hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb, 0x4e)));
  hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb, 0x93)));
  hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, vb_swapped));
  hit = _mm256_or_si256(hit,
                        _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb_swapped, 0x39)));
  hit = _mm256_or_si256(hit,
                        _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb_swapped, 0x4e)));
  hit = _mm256_or_si256(hit,
                        _mm256_cmpeq_epi32(va, _mm256_shuffle_epi32(vb_swapped, 0x93)));
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)));
}

}  // namespace

__attribute__((target("avx2,popcnt"))) std::uint32_t IntersectCount(
    const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb) {
  std::uint32_t count = 0;
  std::size_t i = 0, j = 0;
  const std::size_t na8 = na & ~std::size_t{7};
  const std::size_t nb8 = nb & ~std::size_t{7};
  while (i < na8 && j < nb8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    count += static_cast<std::uint32_t>(_mm_popcnt_u32(MatchMask(va, vb)));
    const std::uint32_t amax = a[i + 7];
    const std::uint32_t bmax = b[j + 7];
    i += amax <= bmax ? 8 : 0;
    j += bmax <= amax ? 8 : 0;
  }
  return count + scalar::IntersectCount(a + i, na - i, b + j, nb - j);
}

__attribute__((target("avx2,popcnt"))) std::size_t Intersect(
    const std::uint32_t* a, std::size_t na, const std::uint32_t* b, std::size_t nb,
    std::uint32_t* out) {
  std::size_t k = 0;
  std::size_t i = 0, j = 0;
  const std::size_t na8 = na & ~std::size_t{7};
  const std::size_t nb8 = nb & ~std::size_t{7};
  alignas(32) std::uint32_t staged[8];
  while (i < na8 && j < nb8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    const unsigned mask = MatchMask(va, vb);
    if (mask != 0) {
      const __m256i perm = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(kCompress.idx[mask].data()));
      _mm256_store_si256(reinterpret_cast<__m256i*>(staged),
                         _mm256_permutevar8x32_epi32(va, perm));
      const auto hits = static_cast<std::size_t>(_mm_popcnt_u32(mask));
      std::memcpy(out + k, staged, hits * sizeof(std::uint32_t));
      k += hits;
    }
    const std::uint32_t amax = a[i + 7];
    const std::uint32_t bmax = b[j + 7];
    i += amax <= bmax ? 8 : 0;
    j += bmax <= amax ? 8 : 0;
  }
  return k + scalar::Intersect(a + i, na - i, b + j, nb - j, out + k);
}

}  // namespace triprof::simd::avx2

#endif
