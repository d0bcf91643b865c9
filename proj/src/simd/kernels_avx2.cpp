// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached through the runtime dispatcher.

#include <immintrin.h>

#include "lpbench/simd/kernels.hpp"

namespace lpbench::simd::avx2 {

namespace {

// Bitmask of lanes in `va` equal to any lane of `vb`: compare against all
// eight rotations of vb.
inline unsigned match_mask(__m256i va, __m256i vb) {
  const __m256i rotate = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
  __m256i hit = _mm256_cmpeq_epi32(va, vb);
  for (int r = 1; r < 8; ++r) {
    vb = _mm256_permutevar8x32_epi32(vb, rotate);
    hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(va, vb));
  }
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)));
}

}  // namespace

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const std::size_t na = a.size() & ~std::size_t{7};
  const std::size_t nb = b.size() & ~std::size_t{7};
  std::size_t i = 0, j = 0, count = 0;
  while (i < na && j < nb) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
    count += static_cast<std::size_t>(_mm_popcnt_u32(match_mask(va, vb)));
    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  // Every element skipped above is below the next unread element of the
  // other list, so the merge tail cannot recount a match.
  return count + scalar::intersect_count(a.subspan(i), b.subspan(j));
}

std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t* out) {
  const std::size_t na = a.size() & ~std::size_t{7};
  const std::size_t nb = b.size() & ~std::size_t{7};
  std::size_t i = 0, j = 0, count = 0;
  while (i < na && j < nb) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
    unsigned mask = match_mask(va, vb);
    while (mask != 0) {
      out[count++] = a[i + static_cast<std::size_t>(__builtin_ctz(mask))];
      mask &= mask - 1;
    }
    const std::uint32_t a_max = a[i + 7];
    const std::uint32_t b_max = b[j + 7];
    if (a_max <= b_max) i += 8;
    if (b_max <= a_max) j += 8;
  }
  return count + scalar::intersect(a.subspan(i), b.subspan(j), out + count);
}

double gather_sum(std::span<const std::uint32_t> idx, std::span<const double> values) {
  const std::size_t n4 = idx.size() & ~std::size_t{3};
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k < n4; k += 4) {
    const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx.data() + k));
    acc = _mm256_add_pd(acc, _mm256_i32gather_pd(values.data(), vi, 8));
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (; k < idx.size(); ++k) sum += values[idx[k]];
  return sum;
}

}  // namespace lpbench::simd::avx2
