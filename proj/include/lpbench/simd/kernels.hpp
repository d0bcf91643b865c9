// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Data-parallel inner loops used by the predictors.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The active backend is chosen once at startup from CPUID and can be
// overridden with LPBENCH_SIMD=scalar|avx2 or set_backend(). Set inputs must
// be sorted and free of duplicates.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lpbench::simd {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
/// Throws ParameterError if the CPU or build lacks the backend.
void set_backend(Backend b);

/// |a ∩ b| for strictly increasing inputs.
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Writes a ∩ b in ascending order to out, which must hold min(|a|, |b|)
/// values. Returns the number written.
std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t* out);

/// Σ values[idx[k]].
double gather_sum(std::span<const std::uint32_t> idx, std::span<const double> values);

namespace scalar {
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t* out);
double gather_sum(std::span<const std::uint32_t> idx, std::span<const double> values);
}  // namespace scalar

#if defined(LPBENCH_HAVE_AVX2)
namespace avx2 {
std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t* out);
double gather_sum(std::span<const std::uint32_t> idx, std::span<const double> values);
}  // namespace avx2
#endif

}  // namespace lpbench::simd
