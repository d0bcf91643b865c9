// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <string>

#include "lpbench/error.hpp"
#include "lpbench/simd/kernels.hpp"

namespace lpbench::simd {

namespace {

Backend detect() {
  if (const char* env = std::getenv("LPBENCH_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2" && backend_supported(Backend::avx2)) return Backend::avx2;
  }
  return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(LPBENCH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw ParameterError("SIMD backend '" + std::string(backend_name(b)) + "' unavailable");
  }
  current().store(b, std::memory_order_relaxed);
}

std::size_t intersect_count(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
#if defined(LPBENCH_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::intersect_count(a, b);
#endif
  return scalar::intersect_count(a, b);
}

std::size_t intersect(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t* out) {
#if defined(LPBENCH_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::intersect(a, b, out);
#endif
  return scalar::intersect(a, b, out);
}

double gather_sum(std::span<const std::uint32_t> idx, std::span<const double> values) {
#if defined(LPBENCH_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::gather_sum(idx, values);
#endif
  return scalar::gather_sum(idx, values);
}

}  // namespace lpbench::simd
