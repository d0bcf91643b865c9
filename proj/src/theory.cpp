// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/theory.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "lpbench/error.hpp"

namespace lpbench {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the rule
// is symmetric). Kronrod nodes at odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWk[7];
  double gauss = fc * kWg[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXk[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

LogNormalFit fit_lognormal_log_values(std::span<const double> log_values) {
  if (log_values.size() < 2) throw InputError("log-normal fit needs at least two positive degrees");
  double mean = 0.0;
  for (double x : log_values) mean += x;
  mean /= static_cast<double>(log_values.size());
  double ss = 0.0;
  for (double x : log_values) ss += (x - mean) * (x - mean);
  return {.mu = mean,
          .sigma = std::sqrt(ss / static_cast<double>(log_values.size())),
          .n_fitted = log_values.size()};
}

LogNormalFit fit_lognormal_degrees(std::span<const std::uint32_t> degrees) {
  std::vector<double> logs;
  logs.reserve(degrees.size());
  for (auto k : degrees) {
    if (k >= 1) logs.push_back(std::log(static_cast<double>(k)));
  }
  return fit_lognormal_log_values(logs);
}

LogNormalFit fit_lognormal_degree(const Graph& g) { return fit_lognormal_degrees(g.degrees()); }

LogNormalFit positive_degree_law(const LogNormalFit& fit) {
  return {.mu = fit.mu + fit.sigma * fit.sigma, .sigma = fit.sigma, .n_fitted = fit.n_fitted};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol) {
  struct Segment {
    double lo, hi, tol;
  };
  QuadratureResult result;
  std::vector<Segment> stack{{lo, hi, abs_tol}};
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    const Panel p = gauss_kronrod(f, s.lo, s.hi);
    result.evaluations += 15;
    const double mid = 0.5 * (s.lo + s.hi);
    // Accept when converged, or when the panel can no longer be split.
    if (p.error <= s.tol || mid <= s.lo || mid >= s.hi || s.hi - s.lo < 1e-12) {
      result.value += p.value;
      result.error_estimate += p.error;
    } else {
      stack.push_back({s.lo, mid, 0.5 * s.tol});
      stack.push_back({mid, s.hi, 0.5 * s.tol});
    }
  }
  return result;
}

double predicted_auc_pa(double sigma) {
  if (!(sigma >= 0.0)) throw ParameterError("sigma must be non-negative");
  if (sigma == 0.0) return 0.5;
  const double shift = std::numbers::sqrt2 * sigma;
  const double inv_sqrt_2pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
  auto integrand = [shift, inv_sqrt_2pi](double z) {
    return inv_sqrt_2pi * std::exp(-0.5 * z * z) * normal_cdf(z - shift);
  };
  const QuadratureResult q = integrate_adaptive(integrand, -10.0, 10.0 + shift, 1e-8);
  const double auc = 1.0 - q.value;
  if (std::abs(auc - normal_cdf(sigma)) > 1e-6) {
    throw std::logic_error("predicted_auc_pa: quadrature disagrees with closed form");
  }
  return auc;
}

double predicted_auc_pa_closed_form(double sigma) {
  if (!(sigma >= 0.0)) throw ParameterError("sigma must be non-negative");
  return normal_cdf(sigma);
}

}  // namespace lpbench
