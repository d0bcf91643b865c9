// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "lpbench/graph.hpp"

namespace lpbench {

/// Log-normal degree law: ln k ~ Normal(mu, sigma^2).
struct LogNormalFit {
  double mu = 0.0;
  double sigma = 0.0;
  std::size_t n_fitted = 0;
};

/// Maximum-likelihood fit from log-values: mean and population standard
/// deviation. Needs at least two values.
LogNormalFit fit_lognormal_log_values(std::span<const double> log_values);

/// Fit over the degrees of g, skipping degree-0 nodes.
LogNormalFit fit_lognormal_degree(const Graph& g);
LogNormalFit fit_lognormal_degrees(std::span<const std::uint32_t> degrees);

/// Degree law of edge endpoints when degrees are LogNorm(mu, sigma^2):
/// size-biasing shifts the location to mu + sigma^2 and keeps sigma.
LogNormalFit positive_degree_law(const LogNormalFit& fit);

/// Standard normal CDF.
double normal_cdf(double x);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature to an absolute tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol);

/// Expected AUC-ROC of the preferential-attachment score k_i k_j under the
/// uniform benchmark on a log-normal degree law:
///   1 - ∫ φ(z) Φ(z - √2 σ) dz
/// integrated over [-10, 10 + √2 σ] to 1e-8. Throws ParameterError for
/// sigma < 0.
double predicted_auc_pa(double sigma);

/// Closed form of the same quantity. ln s+ - ln s- is Normal(2σ², 4σ²), so
/// the probability it is positive is Φ(σ).
double predicted_auc_pa_closed_form(double sigma);

}  // namespace lpbench
