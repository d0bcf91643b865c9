// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lpbench/graph.hpp"

namespace lpbench {

/// Undirected linear preferential attachment. Starts from a clique on
/// m_per_node + 1 nodes; every later node attaches m_per_node distinct edges
/// to existing nodes chosen with probability proportional to degree. The
/// degree tail goes as k^-3.
Graph generate_price(std::size_t n, std::size_t m_per_node, std::uint64_t seed);

struct PowerlawDegreeParams {
  std::size_t n = 0;
  double tau = 2.0;
  /// Lower end of the support, or the floor of the k_min search when
  /// target_mean is set.
  std::uint32_t k_min = 1;
  std::uint32_t k_max = 1;
  std::optional<double> target_mean;
};

/// Draws n degrees from p(k) ∝ k^-tau on [k_min, k_max]. With target_mean,
/// k_min is searched upwards from params.k_min so the realized mean lands
/// within 5% of the target. An odd total is fixed by decrementing the
/// largest entry.
std::vector<std::uint32_t> sample_powerlaw_degrees(const PowerlawDegreeParams& params,
                                                   std::uint64_t seed);

/// Mean of the truncated discrete power law on [k_min, k_max].
double powerlaw_mean(double tau, std::uint32_t k_min, std::uint32_t k_max);

/// Degrees ceil(exp(x)) with x ~ Normal(mu, sigma^2), clamped to [1, n-1],
/// total made even as above.
std::vector<std::uint32_t> sample_lognormal_degrees(std::size_t n, double mu, double sigma,
                                                    std::uint64_t seed);

struct ConfigurationGraph {
  Graph graph;
  std::size_t discarded_stubs = 0;
};

/// Configuration model by stub matching with rejection of loops and repeated
/// pairs, followed by repair sweeps. Stubs that still cannot be placed are
/// dropped and counted.
ConfigurationGraph generate_configuration(std::span<const std::uint32_t> degrees,
                                          std::uint64_t seed);

struct LfrParams {
  std::size_t n = 0;
  double tau1 = 3.0;
  double tau2 = 3.0;
  double mu = 0.0;
  double avg_degree = 0.0;
  std::uint32_t max_degree = 0;
  std::size_t min_comm = 0;
  std::size_t max_comm = 0;

  /// Throws ParameterError naming the violated constraint.
  void validate() const;
};

struct LfrGraph {
  Graph graph;
  /// Community id per node, ids dense from 0.
  std::vector<std::uint32_t> labels;
  std::vector<std::uint32_t> target_degrees;
  std::size_t total_stubs = 0;
  std::size_t discarded_stubs = 0;
};

/// LFR benchmark graph with planted, non-overlapping communities.
LfrGraph generate_lfr(const LfrParams& params, std::uint64_t seed);

/// Fraction of edges whose endpoints carry different labels.
double mixing_fraction(const Graph& g, std::span<const std::uint32_t> labels);

}  // namespace lpbench
