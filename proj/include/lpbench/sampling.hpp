// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lpbench/graph.hpp"

namespace lpbench {

enum class NegativeSampler { uniform, degree_corrected };

std::string_view sampler_name(NegativeSampler s);
/// Accepts "uniform" and "degree-corrected" (or "degree_corrected").
NegativeSampler parse_sampler(std::string_view name);

struct PositiveSplit {
  Graph train;
  EdgeList positives;
};

/// Holds out round(beta * M) edges chosen uniformly without replacement.
/// The train graph keeps every node, including ones left isolated.
PositiveSplit split_positive(const Graph& g, double beta, std::uint64_t seed);

/// `count` distinct non-edges of g with both endpoints drawn uniformly from
/// the node set; loops, edges of g, members of `positives` and repeats are
/// rejected and redrawn.
EdgeList sample_negative_uniform(const Graph& g, std::span<const Edge> positives,
                                 std::size_t count, std::uint64_t seed);

/// Same rejection rule, but each endpoint is drawn with probability
/// proportional to its degree in g, so negatives share the degree bias of
/// uniformly sampled edges. Pass the original (pre-split) graph.
EdgeList sample_negative_degree_corrected(const Graph& g, std::span<const Edge> positives,
                                          std::size_t count, std::uint64_t seed);

EdgeList sample_negatives(NegativeSampler kind, const Graph& g, std::span<const Edge> positives,
                          std::size_t count, std::uint64_t seed);

struct EdgeSplit {
  Graph train;
  EdgeList positives;
  EdgeList negatives;
  double beta = 0.0;
  NegativeSampler sampler = NegativeSampler::uniform;
  std::uint64_t seed = 0;
};

/// Positive holdout followed by an equal number of negatives. The two steps
/// draw from independent streams derived from `seed`.
EdgeSplit make_edge_split(const Graph& g, double beta, NegativeSampler sampler,
                          std::uint64_t seed);

/// Probability mass over degree k (index = k).
struct DegreeHistogram {
  std::vector<double> mass;

  double mean() const;
  /// P(K >= k).
  double ccdf(std::size_t k) const;
};

/// Degree (in g) of every endpoint slot, two per edge, normalized.
DegreeHistogram endpoint_degree_histogram(std::span<const Edge> edges, const Graph& g);

/// p(k) over all nodes of g.
DegreeHistogram degree_distribution(const Graph& g);

/// k p(k) / <k>: the endpoint degree law of a uniformly sampled edge.
DegreeHistogram size_biased(const DegreeHistogram& p);

/// Largest absolute CDF difference.
double ks_distance(const DegreeHistogram& a, const DegreeHistogram& b);

/// Asymptotic two-sample Kolmogorov-Smirnov p-value for statistic d with
/// sample sizes n and m.
double ks_two_sample_pvalue(double d, std::size_t n, std::size_t m);

}  // namespace lpbench
