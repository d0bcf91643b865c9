// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lpbench/graph.hpp"
#include "lpbench/predictors.hpp"

namespace lpbench {

/// Probability that a positive outscores a negative, ties counted as half.
/// Rank-sum (Mann-Whitney) form, O((n+m) log(n+m)). Throws InputError on an
/// empty list or a NaN.
double auc_roc(std::span<const double> pos_scores, std::span<const double> neg_scores);

struct Recommendation {
  NodeId node = 0;
  double score = 0.0;
};

/// Top-C candidates per source node, best first. Candidates exclude the
/// source and its train neighbors; ties go to the smaller node id.
struct RecommendationList {
  std::size_t top_c = 0;
  std::vector<std::vector<Recommendation>> per_node;
};

/// Sorts candidates by (score desc, id asc) and keeps the first C.
std::vector<Recommendation> select_top_c(std::span<const double> row, const Graph& train,
                                         NodeId source, std::size_t top_c);

RecommendationList top_c_recommend(const Graph& train, const MethodSpec& spec, std::size_t top_c);

struct NodeVcmpr {
  NodeId node = 0;
  std::size_t hits = 0;
  std::size_t partners = 0;
  double precision = 0.0;
  double recall = 0.0;
  double vcmpr = 0.0;
};

struct VcmprResult {
  /// Mean over nodes incident to at least one held-out edge.
  double value = 0.0;
  std::vector<NodeVcmpr> per_node;
};

/// Vertex-centric max precision/recall at C: per node max(hits/C,
/// hits/partners), averaged over nodes with held-out partners. Throws
/// InputError when no node has a held-out partner.
VcmprResult vcmpr_at_c(const RecommendationList& recs, std::span<const Edge> positives,
                       std::size_t top_c);

using Ranking = std::vector<std::string>;

/// Extrapolated rank-biased overlap of two conjoint rankings of equal
/// length D: (1-p) Σ_{d<=D} p^{d-1} A_d + p^D A_D with A_d the top-d overlap
/// fraction. Throws InputError unless both rank the same items.
double rbo(const Ranking& a, const Ranking& b, double p);

}  // namespace lpbench
