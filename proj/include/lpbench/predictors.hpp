// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpbench/graph.hpp"

namespace lpbench {

enum class Method { pa, cn, jaccard, adamic_adar, resource_alloc, lpi, shortest_path, lrw };

inline constexpr Method kAllMethods[] = {Method::pa,          Method::cn,
                                         Method::jaccard,     Method::adamic_adar,
                                         Method::resource_alloc, Method::lpi,
                                         Method::shortest_path, Method::lrw};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct MethodSpec {
  Method method = Method::pa;
  /// Weight of length-3 walks in the local path index.
  double epsilon = 0.01;
  /// Walk length of the local random walk.
  unsigned walk_steps = 3;

  /// Throws ParameterError when epsilon <= 0 or walk_steps < 2.
  void validate() const;
  std::string name() const { return std::string(method_name(method)); }
};

struct ScoreTable {
  EdgeList pairs;
  std::vector<double> scores;
  MethodSpec spec;
};

/// Preferential attachment: k_i * k_j on the train graph.
ScoreTable score_pa(const Graph& train, std::span<const Edge> pairs);

/// Every non-PA method; PA is forwarded to score_pa.
///
///   cn              |Γ(i) ∩ Γ(j)|
///   jaccard         |Γ(i) ∩ Γ(j)| / |Γ(i) ∪ Γ(j)|, 0 for an empty union
///   adamic_adar     Σ_{z ∈ Γ(i)∩Γ(j)} 1 / ln k_z, skipping k_z <= 1
///   resource_alloc  Σ_{z ∈ Γ(i)∩Γ(j)} 1 / k_z
///   lpi             (A²)_ij + ε (A³)_ij
///   shortest_path   1 / d(i, j), 0 when unreachable
///   lrw             q_i π_ij(t) + q_j π_ji(t), q_i = k_i / 2M,
///                   π(t) the t-step random-walk transition probability
ScoreTable score_heuristic(const Graph& train, std::span<const Edge> pairs, const MethodSpec& spec);

inline ScoreTable score_pairs(const Graph& train, std::span<const Edge> pairs,
                              const MethodSpec& spec) {
  return score_heuristic(train, pairs, spec);
}

/// Scores one source node against every node at once. Keeps O(N) scratch, so
/// use one instance per thread.
class RowScorer {
 public:
  RowScorer(const Graph& train, MethodSpec spec);

  /// out[j] = score(source, j) for all j; out.size() must equal num_nodes.
  /// Entries for the source and its neighbors are filled but meaningless.
  void score_row(NodeId source, std::span<double> out);

 private:
  const Graph& g_;
  MethodSpec spec_;
  std::vector<double> weights_;
  std::vector<NodeId> queue_;
  std::vector<std::uint32_t> dist_;
};

}  // namespace lpbench
