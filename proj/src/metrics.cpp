// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "lpbench/error.hpp"

namespace lpbench {

double auc_roc(std::span<const double> pos, std::span<const double> neg) {
  if (pos.empty() || neg.empty()) throw InputError("auc_roc needs non-empty score lists");
  struct Item {
    double score;
    bool positive;
  };
  std::vector<Item> items;
  items.reserve(pos.size() + neg.size());
  for (double s : pos) {
    if (std::isnan(s)) throw InputError("auc_roc: NaN score");
    items.push_back({s, true});
  }
  for (double s : neg) {
    if (std::isnan(s)) throw InputError("auc_roc: NaN score");
    items.push_back({s, false});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.score < b.score; });

  // Walk tie groups in ascending order. A positive beats every negative in
  // earlier groups and splits credit with negatives in its own group.
  // Counts are integers, so accumulate twice the statistic exactly.
  std::uint64_t neg_below = 0;
  long double twice_wins = 0.0L;
  for (std::size_t lo = 0; lo < items.size();) {
    std::size_t hi = lo;
    std::uint64_t p = 0, q = 0;
    while (hi < items.size() && items[hi].score == items[lo].score) {
      (items[hi].positive ? p : q) += 1;
      ++hi;
    }
    twice_wins += static_cast<long double>(p) * (2.0L * neg_below + q);
    neg_below += q;
    lo = hi;
  }
  return static_cast<double>(twice_wins / (2.0L * pos.size() * neg.size()));
}

std::vector<Recommendation> select_top_c(std::span<const double> row, const Graph& train,
                                         NodeId source, std::size_t top_c) {
  const auto nbrs = train.neighbors(source);
  std::vector<Recommendation> cand;
  cand.reserve(train.num_nodes());
  std::size_t k = 0;
  for (NodeId j = 0; j < train.num_nodes(); ++j) {
    while (k < nbrs.size() && nbrs[k] < j) ++k;
    if (j == source || (k < nbrs.size() && nbrs[k] == j)) continue;
    cand.push_back({j, row[j]});
  }
  auto better = [](const Recommendation& a, const Recommendation& b) {
    return a.score != b.score ? a.score > b.score : a.node < b.node;
  };
  const std::size_t keep = std::min(top_c, cand.size());
  std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(keep), cand.end(),
                    better);
  cand.resize(keep);
  return cand;
}

RecommendationList top_c_recommend(const Graph& train, const MethodSpec& spec, std::size_t top_c) {
  if (top_c < 1) throw ParameterError("top_c must be >= 1");
  RecommendationList recs;
  recs.top_c = top_c;
  recs.per_node.resize(train.num_nodes());
  RowScorer scorer(train, spec);
  std::vector<double> row(train.num_nodes());
  for (NodeId i = 0; i < train.num_nodes(); ++i) {
    scorer.score_row(i, row);
    recs.per_node[i] = select_top_c(row, train, i, top_c);
  }
  return recs;
}

VcmprResult vcmpr_at_c(const RecommendationList& recs, std::span<const Edge> positives,
                       std::size_t top_c) {
  if (top_c < 1) throw ParameterError("top_c must be >= 1");
  std::unordered_map<NodeId, std::vector<NodeId>> partners;
  for (const Edge& e : positives) {
    if (e.v >= recs.per_node.size()) throw InputError("positive edge out of range");
    if (e.is_loop()) continue;
    partners[e.u].push_back(e.v);
    partners[e.v].push_back(e.u);
  }
  if (partners.empty()) throw InputError("vcmpr_at_c: no node has a held-out edge");

  std::vector<NodeId> nodes;
  nodes.reserve(partners.size());
  for (auto& [node, list] : partners) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    nodes.push_back(node);
  }
  std::sort(nodes.begin(), nodes.end());

  VcmprResult result;
  result.per_node.reserve(nodes.size());
  double sum = 0.0;
  for (NodeId node : nodes) {
    const auto& want = partners[node];
    const auto& got = recs.per_node[node];
    NodeVcmpr r{.node = node, .hits = 0, .partners = want.size()};
    const std::size_t depth = std::min(top_c, got.size());
    for (std::size_t k = 0; k < depth; ++k) {
      if (std::binary_search(want.begin(), want.end(), got[k].node)) ++r.hits;
    }
    r.precision = static_cast<double>(r.hits) / static_cast<double>(top_c);
    r.recall = static_cast<double>(r.hits) / static_cast<double>(r.partners);
    r.vcmpr = std::max(r.precision, r.recall);
    sum += r.vcmpr;
    result.per_node.push_back(r);
  }
  result.value = sum / static_cast<double>(nodes.size());
  return result;
}

double rbo(const Ranking& a, const Ranking& b, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("rbo: p must lie in (0, 1)");
  if (a.size() != b.size()) throw InputError("rbo: rankings differ in length");
  {
    std::unordered_set<std::string> sa(a.begin(), a.end());
    if (sa.size() != a.size()) throw InputError("rbo: duplicate item in ranking");
    std::unordered_set<std::string> sb(b.begin(), b.end());
    if (sb.size() != b.size()) throw InputError("rbo: duplicate item in ranking");
    for (const auto& x : b) {
      if (sa.count(x) == 0) throw InputError("rbo: rankings cover different items ('" + x + "')");
    }
  }
  const std::size_t depth = a.size();
  if (depth == 0) return 1.0;

  // Incremental overlap: an item joins the intersection when the second
  // list to reach it does.
  std::unordered_map<std::string, int> seen;
  std::size_t overlap = 0;
  double sum = 0.0, weight = 1.0, agreement = 0.0;
  for (std::size_t d = 1; d <= depth; ++d) {
    if (++seen[a[d - 1]] == 2) ++overlap;
    if (++seen[b[d - 1]] == 2) ++overlap;
    agreement = static_cast<double>(overlap) / static_cast<double>(d);
    sum += weight * agreement;
    weight *= p;
  }
  // weight now equals p^D.
  return (1.0 - p) * sum + weight * agreement;
}

}  // namespace lpbench
