// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lpbench/error.hpp"
#include "lpbench/metrics.hpp"
#include "lpbench/rng.hpp"
#include "test_util.hpp"

namespace lpbench {
namespace {

double brute_auc(const std::vector<double>& pos, const std::vector<double>& neg) {
  double wins = 0;
  for (double p : pos)
    for (double n : neg) wins += p > n ? 1.0 : (p == n ? 0.5 : 0.0);
  return wins / (static_cast<double>(pos.size()) * neg.size());
}

TEST(Auc, Examples) {
  EXPECT_EQ(auc_roc(std::vector<double>{2, 3}, std::vector<double>{0, 1}), 1.0);
  EXPECT_EQ(auc_roc(std::vector<double>{4, 4, 4}, std::vector<double>{4, 4}), 0.5);
  EXPECT_THROW(auc_roc({}, std::vector<double>{1}), InputError);
  EXPECT_THROW(auc_roc(std::vector<double>{NAN}, std::vector<double>{1}), InputError);
}

TEST(Auc, BruteForceOracle) {
  Rng rng = make_rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> len(1, 200), val(0, trial % 2 ? 10 : 1000000);
    std::vector<double> pos(len(rng)), neg(len(rng));
    for (auto& x : pos) x = val(rng);
    for (auto& x : neg) x = val(rng) + (trial % 3 == 0 ? 0.5 : 0.0);
    const double auc = auc_roc(pos, neg);
    EXPECT_NEAR(auc, brute_auc(pos, neg), 1e-12);
    EXPECT_NEAR(auc + auc_roc(neg, pos), 1.0, 1e-12);
    std::vector<double> tp(pos), tn(neg);
    for (auto& x : tp) x = std::exp(x / 1e5) * 3 - 7;
    for (auto& x : tn) x = std::exp(x / 1e5) * 3 - 7;
    EXPECT_NEAR(auc_roc(tp, tn), auc, 1e-12);
  }
}

Graph make(EdgeList pairs, std::optional<std::size_t> n = std::nullopt) {
  return build_graph(pairs, n).graph;
}

TEST(TopC, PathExample) {
  const Graph path = make({{0, 1}, {1, 2}});
  const auto recs = top_c_recommend(path, {.method = Method::cn}, 1);
  ASSERT_EQ(recs.per_node[0].size(), 1u);
  EXPECT_EQ(recs.per_node[0][0].node, 2u);
  EXPECT_EQ(recs.per_node[0][0].score, 1.0);
  EXPECT_TRUE(recs.per_node[1].empty());
}

TEST(TopC, CompleteGraphIsEmpty) {
  EdgeList pairs;
  for (NodeId i = 0; i < 5; ++i)
    for (NodeId j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  const auto recs = top_c_recommend(make(pairs), {.method = Method::pa}, 3);
  for (const auto& list : recs.per_node) EXPECT_TRUE(list.empty());
  EXPECT_THROW(top_c_recommend(make(pairs), {.method = Method::pa}, 0), ParameterError);
}

// All-pairs scoring followed by a full sort.
std::vector<std::vector<Recommendation>> exhaustive_top_c(const Graph& g, const MethodSpec& spec,
                                                         std::size_t c) {
  std::vector<std::vector<Recommendation>> out(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    EdgeList cand;
    for (NodeId j = 0; j < g.num_nodes(); ++j)
      if (j != i && !g.has_edge(i, j)) cand.push_back({i, j});
    const ScoreTable t = score_pairs(g, cand, spec);
    for (std::size_t k = 0; k < cand.size(); ++k) {
      out[i].push_back({cand[k].u == i ? cand[k].v : cand[k].u, t.scores[k]});
    }
    std::sort(out[i].begin(), out[i].end(), [](const auto& a, const auto& b) {
      return a.score != b.score ? a.score > b.score : a.node < b.node;
    });
    if (out[i].size() > c) out[i].resize(c);
  }
  return out;
}

class TopCOracle : public ::testing::TestWithParam<Method> {};

TEST_P(TopCOracle, MatchesExhaustiveSort) {
  const Graph g = testing::random_graph(100, 0.05, 31);
  const MethodSpec spec{.method = GetParam()};
  const auto recs = top_c_recommend(g, spec, 10);
  const auto want = exhaustive_top_c(g, spec, 10);
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    ASSERT_EQ(recs.per_node[i].size(), want[i].size()) << i;
    for (std::size_t k = 0; k < want[i].size(); ++k) {
      const auto& got = recs.per_node[i][k];
      if (spec.method == Method::lrw) {
        // Row and pair routes may differ in the last bits; compare scores
        // with a tolerance and accept near-tie reorderings.
        EXPECT_NEAR(got.score, want[i][k].score, 1e-14);
      } else {
        EXPECT_EQ(got.node, want[i][k].node) << i << " rank " << k;
        EXPECT_EQ(got.score, want[i][k].score);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllMethods, TopCOracle, ::testing::ValuesIn(kAllMethods),
                         [](const auto& info) { return std::string(method_name(info.param)); });

TEST(Vcmpr, RecallSaturatesAndMisses) {
  RecommendationList recs{.top_c = 50, .per_node = {{{1, 1.0}}, {{2, 1.0}}, {}}};
  const VcmprResult r = vcmpr_at_c(recs, EdgeList{{0, 1}}, 50);
  ASSERT_EQ(r.per_node.size(), 2u);
  EXPECT_EQ(r.per_node[0].vcmpr, 1.0);
  EXPECT_EQ(r.per_node[1].vcmpr, 0.0);
  EXPECT_EQ(r.value, 0.5);
  EXPECT_THROW(vcmpr_at_c(recs, EdgeList{}, 50), InputError);
}

TEST(Vcmpr, HandEnumeratedToy) {
  // Held out: (0,1), (0,2), (5,6).
  //   C=2: node0 [1,3] -> 1/2; node1 [4,0] -> 1; node2 [3,4] -> 0;
  //        node5 [7,6] -> 1; node6 [] -> 0. Mean 2.5/5.
  //   C=1: only node0 hits (precision 1). Mean 1/5.
  RecommendationList recs;
  recs.top_c = 2;
  recs.per_node.resize(8);
  recs.per_node[0] = {{1, 3.0}, {3, 2.0}};
  recs.per_node[1] = {{4, 3.0}, {0, 2.0}};
  recs.per_node[2] = {{3, 3.0}, {4, 2.0}};
  recs.per_node[5] = {{7, 3.0}, {6, 2.0}};
  const EdgeList pos{{0, 1}, {0, 2}, {5, 6}};
  EXPECT_DOUBLE_EQ(vcmpr_at_c(recs, pos, 2).value, 0.5);
  EXPECT_DOUBLE_EQ(vcmpr_at_c(recs, pos, 1).value, 0.2);
  const EdgeList shuffled{{6, 5}, {0, 2}, {1, 0}};
  EXPECT_DOUBLE_EQ(vcmpr_at_c(recs, shuffled, 2).value, 0.5);
}

TEST(Vcmpr, IgnoresCandidatesBelowC) {
  RecommendationList recs{.top_c = 3, .per_node = {{{2, 3.0}, {3, 2.0}, {1, 1.0}}, {}, {}, {}}};
  const EdgeList pos{{0, 1}};
  EXPECT_EQ(vcmpr_at_c(recs, pos, 2).value, vcmpr_at_c(recs, pos, 1).value);
}

double rbo_direct(const Ranking& a, const Ranking& b, double p) {
  const std::size_t d = a.size();
  double sum = 0, last = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    std::size_t overlap = 0;
    for (std::size_t x = 0; x < k; ++x)
      overlap += std::count(b.begin(), b.begin() + k, a[x]);
    last = static_cast<double>(overlap) / k;
    sum += std::pow(p, k - 1) * last;
  }
  return (1 - p) * sum + std::pow(p, d) * last;
}

TEST(Rbo, Examples) {
  EXPECT_DOUBLE_EQ(rbo({"x", "y", "z"}, {"y", "x", "z"}, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(rbo({"x", "y"}, {"y", "x"}, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(rbo({"a", "b", "c"}, {"a", "b", "c"}, 0.9), 1.0);
  EXPECT_THROW(rbo({"a", "b"}, {"a", "c"}, 0.5), InputError);
  EXPECT_THROW(rbo({"a", "a"}, {"a", "a"}, 0.5), InputError);
  EXPECT_THROW(rbo({"a"}, {"a", "b"}, 0.5), InputError);
  EXPECT_THROW(rbo({"a"}, {"a"}, 1.0), ParameterError);
}

TEST(Rbo, ExhaustiveSmallRankings) {
  for (std::size_t d = 1; d <= 5; ++d) {
    Ranking base;
    for (std::size_t i = 0; i < d; ++i) base.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<Ranking> perms;
    Ranking r = base;
    do perms.push_back(r);
    while (std::next_permutation(r.begin(), r.end()));

    for (double p : {0.3, 0.5, 0.9}) {
      for (const auto& a : perms) {
        for (const auto& b : perms) {
          const double v = rbo(a, b, p);
          EXPECT_NEAR(v, rbo_direct(a, b, p), 1e-12);
          EXPECT_DOUBLE_EQ(v, rbo(b, a, p));
          EXPECT_EQ(std::abs(v - 1.0) < 1e-12, a == b);
          EXPECT_GE(v, 0.0);
          EXPECT_LE(v, 1.0 + 1e-12);
          // Fixing an inverted adjacent pair in b never lowers agreement,
          // and raises it when it changes the top-(k+1) overlap.
          for (std::size_t k = 0; k + 1 < d; ++k) {
            auto pos_a = [&](const std::string& x) { return std::find(a.begin(), a.end(), x) - a.begin(); };
            if (pos_a(b[k + 1]) > pos_a(b[k])) continue;
            Ranking closer = b;
            std::swap(closer[k], closer[k + 1]);
            const double after = rbo(a, closer, p);
            EXPECT_GE(after, v - 1e-15);
            const bool gains = pos_a(b[k + 1]) <= static_cast<std::ptrdiff_t>(k) &&
                               pos_a(b[k]) > static_cast<std::ptrdiff_t>(k);
            if (gains) {
              EXPECT_GT(after, v);
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace lpbench
