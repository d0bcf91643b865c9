// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lpbench/error.hpp"
#include "lpbench/simd/kernels.hpp"

namespace lpbench {

namespace {

constexpr std::uint32_t kUnreached = kInvalidNode;

void check_pairs(const Graph& g, std::span<const Edge> pairs) {
  for (const Edge& e : pairs) {
    if (e.v >= g.num_nodes()) {
      throw InputError("pair (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") out of range");
    }
  }
}

// Per-node weight of a common neighbor.
std::vector<double> common_neighbor_weights(const Graph& g, Method m) {
  std::vector<double> w(g.num_nodes(), 0.0);
  for (NodeId z = 0; z < g.num_nodes(); ++z) {
    const double k = g.degree_unchecked(z);
    if (m == Method::adamic_adar) {
      w[z] = k > 1.0 ? 1.0 / std::log(k) : 0.0;
    } else if (m == Method::resource_alloc) {
      w[z] = k > 0.0 ? 1.0 / k : 0.0;
    } else {
      w[z] = 1.0;
    }
  }
  return w;
}

// Dense vector with a list of touched slots so resets cost O(touched).
struct SparseVec {
  std::vector<double> value;
  std::vector<std::uint8_t> mark;
  std::vector<NodeId> touched;

  explicit SparseVec(std::size_t n) : value(n, 0.0), mark(n, 0) {}

  void add(NodeId i, double x) {
    if (!mark[i]) {
      mark[i] = 1;
      touched.push_back(i);
    }
    value[i] += x;
  }
  void clear() {
    for (NodeId i : touched) {
      value[i] = 0.0;
      mark[i] = 0;
    }
    touched.clear();
  }
};

// (A²) row of `source`: number of length-2 walks to every node.
void two_hop_counts(const Graph& g, NodeId source, SparseVec& out) {
  out.clear();
  for (NodeId u : g.neighbors_unchecked(source)) {
    for (NodeId v : g.neighbors_unchecked(u)) out.add(v, 1.0);
  }
}

// Distribution of a random walk from `source` after `steps` steps, divided
// by the degree of each node, i.e. w[x] = π_source,x / k_x. A walk from an
// isolated node has no mass. Leaves the result in `cur`.
void walk_over_degree(const Graph& g, NodeId source, unsigned steps, SparseVec& cur,
                      SparseVec& next) {
  cur.clear();
  if (g.degree_unchecked(source) > 0) cur.add(source, 1.0);
  for (unsigned s = 0; s < steps; ++s) {
    next.clear();
    for (NodeId x : cur.touched) {
      const double share = cur.value[x] / g.degree_unchecked(x);
      for (NodeId y : g.neighbors_unchecked(x)) next.add(y, share);
    }
    std::swap(cur, next);
  }
  for (NodeId x : cur.touched) cur.value[x] /= g.degree_unchecked(x);
}

double lrw_score(const Graph& g, NodeId u, NodeId v, double pi_uv) {
  const double two_m = 2.0 * static_cast<double>(g.num_edges());
  const double ku = g.degree_unchecked(u);
  const double kv = g.degree_unchecked(v);
  if (two_m == 0.0 || kv == 0.0) return 0.0;
  // Random walks on undirected graphs are reversible: k_u π_uv = k_v π_vu.
  const double pi_vu = pi_uv * ku / kv;
  return (ku / two_m) * pi_uv + (kv / two_m) * pi_vu;
}

// Pair indices grouped by the smaller endpoint.
std::vector<std::size_t> order_by_source(std::span<const Edge> pairs) {
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pairs[a].u < pairs[b].u; });
  return order;
}

void bfs_distances(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                   std::vector<NodeId>& queue, std::size_t targets_left,
                   const std::vector<std::uint8_t>* is_target) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    // Discovery distances are final, so stop once every target is seen.
    if (is_target != nullptr && targets_left == 0) break;
    for (NodeId y : g.neighbors_unchecked(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
        if (is_target != nullptr && (*is_target)[y] && targets_left > 0) --targets_left;
      }
    }
  }
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::pa:
      return "pa";
    case Method::cn:
      return "cn";
    case Method::jaccard:
      return "jaccard";
    case Method::adamic_adar:
      return "adamic_adar";
    case Method::resource_alloc:
      return "resource_alloc";
    case Method::lpi:
      return "lpi";
    case Method::shortest_path:
      return "shortest_path";
    case Method::lrw:
      return "lrw";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  throw InputError("unknown method '" + std::string(name) + "'");
}

void MethodSpec::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ParameterError("epsilon must be > 0");
  if (walk_steps < 2) throw ParameterError("walk_steps must be >= 2");
}

ScoreTable score_pa(const Graph& train, std::span<const Edge> pairs) {
  check_pairs(train, pairs);
  ScoreTable t{.pairs = EdgeList(pairs.begin(), pairs.end()), .scores = {}, .spec = {}};
  t.scores.reserve(pairs.size());
  for (const Edge& e : pairs) {
    t.scores.push_back(static_cast<double>(train.degree_unchecked(e.u)) *
                       static_cast<double>(train.degree_unchecked(e.v)));
  }
  return t;
}

ScoreTable score_heuristic(const Graph& g, std::span<const Edge> pairs, const MethodSpec& spec) {
  spec.validate();
  if (spec.method == Method::pa) {
    ScoreTable t = score_pa(g, pairs);
    t.spec = spec;
    return t;
  }
  check_pairs(g, pairs);
  ScoreTable t{.pairs = EdgeList(pairs.begin(), pairs.end()),
               .scores = std::vector<double>(pairs.size(), 0.0),
               .spec = spec};
  const std::size_t n = g.num_nodes();

  switch (spec.method) {
    case Method::cn:
    case Method::jaccard:
    case Method::adamic_adar:
    case Method::resource_alloc: {
      const auto weight = common_neighbor_weights(g, spec.method);
      std::vector<NodeId> common;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto a = g.neighbors_unchecked(pairs[p].u);
        const auto b = g.neighbors_unchecked(pairs[p].v);
        if (spec.method == Method::cn || spec.method == Method::jaccard) {
          const double shared = static_cast<double>(simd::intersect_count(a, b));
          if (spec.method == Method::cn) {
            t.scores[p] = shared;
          } else {
            const double uni = static_cast<double>(a.size() + b.size()) - shared;
            t.scores[p] = uni > 0.0 ? shared / uni : 0.0;
          }
        } else {
          common.resize(std::min(a.size(), b.size()));
          const std::size_t c = simd::intersect(a, b, common.data());
          // Ascending-order sum; RowScorer accumulates in the same order.
          double s = 0.0;
          for (std::size_t k = 0; k < c; ++k) s += weight[common[k]];
          t.scores[p] = s;
        }
      }
      break;
    }
    case Method::lpi: {
      SparseVec c2(n);
      const auto order = order_by_source(pairs);
      NodeId current = kInvalidNode;
      for (std::size_t p : order) {
        if (pairs[p].u != current) {
          current = pairs[p].u;
          two_hop_counts(g, current, c2);
        }
        const NodeId v = pairs[p].v;
        const double a3 = simd::gather_sum(g.neighbors_unchecked(v), c2.value);
        t.scores[p] = c2.value[v] + spec.epsilon * a3;
      }
      break;
    }
    case Method::lrw: {
      SparseVec cur(n), next(n);
      const auto order = order_by_source(pairs);
      NodeId current = kInvalidNode;
      for (std::size_t p : order) {
        if (pairs[p].u != current) {
          current = pairs[p].u;
          walk_over_degree(g, current, spec.walk_steps - 1, cur, next);
        }
        const NodeId v = pairs[p].v;
        const double pi_uv = simd::gather_sum(g.neighbors_unchecked(v), cur.value);
        t.scores[p] = lrw_score(g, current, v, pi_uv);
      }
      break;
    }
    case Method::shortest_path: {
      std::vector<std::uint32_t> dist(n);
      std::vector<NodeId> queue;
      std::vector<std::uint8_t> is_target(n, 0);
      const auto order = order_by_source(pairs);
      for (std::size_t lo = 0; lo < order.size();) {
        const NodeId source = pairs[order[lo]].u;
        std::size_t hi = lo;
        std::size_t distinct = 0;
        while (hi < order.size() && pairs[order[hi]].u == source) {
          const NodeId v = pairs[order[hi]].v;
          if (!is_target[v]) {
            is_target[v] = 1;
            ++distinct;
          }
          ++hi;
        }
        bfs_distances(g, source, dist, queue, distinct, &is_target);
        for (std::size_t k = lo; k < hi; ++k) {
          const std::size_t p = order[k];
          const NodeId v = pairs[p].v;
          is_target[v] = 0;
          if (v == source) {
            t.scores[p] = 0.0;
          } else {
            t.scores[p] = dist[v] == kUnreached ? 0.0 : 1.0 / dist[v];
          }
        }
        lo = hi;
      }
      break;
    }
    case Method::pa:
      break;
  }
  return t;
}

RowScorer::RowScorer(const Graph& train, MethodSpec spec) : g_(train), spec_(spec) {
  spec_.validate();
  const std::size_t n = g_.num_nodes();
  if (spec_.method == Method::adamic_adar || spec_.method == Method::resource_alloc) {
    weights_ = common_neighbor_weights(g_, spec_.method);
  }
  if (spec_.method == Method::shortest_path) dist_.resize(n);
}

void RowScorer::score_row(NodeId source, std::span<double> out) {
  const Graph& g = g_;
  const std::size_t n = g.num_nodes();
  if (source >= n || out.size() != n) throw InputError("score_row: bad source or output size");
  std::fill(out.begin(), out.end(), 0.0);

  switch (spec_.method) {
    case Method::pa: {
      const double ks = g.degree_unchecked(source);
      for (NodeId j = 0; j < n; ++j) out[j] = ks * static_cast<double>(g.degree_unchecked(j));
      break;
    }
    case Method::cn:
    case Method::jaccard:
      for (NodeId z : g.neighbors_unchecked(source)) {
        for (NodeId j : g.neighbors_unchecked(z)) out[j] += 1.0;
      }
      if (spec_.method == Method::jaccard) {
        const double ks = g.degree_unchecked(source);
        for (NodeId j = 0; j < n; ++j) {
          const double uni = ks + g.degree_unchecked(j) - out[j];
          out[j] = uni > 0.0 ? out[j] / uni : 0.0;
        }
      }
      break;
    case Method::adamic_adar:
    case Method::resource_alloc:
      for (NodeId z : g.neighbors_unchecked(source)) {
        const double w = weights_[z];
        for (NodeId j : g.neighbors_unchecked(z)) out[j] += w;
      }
      break;
    case Method::lpi: {
      SparseVec c2(n);
      two_hop_counts(g, source, c2);
      for (NodeId j = 0; j < n; ++j) {
        out[j] = c2.value[j] + spec_.epsilon * simd::gather_sum(g.neighbors_unchecked(j), c2.value);
      }
      break;
    }
    case Method::lrw: {
      SparseVec cur(n), next(n);
      walk_over_degree(g, source, spec_.walk_steps - 1, cur, next);
      for (NodeId j = 0; j < n; ++j) {
        const double pi = simd::gather_sum(g.neighbors_unchecked(j), cur.value);
        out[j] = lrw_score(g, source, j, pi);
      }
      break;
    }
    case Method::shortest_path: {
      bfs_distances(g, source, dist_, queue_, 0, nullptr);
      for (NodeId j = 0; j < n; ++j) {
        out[j] = (j == source || dist_[j] == kUnreached) ? 0.0 : 1.0 / dist_[j];
      }
      break;
    }
  }
}

}  // namespace lpbench
