// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "lpbench/error.hpp"
#include "lpbench/rng.hpp"

namespace lpbench {

namespace {

constexpr int kMaxSweeps = 100;
constexpr int kSwapAttempts = 50;
constexpr int kMaxPlacementRetries = 100;
constexpr int kMaxDegreeRedraws = 100;

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// p(k) ∝ k^-tau on [lo, hi], sampled by inverse CDF.
class DiscretePowerlaw {
 public:
  DiscretePowerlaw(double tau, std::uint32_t lo, std::uint32_t hi) : lo_(lo) {
    cdf_.reserve(hi - lo + 1);
    double acc = 0.0;
    for (std::uint64_t k = lo; k <= hi; ++k) {
      acc += std::pow(static_cast<double>(k), -tau);
      cdf_.push_back(acc);
    }
  }

  std::uint32_t operator()(Rng& rng) const {
    const double u = uniform01(rng) * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return lo_ + static_cast<std::uint32_t>(it - cdf_.begin());
  }

 private:
  std::uint32_t lo_;
  std::vector<double> cdf_;
};

void make_sum_even(std::vector<std::uint32_t>& degrees) {
  const std::uint64_t total = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  if (total % 2 == 0 || degrees.empty()) return;
  auto it = std::max_element(degrees.begin(), degrees.end());
  if (*it > 0) --*it;
}

double mean_of(std::span<const std::uint32_t> xs) {
  if (xs.empty()) return 0.0;
  return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::uint64_t{0})) /
         static_cast<double>(xs.size());
}

// Edge set shared by every stub-matching pass of one generator run.
class EdgeSink {
 public:
  bool contains(NodeId a, NodeId b) const { return keys_.count(Edge(a, b).key()) != 0; }
  void add(NodeId a, NodeId b) { keys_.insert(Edge(a, b).key()); }
  void remove(NodeId a, NodeId b) { keys_.erase(Edge(a, b).key()); }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

// Pairs up stubs uniformly at random, rejecting loops, repeated pairs and
// pairs the caller disallows. Rejected stubs are re-paired for up to
// kMaxSweeps sweeps; each sweep also tries to place a rejected pair (u, v) by
// rewiring an already placed edge (x, y) into (u, x), (v, y). Appends the
// placed edges to `out` and returns the number of stubs left over.
template <typename Allowed>
std::size_t match_stubs(std::vector<NodeId> stubs, EdgeSink& sink, Allowed allowed, Rng& rng,
                        EdgeList& out) {
  auto valid = [&](NodeId a, NodeId b) { return a != b && allowed(a, b) && !sink.contains(a, b); };
  EdgeList placed;
  for (int sweep = 0; sweep < kMaxSweeps && stubs.size() >= 2; ++sweep) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<NodeId> rejected;
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
      const NodeId u = stubs[k], v = stubs[k + 1];
      if (valid(u, v)) {
        sink.add(u, v);
        placed.emplace_back(u, v);
      } else {
        rejected.push_back(u);
        rejected.push_back(v);
      }
    }
    const bool odd = stubs.size() % 2 == 1;
    const NodeId spare = odd ? stubs.back() : 0;

    std::vector<NodeId> still;
    for (std::size_t k = 0; k + 1 < rejected.size(); k += 2) {
      const NodeId u = rejected[k], v = rejected[k + 1];
      bool fixed = false;
      for (int attempt = 0; attempt < kSwapAttempts && !fixed && !placed.empty(); ++attempt) {
        const std::size_t r = uniform_index(rng, placed.size());
        NodeId x = placed[r].u, y = placed[r].v;
        if (uniform01(rng) < 0.5) std::swap(x, y);
        if (valid(u, x) && valid(v, y) && Edge(u, x) != Edge(v, y)) {
          sink.remove(x, y);
          sink.add(u, x);
          sink.add(v, y);
          placed[r] = Edge(u, x);
          placed.emplace_back(v, y);
          fixed = true;
        }
      }
      if (!fixed) {
        still.push_back(u);
        still.push_back(v);
      }
    }
    if (odd) still.push_back(spare);
    stubs = std::move(still);
  }
  out.insert(out.end(), placed.begin(), placed.end());
  return stubs.size();
}

std::vector<NodeId> expand_stubs(std::span<const NodeId> nodes,
                                 std::span<const std::uint32_t> counts) {
  std::vector<NodeId> stubs;
  for (NodeId v : nodes) stubs.insert(stubs.end(), counts[v], v);
  return stubs;
}

}  // namespace

Graph generate_price(std::size_t n, std::size_t m_per_node, std::uint64_t seed) {
  if (m_per_node < 1 || n <= m_per_node) {
    throw ParameterError("price graph needs n > m_per_node >= 1 (n=" + std::to_string(n) +
                         ", m=" + std::to_string(m_per_node) + ")");
  }
  Rng rng = make_rng(seed);
  EdgeList edges;
  edges.reserve(m_per_node * (m_per_node + 1) / 2 + (n - m_per_node - 1) * m_per_node);
  // Every edge contributes both endpoints, so a uniform pick from this list
  // selects a node with probability proportional to its degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  const auto seed_size = static_cast<NodeId>(m_per_node + 1);
  for (NodeId a = 0; a < seed_size; ++a) {
    for (NodeId b = a + 1; b < seed_size; ++b) {
      edges.emplace_back(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }
  std::vector<NodeId> targets;
  for (auto v = seed_size; v < n; ++v) {
    targets.clear();
    const std::size_t pool = endpoints.size();
    while (targets.size() < m_per_node) {
      const NodeId t = endpoints[uniform_index(rng, pool)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_canonical_edges(edges, n);
}

double powerlaw_mean(double tau, std::uint32_t k_min, std::uint32_t k_max) {
  double s0 = 0.0, s1 = 0.0;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    const double w = std::pow(static_cast<double>(k), -tau);
    s0 += w;
    s1 += w * static_cast<double>(k);
  }
  return s1 / s0;
}

std::vector<std::uint32_t> sample_powerlaw_degrees(const PowerlawDegreeParams& params,
                                                   std::uint64_t seed) {
  if (!(params.tau > 1.0)) throw ParameterError("power-law exponent must exceed 1");
  if (params.k_min < 1 || params.k_min > params.k_max) {
    throw ParameterError("need 1 <= k_min <= k_max");
  }

  std::uint32_t k_min = params.k_min;
  if (params.target_mean) {
    const double target = *params.target_mean;
    // Suffix sums give the truncated mean for every candidate k_min in one
    // pass; the mean is increasing in k_min.
    const std::uint32_t span_len = params.k_max - params.k_min + 1;
    std::vector<double> s0(span_len + 1, 0.0), s1(span_len + 1, 0.0);
    for (std::uint32_t off = span_len; off-- > 0;) {
      const double k = static_cast<double>(params.k_min + off);
      const double w = std::pow(k, -params.tau);
      s0[off] = s0[off + 1] + w;
      s1[off] = s1[off + 1] + w * k;
    }
    double best_gap = INFINITY;
    for (std::uint32_t off = 0; off < span_len; ++off) {
      const double gap = std::abs(s1[off] / s0[off] - target);
      if (gap < best_gap) {
        best_gap = gap;
        k_min = params.k_min + off;
      }
    }
    if (best_gap > 0.05 * target) {
      throw ParameterError("target mean degree " + std::to_string(target) +
                           " is not reachable with k_max=" + std::to_string(params.k_max) +
                           " and tau=" + std::to_string(params.tau));
    }
  }

  Rng rng = make_rng(seed);
  DiscretePowerlaw draw(params.tau, k_min, params.k_max);
  std::vector<std::uint32_t> degrees(params.n);
  for (int attempt = 0; attempt < kMaxDegreeRedraws; ++attempt) {
    for (auto& k : degrees) k = draw(rng);
    make_sum_even(degrees);
    if (!params.target_mean || params.n == 0 ||
        std::abs(mean_of(degrees) - *params.target_mean) <= 0.05 * *params.target_mean) {
      return degrees;
    }
  }
  throw ParameterError("realized mean degree kept missing the target by more than 5%");
}

std::vector<std::uint32_t> sample_lognormal_degrees(std::size_t n, double mu, double sigma,
                                                    std::uint64_t seed) {
  if (n < 2) throw ParameterError("need at least two nodes");
  if (!(sigma >= 0.0)) throw ParameterError("sigma must be non-negative");
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(mu, sigma);
  std::vector<std::uint32_t> degrees(n);
  const double cap = static_cast<double>(n - 1);
  for (auto& k : degrees) {
    const double x = sigma == 0.0 ? mu : normal(rng);
    k = static_cast<std::uint32_t>(std::clamp(std::ceil(std::exp(x)), 1.0, cap));
  }
  make_sum_even(degrees);
  return degrees;
}

ConfigurationGraph generate_configuration(std::span<const std::uint32_t> degrees,
                                          std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<NodeId> nodes(degrees.size());
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  EdgeSink sink;
  EdgeList edges;
  ConfigurationGraph result;
  result.discarded_stubs = match_stubs(
      expand_stubs(nodes, degrees), sink, [](NodeId, NodeId) { return true; }, rng, edges);
  std::sort(edges.begin(), edges.end());
  result.graph = Graph::from_canonical_edges(edges, degrees.size());
  return result;
}

void LfrParams::validate() const {
  if (n < 2) throw ParameterError("LFR: n must be at least 2");
  if (!(tau1 > 1.0)) throw ParameterError("LFR: tau1 must exceed 1");
  if (!(tau2 > 1.0)) throw ParameterError("LFR: tau2 must exceed 1");
  if (!(mu >= 0.0 && mu <= 1.0)) throw ParameterError("LFR: mu must lie in [0, 1]");
  if (min_comm < 1 || min_comm > max_comm || max_comm > n) {
    throw ParameterError("LFR: need 1 <= min_comm <= max_comm <= n");
  }
  if (!(avg_degree > 0.0) || avg_degree > max_degree) {
    throw ParameterError("LFR: need 0 < avg_degree <= max_degree");
  }
  if (max_degree >= n) throw ParameterError("LFR: max_degree must be below n");
}

LfrGraph generate_lfr(const LfrParams& params, std::uint64_t seed) {
  params.validate();
  const std::size_t n = params.n;
  Rng rng = make_rng(seed);

  LfrGraph result;
  result.target_degrees = sample_powerlaw_degrees(
      {.n = n, .tau = params.tau1, .k_min = 1, .k_max = params.max_degree,
       .target_mean = params.avg_degree},
      combine_seed(seed, "lfr-degrees"));
  const auto& degrees = result.target_degrees;

  // Internal degree (1-mu)*k with the fractional part rounded stochastically
  // so the expected mixing is exact.
  std::vector<std::uint32_t> internal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double want = (1.0 - params.mu) * degrees[i];
    const double base = std::floor(want);
    internal[i] = static_cast<std::uint32_t>(base) + (uniform01(rng) < want - base ? 1 : 0);
  }
  const std::uint32_t max_internal = *std::max_element(internal.begin(), internal.end());
  if (max_internal >= params.max_comm) {
    throw GenerationError("LFR: internal degree " + std::to_string(max_internal) +
                          " does not fit in a community of at most max_comm = " +
                          std::to_string(params.max_comm) + " nodes");
  }

  // Nodes by descending internal degree: each node only fits communities
  // larger than its internal degree, and those sets are nested, so placing
  // the most constrained nodes first never strands a feasible assignment.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return internal[a] > internal[b]; });

  DiscretePowerlaw size_draw(params.tau2, static_cast<std::uint32_t>(params.min_comm),
                             static_cast<std::uint32_t>(params.max_comm));
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> labels(n);
  std::string last_failure;
  bool placed = false;
  for (int attempt = 0; attempt < kMaxPlacementRetries && !placed; ++attempt) {
    sizes.clear();
    std::size_t total = 0;
    while (total < n) {
      const std::size_t s = std::min<std::size_t>(size_draw(rng), n - total);
      sizes.push_back(s);
      total += s;
    }
    if (sizes.back() < params.min_comm) {
      last_failure = "last community truncated below min_comm";
      continue;
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    if (sizes.front() <= max_internal) {
      last_failure = "no community larger than the maximum internal degree " +
                     std::to_string(max_internal);
      continue;
    }

    std::vector<std::size_t> room(sizes);
    placed = true;
    for (NodeId v : order) {
      // Communities are sorted by size, so the eligible ones form a prefix.
      std::size_t eligible = 0, free_slots = 0;
      while (eligible < sizes.size() && sizes[eligible] > internal[v]) {
        free_slots += room[eligible];
        ++eligible;
      }
      if (free_slots == 0) {
        placed = false;
        last_failure = "no community with room for a node of internal degree " +
                       std::to_string(internal[v]);
        break;
      }
      std::size_t slot = uniform_index(rng, free_slots);
      std::size_t c = 0;
      while (slot >= room[c]) slot -= room[c++];
      --room[c];
      labels[v] = static_cast<std::uint32_t>(c);
    }
  }
  if (!placed) {
    throw GenerationError("LFR placement failed after " + std::to_string(kMaxPlacementRetries) +
                          " retries: " + last_failure);
  }

  std::vector<std::vector<NodeId>> members(sizes.size());
  for (NodeId v = 0; v < n; ++v) members[labels[v]].push_back(v);

  // Each community needs an even number of internal stubs; move one stub of
  // a random member to the external side when it does not. With mu = 0 the
  // stub is dropped instead so no edge leaves its community.
  std::vector<std::uint32_t> external(n);
  for (NodeId v = 0; v < n; ++v) external[v] = degrees[v] - internal[v];
  for (auto& group : members) {
    std::uint64_t sum = 0;
    for (NodeId v : group) sum += internal[v];
    if (sum % 2 == 1) {
      std::vector<NodeId> donors;
      for (NodeId v : group) {
        if (internal[v] > 0) donors.push_back(v);
      }
      const NodeId v = donors[uniform_index(rng, donors.size())];
      --internal[v];
      if (params.mu > 0.0) {
        ++external[v];
      } else {
        ++result.discarded_stubs;
      }
    }
  }

  EdgeSink sink;
  EdgeList edges;
  for (auto& group : members) {
    result.discarded_stubs += match_stubs(
        expand_stubs(group, internal), sink, [](NodeId, NodeId) { return true; }, rng, edges);
  }
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  result.discarded_stubs += match_stubs(
      expand_stubs(all, external), sink,
      [&](NodeId a, NodeId b) { return labels[a] != labels[b]; }, rng, edges);

  result.total_stubs = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  std::sort(edges.begin(), edges.end());
  result.graph = Graph::from_canonical_edges(edges, n);
  result.labels = std::move(labels);
  return result;
}

double mixing_fraction(const Graph& g, std::span<const std::uint32_t> labels) {
  if (labels.size() != g.num_nodes()) throw InputError("one label per node required");
  if (g.num_edges() == 0) return 0.0;
  std::size_t crossing = 0;
  for (const Edge& e : g.edges()) crossing += labels[e.u] != labels[e.v] ? 1 : 0;
  return static_cast<double>(crossing) / static_cast<double>(g.num_edges());
}

}  // namespace lpbench
