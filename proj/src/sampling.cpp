// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "lpbench/error.hpp"
#include "lpbench/rng.hpp"

namespace lpbench {

namespace {

constexpr std::size_t kAttemptsPerNegative = 10'000;

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::size_t pair_capacity(std::size_t nodes) { return nodes < 2 ? 0 : nodes * (nodes - 1) / 2; }

// Shared rejection loop. draw() yields one endpoint per call.
template <typename Draw>
EdgeList rejection_sample(const Graph& g, std::span<const Edge> positives, std::size_t count,
                          std::size_t candidate_nodes, Draw draw, Rng& rng) {
  // Positives that are not edges of g would also be excluded; count them so
  // the capacity check stays exact.
  std::unordered_set<std::uint64_t> held_out;
  std::size_t held_out_non_edges = 0;
  for (const Edge& e : positives) {
    if (e.u >= g.num_nodes() || e.v >= g.num_nodes()) throw InputError("positive edge out of range");
    if (held_out.insert(e.key()).second && !e.is_loop() && !g.has_edge(e.u, e.v)) {
      ++held_out_non_edges;
    }
  }
  // Candidate nodes always include every non-isolated node, so all edges of
  // g fall inside the candidate pair space.
  const std::size_t capacity = pair_capacity(candidate_nodes);
  const std::size_t blocked = g.num_edges() + held_out_non_edges;
  const std::size_t available = capacity > blocked ? capacity - blocked : 0;
  if (count > available) {
    throw SaturationError("requested " + std::to_string(count) + " negatives but only " +
                          std::to_string(available) + " non-edges exist");
  }

  EdgeList out;
  out.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(count * 2);
  const std::size_t max_attempts = kAttemptsPerNegative * std::max<std::size_t>(count, 1);
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > max_attempts) {
      throw SaturationError("negative sampling exceeded " + std::to_string(max_attempts) +
                            " attempts; graph too dense");
    }
    const NodeId i = draw(rng);
    const NodeId j = draw(rng);
    if (i == j) continue;
    const Edge e(i, j);
    if (g.has_edge(i, j) || held_out.count(e.key()) != 0 || !seen.insert(e.key()).second) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace

std::string_view sampler_name(NegativeSampler s) {
  return s == NegativeSampler::uniform ? "uniform" : "degree-corrected";
}

NegativeSampler parse_sampler(std::string_view name) {
  if (name == "uniform") return NegativeSampler::uniform;
  if (name == "degree-corrected" || name == "degree_corrected") {
    return NegativeSampler::degree_corrected;
  }
  throw InputError("unknown negative sampler '" + std::string(name) + "'");
}

PositiveSplit split_positive(const Graph& g, double beta, std::uint64_t seed) {
  if (!(beta > 0.0 && beta < 1.0)) throw ParameterError("beta must lie in (0, 1)");
  EdgeList all = g.edges();
  const auto take = static_cast<std::size_t>(std::llround(beta * static_cast<double>(all.size())));
  Rng rng = make_rng(seed);
  // Partial Fisher-Yates: the first `take` slots are a uniform sample
  // without replacement.
  for (std::size_t k = 0; k < take; ++k) {
    const std::size_t r = k + uniform_index(rng, all.size() - k);
    std::swap(all[k], all[r]);
  }
  PositiveSplit split;
  split.positives.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take));
  EdgeList rest(all.begin() + static_cast<std::ptrdiff_t>(take), all.end());
  std::sort(rest.begin(), rest.end());
  split.train = Graph::from_canonical_edges(rest, g.num_nodes());
  return split;
}

EdgeList sample_negative_uniform(const Graph& g, std::span<const Edge> positives,
                                 std::size_t count, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const std::size_t n = g.num_nodes();
  if (count > 0 && n < 2) throw SaturationError("graph has fewer than two nodes");
  return rejection_sample(
      g, positives, count, n, [n](Rng& r) { return static_cast<NodeId>(uniform_index(r, n)); },
      rng);
}

EdgeList sample_negative_degree_corrected(const Graph& g, std::span<const Edge> positives,
                                          std::size_t count, std::uint64_t seed) {
  if (g.num_edges() == 0) throw ParameterError("degree-corrected sampling needs a graph with edges");
  Rng rng = make_rng(seed);
  const auto offsets = g.offsets();
  const std::uint64_t stubs = offsets.back();
  std::size_t active = 0;
  for (NodeId i = 0; i < g.num_nodes(); ++i) active += g.degree_unchecked(i) > 0 ? 1 : 0;
  // Node list with each node repeated degree times, realized implicitly by
  // inverting the cumulative degree sequence.
  auto draw = [offsets, stubs](Rng& r) {
    const std::uint64_t slot = std::uniform_int_distribution<std::uint64_t>(0, stubs - 1)(r);
    return static_cast<NodeId>(std::upper_bound(offsets.begin(), offsets.end(), slot) -
                               offsets.begin() - 1);
  };
  return rejection_sample(g, positives, count, active, draw, rng);
}

EdgeList sample_negatives(NegativeSampler kind, const Graph& g, std::span<const Edge> positives,
                          std::size_t count, std::uint64_t seed) {
  return kind == NegativeSampler::uniform
             ? sample_negative_uniform(g, positives, count, seed)
             : sample_negative_degree_corrected(g, positives, count, seed);
}

EdgeSplit make_edge_split(const Graph& g, double beta, NegativeSampler sampler,
                          std::uint64_t seed) {
  PositiveSplit pos = split_positive(g, beta, combine_seed(seed, "positives"));
  EdgeSplit split;
  split.negatives = sample_negatives(sampler, g, pos.positives, pos.positives.size(),
                                     combine_seed(seed, "negatives"));
  split.train = std::move(pos.train);
  split.positives = std::move(pos.positives);
  split.beta = beta;
  split.sampler = sampler;
  split.seed = seed;
  return split;
}

double DegreeHistogram::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < mass.size(); ++k) m += static_cast<double>(k) * mass[k];
  return m;
}

double DegreeHistogram::ccdf(std::size_t k) const {
  double tail = 0.0;
  for (std::size_t x = k; x < mass.size(); ++x) tail += mass[x];
  return tail;
}

DegreeHistogram endpoint_degree_histogram(std::span<const Edge> edges, const Graph& g) {
  DegreeHistogram h;
  for (const Edge& e : edges) {
    for (NodeId v : {e.u, e.v}) {
      const std::uint32_t k = g.degree(v);
      if (k >= h.mass.size()) h.mass.resize(k + 1, 0.0);
      h.mass[k] += 1.0;
    }
  }
  const double total = 2.0 * static_cast<double>(edges.size());
  for (auto& x : h.mass) x /= total;
  return h;
}

DegreeHistogram degree_distribution(const Graph& g) {
  DegreeHistogram h;
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const std::uint32_t k = g.degree_unchecked(i);
    if (k >= h.mass.size()) h.mass.resize(k + 1, 0.0);
    h.mass[k] += 1.0;
  }
  for (auto& x : h.mass) x /= static_cast<double>(g.num_nodes());
  return h;
}

DegreeHistogram size_biased(const DegreeHistogram& p) {
  DegreeHistogram q;
  q.mass.resize(p.mass.size());
  const double mean = p.mean();
  if (mean <= 0.0) throw InputError("size-biased law needs a positive mean degree");
  for (std::size_t k = 0; k < p.mass.size(); ++k) q.mass[k] = static_cast<double>(k) * p.mass[k] / mean;
  return q;
}

double ks_distance(const DegreeHistogram& a, const DegreeHistogram& b) {
  const std::size_t len = std::max(a.mass.size(), b.mass.size());
  double ca = 0.0, cb = 0.0, d = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    ca += k < a.mass.size() ? a.mass[k] : 0.0;
    cb += k < b.mass.size() ? b.mass[k] : 0.0;
    d = std::max(d, std::abs(ca - cb));
  }
  return d;
}

double ks_two_sample_pvalue(double d, std::size_t n, std::size_t m) {
  const double ne = static_cast<double>(n) * static_cast<double>(m) / static_cast<double>(n + m);
  const double root = std::sqrt(ne);
  const double lambda = (root + 0.12 + 0.11 / root) * d;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 1.0 : -1.0) * term;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace lpbench
