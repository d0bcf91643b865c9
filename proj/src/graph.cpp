// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/graph.hpp"

#include <algorithm>
#include <string>

#include "lpbench/error.hpp"

namespace lpbench {

namespace {

void check_node(const Graph& g, NodeId i) {
  if (i >= g.num_nodes()) {
    throw InputError("node id " + std::to_string(i) + " out of range (num_nodes=" +
                     std::to_string(g.num_nodes()) + ")");
  }
}

}  // namespace

std::uint32_t Graph::degree(NodeId i) const {
  check_node(*this, i);
  return degree_unchecked(i);
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_node(*this, i);
  return neighbors_unchecked(i);
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  check_node(*this, i);
  check_node(*this, j);
  if (i == j) return false;
  // Search the shorter row.
  if (degree_unchecked(i) > degree_unchecked(j)) std::swap(i, j);
  auto row = neighbors_unchecked(i);
  return std::binary_search(row.begin(), row.end(), j);
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> out(num_nodes());
  for (NodeId i = 0; i < out.size(); ++i) out[i] = degree_unchecked(i);
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(num_edges_);
  for (NodeId i = 0; i < num_nodes(); ++i) {
    for (NodeId j : neighbors_unchecked(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph Graph::from_canonical_edges(std::span<const Edge> edges, std::size_t num_nodes) {
  Graph g;
  g.offsets_.assign(num_nodes + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < num_nodes; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges sorted by (u, v) fill row u ascending. Row v receives u values in
  // ascending order too, but interleaved with v's own larger neighbors, so
  // every row gets a final sort.
  for (const Edge& e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < num_nodes; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  g.num_edges_ = edges.size();
  return g;
}

BuildResult build_graph(std::span<const Edge> pairs, std::optional<std::size_t> num_nodes) {
  std::size_t n = 0;
  for (const Edge& e : pairs) n = std::max<std::size_t>(n, std::size_t{e.v} + 1);
  if (num_nodes) {
    if (!pairs.empty() && n > *num_nodes) {
      throw InputError("edge endpoint " + std::to_string(n - 1) + " >= num_nodes " +
                       std::to_string(*num_nodes));
    }
    n = *num_nodes;
  }

  BuildResult result;
  EdgeList clean;
  clean.reserve(pairs.size());
  for (const Edge& e : pairs) {
    // Edge's constructor already canonicalized; re-canonicalize in case a
    // caller filled the fields directly.
    Edge c(e.u, e.v);
    if (c.is_loop()) {
      ++result.self_loops_dropped;
    } else {
      clean.push_back(c);
    }
  }
  std::sort(clean.begin(), clean.end());
  auto last = std::unique(clean.begin(), clean.end());
  result.duplicates_dropped = static_cast<std::size_t>(clean.end() - last);
  clean.erase(last, clean.end());
  result.graph = Graph::from_canonical_edges(clean, n);
  return result;
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::uint32_t> label(n, kInvalidNode);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != kInvalidNode) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors_unchecked(u)) {
        if (label[v] == kInvalidNode) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return true;
  auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](auto l) { return l == 0; });
}

ComponentResult largest_connected_component(const Graph& g) {
  ComponentResult result;
  const std::size_t n = g.num_nodes();
  result.old_to_new.assign(n, kInvalidNode);
  if (n == 0) return result;

  auto label = connected_components(g);
  std::vector<std::size_t> size;
  for (auto l : label) {
    if (l >= size.size()) size.resize(l + 1, 0);
    ++size[l];
  }
  // Labels are assigned in order of smallest member, so the first maximum
  // is the tie-break winner.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(size.begin(), size.end()) - size.begin());

  NodeId next = 0;
  for (NodeId i = 0; i < n; ++i) {
    if (label[i] == best) result.old_to_new[i] = next++;
  }
  EdgeList kept;
  for (const Edge& e : g.edges()) {
    if (label[e.u] == best) kept.emplace_back(result.old_to_new[e.u], result.old_to_new[e.v]);
  }
  result.graph = Graph::from_canonical_edges(kept, next);
  return result;
}

}  // namespace lpbench
