// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace lpbench {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

/// An unordered node pair stored as (min, max).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  constexpr Edge() = default;
  constexpr Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool is_loop() const { return u == v; }
  constexpr std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Immutable simple undirected graph in CSR form.
///
/// Each undirected edge is stored once per endpoint; every adjacency row is
/// strictly increasing and never contains its own node. Safe to share between
/// threads once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return num_edges_; }

  /// Throws InputError on an out-of-range id.
  std::uint32_t degree(NodeId i) const;
  std::span<const NodeId> neighbors(NodeId i) const;
  bool has_edge(NodeId i, NodeId j) const;

  // Unchecked variants for inner loops.
  std::uint32_t degree_unchecked(NodeId i) const {
    return static_cast<std::uint32_t>(offsets_[i + 1] - offsets_[i]);
  }
  std::span<const NodeId> neighbors_unchecked(NodeId i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }

  /// Row offsets; offsets()[i+1] - offsets()[i] is the degree, so this is
  /// also the cumulative degree sequence.
  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const NodeId> adjacency() const { return adjacency_; }

  std::vector<std::uint32_t> degrees() const;
  /// All edges once each, canonical and sorted.
  EdgeList edges() const;

  /// Builds directly from canonical, sorted, de-duplicated loop-free edges.
  static Graph from_canonical_edges(std::span<const Edge> edges, std::size_t num_nodes);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::size_t num_edges_ = 0;
};

struct BuildResult {
  Graph graph;
  std::size_t duplicates_dropped = 0;
  std::size_t self_loops_dropped = 0;
};

/// Builds a simple graph from arbitrary pairs. Self-loops and repeated pairs
/// are dropped and counted. Without num_nodes the node count is max id + 1.
BuildResult build_graph(std::span<const Edge> pairs,
                        std::optional<std::size_t> num_nodes = std::nullopt);

struct ComponentResult {
  Graph graph;
  /// old id -> new id, kInvalidNode for nodes outside the component.
  std::vector<NodeId> old_to_new;
};

/// Largest connected component; equal sizes go to the component holding the
/// smallest node id. New ids preserve the relative order of old ids.
ComponentResult largest_connected_component(const Graph& g);

/// Connected component label per node, labels numbered by smallest member.
std::vector<std::uint32_t> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace lpbench
