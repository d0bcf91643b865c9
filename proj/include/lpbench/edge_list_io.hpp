// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "lpbench/graph.hpp"

namespace lpbench {

/// Parsed edge-list text.
///
/// Format: one pair per line, separated by whitespace and/or a comma. Lines
/// whose first non-blank character is '#' are comments. A comment of the form
/// "# nodes: N" records the node count so isolated trailing nodes survive a
/// write/read cycle.
struct EdgeFile {
  EdgeList pairs;
  std::optional<std::size_t> num_nodes;
};

EdgeFile parse_edge_list(std::istream& in);
EdgeFile read_edge_list(const std::filesystem::path& path);

void format_edge_list(std::ostream& out, std::span<const Edge> pairs,
                      std::optional<std::size_t> num_nodes = std::nullopt);
void write_edge_list(const std::filesystem::path& path, std::span<const Edge> pairs,
                     std::optional<std::size_t> num_nodes = std::nullopt);

/// Order-preserving relabeling of the ids that occur in `pairs` onto 0..K-1.
struct Relabeling {
  EdgeList pairs;
  std::vector<NodeId> new_to_old;
};
Relabeling compact_ids(std::span<const Edge> pairs);

struct IngestOptions {
  /// Restrict to the largest connected component.
  bool largest_component = false;
};

struct IngestedGraph {
  Graph graph;
  /// new id -> id in the source file.
  std::vector<NodeId> new_to_old;
  std::size_t duplicates_dropped = 0;
  std::size_t self_loops_dropped = 0;
};

/// Reads a graph file. Ids are compacted unless the file carries a
/// "# nodes:" header, in which case they are taken as already dense.
IngestedGraph load_graph(const std::filesystem::path& path, const IngestOptions& options = {});

void write_relabeling(const std::filesystem::path& path, std::span<const NodeId> new_to_old);

// Binary cache. Layout: "LPBG" magic, u32 version, u64 nodes, u64 edges,
// then the canonical edge array as u32 pairs, little-endian host order.
void save_graph_binary(const std::filesystem::path& path, const Graph& g);
Graph load_graph_binary(const std::filesystem::path& path);

}  // namespace lpbench
