// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <string>
#include <string_view>

#include "lpbench/error.hpp"

namespace lpbench {

namespace {

constexpr std::string_view kNodesTag = "nodes:";
constexpr char kMagic[4] = {'L', 'P', 'B', 'G'};
constexpr std::uint32_t kBinaryVersion = 1;

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && is_separator(s.front())) s.remove_prefix(1);
  return s;
}

template <typename T>
bool parse_uint(std::string_view token, T& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ifstream in(path, std::ios::in | mode);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
  std::ofstream out(path, std::ios::out | std::ios::trunc | mode);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

EdgeFile parse_edge_list(std::istream& in) {
  EdgeFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim_left(line);
    if (rest.empty()) continue;
    if (rest.front() == '#') {
      rest.remove_prefix(1);
      rest = trim_left(rest);
      if (rest.starts_with(kNodesTag)) {
        rest = trim_left(rest.substr(kNodesTag.size()));
        std::size_t n = 0;
        if (!parse_uint(rest, n)) throw ParseError("bad node-count header", line_no);
        file.num_nodes = n;
      }
      continue;
    }

    NodeId ids[2];
    int count = 0;
    while (!rest.empty()) {
      std::size_t len = 0;
      while (len < rest.size() && !is_separator(rest[len])) ++len;
      std::string_view token = rest.substr(0, len);
      if (count == 2) throw ParseError("expected two node ids, found more", line_no);
      std::uint64_t value = 0;
      if (!parse_uint(token, value) || value >= kInvalidNode) {
        throw ParseError("invalid node id '" + std::string(token) + "'", line_no);
      }
      ids[count++] = static_cast<NodeId>(value);
      rest = trim_left(rest.substr(len));
    }
    if (count != 2) throw ParseError("expected two node ids", line_no);
    file.pairs.emplace_back(ids[0], ids[1]);
  }
  return file;
}

EdgeFile read_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path.string());
  }
}

void format_edge_list(std::ostream& out, std::span<const Edge> pairs,
                      std::optional<std::size_t> num_nodes) {
  if (num_nodes) out << "# " << kNodesTag << ' ' << *num_nodes << '\n';
  for (const Edge& e : pairs) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, std::span<const Edge> pairs,
                     std::optional<std::size_t> num_nodes) {
  auto out = open_out(path);
  format_edge_list(out, pairs, num_nodes);
  if (!out) throw InputError("write failed: " + path.string());
}

Relabeling compact_ids(std::span<const Edge> pairs) {
  Relabeling r;
  r.new_to_old.reserve(pairs.size());
  for (const Edge& e : pairs) {
    r.new_to_old.push_back(e.u);
    r.new_to_old.push_back(e.v);
  }
  std::sort(r.new_to_old.begin(), r.new_to_old.end());
  r.new_to_old.erase(std::unique(r.new_to_old.begin(), r.new_to_old.end()), r.new_to_old.end());
  auto lookup = [&](NodeId old) {
    return static_cast<NodeId>(
        std::lower_bound(r.new_to_old.begin(), r.new_to_old.end(), old) - r.new_to_old.begin());
  };
  r.pairs.reserve(pairs.size());
  for (const Edge& e : pairs) r.pairs.emplace_back(lookup(e.u), lookup(e.v));
  return r;
}

IngestedGraph load_graph(const std::filesystem::path& path, const IngestOptions& options) {
  EdgeFile file = read_edge_list(path);
  IngestedGraph result;
  BuildResult built;
  if (file.num_nodes) {
    built = build_graph(file.pairs, file.num_nodes);
    result.new_to_old.resize(built.graph.num_nodes());
    for (NodeId i = 0; i < result.new_to_old.size(); ++i) result.new_to_old[i] = i;
  } else {
    Relabeling r = compact_ids(file.pairs);
    built = build_graph(r.pairs, r.new_to_old.size());
    result.new_to_old = std::move(r.new_to_old);
  }
  result.duplicates_dropped = built.duplicates_dropped;
  result.self_loops_dropped = built.self_loops_dropped;
  if (options.largest_component) {
    ComponentResult lcc = largest_connected_component(built.graph);
    std::vector<NodeId> new_to_old(lcc.graph.num_nodes());
    for (NodeId old = 0; old < lcc.old_to_new.size(); ++old) {
      if (lcc.old_to_new[old] != kInvalidNode) new_to_old[lcc.old_to_new[old]] = result.new_to_old[old];
    }
    result.graph = std::move(lcc.graph);
    result.new_to_old = std::move(new_to_old);
  } else {
    result.graph = std::move(built.graph);
  }
  return result;
}

void write_relabeling(const std::filesystem::path& path, std::span<const NodeId> new_to_old) {
  auto out = open_out(path);
  out << "# new_id original_id\n";
  for (std::size_t i = 0; i < new_to_old.size(); ++i) out << i << ' ' << new_to_old[i] << '\n';
}

void save_graph_binary(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path, std::ios::binary);
  const std::uint64_t n = g.num_nodes();
  const std::uint64_t m = g.num_edges();
  out.write(kMagic, sizeof kMagic);
  out.write(reinterpret_cast<const char*>(&kBinaryVersion), sizeof kBinaryVersion);
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&m), sizeof m);
  for (const Edge& e : g.edges()) {
    const NodeId pair[2] = {e.u, e.v};
    out.write(reinterpret_cast<const char*>(pair), sizeof pair);
  }
  if (!out) throw InputError("write failed: " + path.string());
}

Graph load_graph_binary(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::binary);
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t n = 0, m = 0;
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&m), sizeof m);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw InputError(path.string() + ": not a graph cache file");
  }
  if (version != kBinaryVersion) {
    throw InputError(path.string() + ": unsupported cache version " + std::to_string(version));
  }
  EdgeList edges(m);
  for (auto& e : edges) {
    NodeId pair[2];
    in.read(reinterpret_cast<char*>(pair), sizeof pair);
    if (!in) throw InputError(path.string() + ": truncated cache file");
    if (pair[0] >= pair[1] || pair[1] >= n) throw InputError(path.string() + ": corrupt edge");
    e = Edge(pair[0], pair[1]);
  }
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError(path.string() + ": edges not canonical");
  }
  return Graph::from_canonical_edges(edges, n);
}

}  // namespace lpbench
