// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpbench/generators.hpp"
#include "lpbench/graph.hpp"
#include "lpbench/metrics.hpp"
#include "lpbench/predictors.hpp"
#include "lpbench/sampling.hpp"

namespace lpbench {

struct FileGraphSource {
  std::string path;
  bool largest_component = false;
};

struct PriceGraphSource {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

struct LfrGraphSource {
  LfrParams params;
  std::uint64_t seed = 0;
};

struct GraphSource {
  std::string id;
  std::variant<FileGraphSource, PriceGraphSource, LfrGraphSource> spec;
};

struct NamedMethod {
  /// Unique label used in reports; defaults to the method name.
  std::string id;
  MethodSpec spec;
};

struct BenchmarkConfig {
  std::vector<GraphSource> graphs;
  std::vector<NamedMethod> methods;
  double beta = 0.25;
  std::size_t repeats = 5;
  std::vector<NegativeSampler> samplers{NegativeSampler::uniform,
                                        NegativeSampler::degree_corrected};
  std::size_t top_c = 50;
  double rbo_p = 0.5;
  std::uint64_t master_seed = 0;
  /// Run the link-prediction sweep and/or the recommendation task.
  bool link_prediction = true;
  bool recommendation = false;

  /// Throws InputError on an inconsistent configuration.
  void validate() const;
};

/// Parses the JSON configuration; field names match BenchmarkConfig.
BenchmarkConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const BenchmarkConfig& c);

/// Task label used for the recommendation rows and rankings.
inline constexpr const char* kRecommendationTask = "recommendation";

struct ReportRow {
  std::string graph;
  std::string method;
  /// Negative sampler name, or "recommendation".
  std::string task;
  /// Repeat index; nullopt marks the mean-over-repeats row.
  std::optional<std::size_t> repeat;
  std::string metric;
  /// Empty for a failed cell.
  std::optional<double> value;
  std::string error;
};

struct BenchmarkReport {
  std::vector<ReportRow> rows;
  /// (graph, task) -> methods by mean metric, best first.
  std::map<std::pair<std::string, std::string>, Ranking> rankings;
};

/// Stable per-cell seed: master seed folded with graph id, stream label and
/// repeat through splitmix64/FNV-1a.
std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& graph_id,
                        const std::string& stream, std::size_t repeat);

Graph materialize_graph(const GraphSource& source);

/// Link-prediction sweep over graph × sampler × repeat × method. Cells run on
/// `jobs` threads; the report does not depend on the thread count.
BenchmarkReport run_benchmark(const BenchmarkConfig& config, std::size_t jobs = 1);

/// Recommendation task over graph × repeat × method, scored by VCMPR@C.
BenchmarkReport run_recommendation(const BenchmarkConfig& config, std::size_t jobs = 1);

/// Whatever the config enables, merged into one report.
BenchmarkReport run_evaluation(const BenchmarkConfig& config, std::size_t jobs = 1);

struct RankingComparison {
  std::map<std::string, double> per_graph;
  double mean = 0.0;
};

/// Per-graph RBO between the `task_a` rankings of report a and the `task_b`
/// rankings of report b.
RankingComparison compare_rankings(const BenchmarkReport& a, const std::string& task_a,
                                   const BenchmarkReport& b, const std::string& task_b, double p);

/// Same, for reports holding a single task per graph.
RankingComparison compare_rankings(const BenchmarkReport& a, const BenchmarkReport& b, double p);

/// Long-form CSV: graph,method,sampler,repeat,metric,value.
std::string report_to_csv(const BenchmarkReport& report);

/// Rankings, failures and (when both tasks ran) RBO of every sampler's
/// ranking against the recommendation ranking.
nlohmann::json report_summary(const BenchmarkReport& report, const BenchmarkConfig& config);

/// Rankings as CSV: graph,task,rank,method.
std::string rankings_to_csv(const BenchmarkReport& report);
/// Reads rankings CSV back into a report (rows left empty).
BenchmarkReport rankings_from_csv(const std::string& text);

}  // namespace lpbench
