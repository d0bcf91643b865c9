// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "lpbench/edge_list_io.hpp"
#include "lpbench/error.hpp"
#include "lpbench/rng.hpp"

namespace lpbench {

namespace {

using nlohmann::json;

constexpr const char* kAucMetric = "auc_roc";

std::string vcmpr_metric(std::size_t top_c) { return "vcmpr@" + std::to_string(top_c); }

// Runs task(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& task) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : workers) t.join();
}

struct LoadedGraph {
  std::optional<Graph> graph;
  std::string error;
};

std::vector<LoadedGraph> load_all(const BenchmarkConfig& config, std::size_t jobs) {
  std::vector<LoadedGraph> out(config.graphs.size());
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    try {
      out[i].graph = materialize_graph(config.graphs[i]);
    } catch (const std::exception& e) {
      out[i].error = std::string("graph unavailable: ") + e.what();
    }
  });
  return out;
}

void check_seed_collisions(const std::vector<std::uint64_t>& seeds) {
  std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
  if (unique.size() != seeds.size()) throw std::logic_error("derived cell seeds collide");
}

ReportRow failed_row(std::string graph, std::string method, std::string task,
                     std::optional<std::size_t> repeat, std::string metric, std::string error) {
  return {std::move(graph), std::move(method), std::move(task), repeat, std::move(metric),
          std::nullopt, std::move(error)};
}

// Appends the mean row for each method and builds the ranking for one
// (graph, task) block whose per-repeat rows are grouped by method.
void summarize_block(BenchmarkReport& report, const BenchmarkConfig& config,
                     const std::string& graph, const std::string& task, const std::string& metric,
                     const std::vector<std::vector<ReportRow>>& per_method) {
  std::vector<std::pair<std::string, std::optional<double>>> means;
  for (std::size_t m = 0; m < config.methods.size(); ++m) {
    const auto& rows = per_method[m];
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    double sum = 0.0;
    std::size_t ok = 0;
    for (const auto& r : rows) {
      if (r.value) {
        sum += *r.value;
        ++ok;
      }
    }
    const std::string& id = config.methods[m].id;
    if (ok == rows.size() && ok > 0) {
      const double mean = sum / static_cast<double>(ok);
      report.rows.push_back({graph, id, task, std::nullopt, metric, mean, {}});
      means.emplace_back(id, mean);
    } else {
      report.rows.push_back(
          failed_row(graph, id, task, std::nullopt, metric, "one or more repeats failed"));
      means.emplace_back(id, std::nullopt);
    }
  }
  // Best mean first; ties and failed methods fall back to id order.
  std::sort(means.begin(), means.end(), [](const auto& a, const auto& b) {
    if (a.second.has_value() != b.second.has_value()) return a.second.has_value();
    if (a.second && *a.second != *b.second) return *a.second > *b.second;
    return a.first < b.first;
  });
  Ranking ranking;
  for (auto& [id, mean] : means) ranking.push_back(id);
  report.rankings[{graph, task}] = std::move(ranking);
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    out.push_back(cell);
  }
  return out;
}

}  // namespace

void BenchmarkConfig::validate() const {
  if (graphs.empty()) throw InputError("config: no graphs");
  if (methods.empty()) throw InputError("config: no methods");
  if (!(beta > 0.0 && beta < 1.0)) throw InputError("config: beta must lie in (0, 1)");
  if (repeats < 1) throw InputError("config: repeats must be >= 1");
  if (link_prediction && samplers.empty()) throw InputError("config: no samplers");
  if (top_c < 1) throw InputError("config: top_c must be >= 1");
  if (!(rbo_p > 0.0 && rbo_p < 1.0)) throw InputError("config: rbo_p must lie in (0, 1)");
  if (!link_prediction && !recommendation) throw InputError("config: no task enabled");
  std::set<std::string> ids;
  for (const auto& g : graphs) {
    if (g.id.empty() || !ids.insert(g.id).second) throw InputError("config: graph ids must be unique and non-empty");
  }
  ids.clear();
  for (const auto& m : methods) {
    if (m.id.empty() || !ids.insert(m.id).second) throw InputError("config: method ids must be unique and non-empty");
    m.spec.validate();
  }
  std::set<NegativeSampler> kinds(samplers.begin(), samplers.end());
  if (kinds.size() != samplers.size()) throw InputError("config: duplicate sampler");
}

BenchmarkConfig parse_config(const json& j) {
  BenchmarkConfig c;
  try {
    for (const auto& g : j.at("graphs")) {
      GraphSource src;
      if (g.contains("path")) {
        FileGraphSource f{g.at("path").get<std::string>(), g.value("largest_component", false)};
        src.id = g.value("id", f.path);
        src.spec = f;
      } else {
        const std::string gen = g.at("generator").get<std::string>();
        if (gen == "price") {
          PriceGraphSource p{g.at("n").get<std::size_t>(), g.at("m").get<std::size_t>(),
                             g.value("seed", std::uint64_t{0})};
          src.id = g.value("id", "price-n" + std::to_string(p.n) + "-m" + std::to_string(p.m) +
                                     "-s" + std::to_string(p.seed));
          src.spec = p;
        } else if (gen == "lfr") {
          LfrGraphSource l;
          l.params.n = g.at("n").get<std::size_t>();
          l.params.tau1 = g.at("tau1").get<double>();
          l.params.tau2 = g.at("tau2").get<double>();
          l.params.mu = g.at("mu").get<double>();
          l.params.avg_degree = g.at("avg_degree").get<double>();
          l.params.max_degree = g.at("max_degree").get<std::uint32_t>();
          l.params.min_comm = g.at("min_comm").get<std::size_t>();
          l.params.max_comm = g.at("max_comm").get<std::size_t>();
          l.seed = g.value("seed", std::uint64_t{0});
          src.id = g.value("id", "lfr-n" + std::to_string(l.params.n) + "-s" + std::to_string(l.seed));
          src.spec = l;
        } else {
          throw InputError("config: unknown generator '" + gen + "'");
        }
      }
      c.graphs.push_back(std::move(src));
    }
    for (const auto& m : j.at("methods")) {
      NamedMethod nm;
      if (m.is_string()) {
        nm.spec.method = parse_method(m.get<std::string>());
        nm.id = m.get<std::string>();
      } else {
        nm.spec.method = parse_method(m.at("method").get<std::string>());
        nm.spec.epsilon = m.value("epsilon", nm.spec.epsilon);
        nm.spec.walk_steps = m.value("walk_steps", nm.spec.walk_steps);
        nm.id = m.value("id", std::string(method_name(nm.spec.method)));
      }
      c.methods.push_back(std::move(nm));
    }
    c.beta = j.value("beta", c.beta);
    c.repeats = j.value("repeats", c.repeats);
    if (j.contains("samplers")) {
      c.samplers.clear();
      for (const auto& s : j.at("samplers")) c.samplers.push_back(parse_sampler(s.get<std::string>()));
    }
    c.top_c = j.value("top_c", c.top_c);
    c.rbo_p = j.value("rbo_p", c.rbo_p);
    c.master_seed = j.value("master_seed", c.master_seed);
    if (j.contains("tasks")) {
      c.link_prediction = c.recommendation = false;
      for (const auto& t : j.at("tasks")) {
        const auto name = t.get<std::string>();
        if (name == "link_prediction") {
          c.link_prediction = true;
        } else if (name == "recommendation") {
          c.recommendation = true;
        } else {
          throw InputError("config: unknown task '" + name + "'");
        }
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

json config_to_json(const BenchmarkConfig& c) {
  json graphs = json::array();
  for (const auto& g : c.graphs) {
    json entry{{"id", g.id}};
    if (const auto* f = std::get_if<FileGraphSource>(&g.spec)) {
      entry["path"] = f->path;
      entry["largest_component"] = f->largest_component;
    } else if (const auto* p = std::get_if<PriceGraphSource>(&g.spec)) {
      entry.update({{"generator", "price"}, {"n", p->n}, {"m", p->m}, {"seed", p->seed}});
    } else if (const auto* l = std::get_if<LfrGraphSource>(&g.spec)) {
      const auto& q = l->params;
      entry.update({{"generator", "lfr"}, {"n", q.n}, {"tau1", q.tau1}, {"tau2", q.tau2},
                    {"mu", q.mu}, {"avg_degree", q.avg_degree}, {"max_degree", q.max_degree},
                    {"min_comm", q.min_comm}, {"max_comm", q.max_comm}, {"seed", l->seed}});
    }
    graphs.push_back(std::move(entry));
  }
  json methods = json::array();
  for (const auto& m : c.methods) {
    methods.push_back({{"id", m.id}, {"method", method_name(m.spec.method)},
                       {"epsilon", m.spec.epsilon}, {"walk_steps", m.spec.walk_steps}});
  }
  json samplers = json::array();
  for (auto s : c.samplers) samplers.push_back(sampler_name(s));
  json tasks = json::array();
  if (c.link_prediction) tasks.push_back("link_prediction");
  if (c.recommendation) tasks.push_back("recommendation");
  return {{"graphs", graphs}, {"methods", methods}, {"beta", c.beta},
          {"repeats", c.repeats}, {"samplers", samplers}, {"top_c", c.top_c},
          {"rbo_p", c.rbo_p}, {"master_seed", c.master_seed}, {"tasks", tasks}};
}

std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& graph_id,
                        const std::string& stream, std::size_t repeat) {
  std::uint64_t s = combine_seed(master_seed, graph_id);
  s = combine_seed(s, stream);
  return combine_seed(s, static_cast<std::uint64_t>(repeat));
}

Graph materialize_graph(const GraphSource& source) {
  if (const auto* f = std::get_if<FileGraphSource>(&source.spec)) {
    return load_graph(f->path, {.largest_component = f->largest_component}).graph;
  }
  if (const auto* p = std::get_if<PriceGraphSource>(&source.spec)) {
    return generate_price(p->n, p->m, p->seed);
  }
  const auto& l = std::get<LfrGraphSource>(source.spec);
  return generate_lfr(l.params, l.seed).graph;
}

BenchmarkReport run_benchmark(const BenchmarkConfig& config, std::size_t jobs) {
  config.validate();
  const std::size_t G = config.graphs.size();
  const std::size_t S = config.samplers.size();
  const std::size_t R = config.repeats;
  const std::size_t M = config.methods.size();

  std::vector<std::uint64_t> seeds;
  for (const auto& g : config.graphs) {
    for (std::size_t r = 0; r < R; ++r) {
      seeds.push_back(cell_seed(config.master_seed, g.id, "split", r));
      for (auto s : config.samplers) {
        seeds.push_back(cell_seed(config.master_seed, g.id, std::string(sampler_name(s)), r));
      }
    }
  }
  check_seed_collisions(seeds);

  const auto graphs = load_all(config, jobs);

  // One cell per (graph, repeat): one positive split shared by every
  // sampler, so the samplers are compared on identical held-out edges.
  // results[cell][sampler][method].
  std::vector<std::vector<std::vector<ReportRow>>> results(G * R);
  parallel_for(G * R, jobs, [&](std::size_t cell) {
    const std::size_t gi = cell / R, r = cell % R;
    const std::string& gid = config.graphs[gi].id;
    auto& out = results[cell];
    out.assign(S, {});
    auto fail_all = [&](std::size_t si, const std::string& why) {
      out[si].clear();
      for (const auto& m : config.methods) {
        out[si].push_back(failed_row(gid, m.id, std::string(sampler_name(config.samplers[si])), r,
                                     kAucMetric, why));
      }
    };
    if (!graphs[gi].graph) {
      for (std::size_t si = 0; si < S; ++si) fail_all(si, graphs[gi].error);
      return;
    }
    const Graph& g = *graphs[gi].graph;
    PositiveSplit split;
    try {
      split = split_positive(g, config.beta, cell_seed(config.master_seed, gid, "split", r));
    } catch (const std::exception& e) {
      for (std::size_t si = 0; si < S; ++si) fail_all(si, std::string("split failed: ") + e.what());
      return;
    }
    for (std::size_t si = 0; si < S; ++si) {
      const auto kind = config.samplers[si];
      const std::string task(sampler_name(kind));
      EdgeList negatives;
      try {
        negatives = sample_negatives(kind, g, split.positives, split.positives.size(),
                                     cell_seed(config.master_seed, gid, task, r));
      } catch (const std::exception& e) {
        fail_all(si, std::string("negative sampling failed: ") + e.what());
        continue;
      }
      for (const auto& m : config.methods) {
        try {
          const ScoreTable pos = score_pairs(split.train, split.positives, m.spec);
          const ScoreTable neg = score_pairs(split.train, negatives, m.spec);
          const double auc = auc_roc(pos.scores, neg.scores);
          out[si].push_back({gid, m.id, task, r, kAucMetric, auc, {}});
        } catch (const std::exception& e) {
          out[si].push_back(failed_row(gid, m.id, task, r, kAucMetric, e.what()));
        }
      }
    }
  });

  BenchmarkReport report;
  for (std::size_t gi = 0; gi < G; ++gi) {
    for (std::size_t si = 0; si < S; ++si) {
      std::vector<std::vector<ReportRow>> per_method(M);
      for (std::size_t r = 0; r < R; ++r) {
        const auto& rows = results[gi * R + r][si];
        for (std::size_t m = 0; m < M; ++m) per_method[m].push_back(rows[m]);
      }
      summarize_block(report, config, config.graphs[gi].id,
                      std::string(sampler_name(config.samplers[si])), kAucMetric, per_method);
    }
  }
  return report;
}

BenchmarkReport run_recommendation(const BenchmarkConfig& config, std::size_t jobs) {
  config.validate();
  const std::size_t G = config.graphs.size();
  const std::size_t R = config.repeats;
  const std::size_t M = config.methods.size();
  const std::string metric = vcmpr_metric(config.top_c);

  std::vector<std::uint64_t> seeds;
  for (const auto& g : config.graphs) {
    for (std::size_t r = 0; r < R; ++r) seeds.push_back(cell_seed(config.master_seed, g.id, "split", r));
  }
  check_seed_collisions(seeds);

  const auto graphs = load_all(config, jobs);

  // Cells are (graph, repeat, method) so the heavy top-C scans spread over
  // workers; the split is recomputed per cell from its seed.
  std::vector<ReportRow> results(G * R * M);
  parallel_for(results.size(), jobs, [&](std::size_t cell) {
    const std::size_t gi = cell / (R * M);
    const std::size_t r = (cell / M) % R;
    const std::size_t mi = cell % M;
    const std::string& gid = config.graphs[gi].id;
    const auto& m = config.methods[mi];
    if (!graphs[gi].graph) {
      results[cell] = failed_row(gid, m.id, kRecommendationTask, r, metric, graphs[gi].error);
      return;
    }
    try {
      const PositiveSplit split = split_positive(*graphs[gi].graph, config.beta,
                                                 cell_seed(config.master_seed, gid, "split", r));
      const RecommendationList recs = top_c_recommend(split.train, m.spec, config.top_c);
      const double v = vcmpr_at_c(recs, split.positives, config.top_c).value;
      results[cell] = {gid, m.id, kRecommendationTask, r, metric, v, {}};
    } catch (const std::exception& e) {
      results[cell] = failed_row(gid, m.id, kRecommendationTask, r, metric, e.what());
    }
  });

  BenchmarkReport report;
  for (std::size_t gi = 0; gi < G; ++gi) {
    std::vector<std::vector<ReportRow>> per_method(M);
    for (std::size_t r = 0; r < R; ++r) {
      for (std::size_t mi = 0; mi < M; ++mi) per_method[mi].push_back(results[(gi * R + r) * M + mi]);
    }
    summarize_block(report, config, config.graphs[gi].id, kRecommendationTask, metric, per_method);
  }
  return report;
}

BenchmarkReport run_evaluation(const BenchmarkConfig& config, std::size_t jobs) {
  BenchmarkReport report;
  if (config.link_prediction) report = run_benchmark(config, jobs);
  if (config.recommendation) {
    BenchmarkReport rec = run_recommendation(config, jobs);
    report.rows.insert(report.rows.end(), rec.rows.begin(), rec.rows.end());
    report.rankings.merge(rec.rankings);
  }
  return report;
}

RankingComparison compare_rankings(const BenchmarkReport& a, const std::string& task_a,
                                   const BenchmarkReport& b, const std::string& task_b, double p) {
  RankingComparison out;
  double sum = 0.0;
  for (const auto& [key, ranking] : a.rankings) {
    if (key.second != task_a) continue;
    auto it = b.rankings.find({key.first, task_b});
    if (it == b.rankings.end()) {
      throw InputError("compare_rankings: graph '" + key.first + "' missing from second report");
    }
    const double v = rbo(ranking, it->second, p);
    out.per_graph[key.first] = v;
    sum += v;
  }
  for (const auto& [key, ranking] : b.rankings) {
    if (key.second == task_b && out.per_graph.count(key.first) == 0) {
      throw InputError("compare_rankings: graph '" + key.first + "' missing from first report");
    }
  }
  if (out.per_graph.empty()) throw InputError("compare_rankings: no rankings to compare");
  out.mean = sum / static_cast<double>(out.per_graph.size());
  return out;
}

RankingComparison compare_rankings(const BenchmarkReport& a, const BenchmarkReport& b, double p) {
  auto only_task = [](const BenchmarkReport& r) {
    std::set<std::string> tasks;
    for (const auto& [key, ranking] : r.rankings) tasks.insert(key.second);
    if (tasks.size() != 1) {
      throw InputError("compare_rankings: report holds " + std::to_string(tasks.size()) +
                       " tasks; name the task to compare");
    }
    return *tasks.begin();
  };
  return compare_rankings(a, only_task(a), b, only_task(b), p);
}

std::string report_to_csv(const BenchmarkReport& report) {
  std::string out = "graph,method,sampler,repeat,metric,value\n";
  for (const auto& row : report.rows) {
    out += row.graph + ',' + row.method + ',' + row.task + ',' +
           (row.repeat ? std::to_string(*row.repeat) : std::string("mean")) + ',' + row.metric +
           ',' + (row.value ? format_value(*row.value) : std::string("NA")) + '\n';
  }
  return out;
}

json report_summary(const BenchmarkReport& report, const BenchmarkConfig& config) {
  json rankings = json::array();
  for (const auto& [key, ranking] : report.rankings) {
    rankings.push_back({{"graph", key.first}, {"task", key.second}, {"ranking", ranking}});
  }
  json failures = json::array();
  for (const auto& row : report.rows) {
    if (row.value) continue;
    failures.push_back({{"graph", row.graph}, {"method", row.method}, {"sampler", row.task},
                        {"repeat", row.repeat ? json(*row.repeat) : json("mean")},
                        {"reason", row.error}});
  }
  json summary{{"config", config_to_json(config)}, {"rankings", rankings}, {"failures", failures}};

  if (config.link_prediction && config.recommendation) {
    json alignment = json::object();
    for (auto s : config.samplers) {
      const std::string task(sampler_name(s));
      const auto cmp = compare_rankings(report, task, report, kRecommendationTask, config.rbo_p);
      alignment[task] = {{"per_graph", cmp.per_graph}, {"mean", cmp.mean}};
    }
    summary["rbo_vs_recommendation"] = alignment;
  }
  return summary;
}

std::string rankings_to_csv(const BenchmarkReport& report) {
  std::string out = "graph,task,rank,method\n";
  for (const auto& [key, ranking] : report.rankings) {
    for (std::size_t k = 0; k < ranking.size(); ++k) {
      out += key.first + ',' + key.second + ',' + std::to_string(k + 1) + ',' + ranking[k] + '\n';
    }
  }
  return out;
}

BenchmarkReport rankings_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::size_t, std::string>>> acc;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv_line(line);
    if (line_no == 1 && !cells.empty() && cells[0] == "graph") continue;
    if (cells.size() != 4) throw ParseError("expected graph,task,rank,method", line_no);
    std::size_t rank = 0;
    try {
      rank = std::stoul(cells[2]);
    } catch (const std::exception&) {
      throw ParseError("bad rank '" + cells[2] + "'", line_no);
    }
    acc[{cells[0], cells[1]}].emplace_back(rank, cells[3]);
  }
  BenchmarkReport report;
  for (auto& [key, entries] : acc) {
    std::sort(entries.begin(), entries.end());
    Ranking r;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].first != k + 1) {
        throw InputError("rankings for " + key.first + "/" + key.second + " are not 1..D");
      }
      r.push_back(entries[k].second);
    }
    report.rankings[key] = std::move(r);
  }
  return report;
}

}  // namespace lpbench
