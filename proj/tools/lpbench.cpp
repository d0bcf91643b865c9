// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: generate, split, score, recommend, rank-compare,
// theory, evaluate.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lpbench/edge_list_io.hpp"
#include "lpbench/error.hpp"
#include "lpbench/generators.hpp"
#include "lpbench/harness.hpp"
#include "lpbench/metrics.hpp"
#include "lpbench/predictors.hpp"
#include "lpbench/sampling.hpp"
#include "lpbench/theory.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lpbench;

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A train graph keeps the ids of the files it came with. The node count is
// taken from the "# nodes" header when present, else from the largest id in
// the train and companion pair files.
Graph load_train(const fs::path& path, std::span<const Edge> companions) {
  EdgeFile train = read_edge_list(path);
  std::size_t n = train.num_nodes.value_or(0);
  if (!train.num_nodes) {
    for (const auto& e : train.pairs) n = std::max<std::size_t>(n, e.v + 1);
    for (const auto& e : companions) n = std::max<std::size_t>(n, e.v + 1);
  }
  for (const auto& e : companions) {
    if (e.v >= n) throw InputError("pair (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                   ") lies outside the train graph");
  }
  return build_graph(train.pairs, n).graph;
}

void write_labels(const fs::path& path, std::span<const std::uint32_t> labels) {
  auto out = open_out(path);
  out << "# node label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ' ' << labels[i] << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-prediction benchmark toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic graph");
  gen->require_subcommand(1);

  std::size_t price_n = 0, price_m = 0;
  std::uint64_t price_seed = 0;
  std::string price_out;
  auto* price = gen->add_subcommand("price", "Linear preferential-attachment graph");
  price->add_option("--n", price_n, "Number of nodes")->required();
  price->add_option("--m", price_m, "Edges attached per new node")->required();
  price->add_option("--seed", price_seed, "Random seed")->required();
  price->add_option("--out", price_out, "Output edge list")->required();

  LfrParams lfr_params;
  std::uint64_t lfr_seed = 0;
  std::string lfr_out, lfr_labels_out;
  auto* lfr = gen->add_subcommand("lfr", "LFR graph with planted communities");
  lfr->add_option("--n", lfr_params.n)->required();
  lfr->add_option("--tau1", lfr_params.tau1, "Degree exponent")->required();
  lfr->add_option("--tau2", lfr_params.tau2, "Community-size exponent")->required();
  lfr->add_option("--mu", lfr_params.mu, "Mixing fraction")->required();
  lfr->add_option("--avg-degree", lfr_params.avg_degree)->required();
  lfr->add_option("--max-degree", lfr_params.max_degree)->required();
  lfr->add_option("--min-comm", lfr_params.min_comm)->required();
  lfr->add_option("--max-comm", lfr_params.max_comm)->required();
  lfr->add_option("--seed", lfr_seed)->required();
  lfr->add_option("--out", lfr_out)->required();
  lfr->add_option("--labels-out", lfr_labels_out, "Node/label file");

  // split
  std::string split_graph, split_negative = "uniform", split_prefix;
  double split_beta = 0.25;
  std::uint64_t split_seed = 0;
  bool split_lcc = false;
  auto* split = app.add_subcommand("split", "Hold out positives and sample negatives");
  split->add_option("--graph", split_graph)->required();
  split->add_option("--beta", split_beta, "Held-out edge fraction")->capture_default_str();
  split->add_option("--negative", split_negative, "uniform | degree-corrected")->capture_default_str();
  split->add_option("--seed", split_seed)->required();
  split->add_option("--out-prefix", split_prefix)->required();
  split->add_flag("--lcc", split_lcc, "Restrict to the largest connected component");

  // score
  std::string score_train, score_pairs_path, score_method, score_out;
  MethodSpec score_spec;
  auto* score = app.add_subcommand("score", "Score node pairs on a train graph");
  score->add_option("--train", score_train)->required();
  score->add_option("--pairs", score_pairs_path)->required();
  score->add_option("--method", score_method)->required();
  score->add_option("--epsilon", score_spec.epsilon, "LPI weight")->capture_default_str();
  score->add_option("--walk-steps", score_spec.walk_steps, "LRW steps")->capture_default_str();
  score->add_option("--out", score_out)->required();

  // recommend
  std::string rec_train, rec_pos, rec_method, rec_out;
  MethodSpec rec_spec;
  std::size_t rec_top_c = 50;
  auto* recommend = app.add_subcommand("recommend", "Top-C recommendation scored by VCMPR@C");
  recommend->add_option("--train", rec_train)->required();
  recommend->add_option("--pos", rec_pos)->required();
  recommend->add_option("--method", rec_method)->required();
  recommend->add_option("--epsilon", rec_spec.epsilon)->capture_default_str();
  recommend->add_option("--walk-steps", rec_spec.walk_steps)->capture_default_str();
  recommend->add_option("--top-c", rec_top_c)->capture_default_str();
  recommend->add_option("--out", rec_out)->required();

  // rank-compare
  std::string rc_a, rc_b, rc_task_a, rc_task_b;
  double rc_p = 0.5;
  auto* rank_compare = app.add_subcommand("rank-compare", "RBO between two ranking files");
  rank_compare->add_option("--a", rc_a)->required();
  rank_compare->add_option("--b", rc_b)->required();
  rank_compare->add_option("--rbo-p", rc_p)->capture_default_str();
  rank_compare->add_option("--task-a", rc_task_a, "Task to take from --a");
  rank_compare->add_option("--task-b", rc_task_b, "Task to take from --b");

  // theory
  std::string th_graph;
  bool th_lcc = false;
  auto* theory = app.add_subcommand("theory", "Log-normal fit and predicted PA AUC");
  theory->add_option("--graph", th_graph)->required();
  theory->add_flag("--lcc", th_lcc, "Restrict to the largest connected component");

  // evaluate
  std::string ev_config, ev_out, ev_summary, ev_rankings;
  std::size_t ev_jobs = 1;
  auto* evaluate = app.add_subcommand("evaluate", "Run a benchmark sweep from a JSON config");
  evaluate->add_option("--config", ev_config)->required();
  evaluate->add_option("--out", ev_out)->required();
  evaluate->add_option("--summary", ev_summary)->required();
  evaluate->add_option("--jobs", ev_jobs)->capture_default_str()->check(CLI::PositiveNumber);
  evaluate->add_option("--rankings", ev_rankings, "Also write rankings CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*price) {
      const Graph g = generate_price(price_n, price_m, price_seed);
      write_edge_list(price_out, g.edges(), g.num_nodes());
    } else if (*lfr) {
      const LfrGraph g = generate_lfr(lfr_params, lfr_seed);
      write_edge_list(lfr_out, g.graph.edges(), g.graph.num_nodes());
      if (!lfr_labels_out.empty()) write_labels(lfr_labels_out, g.labels);
      std::cerr << "mixing " << mixing_fraction(g.graph, g.labels) << ", discarded stubs "
                << g.discarded_stubs << " of " << g.total_stubs << '\n';
    } else if (*split) {
      const NegativeSampler kind = parse_sampler(split_negative);
      const IngestedGraph in = load_graph(split_graph, {.largest_component = split_lcc});
      const EdgeSplit s = make_edge_split(in.graph, split_beta, kind, split_seed);
      const std::size_t n = in.graph.num_nodes();
      write_edge_list(split_prefix + ".train", s.train.edges(), n);
      write_edge_list(split_prefix + ".pos", s.positives, n);
      write_edge_list(split_prefix + ".neg", s.negatives, n);
      bool relabeled = false;
      for (std::size_t i = 0; i < in.new_to_old.size(); ++i) relabeled |= in.new_to_old[i] != i;
      json side{{"graph", split_graph},
                {"beta", split_beta},
                {"negative", sampler_name(kind)},
                {"seed", split_seed},
                {"largest_component", split_lcc},
                {"num_nodes", n},
                {"num_edges", in.graph.num_edges()},
                {"train_edges", s.train.num_edges()},
                {"positives", s.positives.size()},
                {"negatives", s.negatives.size()},
                {"duplicates_dropped", in.duplicates_dropped},
                {"self_loops_dropped", in.self_loops_dropped},
                {"relabel", nullptr}};
      if (relabeled) {
        write_relabeling(split_prefix + ".nodes", in.new_to_old);
        side["relabel"] = split_prefix + ".nodes";
      }
      open_out(split_prefix + ".json") << side.dump(2) << '\n';
    } else if (*score) {
      score_spec.method = parse_method(score_method);
      const EdgeList pairs = read_edge_list(score_pairs_path).pairs;
      const Graph train = load_train(score_train, pairs);
      const ScoreTable t = score_pairs(train, pairs, score_spec);
      auto out = open_out(score_out);
      out << "i,j,score\n";
      for (std::size_t k = 0; k < t.pairs.size(); ++k) {
        out << t.pairs[k].u << ',' << t.pairs[k].v << ',' << format_double(t.scores[k]) << '\n';
      }
    } else if (*recommend) {
      rec_spec.method = parse_method(rec_method);
      const EdgeList pos = read_edge_list(rec_pos).pairs;
      const Graph train = load_train(rec_train, pos);
      const RecommendationList recs = top_c_recommend(train, rec_spec, rec_top_c);
      const VcmprResult v = vcmpr_at_c(recs, pos, rec_top_c);
      auto out = open_out(rec_out);
      out << "node,hits,partners,precision,recall,vcmpr\n";
      for (const auto& r : v.per_node) {
        out << r.node << ',' << r.hits << ',' << r.partners << ',' << format_double(r.precision)
            << ',' << format_double(r.recall) << ',' << format_double(r.vcmpr) << '\n';
      }
      std::cout << "vcmpr@" << rec_top_c << ' ' << format_double(v.value) << '\n';
    } else if (*rank_compare) {
      const BenchmarkReport a = rankings_from_csv(slurp(rc_a));
      const BenchmarkReport b = rankings_from_csv(slurp(rc_b));
      const RankingComparison c =
          (rc_task_a.empty() && rc_task_b.empty())
              ? compare_rankings(a, b, rc_p)
              : compare_rankings(a, rc_task_a, b, rc_task_b.empty() ? rc_task_a : rc_task_b, rc_p);
      std::cout << json{{"per_graph", c.per_graph}, {"mean", c.mean}}.dump(2) << '\n';
    } else if (*theory) {
      const IngestedGraph in = load_graph(th_graph, {.largest_component = th_lcc});
      const LogNormalFit fit = fit_lognormal_degree(in.graph);
      const LogNormalFit pos = positive_degree_law(fit);
      json out{{"mu", fit.mu},
               {"sigma", fit.sigma},
               {"predicted_auc_pa", predicted_auc_pa(fit.sigma)},
               {"positive_law", {{"mu", pos.mu}, {"sigma", pos.sigma}}}};
      std::cout << out.dump(2) << '\n';
    } else if (*evaluate) {
      json j;
      try {
        j = json::parse(slurp(ev_config));
      } catch (const json::parse_error& e) {
        throw InputError(std::string("config: ") + e.what());
      }
      BenchmarkConfig config = parse_config(j);
      // Relative graph paths resolve against the config file's directory.
      const fs::path base = fs::path(ev_config).parent_path();
      for (auto& g : config.graphs) {
        if (auto* f = std::get_if<FileGraphSource>(&g.spec); f && fs::path(f->path).is_relative()) {
          f->path = (base / f->path).string();
        }
      }
      const BenchmarkReport report = run_evaluation(config, ev_jobs);
      open_out(ev_out) << report_to_csv(report);
      open_out(ev_summary) << report_summary(report, config).dump(2) << '\n';
      if (!ev_rankings.empty()) open_out(ev_rankings) << rankings_to_csv(report);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
