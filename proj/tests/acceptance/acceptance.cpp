// Copyright 2026 The lpbench Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   lpbench_acceptance [--cli PATH] [--known-failure ID]...
//
// --cli points at the lpbench binary for the determinism check. A criterion
// listed with --known-failure still prints FAIL but does not make the exit
// status non-zero; any other failure does.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "lpbench/edge_list_io.hpp"
#include "lpbench/generators.hpp"
#include "lpbench/harness.hpp"
#include "lpbench/metrics.hpp"
#include "lpbench/sampling.hpp"
#include "lpbench/theory.hpp"

namespace fs = std::filesystem;
using namespace lpbench;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double mean_of(const BenchmarkReport& r, const std::string& method, const std::string& task) {
  for (const auto& row : r.rows) {
    if (row.method == method && row.task == task && !row.repeat) {
      if (!row.value) throw std::runtime_error("cell failed: " + row.error);
      return *row.value;
    }
  }
  throw std::runtime_error("no mean row for " + method + "/" + task);
}

// Shared by criteria 2 and 3.
const Graph& price_1e4() {
  static const Graph g = generate_price(10000, 10, 2026);
  return g;
}

const BenchmarkReport& price_pa_report() {
  static const BenchmarkReport r = [] {
    BenchmarkConfig c;
    c.graphs = {{"price", PriceGraphSource{10000, 10, 2026}}};
    c.methods = {{"pa", {.method = Method::pa}}};
    c.beta = 0.25;
    c.repeats = 5;
    c.master_seed = 1;
    return run_benchmark(c, 1);
  }();
  return r;
}

Outcome theory_identity() {
  double worst = 0;
  for (int i = 0; i <= 12; ++i) {
    const double s = 0.25 * i;
    worst = std::max(worst, std::abs(predicted_auc_pa(s) - 0.5 * std::erfc(-s / std::sqrt(2.0))));
  }
  const bool zero = predicted_auc_pa(0.0) == 0.5;
  return {worst < 1e-6 && zero, fmt("max |quadrature - Phi(sigma)| = %.2e, sigma=0 -> %s", worst,
                                     zero ? "0.5 exactly" : "not 0.5")};
}

Outcome price_auc_matches_theory() {
  const double sigma = fit_lognormal_degree(price_1e4()).sigma;
  const double predicted = predicted_auc_pa(sigma);
  const double measured = mean_of(price_pa_report(), "pa", "uniform");
  const double gap = std::abs(measured - predicted);
  return {gap <= 0.03, fmt("sigma_hat=%.4f predicted=%.4f measured=%.4f |diff|=%.4f (tol 0.03)", sigma,
                           predicted, measured, gap)};
}

Outcome degree_correction_effect() {
  const BenchmarkReport& r = price_pa_report();
  const double uni = mean_of(r, "pa", "uniform");
  const double dc = mean_of(r, "pa", "degree-corrected");
  const bool ok = dc >= 0.45 && dc <= 0.60 && uni - dc >= 0.15;
  return {ok, fmt("uniform=%.4f degree-corrected=%.4f gap=%.4f (need dc in [0.45,0.60], gap >= 0.15)",
                  uni, dc, uni - dc)};
}

Outcome endpoint_degree_laws() {
  const Graph g = generate_price(100000, 10, 7);
  const PositiveSplit s = split_positive(g, 0.25, 8);
  const std::size_t count = s.positives.size();
  const EdgeList uni = sample_negative_uniform(g, s.positives, count, 9);
  const EdgeList dc = sample_negative_degree_corrected(g, s.positives, count, 10);
  const DegreeHistogram p = degree_distribution(g);
  const DegreeHistogram biased = size_biased(p);
  const double d_pos = ks_distance(endpoint_degree_histogram(s.positives, g), biased);
  const double d_dc = ks_distance(endpoint_degree_histogram(dc, g), biased);
  const double d_uni = ks_distance(endpoint_degree_histogram(uni, g), p);
  const bool ok = 2 * count >= 100000 && d_pos < 0.02 && d_dc < 0.02 && d_uni < 0.02;
  return {ok, fmt("%zu endpoints each; KS(pos, kp/<k>)=%.4f KS(dc neg, kp/<k>)=%.4f KS(uniform neg, p)=%.4f",
                  2 * count, d_pos, d_dc, d_uni)};
}

Outcome lognormal_shift() {
  const auto degrees = sample_lognormal_degrees(100000, 1.0, 0.8, 11);
  const ConfigurationGraph cg = generate_configuration(degrees, 12);
  const LogNormalFit fit = fit_lognormal_degree(cg.graph);
  const PositiveSplit s = split_positive(cg.graph, 0.25, 13);
  double sum = 0;
  for (const Edge& e : s.positives) sum += std::log(cg.graph.degree(e.u)) + std::log(cg.graph.degree(e.v));
  const double measured = sum / (2.0 * s.positives.size());
  const double predicted = positive_degree_law(fit).mu;
  return {std::abs(measured - predicted) <= 0.05,
          fmt("mu_hat=%.4f sigma_hat=%.4f mean ln k(pos)=%.4f mu+sigma^2=%.4f |diff|=%.4f", fit.mu,
              fit.sigma, measured, predicted, std::abs(measured - predicted))};
}

Outcome metric_oracles() {
  std::mt19937_64 rng(6);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> len(1, 100), val(0, t % 2 ? 8 : 1 << 20);
    std::vector<double> pos(len(rng)), neg(len(rng));
    for (auto& x : pos) x = val(rng);
    for (auto& x : neg) x = val(rng);
    double wins = 0;
    for (double a : pos)
      for (double b : neg) wins += a > b ? 1 : (a == b ? 0.5 : 0);
    worst = std::max(worst, std::abs(auc_roc(pos, neg) - wins / (pos.size() * neg.size())));
  }
  // Held out (0,1), (0,2), (5,6); C=2 gives per-node values 1/2, 1, 0, 1, 0.
  RecommendationList recs{.top_c = 2, .per_node = std::vector<std::vector<Recommendation>>(8)};
  recs.per_node[0] = {{1, 3}, {3, 2}};
  recs.per_node[1] = {{4, 3}, {0, 2}};
  recs.per_node[2] = {{3, 3}, {4, 2}};
  recs.per_node[5] = {{7, 3}, {6, 2}};
  const double v = vcmpr_at_c(recs, EdgeList{{0, 1}, {0, 2}, {5, 6}}, 2).value;
  const double r1 = rbo({"x", "y", "z"}, {"y", "x", "z"}, 0.5);
  const double r2 = rbo({"x", "y"}, {"y", "x"}, 0.5);
  // Direct formula for a 4-item case: A = [0, 1/2, 2/3, 1].
  const double r3 = rbo({"a", "b", "c", "d"}, {"b", "d", "a", "c"}, 0.5);
  const double r3_want = 0.5 * (0 + 0.5 * 0.5 + 0.25 * 2.0 / 3.0 + 0.125 * 1) + 0.0625;
  const bool ok = worst <= 1e-12 && std::abs(v - 0.5) < 1e-15 && std::abs(r1 - 0.5) < 1e-15 &&
                  std::abs(r2 - 0.5) < 1e-15 && std::abs(r3 - r3_want) < 1e-15;
  return {ok, fmt("AUC max err %.1e over 100 instances; VCMPR toy %.4f (want 0.5); RBO %.4f, %.4f, %.6f (want 0.5, 0.5, %.6f)",
                  worst, v, r1, r2, r3, r3_want)};
}

Outcome sampler_validity() {
  std::size_t bad = 0, nondeterministic = 0;
  for (std::uint64_t gi = 0; gi < 20; ++gi) {
    Graph g;
    if (gi % 2 == 0) {
      g = generate_price(3000 + 100 * gi, 2 + gi % 5, gi);
    } else {
      std::mt19937_64 rng(gi);
      std::bernoulli_distribution coin(0.004 + 0.001 * gi);
      EdgeList pairs;
      const NodeId n = 2000;
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
          if (coin(rng)) pairs.push_back({i, j});
      g = build_graph(pairs, n).graph;
    }
    for (auto kind : {NegativeSampler::uniform, NegativeSampler::degree_corrected}) {
      const EdgeList neg = sample_negatives(kind, g, {}, 100000, 1000 + gi);
      std::set<Edge> seen;
      for (const Edge& e : neg) bad += e.is_loop() || g.has_edge(e.u, e.v) || !seen.insert(e).second;
      bad += neg.size() != 100000;
      std::ostringstream a, b;
      format_edge_list(a, neg);
      format_edge_list(b, sample_negatives(kind, g, {}, 100000, 1000 + gi));
      nondeterministic += a.str() != b.str();
    }
  }
  return {bad == 0 && nondeterministic == 0,
          fmt("20 graphs x 2 samplers x 1e5 negatives: %zu invalid, %zu non-reproducible", bad,
              nondeterministic)};
}

Outcome lfr_generator() {
  double worst_mix = 0, slowest = 0;
  bool sizes_ok = true;
  for (double tau1 : {2.5, 3.0}) {
    for (int i = 1; i <= 9; ++i) {
      LfrParams p{.n = 3000, .tau1 = tau1, .tau2 = 3.0, .mu = 0.1 * i, .avg_degree = 25,
                  .max_degree = 1000, .min_comm = 100, .max_comm = 1000};
      const auto t0 = std::chrono::steady_clock::now();
      const LfrGraph g = generate_lfr(p, 100 + i);
      slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      worst_mix = std::max(worst_mix, std::abs(mixing_fraction(g.graph, g.labels) - p.mu));
      std::map<std::uint32_t, std::size_t> sizes;
      for (auto l : g.labels) ++sizes[l];
      for (auto [l, s] : sizes) sizes_ok &= s >= p.min_comm && s <= p.max_comm;
    }
  }
  LfrParams zero{.n = 3000, .tau1 = 2.5, .tau2 = 3.0, .mu = 0.0, .avg_degree = 25,
                 .max_degree = 1000, .min_comm = 100, .max_comm = 1000};
  const LfrGraph z = generate_lfr(zero, 5);
  const auto comp = connected_components(z.graph);
  const std::set<std::uint32_t> labels(z.labels.begin(), z.labels.end());
  const bool disjoint = mixing_fraction(z.graph, z.labels) == 0.0 &&
                        std::set<std::uint32_t>(comp.begin(), comp.end()).size() >= labels.size() &&
                        labels.size() > 1;
  const bool ok = worst_mix <= 0.02 && sizes_ok && disjoint && slowest < 30.0;
  return {ok, fmt("18 graphs: max |mu_hat - mu| = %.4f, sizes %s, mu=0 %s, slowest %.2f s", worst_mix,
                  sizes_ok ? "in bounds" : "OUT OF BOUNDS",
                  disjoint ? "is a disjoint union" : "is NOT a disjoint union", slowest)};
}

Outcome ranking_alignment() {
  BenchmarkConfig c;
  for (int i = 0; i < 10; ++i) {
    const std::size_t m = 2 + i % 4;
    c.graphs.push_back({"price-" + std::to_string(i), PriceGraphSource{1500, m, 300u + i}});
  }
  for (Method m : kAllMethods) c.methods.push_back({std::string(method_name(m)), {.method = m}});
  c.repeats = 5;
  c.master_seed = 9;
  c.recommendation = true;
  const BenchmarkReport r = run_evaluation(c, 1);
  const auto dc = compare_rankings(r, "degree-corrected", r, kRecommendationTask, c.rbo_p);
  const auto uni = compare_rankings(r, "uniform", r, kRecommendationTask, c.rbo_p);
  return {dc.mean >= uni.mean, fmt("mean RBO vs recommendation over 10 graphs: degree-corrected %.4f, uniform %.4f",
                                   dc.mean, uni.mean)};
}

Outcome harness_determinism(const char* cli) {
  BenchmarkConfig c;
  c.graphs = {{"a", PriceGraphSource{800, 3, 1}}, {"b", PriceGraphSource{600, 5, 2}}};
  for (Method m : kAllMethods) c.methods.push_back({std::string(method_name(m)), {.method = m}});
  c.repeats = 3;
  c.master_seed = 77;
  const std::string base = report_to_csv(run_evaluation(c, 1));
  bool same = report_to_csv(run_evaluation(c, 1)) == base && report_to_csv(run_evaluation(c, 4)) == base;
  std::string detail = fmt("library: %s", same ? "identical over 3 runs (1, 1, 4 workers)" : "DIFFERENT");

  if (cli != nullptr) {
    const fs::path dir = fs::temp_directory_path() / ("lpbench_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::ofstream(dir / "config.json") << config_to_json(c).dump();
    std::vector<std::string> outputs;
    for (int jobs : {1, 1, 3}) {
      const fs::path out = dir / ("r" + std::to_string(outputs.size()) + ".csv");
      const std::string cmd = std::string(cli) + " evaluate --config " + (dir / "config.json").string() +
                              " --out " + out.string() + " --summary " + (dir / "s.json").string() +
                              " --jobs " + std::to_string(jobs);
      if (std::system(cmd.c_str()) != 0) {
        outputs.push_back("<failed>");
        continue;
      }
      std::ifstream in(out, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      outputs.push_back(ss.str());
    }
    fs::remove_all(dir);
    const bool cli_same = outputs[0] != "<failed>" && outputs[0] == outputs[1] && outputs[0] == outputs[2] &&
                          outputs[0] == base;
    same &= cli_same;
    detail += fmt("; CLI: %s", cli_same ? "identical over 3 runs (1, 1, 3 jobs)" : "DIFFERENT");
  }
  return {same, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = nullptr;
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--cli PATH] [--known-failure ID]...\n", argv[0]);
      return 2;
    }
  }
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "theory identity", 1.0, theory_identity},
      {2, "Price PA AUC vs prediction", 60.0, price_auc_matches_theory},
      {3, "degree-correction effect", 0, degree_correction_effect},
      {4, "endpoint degree laws", 0, endpoint_degree_laws},
      {5, "log-normal positive shift", 0, lognormal_shift},
      {6, "metric oracles", 0, metric_oracles},
      {7, "sampler validity", 0, sampler_validity},
      {8, "LFR generator", 0, lfr_generator},
      {9, "ranking alignment", 0, ranking_alignment},
      {10, "harness determinism", 0, [cli] { return harness_determinism(cli); }},
  };
  int failures = 0;
  std::vector<int> unexpected, expected;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += fmt(" [over %.0f s budget]", c.budget_s);
    }
    if (!o.pass) {
      ++failures;
      (known.count(c.id) ? expected : unexpected).push_back(c.id);
    }
    std::printf("[%s] %2d %-28s %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, !o.pass && known.count(c.id) ? " [known failure]" : "");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed", static_cast<int>(criteria.size()) - failures, criteria.size());
  if (!expected.empty()) {
    std::printf("; known failures:");
    for (int id : expected) std::printf(" %d", id);
  }
  if (!unexpected.empty()) {
    std::printf("; unexpected failures:");
    for (int id : unexpected) std::printf(" %d", id);
  }
  std::printf("\n");
  return unexpected.empty() ? 0 : 1;
}
