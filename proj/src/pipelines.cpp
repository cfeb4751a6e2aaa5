#include "netaug/pipelines.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "netaug/certificate.hpp"
#include "netaug/cycle_aug.hpp"
#include "netaug/graph_core.hpp"
#include "netaug/sndp.hpp"
#include "netaug/spanner.hpp"

namespace netaug {
namespace {

CutDemand constant_demand(std::size_t k) {
  const auto value = static_cast<std::uint32_t>(k);
  return [value](std::uint32_t) { return value; };
}

CutDemand terminal_demand(std::size_t n, std::span<const Vertex> terminals) {
  if (n > 32) throw SizeLimitExceeded("terminal demands support at most 32 vertices");
  std::uint32_t mask = 0;
  for (Vertex r : terminals) {
    if (r >= n) throw std::out_of_range("terminal outside the graph");
    mask |= std::uint32_t{1} << r;
  }
  return [mask](std::uint32_t side) -> std::uint32_t {
    const std::uint32_t inside = side & mask;
    return inside != 0 && inside != mask ? 2 : 0;
  };
}

std::vector<WeightedEdge> concat(std::span<const WeightedEdge> a, std::span<const WeightedEdge> b) {
  std::vector<WeightedEdge> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void set_output(PipelineReport& report, std::vector<WeightedEdge> output) {
  report.output = std::move(output);
  report.total_weight = total_weight(report.output);
}

std::vector<WeightedEdge> cactus_as_graph(const CactusGraph& c) {
  std::vector<WeightedEdge> out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) out.push_back({c.edges[i].first, c.edges[i].second, 0, i});
  return out;
}

// Links with their endpoints moved to cactus nodes; links inside one node are dropped.
std::vector<WeightedEdge> links_on_cactus(const CactusGraph& c, std::span<const WeightedEdge> links) {
  std::vector<WeightedEdge> out;
  for (const auto& l : links) {
    const Vertex a = c.phi.at(l.u);
    const Vertex b = c.phi.at(l.v);
    if (a != b) out.push_back({a, b, l.w, l.id});
  }
  return out;
}

struct CycleRun {
  std::optional<std::vector<WeightedEdge>> chosen;
  std::size_t peak = 0;
  std::size_t cycle_length = 0;
  std::size_t junction_links = 0;
  std::size_t junction_links_used = 0;
  std::size_t skipped_links = 0;
};

CycleRun augment_cactus(const CactusGraph& c, std::span<const WeightedEdge> links, double epsilon) {
  for (const auto& l : links) {
    check_endpoints(l, c.original_count());
    if (l.u == l.v) throw std::invalid_argument("link is a self-loop");
  }
  const UnfoldedCycle unfolded = cactus_unfold(c);
  CycleRun run;
  run.cycle_length = unfolded.cycle_length;
  run.junction_links = unfolded.zero_links.size();
  if (unfolded.cycle_length < 2) {
    run.chosen.emplace();
    return run;
  }
  const auto position = [&](Vertex v) { return unfolded.psi.at(c.phi.at(v)).front(); };
  WeightedCycleAugmenter aug(unfolded.cycle_length, epsilon);
  const std::size_t z = unfolded.zero_links.size();
  for (std::size_t j = 0; j < z; ++j) {
    auto link = unfolded.zero_links[j];
    link.id = j;
    aug.insert(link);
  }
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& l = links[i];
    if (c.phi[l.u] == c.phi[l.v]) {
      ++run.skipped_links;
      continue;
    }
    aug.insert({position(l.u), position(l.v), l.w, z + i});
  }
  run.peak = aug.peak_stored();
  auto sol = aug.finalize();
  if (!sol) return run;
  run.chosen.emplace();
  for (const auto& link : sol->links) {
    if (link.id < z) {
      ++run.junction_links_used;
    } else {
      run.chosen->push_back(links[link.id - z]);
    }
  }
  std::sort(run.chosen->begin(), run.chosen->end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.id < b.id; });
  return run;
}

PipelineReport report_cycle_run(const CactusGraph& c, std::span<const WeightedEdge> links, const CycleRun& run) {
  PipelineReport report;
  report.peak_stored["cycle_augmentation"] = run.peak;
  report.details["cycle_length"] = run.cycle_length;
  report.details["junction_links"] = run.junction_links;
  report.details["junction_links_used"] = run.junction_links_used;
  report.details["skipped_links"] = run.skipped_links;
  report.details["input_links"] = links.size();
  if (!run.chosen) return report;
  set_output(report, *run.chosen);
  const auto augmented = concat(cactus_as_graph(c), links_on_cactus(c, report.output));
  report.feasible = c.m < 2 || edge_connectivity(augmented, c.m, 3) >= 3;
  return report;
}

std::vector<WeightedEdge> spanning_forest(std::vector<WeightedEdge> edges, std::size_t n) {
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.w != b.w ? a.w < b.w : a.id < b.id;
  });
  UnionFind uf(n);
  std::vector<WeightedEdge> out;
  for (const auto& e : edges) {
    if (uf.unite(e.u, e.v)) out.push_back(e);
  }
  return out;
}

std::vector<WeightedEdge> without(std::span<const WeightedEdge> edges, const std::vector<WeightedEdge>& taken) {
  std::set<ArrivalId> ids;
  for (const auto& e : taken) ids.insert(e.id);
  std::vector<WeightedEdge> out;
  for (const auto& e : edges) {
    if (!ids.contains(e.id)) out.push_back(e);
  }
  return out;
}

}  // namespace

std::optional<EdgeSolution> oracle_cover(std::size_t n, std::span<const WeightedEdge> base,
                                         std::span<const WeightedEdge> links, const CutDemand& f) {
  if (links.size() <= kMaxOracleLinks) return brute_force_cut_cover(n, base, links, f);
  return solve_cut_cover(n, base, links, f);
}

PipelineReport kcap_link_arrival(const CactusGraph& cactus, std::span<const WeightedEdge> links,
                                 const PipelineOptions& opts) {
  if (!cactus_validate(cactus)) throw std::invalid_argument("invalid cactus");
  auto report = report_cycle_run(cactus, links, augment_cactus(cactus, links, opts.epsilon));
  if (opts.with_oracle) {
    auto opt = oracle_cover(cactus.m, cactus_as_graph(cactus), links_on_cactus(cactus, links), constant_demand(3));
    if (opt) report.oracle_weight = opt->weight;
  }
  return report;
}

PipelineReport kcap_link_arrival(std::span<const WeightedEdge> base, std::size_t n,
                                 std::span<const WeightedEdge> links, std::size_t k, const PipelineOptions& opts) {
  if (k < 2) throw std::invalid_argument("link-arrival augmentation needs k >= 2");
  if (n > kMaxCactusBuildVertices) {
    throw SizeLimitExceeded("cactus construction supports at most " + std::to_string(kMaxCactusBuildVertices) +
                            " vertices");
  }
  for (const auto& e : base) check_endpoints(e, n);
  if (edge_connectivity(base, n, k) != k - 1) {
    throw std::invalid_argument("base edge connectivity must be exactly k-1");
  }
  const CactusGraph cactus = cactus_build(std::vector<WeightedEdge>(base.begin(), base.end()), n);
  auto report = report_cycle_run(cactus, links, augment_cactus(cactus, links, opts.epsilon));
  if (report.feasible) report.feasible = is_k_edge_connected(concat(base, report.output), n, k);
  if (opts.with_oracle) {
    auto opt = oracle_cover(n, base, links, constant_demand(k));
    if (opt) report.oracle_weight = opt->weight;
  }
  return report;
}

PipelineReport kcap_fully_streaming(std::span<const StreamEvent> events, std::size_t n, std::size_t k,
                                    const PipelineOptions& opts) {
  ForestStack cert(n, k);
  SpannerState spanner(n, opts.t, spanner_epsilon(opts.t, opts.epsilon));
  for (const auto& ev : events) {
    if (ev.kind == EventKind::kBase) {
      cert.insert(ev.edge);
    } else {
      spanner.insert(ev.edge);
    }
  }
  const auto base = cert.edges();
  const auto links = spanner.edges();
  if (!is_k_edge_connected(base, n, k - 1)) {
    throw std::invalid_argument("base edges are not (k-1)-edge-connected");
  }
  PipelineReport report;
  report.peak_stored["certificate"] = cert.stored();
  report.peak_stored["spanner"] = spanner.peak_stored();
  report.details["certificate_edges"] = base.size();
  report.details["spanner_links"] = links.size();
  auto sol = solve_cut_cover(n, base, links, constant_demand(k));
  if (sol) {
    set_output(report, sol->chosen);
    report.feasible = is_k_edge_connected(concat(base, report.output), n, k);
  }
  if (opts.with_oracle) {
    std::vector<WeightedEdge> all_base, all_links;
    for (const auto& ev : events) (ev.kind == EventKind::kBase ? all_base : all_links).push_back(ev.edge);
    auto opt = oracle_cover(n, all_base, all_links, constant_demand(k));
    if (opt) report.oracle_weight = opt->weight;
  }
  return report;
}

PipelineReport stap_fully_streaming(std::span<const StreamEvent> events, std::size_t n,
                                    std::span<const Vertex> terminals, const PipelineOptions& opts) {
  const CutDemand demand = terminal_demand(n, terminals);
  ForestStack cert(n, 2);
  SpannerState spanner(n, opts.t, spanner_epsilon(opts.t, opts.epsilon));
  for (const auto& ev : events) {
    if (ev.kind == EventKind::kBase) {
      cert.insert(ev.edge);
    } else {
      spanner.insert(ev.edge);
    }
  }
  if (!cert.forests()[1].empty()) throw std::invalid_argument("base edges contain a cycle");
  const auto tree = cert.edges();
  UnionFind uf(n);
  for (const auto& e : tree) uf.unite(e.u, e.v);
  std::set<Vertex> roots;
  for (const auto& e : tree) roots.insert(uf.find(e.u));
  if (terminals.size() > 1) {
    for (Vertex r : terminals) roots.insert(uf.find(r));
  }
  if (roots.size() > 1) throw std::invalid_argument("base tree does not span all terminals");

  const auto links = spanner.edges();
  PipelineReport report;
  report.peak_stored["certificate"] = cert.stored();
  report.peak_stored["spanner"] = spanner.peak_stored();
  report.details["terminals"] = terminals.size();
  report.details["spanner_links"] = links.size();
  auto sol = solve_cut_cover(n, tree, links, demand);
  if (sol) {
    set_output(report, sol->chosen);
    const auto augmented = concat(tree, report.output);
    report.feasible = true;
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      for (std::size_t j = i + 1; j < terminals.size(); ++j) {
        if (terminals[i] == terminals[j]) continue;
        UnitFlowGraph g(augmented, n);
        if (g.max_flow(terminals[i], terminals[j], 2) < 2) report.feasible = false;
      }
    }
  }
  if (opts.with_oracle) {
    std::vector<WeightedEdge> all_links;
    for (const auto& ev : events) {
      if (ev.kind == EventKind::kLink) all_links.push_back(ev.edge);
    }
    auto opt = oracle_cover(n, tree, all_links, demand);
    if (opt) report.oracle_weight = opt->weight;
  }
  return report;
}

PipelineReport kecss(std::span<const WeightedEdge> edges, std::size_t n, std::size_t k,
                     const PipelineOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (const auto& e : edges) {
    check_endpoints(e, n);
    if (e.u == e.v) throw std::invalid_argument("edge is a self-loop");
  }
  PipelineReport report;

  std::vector<WeightedEdge> forest;
  std::size_t forest_peak = 0;
  for (const auto& e : edges) {
    forest.push_back(e);
    forest_peak = std::max(forest_peak, forest.size());
    forest = spanning_forest(std::move(forest), n);
  }
  report.peak_stored["spanning_forest"] = forest_peak;
  PipelineStage first{"pass 1", total_weight(forest), forest.size(), std::nullopt};
  if (opts.with_oracle) {
    const auto offline = spanning_forest(std::vector<WeightedEdge>(edges.begin(), edges.end()), n);
    if (offline.size() + 1 == n || n == 0) first.oracle_weight = total_weight(offline);
  }
  report.stages.push_back(first);
  if (n > 0 && forest.size() + 1 != n) return report;

  std::vector<WeightedEdge> h = forest;
  std::size_t cycle_peak = 0;
  for (std::size_t pass = 2; pass <= k; ++pass) {
    PipelineStage stage{"pass " + std::to_string(pass), 0, 0, std::nullopt};
    const auto rest = without(edges, h);
    if (opts.with_oracle) {
      auto opt = oracle_cover(n, h, rest, constant_demand(pass));
      if (opt) stage.oracle_weight = opt->weight;
    }
    if (!is_k_edge_connected(h, n, pass)) {
      if (n > kMaxCactusBuildVertices) {
        throw SizeLimitExceeded("cactus construction supports at most " +
                                std::to_string(kMaxCactusBuildVertices) + " vertices");
      }
      const CactusGraph cactus = cactus_build(h, n);
      const CycleRun run = augment_cactus(cactus, rest, opts.epsilon);
      cycle_peak = std::max(cycle_peak, run.peak);
      if (!run.chosen) {
        report.stages.push_back(stage);
        report.peak_stored["cycle_augmentation"] = cycle_peak;
        return report;
      }
      stage.weight = total_weight(*run.chosen);
      stage.output_size = run.chosen->size();
      h.insert(h.end(), run.chosen->begin(), run.chosen->end());
    }
    report.stages.push_back(stage);
  }
  report.peak_stored["cycle_augmentation"] = cycle_peak;
  set_output(report, h);
  report.feasible = is_k_edge_connected(h, n, k);
  if (opts.with_oracle) {
    auto opt = oracle_cover(n, {}, edges, constant_demand(k));
    if (opt) report.oracle_weight = opt->weight;
  }
  return report;
}

PipelineReport sndp(std::span<const WeightedEdge> edges, std::size_t n, const Requirements& requirements,
                    std::size_t k, const PipelineOptions& opts) {
  Cascade cascade(n, k, opts.t, opts.epsilon);
  for (const auto& e : edges) cascade.insert(e);
  PipelineReport report;
  report.peak_stored["cascade"] = cascade.peak_stored();
  const auto coreset = cascade.coreset();
  for (std::size_t i = 0; i < coreset.size(); ++i) {
    report.details["layer_" + std::to_string(i + 1)] = coreset[i].size();
  }
  const CutDemand full = [&requirements](std::uint32_t side) { return requirements.cut_function(side); };
  auto sol = solve_sndp(n, coreset, requirements);
  if (sol) {
    for (const auto& phase : sol->phases) {
      PipelineStage stage{"phase " + std::to_string(phase.index), phase.weight, phase.chosen.size(), std::nullopt};
      if (opts.with_oracle) {
        auto opt = oracle_cover(n, phase.base, without(edges, phase.base), phase_demand(requirements, k, phase.index));
        if (opt) stage.oracle_weight = opt->weight;
      }
      report.stages.push_back(stage);
    }
    set_output(report, sol->edges);
    report.feasible = true;
    for (const auto& [pair, need] : requirements.pairs()) {
      UnitFlowGraph g(report.output, n);
      if (g.max_flow(pair.first, pair.second, need) < need) report.feasible = false;
    }
  }
  if (opts.with_oracle) {
    auto opt = oracle_cover(n, {}, edges, full);
    if (opt) report.oracle_weight = opt->weight;
  }
  return report;
}

}  // namespace netaug
