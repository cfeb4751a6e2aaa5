#include "netaug/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "netaug/exact_cover.hpp"
#include "netaug/graph_core.hpp"

namespace netaug {

void Requirements::set(Vertex s, Vertex t, std::uint32_t r) {
  if (s >= n_ || t >= n_) throw std::out_of_range("requirement names a vertex outside the graph");
  if (s == t) throw std::invalid_argument("requirement between a vertex and itself");
  if (r == 0) return;
  auto& slot = r_[{std::min(s, t), std::max(s, t)}];
  slot = std::max(slot, r);
}

std::uint32_t Requirements::get(Vertex s, Vertex t) const {
  auto it = r_.find({std::min(s, t), std::max(s, t)});
  return it == r_.end() ? 0 : it->second;
}

std::uint32_t Requirements::max_requirement() const {
  std::uint32_t best = 0;
  for (const auto& [pair, r] : r_) best = std::max(best, r);
  return best;
}

std::uint32_t Requirements::cut_function(std::uint32_t side) const {
  std::uint32_t best = 0;
  for (const auto& [pair, r] : r_) {
    if (((side >> pair.first) & 1U) != ((side >> pair.second) & 1U)) best = std::max(best, r);
  }
  return best;
}

AugmentationInstance::AugmentationInstance(std::vector<WeightedEdge> base, std::vector<WeightedEdge> links,
                                           std::size_t n, std::size_t k)
    : base_(std::move(base)), links_(std::move(links)), n_(n), k_(k) {
  if (k_ < 1) throw std::invalid_argument("target connectivity k must be at least 1");
  for (const auto& e : base_) check_endpoints(e, n_);
  for (const auto& l : links_) {
    check_endpoints(l, n_);
    if (l.u == l.v) throw std::invalid_argument("self-loop link");
  }
  if (!is_k_edge_connected(base_, n_, k_ - 1)) {
    throw std::invalid_argument("base graph is not (k-1)-edge-connected");
  }
}

namespace {

struct Deficits {
  std::vector<std::uint32_t> sides;
  std::vector<std::uint32_t> need;
};

Deficits deficient_sides(std::size_t n, std::span<const WeightedEdge> base,
                         std::span<const WeightedEdge> links, const CutDemand& f, std::size_t max_n) {
  if (n > max_n) {
    throw SizeLimitExceeded("cut covering supports at most " + std::to_string(max_n) + " vertices");
  }
  for (const auto& e : base) check_endpoints(e, n);
  for (const auto& e : links) check_endpoints(e, n);
  Deficits out;
  if (n < 2) return out;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t half = 1; half < limit; ++half) {
    const std::uint32_t side = half << 1;
    const std::uint32_t demand = f(side);
    if (demand == 0) continue;
    const std::size_t have = cut_size(base, side);
    if (have < demand) {
      out.sides.push_back(side);
      out.need.push_back(demand - static_cast<std::uint32_t>(have));
    }
  }
  return out;
}

bool crosses(const WeightedEdge& e, std::uint32_t side) {
  return ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
}

// Ascending index sequences compared lexicographically, proper prefixes first.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const std::uint32_t above = ~((std::uint32_t{2} << d) - 1);
  if ((a >> d) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

EdgeSolution materialize(std::span<const WeightedEdge> links, std::vector<std::size_t> indices) {
  EdgeSolution sol;
  sol.indices = std::move(indices);
  for (std::size_t i : sol.indices) {
    sol.chosen.push_back(links[i]);
    sol.weight = add_weight(sol.weight, links[i].w);
  }
  return sol;
}

}  // namespace

std::optional<EdgeSolution> brute_force_cut_cover(std::size_t n, std::span<const WeightedEdge> base,
                                                  std::span<const WeightedEdge> links,
                                                  const CutDemand& f) {
  if (links.size() > kMaxOracleLinks) {
    throw SizeLimitExceeded("exhaustive search supports at most " + std::to_string(kMaxOracleLinks) +
                            " links");
  }
  const Deficits def = deficient_sides(n, base, links, f, kMaxCutEnumerationVertices);
  const std::size_t m = links.size();
  std::vector<std::vector<std::uint32_t>> hits(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint32_t s = 0; s < def.sides.size(); ++s) {
      if (crosses(links[i], def.sides[s])) hits[i].push_back(s);
    }
  }
  std::vector<std::uint32_t> count(def.sides.size(), 0);
  std::size_t unsatisfied = def.sides.size();
  unsigned __int128 weight = 0;
  std::uint32_t mask = 0;
  bool found = false;
  unsigned __int128 best_weight = 0;
  std::uint32_t best_mask = 0;

  const auto consider = [&] {
    if (unsatisfied != 0) return;
    if (!found || weight < best_weight || (weight == best_weight && lex_less(mask, best_mask))) {
      found = true;
      best_weight = weight;
      best_mask = mask;
    }
  };
  consider();
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    const std::uint32_t flag = std::uint32_t{1} << bit;
    mask ^= flag;
    if (mask & flag) {
      weight += links[bit].w;
      for (std::uint32_t s : hits[bit]) {
        if (++count[s] == def.need[s]) --unsatisfied;
      }
    } else {
      weight -= links[bit].w;
      for (std::uint32_t s : hits[bit]) {
        if (count[s]-- == def.need[s]) ++unsatisfied;
      }
    }
    consider();
  }
  if (!found) return std::nullopt;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < m; ++i) {
    if ((best_mask >> i) & 1U) indices.push_back(i);
  }
  return materialize(links, std::move(indices));
}

std::optional<EdgeSolution> solve_cut_cover(std::size_t n, std::span<const WeightedEdge> base,
                                            std::span<const WeightedEdge> links, const CutDemand& f) {
  const Deficits def = deficient_sides(n, base, links, f, kMaxCutCoverVertices);
  CoverProblem problem;
  problem.demand = def.need;
  problem.candidates.resize(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    problem.candidates[i].w = links[i].w;
    for (std::uint32_t s = 0; s < def.sides.size(); ++s) {
      if (crosses(links[i], def.sides[s])) problem.candidates[i].elements.push_back(s);
    }
  }
  auto choice = solve_min_cover(problem);
  if (!choice) return std::nullopt;
  return materialize(links, std::move(choice->indices));
}

std::optional<EdgeSolution> exact_kcap(const AugmentationInstance& inst) {
  const auto k = static_cast<std::uint32_t>(inst.k());
  return brute_force_cut_cover(inst.vertex_count(), inst.base(), inst.links(),
                               [k](std::uint32_t) { return k; });
}

std::optional<EdgeSolution> exact_stap(std::size_t n, std::span<const WeightedEdge> tree,
                                       std::span<const WeightedEdge> links,
                                       std::span<const Vertex> terminals) {
  std::uint32_t terminal_mask = 0;
  for (Vertex r : terminals) {
    if (r >= n) throw std::out_of_range("terminal outside the graph");
    terminal_mask |= std::uint32_t{1} << r;
  }
  return brute_force_cut_cover(n, tree, links, [terminal_mask](std::uint32_t side) -> std::uint32_t {
    const std::uint32_t inside = side & terminal_mask;
    return inside != 0 && inside != terminal_mask ? 2 : 0;
  });
}

std::optional<EdgeSolution> exact_sndp(std::size_t n, std::span<const WeightedEdge> edges,
                                       const Requirements& requirements) {
  if (edges.size() > kMaxSndpEdges) {
    throw SizeLimitExceeded("exact SNDP supports at most " + std::to_string(kMaxSndpEdges) + " edges");
  }
  if (requirements.vertex_count() != n) {
    throw std::invalid_argument("requirements are defined on a different vertex count");
  }
  return brute_force_cut_cover(n, {}, edges,
                               [&](std::uint32_t side) { return requirements.cut_function(side); });
}

std::optional<ArcSolution> exact_directed_cycle_cover(std::size_t n, std::span<const Arc> arcs) {
  if (n > kMaxDirectedCycle) {
    throw SizeLimitExceeded("directed cycle cover supports cycles of at most " +
                            std::to_string(kMaxDirectedCycle) + " vertices");
  }
  for (const auto& a : arcs) {
    if (a.tail >= n || a.head >= n) throw std::out_of_range("arc endpoint outside the cycle");
    if (a.tail == a.head) throw std::invalid_argument("arc is a self-loop");
  }
  CoverProblem problem;
  std::vector<std::pair<Vertex, Vertex>> intervals;
  for (Vertex l = 1; l < n; ++l) {
    for (Vertex r = l; r < n; ++r) intervals.emplace_back(l, r);
  }
  problem.demand.assign(intervals.size(), 1);
  problem.candidates.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    problem.candidates[i].w = arcs[i].w;
    const auto inside = [&](Vertex x, std::size_t j) {
      return intervals[j].first <= x && x <= intervals[j].second;
    };
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      if (inside(arcs[i].head, j) && !inside(arcs[i].tail, j)) {
        problem.candidates[i].elements.push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  auto choice = solve_min_cover(problem);
  if (!choice) return std::nullopt;
  ArcSolution sol;
  sol.indices = std::move(choice->indices);
  sol.weight = choice->weight;
  for (std::size_t i : sol.indices) sol.chosen.push_back(arcs[i]);
  return sol;
}

bool validate_certificate(std::span<const WeightedEdge> full, std::span<const WeightedEdge> cert,
                          std::size_t n, std::size_t k) {
  for (const auto& e : cert) check_endpoints(e, n);
  for (const auto& side : cuts_of_size_at_most(full, n, k)) {
    if (cut_size(cert, side.members) != side.boundary_size) return false;
  }
  return true;
}

}  // namespace netaug
