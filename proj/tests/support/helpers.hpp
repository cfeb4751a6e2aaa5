#pragma once

// Shared fixtures and independent reference computations for the test suites.
// Nothing here calls into the library's own algorithms except for types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "netaug/types.hpp"

namespace netaug::testing {

inline WeightedEdge edge(Vertex u, Vertex v, Weight w = 1, ArrivalId id = 0) { return {u, v, w, id}; }

inline std::vector<WeightedEdge> numbered(std::vector<WeightedEdge> edges, ArrivalId first = 0) {
  for (auto& e : edges) e.id = first++;
  return edges;
}

inline std::vector<WeightedEdge> cycle_graph(std::size_t n, ArrivalId first_id = 0) {
  std::vector<WeightedEdge> out;
  for (Vertex i = 0; i < n; ++i) out.push_back({i, static_cast<Vertex>((i + 1) % n), 1, first_id++});
  return out;
}

inline std::vector<WeightedEdge> complete_graph(std::size_t n, ArrivalId first_id = 0) {
  std::vector<WeightedEdge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v, 1, first_id++});
  }
  return out;
}

inline bool crosses(const WeightedEdge& e, std::uint32_t side) {
  return ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
}

inline std::size_t crossing(const std::vector<WeightedEdge>& edges, std::uint32_t side) {
  std::size_t c = 0;
  for (const auto& e : edges) c += crosses(e, side);
  return c;
}

/// Menger via cut enumeration: the minimum number of edges crossing a side
/// that separates s from t.
inline std::size_t min_st_cut(const std::vector<WeightedEdge>& edges, std::size_t n, Vertex s, Vertex t) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t side = 0; side < (std::uint32_t{1} << n); ++side) {
    if (((side >> s) & 1U) == 0 || ((side >> t) & 1U) != 0) continue;
    best = std::min(best, crossing(edges, side));
  }
  return best;
}

/// Global minimum cut by enumeration (n >= 2).
inline std::size_t min_cut_value(const std::vector<WeightedEdge>& edges, std::size_t n) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t side = 1; side + 1 < (std::uint32_t{1} << n); ++side) {
    best = std::min(best, crossing(edges, side));
  }
  return best;
}

inline bool connected_by_bfs(const std::vector<WeightedEdge>& edges, std::size_t n) {
  if (n <= 1) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

/// Shortest-path distances with 128-bit accumulation; unreachable = max.
inline std::vector<unsigned __int128> dijkstra(const std::vector<WeightedEdge>& edges, std::size_t n, Vertex src) {
  using W = unsigned __int128;
  const W inf = ~W{0};
  std::vector<std::vector<std::pair<Vertex, Weight>>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  std::vector<W> dist(n, inf);
  using Item = std::pair<W, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d != dist[x]) continue;
    for (auto [y, w] : adj[x]) {
      if (d + w < dist[y]) {
        dist[y] = d + w;
        pq.push({dist[y], y});
      }
    }
  }
  return dist;
}

inline std::vector<WeightedEdge> random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m, Weight max_w,
                                              bool allow_parallel = true, Weight min_w = 1) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::uniform_int_distribution<Weight> weight(min_w, max_w);
  std::vector<WeightedEdge> out;
  std::size_t guard = 0;
  while (out.size() < m && guard++ < 100 * m + 100) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!allow_parallel) {
      bool dup = std::any_of(out.begin(), out.end(), [&](const WeightedEdge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
      });
      if (dup) continue;
    }
    out.push_back({u, v, weight(rng), out.size()});
  }
  return out;
}

/// Random connected graph: a random spanning tree plus `extra` further edges.
inline std::vector<WeightedEdge> random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra,
                                                  Weight max_w, Weight min_w = 1) {
  std::vector<WeightedEdge> out;
  std::uniform_int_distribution<Weight> weight(min_w, max_w);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    out.push_back({parent(rng), v, weight(rng), out.size()});
  }
  auto more = random_graph(rng, n, extra, max_w, true, min_w);
  for (auto& e : more) {
    e.id = out.size();
    out.push_back(e);
  }
  return out;
}

/// Weight drawn log-uniformly from [1, 10^decades].
inline Weight log_uniform_weight(std::mt19937_64& rng, int decades) {
  std::uniform_real_distribution<double> expo(0.0, static_cast<double>(decades));
  double x = std::pow(10.0, expo(rng));
  if (x < 1.0) x = 1.0;
  if (x > 9.0e18) x = 9.0e18;
  return static_cast<Weight>(x);
}

}  // namespace netaug::testing
