#include "netaug/graph_core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace netaug {

void check_endpoints(const WeightedEdge& e, std::size_t n) {
  if (e.u >= n || e.v >= n) {
    throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." + std::to_string(n) + "-1");
  }
}

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
  Partition p;
  p.label_.resize(labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> seen;  // raw label -> class id
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = seen.try_emplace(labels[v], static_cast<std::uint32_t>(p.rep_.size()));
    if (fresh) p.rep_.push_back(static_cast<Vertex>(v));
    p.label_[v] = it->second;
  }
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0U);
  return from_labels(labels);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) return false;
  std::vector<std::int64_t> image(class_count(), -1);
  for (std::size_t v = 0; v < label_.size(); ++v) {
    auto& slot = image[label_[v]];
    const auto target = static_cast<std::int64_t>(coarser.label_[v]);
    if (slot == -1) {
      slot = target;
    } else if (slot != target) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> Partition::classes() const {
  std::vector<std::vector<Vertex>> out(class_count());
  for (std::size_t v = 0; v < label_.size(); ++v) out[label_[v]].push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> CutSide::vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex UnionFind::find(Vertex v) {
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    Vertex next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

bool UnionFind::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

UnitFlowGraph::UnitFlowGraph(std::span<const WeightedEdge> edges, std::size_t n) : adjacency_(n) {
  arcs_.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    check_endpoints(e, n);
    if (e.u == e.v) continue;
    const auto a = static_cast<std::uint32_t>(arcs_.size());
    arcs_.push_back({e.v, a + 1});
    arcs_.push_back({e.u, a});
    adjacency_[e.u].push_back(a);
    adjacency_[e.v].push_back(a + 1);
  }
  flow_.assign(arcs_.size(), 0);
}

std::size_t UnitFlowGraph::max_flow(Vertex s, Vertex t, std::size_t limit) {
  if (s == t) return limit;
  std::fill(flow_.begin(), flow_.end(), std::int8_t{0});
  const std::size_t n = adjacency_.size();
  std::vector<std::int64_t> via(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::size_t total = 0;
  while (total < limit) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = std::numeric_limits<std::int64_t>::max();
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size() && via[t] == -1; ++head) {
      const Vertex x = queue[head];
      for (std::uint32_t a : adjacency_[x]) {
        // An undirected unit edge has residual capacity 1 - flow in each direction.
        if (flow_[a] >= 1) continue;
        const Vertex y = arcs_[a].to;
        if (via[y] != -1) continue;
        via[y] = a;
        queue.push_back(y);
      }
    }
    if (via[t] == -1) break;
    for (Vertex y = t; y != s;) {
      const auto a = static_cast<std::uint32_t>(via[y]);
      ++flow_[a];
      --flow_[arcs_[a].twin];
      y = arcs_[arcs_[a].twin].to;
    }
    ++total;
  }
  return total;
}

Partition connected_components(std::span<const WeightedEdge> edges, std::size_t n) {
  UnionFind uf(n);
  for (const auto& e : edges) {
    check_endpoints(e, n);
    uf.unite(e.u, e.v);
  }
  std::vector<std::uint32_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = uf.find(static_cast<Vertex>(v));
  return Partition::from_labels(labels);
}

Partition three_edge_components(std::span<const WeightedEdge> edges, std::size_t n) {
  if (n > kMaxThreeEdgeVertices) {
    throw SizeLimitExceeded("three_edge_components supports at most " +
                            std::to_string(kMaxThreeEdgeVertices) + " vertices");
  }
  UnitFlowGraph graph(edges, n);
  std::vector<std::uint32_t> labels(n);
  std::vector<Vertex> reps;  // representatives of classes with >= 3 incident edges
  std::uint32_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    bool placed = false;
    if (graph.degree(v) >= 3) {
      for (Vertex r : reps) {
        if (graph.max_flow(r, v, 3) >= 3) {
          labels[v] = labels[r];
          placed = true;
          break;
        }
      }
      if (!placed) reps.push_back(v);
    }
    if (!placed) labels[v] = next++;
  }
  return Partition::from_labels(labels);
}

std::size_t edge_connectivity(std::span<const WeightedEdge> edges, std::size_t n, std::size_t cap) {
  if (n <= 1 || cap == 0) return cap;
  UnitFlowGraph graph(edges, n);
  std::size_t best = cap;
  for (Vertex v = 1; v < n && best > 0; ++v) {
    best = std::min(best, graph.max_flow(0, v, best));
  }
  return best;
}

bool is_k_edge_connected(std::span<const WeightedEdge> edges, std::size_t n, std::size_t k) {
  return edge_connectivity(edges, n, k) >= k;
}

std::size_t cut_size(std::span<const WeightedEdge> edges, std::uint32_t side) {
  std::size_t count = 0;
  for (const auto& e : edges) {
    count += ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
  }
  return count;
}

std::vector<CutSide> cuts_of_size_at_most(std::span<const WeightedEdge> edges, std::size_t n,
                                          std::size_t c) {
  if (n > kMaxCutEnumerationVertices) {
    throw SizeLimitExceeded("cut enumeration supports at most " +
                            std::to_string(kMaxCutEnumerationVertices) + " vertices");
  }
  for (const auto& e : edges) check_endpoints(e, n);
  std::vector<CutSide> out;
  if (n < 2) return out;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t half = 1; half < limit; ++half) {
    const std::uint32_t side = half << 1;
    const std::size_t size = cut_size(edges, side);
    if (size <= c) out.push_back({side, size});
  }
  return out;
}

}  // namespace netaug
