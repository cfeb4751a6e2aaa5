#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netaug/types.hpp"

namespace netaug {

// Desk-scale limits for the exhaustive routines below.
inline constexpr std::size_t kMaxThreeEdgeVertices = 512;
inline constexpr std::size_t kMaxCutEnumerationVertices = 24;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0);

  Vertex find(Vertex v);
  /// Returns false if a and b were already joined.
  bool unite(Vertex a, Vertex b);
  bool connected(Vertex a, Vertex b) { return find(a) == find(b); }
  std::size_t size() const { return parent_.size(); }
  std::size_t component_count() const { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> rank_;
  std::size_t components_ = 0;
};

/// Unit-capacity undirected multigraph with early-terminating augmenting-path
/// max-flow. Each parallel copy contributes one unit.
class UnitFlowGraph {
 public:
  UnitFlowGraph(std::span<const WeightedEdge> edges, std::size_t n);

  /// Number of edge-disjoint s-t paths, counting stops once `limit` is reached.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit);
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

 private:
  struct ArcSlot {
    Vertex to;
    std::uint32_t twin;
  };
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<ArcSlot> arcs_;
  std::vector<std::int8_t> flow_;
};

Partition connected_components(std::span<const WeightedEdge> edges, std::size_t n);

/// u, v share a class iff the multigraph has three edge-disjoint u-v paths.
Partition three_edge_components(std::span<const WeightedEdge> edges, std::size_t n);

/// Minimum over all proper bipartitions of the crossing count, capped at `cap`.
/// Returns `cap` for n <= 1.
std::size_t edge_connectivity(std::span<const WeightedEdge> edges, std::size_t n, std::size_t cap);

bool is_k_edge_connected(std::span<const WeightedEdge> edges, std::size_t n, std::size_t k);

/// Number of edges with exactly one endpoint in `side`.
std::size_t cut_size(std::span<const WeightedEdge> edges, std::uint32_t side);

/// All sides S (the representative not containing vertex 0) with |delta(S)| <= c.
/// Enumerates every bipartition, so n is limited to kMaxCutEnumerationVertices.
std::vector<CutSide> cuts_of_size_at_most(std::span<const WeightedEdge> edges, std::size_t n,
                                          std::size_t c);

}  // namespace netaug
