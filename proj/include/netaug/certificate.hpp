#pragma once

#include <cstddef>
#include <vector>

#include "netaug/graph_core.hpp"
#include "netaug/types.hpp"

namespace netaug {

/// Streaming k-connectivity certificate kept as k edge-disjoint forests.
/// Every edge goes to the first forest in which it closes no cycle.
class ForestStack {
 public:
  ForestStack(std::size_t n, std::size_t k);

  /// False if the edge closed a cycle in every forest and was dropped.
  bool insert(const WeightedEdge& e);

  /// Forest 1 first, each in insertion order.
  std::vector<WeightedEdge> edges() const;
  const std::vector<std::vector<WeightedEdge>>& forests() const { return forests_; }
  std::size_t stored() const { return stored_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t k() const { return forests_.size(); }

 private:
  std::size_t n_;
  std::vector<UnionFind> uf_;
  std::vector<std::vector<WeightedEdge>> forests_;
  std::size_t stored_ = 0;
};

}  // namespace netaug
