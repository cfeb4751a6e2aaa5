#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netaug/types.hpp"

namespace netaug {

inline constexpr std::size_t kMaxCactusBuildVertices = 16;

/// Cactus over nodes 0..m-1 together with the map phi from original vertices
/// to cactus nodes. Nodes need not have preimages.
struct CactusGraph {
  std::size_t m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> phi;

  std::size_t original_count() const { return phi.size(); }
};

/// Positions 0..cycle_length-1 of the Euler tour; consecutive positions (and the
/// last with the first) are joined by cycle edges.
struct UnfoldedCycle {
  std::size_t cycle_length = 0;
  std::vector<std::vector<Vertex>> psi;  // cactus node -> ascending positions
  std::vector<Vertex> tour;              // position -> cactus node
  std::vector<WeightedEdge> zero_links;  // w = 0, ids 0.. in order
};

/// True iff connected, loopless and every edge lies on exactly one simple cycle.
bool cactus_validate(const CactusGraph& c);

/// Cactus of all minimum cuts of a connected graph on at most
/// kMaxCactusBuildVertices vertices.
CactusGraph cactus_build(const std::vector<WeightedEdge>& edges, std::size_t n);

/// Euler-tour unfolding; throws std::invalid_argument on an invalid cactus.
UnfoldedCycle cactus_unfold(const CactusGraph& c);

/// Cycle edges of the unfolded instance as a base graph on the positions.
std::vector<WeightedEdge> cycle_edges(const UnfoldedCycle& u);

void write_cactus(std::ostream& out, const CactusGraph& c);
CactusGraph read_cactus(std::istream& in);
CactusGraph read_cactus_file(const std::string& path);

}  // namespace netaug
