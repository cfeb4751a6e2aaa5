#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "netaug/cactus.hpp"

namespace netaug::testing {

/// Minimum-cut sides of a graph by enumeration, normalized to exclude vertex 0.
inline std::set<std::uint32_t> min_cut_family(const std::vector<WeightedEdge>& edges, std::size_t n) {
  std::set<std::uint32_t> out;
  if (n < 2) return out;
  const std::size_t lambda = min_cut_value(edges, n);
  for (std::uint32_t half = 1; half < (1U << (n - 1)); ++half) {
    const std::uint32_t side = half << 1;
    if (crossing(edges, side) == lambda) out.insert(side);
  }
  return out;
}

/// Preimages under phi of the two-edge cuts of a cactus, found by deleting
/// every pair of cactus edges and checking for exactly two components.
inline std::set<std::uint32_t> cactus_cut_family(const CactusGraph& c) {
  std::set<std::uint32_t> out;
  const std::size_t e = c.edges.size();
  const std::uint32_t all = c.phi.size() >= 32 ? ~0U : (1U << c.phi.size()) - 1;
  for (std::size_t a = 0; a < e; ++a) {
    for (std::size_t b = a + 1; b < e; ++b) {
      std::vector<int> comp(c.m, -1);
      int count = 0;
      for (Vertex s = 0; s < c.m; ++s) {
        if (comp[s] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
          Vertex x = stack.back();
          stack.pop_back();
          for (std::size_t i = 0; i < e; ++i) {
            if (i == a || i == b) continue;
            Vertex y;
            if (c.edges[i].first == x) y = c.edges[i].second;
            else if (c.edges[i].second == x) y = c.edges[i].first;
            else continue;
            if (comp[y] == -1) {
              comp[y] = count;
              stack.push_back(y);
            }
          }
        }
        ++count;
      }
      if (count != 2) continue;
      std::uint32_t side = 0;
      for (std::size_t v = 0; v < c.phi.size(); ++v) {
        if (comp[c.phi[v]] == 1 - comp[c.phi[0]]) side |= 1U << v;
      }
      if (side != 0 && side != all) out.insert(side);
      else out.insert(~0U);  // a cactus cut with an empty side: never a graph cut
    }
  }
  return out;
}

}  // namespace netaug::testing
