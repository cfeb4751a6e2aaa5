#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netaug/types.hpp"

namespace netaug {

inline constexpr std::size_t kMaxOracleLinks = 22;
inline constexpr std::size_t kMaxSndpEdges = 20;
inline constexpr std::size_t kMaxDirectedCycle = 64;
inline constexpr std::size_t kMaxCutCoverVertices = 20;

/// Symmetric pairwise connectivity requirements r(s,t) and the induced
/// proper function f(U) = max over s in U, t outside U of r(s,t).
class Requirements {
 public:
  explicit Requirements(std::size_t n = 0) : n_(n) {}

  /// Sets r(s,t) = r(t,s) = r. A repeated pair keeps the larger value.
  void set(Vertex s, Vertex t, std::uint32_t r);
  std::uint32_t get(Vertex s, Vertex t) const;
  std::size_t vertex_count() const { return n_; }
  std::uint32_t max_requirement() const;
  /// f(U) for a side given as bitmask.
  std::uint32_t cut_function(std::uint32_t side) const;
  /// Pairs (s<t) with positive requirement.
  const std::map<std::pair<Vertex, Vertex>, std::uint32_t>& pairs() const { return r_; }

 private:
  std::size_t n_;
  std::map<std::pair<Vertex, Vertex>, std::uint32_t> r_;
};

struct EdgeSolution {
  std::vector<WeightedEdge> chosen;
  std::vector<std::size_t> indices;  // positions in the candidate list, ascending
  Weight weight = 0;
};

struct ArcSolution {
  std::vector<Arc> chosen;
  std::vector<std::size_t> indices;
  Weight weight = 0;
};

/// k-CAP instance. Construction rejects a base that is not (k-1)-edge-connected.
class AugmentationInstance {
 public:
  AugmentationInstance(std::vector<WeightedEdge> base, std::vector<WeightedEdge> links, std::size_t n,
                       std::size_t k);

  const std::vector<WeightedEdge>& base() const { return base_; }
  const std::vector<WeightedEdge>& links() const { return links_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t k() const { return k_; }

 private:
  std::vector<WeightedEdge> base_;
  std::vector<WeightedEdge> links_;
  std::size_t n_;
  std::size_t k_;
};

using CutDemand = std::function<std::uint32_t(std::uint32_t side)>;

/// Exhaustive minimum-weight L' of `links` such that every side S has at least
/// f(S) edges of base plus L' crossing it. Ties go to the lexicographically
/// smallest ascending index sequence.
std::optional<EdgeSolution> brute_force_cut_cover(std::size_t n, std::span<const WeightedEdge> base,
                                                  std::span<const WeightedEdge> links,
                                                  const CutDemand& f);

/// Same contract as brute_force_cut_cover, solved by branch and bound over the
/// deficient sides; usable for larger link sets.
std::optional<EdgeSolution> solve_cut_cover(std::size_t n, std::span<const WeightedEdge> base,
                                            std::span<const WeightedEdge> links, const CutDemand& f);

std::optional<EdgeSolution> exact_kcap(const AugmentationInstance& inst);

/// Steiner tree augmentation: every pair of terminals needs two edge-disjoint paths.
std::optional<EdgeSolution> exact_stap(std::size_t n, std::span<const WeightedEdge> tree,
                                       std::span<const WeightedEdge> links,
                                       std::span<const Vertex> terminals);

std::optional<EdgeSolution> exact_sndp(std::size_t n, std::span<const WeightedEdge> edges,
                                       const Requirements& requirements);

/// Minimum-weight arc set covering every interval [l,r] with 1 <= l <= r <= n-1,
/// where x->y covers [l,r] iff y is inside and x is outside.
std::optional<ArcSolution> exact_directed_cycle_cover(std::size_t n, std::span<const Arc> arcs);

bool validate_certificate(std::span<const WeightedEdge> full, std::span<const WeightedEdge> cert,
                          std::size_t n, std::size_t k);

}  // namespace netaug
