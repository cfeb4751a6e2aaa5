#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netaug/cactus.hpp"
#include "netaug/oracles.hpp"
#include "netaug/stream.hpp"
#include "netaug/types.hpp"

namespace netaug {

struct PipelineOptions {
  std::size_t t = 2;
  double epsilon = 0.5;
  bool with_oracle = false;
};

/// One augmentation round (a k-ECSS pass or an SNDP phase).
struct PipelineStage {
  std::string name;
  Weight weight = 0;
  std::size_t output_size = 0;
  std::optional<Weight> oracle_weight;
};

struct PipelineReport {
  std::vector<WeightedEdge> output;
  Weight total_weight = 0;
  std::map<std::string, std::size_t> peak_stored;
  std::optional<Weight> oracle_weight;
  bool feasible = false;
  std::vector<PipelineStage> stages;
  std::map<std::string, std::size_t> details;
};

/// Exact cover used for oracle numbers: exhaustive search up to
/// kMaxOracleLinks links, branch and bound beyond.
std::optional<EdgeSolution> oracle_cover(std::size_t n, std::span<const WeightedEdge> base,
                                         std::span<const WeightedEdge> links, const CutDemand& f);

/// Link-arrival k-CAP on a cactus: unfold, feed the zero junction links and
/// then the streamed links to weighted cycle augmentation.
PipelineReport kcap_link_arrival(const CactusGraph& cactus, std::span<const WeightedEdge> links,
                                 const PipelineOptions& opts);
/// Same, starting from a base graph whose edge connectivity must be exactly k-1.
PipelineReport kcap_link_arrival(std::span<const WeightedEdge> base, std::size_t n,
                                 std::span<const WeightedEdge> links, std::size_t k, const PipelineOptions& opts);

/// Base edges go to a k-certificate, links to a (2t-1+eps)-spanner; the
/// sketches are solved exactly at the end.
PipelineReport kcap_fully_streaming(std::span<const StreamEvent> events, std::size_t n, std::size_t k,
                                    const PipelineOptions& opts);

/// Base events must form a tree containing every terminal.
PipelineReport stap_fully_streaming(std::span<const StreamEvent> events, std::size_t n,
                                    std::span<const Vertex> terminals, const PipelineOptions& opts);

/// Multi-pass k-ECSS over all records: spanning forest, then one cycle
/// augmentation per further pass.
PipelineReport kecss(std::span<const WeightedEdge> edges, std::size_t n, std::size_t k,
                     const PipelineOptions& opts);

/// Cascade coreset over all records followed by reverse augmentation.
PipelineReport sndp(std::span<const WeightedEdge> edges, std::size_t n, const Requirements& requirements,
                    std::size_t k, const PipelineOptions& opts);

}  // namespace netaug
