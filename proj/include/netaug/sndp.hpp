#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netaug/oracles.hpp"
#include "netaug/spanner.hpp"
#include "netaug/types.hpp"

namespace netaug {

/// Spanner parameter that turns the (2t-1)(1+e) stretch into 2t-1+epsilon.
double spanner_epsilon(std::size_t t, double epsilon);

/// k spanners in series: whatever layer i evicts or rejects is fed to layer i+1.
/// Every layer has stretch 2t-1+epsilon.
class Cascade {
 public:
  Cascade(std::size_t n, std::size_t k, std::size_t t, double epsilon);

  void insert(const WeightedEdge& e);

  std::size_t vertex_count() const { return n_; }
  std::size_t depth() const { return layers_.size(); }
  std::size_t stretch_parameter() const { return t_; }
  double epsilon() const { return epsilon_; }

  /// Stored edges S_1..S_k.
  std::vector<std::vector<WeightedEdge>> coreset() const;
  const SpannerState& layer(std::size_t i) const { return layers_.at(i); }
  std::size_t stored() const;
  std::size_t peak_stored() const { return peak_; }

 private:
  std::size_t n_;
  std::size_t t_;
  double epsilon_;
  std::vector<SpannerState> layers_;
  std::size_t peak_ = 0;
};

struct SndpPhase {
  std::size_t index = 0;               // 1..k
  std::vector<WeightedEdge> base;      // H_{i-1}
  std::vector<WeightedEdge> candidates;
  std::vector<WeightedEdge> chosen;    // F_i
  Weight weight = 0;
};

struct SndpResult {
  std::vector<WeightedEdge> edges;
  Weight weight = 0;
  std::vector<SndpPhase> phases;
};

/// Phase demand max(0, f(U) - (k - i)).
CutDemand phase_demand(const Requirements& r, std::size_t k, std::size_t i);

/// Reverse augmentation over the layers; phase i covers phase_demand(r, k, i)
/// with (S_1 u ... u S_i) minus H_{i-1}.
std::optional<SndpResult> solve_sndp(std::size_t n, const std::vector<std::vector<WeightedEdge>>& coreset,
                                     const Requirements& requirements);

}  // namespace netaug
