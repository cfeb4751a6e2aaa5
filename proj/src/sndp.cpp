#include "netaug/sndp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace netaug {

double spanner_epsilon(std::size_t t, double epsilon) {
  if (t < 1) throw std::invalid_argument("stretch parameter t must be at least 1");
  return epsilon / static_cast<double>(2 * t - 1);
}

Cascade::Cascade(std::size_t n, std::size_t k, std::size_t t, double epsilon)
    : n_(n), t_(t), epsilon_(epsilon) {
  if (k < 1) throw std::invalid_argument("cascade depth k must be at least 1");
  const double inner = spanner_epsilon(t, epsilon);
  layers_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) layers_.emplace_back(n, t, inner);
}

void Cascade::insert(const WeightedEdge& e) {
  check_endpoints(e, n_);
  std::vector<WeightedEdge> batch{e};
  for (auto& layer : layers_) {
    std::vector<WeightedEdge> next;
    for (const auto& x : batch) {
      auto result = layer.insert(x);
      next.insert(next.end(), result.evicted.begin(), result.evicted.end());
    }
    std::sort(next.begin(), next.end(), [](const WeightedEdge& a, const WeightedEdge& b) { return a.id < b.id; });
    batch = std::move(next);
    if (batch.empty()) break;
  }
  peak_ = std::max(peak_, stored());
}

std::vector<std::vector<WeightedEdge>> Cascade::coreset() const {
  std::vector<std::vector<WeightedEdge>> out;
  for (const auto& layer : layers_) out.push_back(layer.edges());
  return out;
}

std::size_t Cascade::stored() const {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.stored();
  return total;
}

CutDemand phase_demand(const Requirements& r, std::size_t k, std::size_t i) {
  const std::size_t drop = k - i;
  return [&r, drop](std::uint32_t side) {
    const std::uint32_t f = r.cut_function(side);
    return f > drop ? static_cast<std::uint32_t>(f - drop) : 0U;
  };
}

std::optional<SndpResult> solve_sndp(std::size_t n, const std::vector<std::vector<WeightedEdge>>& coreset,
                                     const Requirements& requirements) {
  const std::size_t k = coreset.size();
  if (requirements.vertex_count() != n) {
    throw std::invalid_argument("requirements are defined on a different vertex count");
  }
  if (requirements.max_requirement() > k) {
    throw std::invalid_argument("requirement exceeds the coreset depth");
  }
  SndpResult result;
  std::set<ArrivalId> taken;
  std::vector<WeightedEdge> pool;
  for (std::size_t i = 1; i <= k; ++i) {
    pool.insert(pool.end(), coreset[i - 1].begin(), coreset[i - 1].end());
    SndpPhase phase;
    phase.index = i;
    phase.base = result.edges;
    for (const auto& e : pool) {
      if (!taken.contains(e.id)) phase.candidates.push_back(e);
    }
    std::sort(phase.candidates.begin(), phase.candidates.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) { return a.id < b.id; });
    auto cover = solve_cut_cover(n, phase.base, phase.candidates, phase_demand(requirements, k, i));
    if (!cover) return std::nullopt;
    phase.chosen = cover->chosen;
    phase.weight = cover->weight;
    for (const auto& e : phase.chosen) {
      taken.insert(e.id);
      result.edges.push_back(e);
    }
    result.weight = add_weight(result.weight, phase.weight);
    result.phases.push_back(std::move(phase));
  }
  return result;
}

}  // namespace netaug
