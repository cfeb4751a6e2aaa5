#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "netaug/graph_core.hpp"
#include "netaug/types.hpp"

namespace netaug {

/// Links picked by an augmentation routine and their total weight.
struct LinkSolution {
  std::vector<WeightedEdge> links;
  Weight weight = 0;
};

/// Unweighted link-arrival cycle augmentation on the cycle 0-1-...-(n-1)-0.
/// Per head v it keeps the arc with the smallest tail below v and the arc with
/// the largest tail above v.
class UnweightedArcStore {
 public:
  explicit UnweightedArcStore(std::size_t n);

  void insert(const WeightedEdge& link);
  /// Minimum-size cover over the stored arcs; each link counted once.
  std::optional<LinkSolution> finalize() const;

  std::vector<Arc> arcs() const;
  const std::optional<Arc>& best_low(Vertex head) const { return low_.at(head); }
  const std::optional<Arc>& best_high(Vertex head) const { return high_.at(head); }
  std::size_t stored() const;
  std::size_t cycle_length() const { return n_; }

 private:
  void offer(const Arc& a);

  std::size_t n_;
  std::vector<std::optional<Arc>> low_;
  std::vector<std::optional<Arc>> high_;
  std::map<ArrivalId, WeightedEdge> origins_;
};

/// Weighted link-arrival cycle augmentation with big weight intervals
/// [(n/eps)^k, (n/eps)^(k+1)) and fine classes [(1+eps)^i, (1+eps)^(i+1)).
class WeightedCycleAugmenter {
 public:
  static constexpr std::int64_t kZeroClass = -1;

  enum class Side { kMinTail = 0, kMaxTail = 1 };

  struct StoredArc {
    std::int64_t k = 0;  // arcs of big class k+2, keyed by components of Q(k)
    Vertex component = 0;  // representative vertex of the head's component
    std::int64_t fine = 0;
    Side side = Side::kMinTail;
    Arc arc;
    WeightedEdge link;
  };

  WeightedCycleAugmenter(std::size_t n, double epsilon);

  void insert(const WeightedEdge& link);
  std::optional<LinkSolution> finalize() const;

  std::size_t stored() const;
  std::size_t peak_stored() const { return peak_; }
  std::size_t cycle_length() const { return n_; }
  double epsilon() const { return epsilon_; }
  bool uses_pair_fallback() const { return fallback_; }

  std::int64_t big_class(Weight w) const;
  std::int64_t fine_class(Weight w) const;

  const std::map<std::int64_t, std::vector<WeightedEdge>>& f_sets() const { return f_; }
  std::size_t f_total() const;
  std::vector<StoredArc> s_arcs() const;
  /// 3-edge-connected components of C, the zero class and F_j for j <= k of
  /// the same parity as k.
  Partition q_partition(std::int64_t k) const;
  /// Sum over Q refreshes of the drop in component count.
  std::size_t merge_total() const { return merges_; }

 private:
  using SKey = std::tuple<std::int64_t, Vertex, std::int64_t, int>;

  std::vector<WeightedEdge> chain_base(std::int64_t below, int parity) const;
  void cleanup_chain(std::vector<WeightedEdge> h, std::int64_t from, int parity);
  void refresh_s_keys(std::int64_t from, bool all);
  void offer(const Arc& a, const WeightedEdge& link, std::int64_t k, std::int64_t fine);
  const Partition& cached_q(std::int64_t k);
  void note_size() { peak_ = std::max(peak_, stored()); }

  std::size_t n_;
  double epsilon_;
  long double big_base_;
  long double fine_base_;
  bool fallback_;
  std::vector<WeightedEdge> cycle_;

  std::map<std::int64_t, std::vector<WeightedEdge>> f_;
  std::map<SKey, StoredArc> s_;
  std::map<std::int64_t, Partition> q_cache_;
  std::map<std::pair<Vertex, Vertex>, WeightedEdge> cheapest_;
  std::size_t peak_ = 0;
  std::size_t merges_ = 0;
};

}  // namespace netaug
