#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "netaug/graph_core.hpp"
#include "netaug/types.hpp"

namespace netaug {

struct SpannerInsertResult {
  bool accepted = false;
  /// Edges removed by this insertion, plus the new edge itself when rejected.
  std::vector<WeightedEdge> evicted;
};

/// One-pass weighted (2t-1)(1+eps)-spanner with even-odd weight bucketing.
///
/// Weight class j holds weights in [(1+eps)^j, (1+eps)^(j+1)); class -1 holds
/// zero weights. Classes are grouped into buckets of bucket_width() consecutive
/// indices and each parity of bucket index is sparsified on its own.
class SpannerState {
 public:
  static constexpr std::int64_t kZeroClass = -1;

  SpannerState(std::size_t n, std::size_t t, double epsilon);

  SpannerInsertResult insert(const WeightedEdge& e);
  /// Removes self-loops and heavier parallel edges on the prefix supernodes of
  /// both parities. insert() already calls this for the parity it touched.
  std::vector<WeightedEdge> sparsify();

  /// Zero class first, then classes in increasing index, each in storage order.
  std::vector<WeightedEdge> edges() const;
  std::size_t stored() const { return stored_; }
  std::size_t peak_stored() const { return peak_; }

  std::size_t vertex_count() const { return n_; }
  std::size_t stretch_parameter() const { return t_; }
  double epsilon() const { return epsilon_; }
  std::int64_t bucket_width() const { return width_; }

  std::int64_t class_index(Weight w) const;
  std::int64_t bucket_of_class(std::int64_t j) const { return j / width_; }

  const std::vector<WeightedEdge>& zero_class() const { return zero_; }
  const std::map<std::int64_t, std::vector<WeightedEdge>>& classes() const { return classes_; }
  /// Components of the zero class plus every stored class in buckets of the
  /// given parity strictly below `bucket`.
  Partition prefix_components(std::int64_t bucket) const;

 private:
  UnionFind prefix_union_find(std::int64_t bucket) const;
  std::vector<WeightedEdge> sparsify_parity(int parity);
  void note_size() { peak_ = std::max(peak_, stored_); }

  std::size_t n_;
  std::size_t t_;
  double epsilon_;
  long double base_;
  std::int64_t width_;

  std::vector<WeightedEdge> zero_;
  UnionFind zero_uf_;
  std::map<std::int64_t, std::vector<WeightedEdge>> classes_;
  std::size_t stored_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace netaug
