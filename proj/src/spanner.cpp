#include "netaug/spanner.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace netaug {
namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Survivor order among parallel edges: lighter, earlier, then by endpoints.
bool lighter(const WeightedEdge& a, const WeightedEdge& b) {
  return std::make_tuple(a.w, a.id, std::min(a.u, a.v), std::max(a.u, a.v)) <
         std::make_tuple(b.w, b.id, std::min(b.u, b.v), std::max(b.u, b.v));
}

}  // namespace

SpannerState::SpannerState(std::size_t n, std::size_t t, double epsilon)
    : n_(n), t_(t), epsilon_(epsilon), zero_uf_(n) {
  if (n < 1) throw std::invalid_argument("spanner needs at least one vertex");
  if (t < 1) throw std::invalid_argument("stretch parameter t must be at least 1");
  if (!(epsilon > 0.0) || epsilon > 1.0) throw std::invalid_argument("epsilon must lie in (0, 1]");
  base_ = 1.0L + static_cast<long double>(epsilon);
  const long double span = 2.0L * static_cast<long double>(n) * static_cast<long double>(n) / epsilon;
  width_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::log(span) / std::log(base_))));
  // Guard against log rounding: the bucket must span a factor of at least 2n^2/eps.
  while (std::pow(base_, static_cast<long double>(width_)) < span) ++width_;
}

std::int64_t SpannerState::class_index(Weight w) const {
  if (w == 0) return kZeroClass;
  const long double x = static_cast<long double>(w);
  auto j = static_cast<std::int64_t>(std::floor(std::log(x) / std::log(base_)));
  while (std::pow(base_, static_cast<long double>(j + 1)) <= x) ++j;
  while (j > 0 && std::pow(base_, static_cast<long double>(j)) > x) --j;
  return j;
}

UnionFind SpannerState::prefix_union_find(std::int64_t bucket) const {
  UnionFind uf(n_);
  for (const auto& e : zero_) uf.unite(e.u, e.v);
  const std::int64_t parity = ((bucket % 2) + 2) % 2;
  for (const auto& [j, list] : classes_) {
    const std::int64_t b = bucket_of_class(j);
    if (b >= bucket) break;
    if (b % 2 != parity) continue;
    for (const auto& e : list) uf.unite(e.u, e.v);
  }
  return uf;
}

Partition SpannerState::prefix_components(std::int64_t bucket) const {
  UnionFind uf = prefix_union_find(bucket);
  std::vector<std::uint32_t> labels(n_);
  for (Vertex v = 0; v < n_; ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

SpannerInsertResult SpannerState::insert(const WeightedEdge& e) {
  check_endpoints(e, n_);
  if (e.u == e.v) throw std::invalid_argument("spanner input edge is a self-loop");
  SpannerInsertResult result;
  const std::int64_t j = class_index(e.w);

  if (j == kZeroClass) {
    if (zero_uf_.connected(e.u, e.v)) {
      result.evicted.push_back(e);
      return result;
    }
    zero_uf_.unite(e.u, e.v);
    zero_.push_back(e);
    ++stored_;
    note_size();
    result.accepted = true;
    result.evicted = sparsify();
    return result;
  }

  // Hop-bounded search in E_j over the supernodes of the same-parity prefix.
  const std::int64_t bucket = bucket_of_class(j);
  UnionFind prefix = prefix_union_find(bucket);
  const Vertex source = prefix.find(e.u);
  const Vertex target = prefix.find(e.v);
  bool close = source == target;
  auto it = classes_.find(j);
  if (!close && it != classes_.end()) {
    std::unordered_map<Vertex, std::vector<Vertex>> adj;
    for (const auto& f : it->second) {
      const Vertex a = prefix.find(f.u);
      const Vertex b = prefix.find(f.v);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::unordered_map<Vertex, std::size_t> hops{{source, 0}};
    std::vector<Vertex> frontier{source};
    const std::size_t budget = 2 * t_ - 1;
    for (std::size_t depth = 0; depth < budget && !frontier.empty() && !close; ++depth) {
      std::vector<Vertex> next;
      for (Vertex x : frontier) {
        auto found = adj.find(x);
        if (found == adj.end()) continue;
        for (Vertex y : found->second) {
          if (hops.emplace(y, depth + 1).second) {
            if (y == target) close = true;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  if (close) {
    result.evicted.push_back(e);
    return result;
  }

  classes_[j].push_back(e);
  ++stored_;
  note_size();
  result.accepted = true;
  result.evicted = sparsify_parity(static_cast<int>(bucket % 2));
  return result;
}

std::vector<WeightedEdge> SpannerState::sparsify() {
  auto removed = sparsify_parity(0);
  auto odd = sparsify_parity(1);
  removed.insert(removed.end(), odd.begin(), odd.end());
  return removed;
}

// Buckets are swept from light to heavy with one growing union-find.
std::vector<WeightedEdge> SpannerState::sparsify_parity(int parity) {
  std::vector<WeightedEdge> removed;
  UnionFind uf(n_);
  for (const auto& e : zero_) uf.unite(e.u, e.v);

  auto it = classes_.begin();
  while (it != classes_.end()) {
    const std::int64_t bucket = bucket_of_class(it->first);
    auto end = it;
    while (end != classes_.end() && bucket_of_class(end->first) == bucket) ++end;
    if (bucket % 2 != parity) {
      it = end;
      continue;
    }
    std::unordered_map<std::uint64_t, WeightedEdge> best;
    for (auto c = it; c != end; ++c) {
      for (const auto& e : c->second) {
        const Vertex a = uf.find(e.u);
        const Vertex b = uf.find(e.v);
        if (a == b) continue;
        auto [slot, fresh] = best.try_emplace(pair_key(a, b), e);
        if (!fresh && lighter(e, slot->second)) slot->second = e;
      }
    }
    std::vector<WeightedEdge> kept;
    for (auto c = it; c != end; ++c) {
      auto& list = c->second;
      std::vector<WeightedEdge> survivors;
      for (const auto& e : list) {
        const Vertex a = uf.find(e.u);
        const Vertex b = uf.find(e.v);
        if (a != b && best.at(pair_key(a, b)) == e) {
          survivors.push_back(e);
        } else {
          removed.push_back(e);
          --stored_;
        }
      }
      list = std::move(survivors);
      kept.insert(kept.end(), list.begin(), list.end());
    }
    for (const auto& e : kept) uf.unite(e.u, e.v);
    it = end;
  }
  std::erase_if(classes_, [](const auto& entry) { return entry.second.empty(); });
  return removed;
}

std::vector<WeightedEdge> SpannerState::edges() const {
  std::vector<WeightedEdge> out(zero_.begin(), zero_.end());
  for (const auto& [j, list] : classes_) out.insert(out.end(), list.begin(), list.end());
  return out;
}

}  // namespace netaug
