#include "netaug/cycle_aug.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "netaug/oracles.hpp"

namespace netaug {
namespace {

void check_link(const WeightedEdge& link, std::size_t n) {
  check_endpoints(link, n);
  if (link.u == link.v) throw std::invalid_argument("link is a self-loop");
}

std::vector<WeightedEdge> make_cycle(std::size_t n) {
  std::vector<WeightedEdge> cycle;
  for (std::size_t i = 0; i < n; ++i) {
    cycle.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 0, i});
  }
  return cycle;
}

std::int64_t log_floor(Weight w, long double base) {
  const long double x = static_cast<long double>(w);
  auto j = static_cast<std::int64_t>(std::floor(std::log(x) / std::log(base)));
  while (std::pow(base, static_cast<long double>(j + 1)) <= x) ++j;
  while (j > 0 && std::pow(base, static_cast<long double>(j)) > x) --j;
  return j;
}

// Covers the arcs exactly and reports each originating link once.
std::optional<LinkSolution> solve_arcs(std::size_t n, const std::vector<Arc>& arcs,
                                       const std::map<ArrivalId, WeightedEdge>& origins) {
  auto sol = exact_directed_cycle_cover(n, arcs);
  if (!sol) return std::nullopt;
  std::set<ArrivalId> ids;
  for (const auto& a : sol->chosen) ids.insert(a.origin);
  LinkSolution out;
  for (ArrivalId id : ids) {
    const auto& link = origins.at(id);
    out.links.push_back(link);
    out.weight = add_weight(out.weight, link.w);
  }
  return out;
}

bool dominates(WeightedCycleAugmenter::Side side, const Arc& a, const Arc& b) {
  if (a.tail != b.tail) {
    return side == WeightedCycleAugmenter::Side::kMinTail ? a.tail < b.tail : a.tail > b.tail;
  }
  return a.w != b.w ? a.w < b.w : a.origin < b.origin;
}

}  // namespace

UnweightedArcStore::UnweightedArcStore(std::size_t n) : n_(n), low_(n), high_(n) {
  if (n < 2) throw std::invalid_argument("cycle needs at least two vertices");
}

void UnweightedArcStore::offer(const Arc& a) {
  if (a.tail < a.head) {
    auto& slot = low_[a.head];
    if (!slot || a.tail < slot->tail) slot = a;
  } else {
    auto& slot = high_[a.head];
    if (!slot || a.tail > slot->tail) slot = a;
  }
}

void UnweightedArcStore::insert(const WeightedEdge& link) {
  check_link(link, n_);
  origins_.emplace(link.id, link);
  offer({link.u, link.v, 1, link.id});
  offer({link.v, link.u, 1, link.id});
  std::set<ArrivalId> live;
  for (const auto& a : arcs()) live.insert(a.origin);
  std::erase_if(origins_, [&](const auto& kv) { return !live.contains(kv.first); });
}

std::vector<Arc> UnweightedArcStore::arcs() const {
  std::vector<Arc> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (low_[v]) out.push_back(*low_[v]);
    if (high_[v]) out.push_back(*high_[v]);
  }
  return out;
}

std::size_t UnweightedArcStore::stored() const { return arcs().size(); }

std::optional<LinkSolution> UnweightedArcStore::finalize() const {
  auto sol = solve_arcs(n_, arcs(), origins_);
  if (sol) sol->weight = sol->links.size();
  return sol;
}

WeightedCycleAugmenter::WeightedCycleAugmenter(std::size_t n, double epsilon)
    : n_(n), epsilon_(epsilon), cycle_(make_cycle(n)) {
  if (n < 2) throw std::invalid_argument("cycle needs at least two vertices");
  if (!(epsilon > 0.0) || !(epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  fallback_ = epsilon < 1.0 / static_cast<double>(n);
  big_base_ = static_cast<long double>(n) / static_cast<long double>(epsilon);
  fine_base_ = 1.0L + static_cast<long double>(epsilon);
}

std::int64_t WeightedCycleAugmenter::big_class(Weight w) const {
  return w == 0 ? kZeroClass : log_floor(w, big_base_);
}

std::int64_t WeightedCycleAugmenter::fine_class(Weight w) const {
  return w == 0 ? kZeroClass : log_floor(w, fine_base_);
}

std::size_t WeightedCycleAugmenter::f_total() const {
  std::size_t total = 0;
  for (const auto& [k, list] : f_) total += list.size();
  return total;
}

std::size_t WeightedCycleAugmenter::stored() const {
  if (fallback_) return cheapest_.size();
  std::set<std::tuple<Vertex, Vertex, ArrivalId>> arcs;
  for (const auto& [key, entry] : s_) arcs.emplace(entry.arc.tail, entry.arc.head, entry.arc.origin);
  return f_total() + arcs.size();
}

std::vector<WeightedCycleAugmenter::StoredArc> WeightedCycleAugmenter::s_arcs() const {
  std::vector<StoredArc> out;
  for (const auto& [key, entry] : s_) out.push_back(entry);
  return out;
}

std::vector<WeightedEdge> WeightedCycleAugmenter::chain_base(std::int64_t below, int parity) const {
  std::vector<WeightedEdge> h = cycle_;
  for (const auto& [k, list] : f_) {
    if (k >= below) break;
    if (k != kZeroClass && ((k % 2) + 2) % 2 != parity) continue;
    h.insert(h.end(), list.begin(), list.end());
  }
  return h;
}

Partition WeightedCycleAugmenter::q_partition(std::int64_t k) const {
  const int parity = static_cast<int>(((k % 2) + 2) % 2);
  return three_edge_components(chain_base(std::max<std::int64_t>(k + 1, 0), parity), n_);
}

const Partition& WeightedCycleAugmenter::cached_q(std::int64_t k) {
  auto it = q_cache_.find(k);
  if (it == q_cache_.end()) it = q_cache_.emplace(k, q_partition(k)).first;
  return it->second;
}

void WeightedCycleAugmenter::cleanup_chain(std::vector<WeightedEdge> h, std::int64_t from, int parity) {
  Partition part = three_edge_components(h, n_);
  for (auto& [k, list] : f_) {
    if (k < from) continue;
    if (k != kZeroClass && ((k % 2) + 2) % 2 != parity) continue;
    std::vector<WeightedEdge> kept;
    for (const auto& e : list) {
      if (part.same_class(e.u, e.v)) continue;
      kept.push_back(e);
      h.push_back(e);
      part = three_edge_components(h, n_);
    }
    list = std::move(kept);
  }
  std::erase_if(f_, [](const auto& kv) { return kv.second.empty(); });
}

void WeightedCycleAugmenter::refresh_s_keys(std::int64_t from, bool all) {
  for (auto& [k, part] : q_cache_) {
    if (!all && (k < from || ((k - from) % 2) != 0)) continue;
    Partition fresh = q_partition(k);
    if (fresh == part) continue;
    merges_ += part.class_count() - fresh.class_count();
    std::vector<StoredArc> moved;
    for (auto it = s_.lower_bound({k, 0, std::numeric_limits<std::int64_t>::min(), 0});
         it != s_.end() && std::get<0>(it->first) == k;) {
      if (fresh.representative(it->second.component) != it->second.component) {
        moved.push_back(it->second);
        it = s_.erase(it);
      } else {
        ++it;
      }
    }
    part = std::move(fresh);
    for (auto& entry : moved) {
      entry.component = part.representative(entry.component);
      const SKey key{entry.k, entry.component, entry.fine, static_cast<int>(entry.side)};
      auto [slot, inserted] = s_.emplace(key, entry);
      if (inserted) continue;
      if (dominates(entry.side, entry.arc, slot->second.arc)) slot->second = entry;
    }
  }
}

void WeightedCycleAugmenter::offer(const Arc& a, const WeightedEdge& link, std::int64_t k,
                                   std::int64_t fine) {
  const Partition& q = cached_q(k);
  if (q.same_class(a.tail, a.head)) return;
  const Vertex rep = q.representative(a.head);
  for (Side side : {Side::kMinTail, Side::kMaxTail}) {
    const SKey key{k, rep, fine, static_cast<int>(side)};
    auto it = s_.find(key);
    if (it == s_.end()) {
      s_.emplace(key, StoredArc{k, rep, fine, side, a, link});
      continue;
    }
    if (dominates(side, a, it->second.arc)) it->second = StoredArc{k, rep, fine, side, a, link};
  }
}

void WeightedCycleAugmenter::insert(const WeightedEdge& link) {
  check_link(link, n_);
  if (fallback_) {
    const auto key = std::minmax(link.u, link.v);
    auto [it, inserted] = cheapest_.emplace(std::pair{key.first, key.second}, link);
    if (!inserted && link.w < it->second.w) it->second = link;
    note_size();
    return;
  }

  const std::int64_t k = big_class(link.w);
  f_[k].push_back(link);
  if (k == kZeroClass) {
    cleanup_chain(cycle_, kZeroClass, 0);
    cleanup_chain(chain_base(0, 1), 0, 1);
    refresh_s_keys(0, true);
  } else {
    const int parity = static_cast<int>(k % 2);
    cleanup_chain(chain_base(k, parity), k, parity);
    refresh_s_keys(k, false);
    const std::int64_t fine = fine_class(link.w);
    offer({link.u, link.v, link.w, link.id}, link, k - 2, fine);
    offer({link.v, link.u, link.w, link.id}, link, k - 2, fine);
  }
  note_size();
}

std::optional<LinkSolution> WeightedCycleAugmenter::finalize() const {
  std::vector<Arc> arcs;
  std::map<ArrivalId, WeightedEdge> origins;
  const auto add_both = [&](const WeightedEdge& e) {
    arcs.push_back({e.u, e.v, e.w, e.id});
    arcs.push_back({e.v, e.u, e.w, e.id});
    origins.emplace(e.id, e);
  };
  if (fallback_) {
    for (const auto& [key, e] : cheapest_) add_both(e);
  } else {
    for (const auto& [k, list] : f_) {
      for (const auto& e : list) add_both(e);
    }
    for (const auto& [key, entry] : s_) {
      arcs.push_back(entry.arc);
      origins.emplace(entry.link.id, entry.link);
    }
  }
  return solve_arcs(n_, arcs, origins);
}

}  // namespace netaug
