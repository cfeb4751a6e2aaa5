#include "netaug/exact_cover.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netaug {
namespace {

constexpr Weight kUnbounded = std::numeric_limits<Weight>::max();

Weight saturating_add(Weight a, Weight b) { return a > kUnbounded - b ? kUnbounded : a + b; }

enum : std::int8_t { kOut = -1, kFree = 0, kIn = 1 };

class BranchAndBound {
 public:
  explicit BranchAndBound(const CoverProblem& p) : p_(p), by_element_(p.demand.size()) {
    for (std::size_t c = 0; c < p.candidates.size(); ++c) {
      for (std::uint32_t e : p.candidates[c].elements) {
        if (e >= p.demand.size()) throw std::out_of_range("cover candidate names an unknown element");
        by_element_[e].push_back(static_cast<std::uint32_t>(c));
      }
    }
    for (auto& list : by_element_) {
      std::sort(list.begin(), list.end(), [&](std::uint32_t a, std::uint32_t b) {
        const Weight wa = p.candidates[a].w;
        const Weight wb = p.candidates[b].w;
        return wa != wb ? wa < wb : a < b;
      });
    }
    bound_order_.resize(p.demand.size());
    std::iota(bound_order_.begin(), bound_order_.end(), 0U);
    std::stable_sort(bound_order_.begin(), bound_order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return by_element_[a].size() < by_element_[b].size();
    });
    mark_.assign(p.candidates.size(), 0);
  }

  /// Cheapest cover respecting `status` with weight <= limit. With first_hit the
  /// search stops at the first cover found within the limit.
  std::optional<CoverChoice> run(std::vector<std::int8_t> status, Weight limit, bool first_hit) {
    status_ = std::move(status);
    first_hit_ = first_hit;
    limit_ = limit;
    done_ = false;
    best_.reset();
    residual_.assign(p_.demand.begin(), p_.demand.end());
    available_.assign(p_.demand.size(), 0);
    Weight weight = 0;
    for (std::size_t c = 0; c < status_.size(); ++c) {
      for (std::uint32_t e : p_.candidates[c].elements) {
        if (status_[c] == kIn) {
          if (residual_[e] > 0) --residual_[e];
        } else if (status_[c] == kFree) {
          ++available_[e];
        }
      }
      if (status_[c] == kIn) weight = saturating_add(weight, p_.candidates[c].w);
    }
    if (weight <= limit_) descend(weight);
    return best_;
  }

 private:
  void descend(Weight weight) {
    if (done_) return;
    std::int64_t pick = -1;
    std::int64_t pick_slack = std::numeric_limits<std::int64_t>::max();
    for (std::size_t e = 0; e < residual_.size(); ++e) {
      if (residual_[e] == 0) continue;
      const std::int64_t slack = static_cast<std::int64_t>(available_[e]) - residual_[e];
      if (slack < 0) return;
      if (slack < pick_slack) {
        pick_slack = slack;
        pick = static_cast<std::int64_t>(e);
      }
    }
    if (pick < 0) {
      record(weight);
      return;
    }
    if (saturating_add(weight, lower_bound()) > limit_) return;

    std::uint32_t chosen = 0;
    for (std::uint32_t c : by_element_[pick]) {
      if (status_[c] == kFree) {
        chosen = c;
        break;
      }
    }
    const auto& cand = p_.candidates[chosen];
    const Weight with = saturating_add(weight, cand.w);

    status_[chosen] = kIn;
    std::vector<std::uint32_t> touched;
    for (std::uint32_t e : cand.elements) {
      --available_[e];
      if (residual_[e] > 0) {
        --residual_[e];
        touched.push_back(e);
      }
    }
    if (with <= limit_) descend(with);
    for (std::uint32_t e : touched) ++residual_[e];

    status_[chosen] = kOut;
    if (!done_) descend(weight);
    for (std::uint32_t e : cand.elements) ++available_[e];
    status_[chosen] = kFree;
  }

  void record(Weight weight) {
    CoverChoice choice;
    for (std::size_t c = 0; c < status_.size(); ++c) {
      if (status_[c] == kIn) choice.indices.push_back(c);
    }
    choice.weight = weight;
    best_ = std::move(choice);
    if (first_hit_ || weight == 0) {
      done_ = true;
    } else {
      limit_ = weight - 1;
    }
  }

  // Sum of cheapest residual covers over elements that share no free candidate.
  Weight lower_bound() {
    ++stamp_;
    Weight total = 0;
    for (std::uint32_t e : bound_order_) {
      if (residual_[e] == 0) continue;
      bool clash = false;
      for (std::uint32_t c : by_element_[e]) {
        if (status_[c] == kFree && mark_[c] == stamp_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      std::uint32_t need = residual_[e];
      for (std::uint32_t c : by_element_[e]) {
        if (status_[c] != kFree) continue;
        mark_[c] = stamp_;
        if (need > 0) {
          total = saturating_add(total, p_.candidates[c].w);
          --need;
        }
      }
    }
    return total;
  }

  const CoverProblem& p_;
  std::vector<std::vector<std::uint32_t>> by_element_;
  std::vector<std::uint32_t> bound_order_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;

  std::vector<std::int8_t> status_;
  std::vector<std::uint32_t> residual_;
  std::vector<std::uint32_t> available_;
  Weight limit_ = kUnbounded;
  bool first_hit_ = false;
  bool done_ = false;
  std::optional<CoverChoice> best_;
};

bool covers(const CoverProblem& p, const std::vector<std::size_t>& chosen) {
  std::vector<std::uint32_t> hits(p.demand.size(), 0);
  for (std::size_t c : chosen) {
    for (std::uint32_t e : p.candidates[c].elements) ++hits[e];
  }
  for (std::size_t e = 0; e < hits.size(); ++e) {
    if (hits[e] < p.demand[e]) return false;
  }
  return true;
}

}  // namespace

std::optional<CoverChoice> solve_min_cover(const CoverProblem& problem) {
  const std::size_t m = problem.candidates.size();
  BranchAndBound search(problem);
  auto optimum = search.run(std::vector<std::int8_t>(m, kFree), kUnbounded, false);
  if (!optimum) return std::nullopt;
  const Weight target = optimum->weight;

  // Lexicographic canonicalization: grow the answer one index at a time, each
  // time taking the smallest index that still extends to an optimal cover.
  std::vector<std::size_t> witness = std::move(optimum->indices);
  std::vector<std::size_t> prefix;
  while (!covers(problem, prefix)) {
    const std::size_t next = witness[prefix.size()];
    const std::size_t start = prefix.empty() ? 0 : prefix.back() + 1;
    bool advanced = false;
    for (std::size_t i = start; i < next; ++i) {
      std::vector<std::int8_t> status(m, kFree);
      for (std::size_t j = 0; j < i; ++j) status[j] = kOut;
      for (std::size_t j : prefix) status[j] = kIn;
      status[i] = kIn;
      auto hit = search.run(std::move(status), target, true);
      if (hit) {
        witness = std::move(hit->indices);
        prefix.push_back(i);
        advanced = true;
        break;
      }
    }
    if (!advanced) prefix.push_back(next);
  }
  CoverChoice out;
  out.indices = std::move(prefix);
  for (std::size_t c : out.indices) out.weight = add_weight(out.weight, problem.candidates[c].w);
  return out;
}

}  // namespace netaug
