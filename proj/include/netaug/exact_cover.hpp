#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netaug/types.hpp"

namespace netaug {

/// Weighted set multicover: every element e must be hit by at least demand[e]
/// chosen candidates. Solved exactly by branch and bound.
struct CoverProblem {
  struct Candidate {
    Weight w = 0;
    std::vector<std::uint32_t> elements;
  };
  std::vector<std::uint32_t> demand;
  std::vector<Candidate> candidates;
};

struct CoverChoice {
  std::vector<std::size_t> indices;  // ascending
  Weight weight = 0;
};

/// Minimum-weight cover. Among optimal covers, returns the one whose ascending
/// index sequence is lexicographically smallest (a proper prefix sorts first).
std::optional<CoverChoice> solve_min_cover(const CoverProblem& problem);

}  // namespace netaug
