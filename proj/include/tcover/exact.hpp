#pragma once

#include <chrono>
#include <cstdint>

#include "tcover/graph.hpp"

namespace tcover {

struct SearchLimits {
  std::uint32_t max_elements = 32;
  std::uint64_t max_candidates = 100'000'000;
  std::uint32_t start_size = 0;
};

struct ExactResult {
  ElementSet optimum;
  std::size_t size = 0;
  std::uint64_t candidates_checked = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Minimum total cover by cardinality-staged lexicographic enumeration of
// subsets of V ∪ E (vertices first, then edges by id). The first valid subset
// found is returned, so the optimum itself is deterministic.
// Throws Error{TooLarge} when n + |E| > max_elements and BudgetExceeded when
// more than max_candidates subsets would be tested.
ExactResult exact_total_cover(const Graph& g, const SearchLimits& limits = {});

// Minimum dominating set, same search scheme over vertex subsets.
ExactResult exact_dominating_set(const Graph& g, const SearchLimits& limits = {});

struct Alpha2Report {
  std::size_t alpha2 = 0;
  std::size_t gamma_total = 0;
  bool agree = false;
};

// Min total cover of g against min dominating set of T(g).
Alpha2Report cross_check_alpha2(const Graph& g, const SearchLimits& limits = {});

}  // namespace tcover
