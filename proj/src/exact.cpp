#include "tcover/exact.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "tcover/error.hpp"

namespace tcover {

namespace {

// Visits s-subsets of [0, universe) in lexicographic order for s = start,
// start+1, ... until accept() returns true. Returns the accepted subset.
template <typename Accept>
std::vector<std::uint32_t> staged_search(std::uint32_t universe, const SearchLimits& limits,
                                         std::uint64_t& checked, Accept&& accept) {
  if (limits.start_size > universe) {
    throw Error(ErrorCode::InvalidArgument, "start size " + std::to_string(limits.start_size) +
                                                " exceeds the " + std::to_string(universe) + " candidates");
  }
  for (std::uint32_t s = limits.start_size; s <= universe; ++s) {
    std::vector<std::uint32_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0u);
    for (;;) {
      if (checked == limits.max_candidates) {
        throw BudgetExceeded(s, "candidate budget of " + std::to_string(limits.max_candidates) +
                                    " exhausted while searching size " + std::to_string(s));
      }
      ++checked;
      if (accept(pick)) return pick;

      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == universe - s + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::Internal, "exhaustive search found no solution");
}

void check_size(std::uint32_t universe, const SearchLimits& limits, const char* what) {
  if (universe > limits.max_elements) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " has " + std::to_string(universe) +
                                         " candidates, limit is " + std::to_string(limits.max_elements));
  }
}

}  // namespace

ExactResult exact_total_cover(const Graph& g, const SearchLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const auto universe = g.num_elements();
  check_size(universe, limits, "graph");

  ExactResult result;
  std::vector<char> in_set(universe, 0);
  const auto best = staged_search(universe, limits, result.candidates_checked, [&](const auto& pick) {
    for (auto i : pick) in_set[i] = 1;
    const bool ok = !first_uncovered(g, in_set).has_value();
    for (auto i : pick) in_set[i] = 0;
    return ok;
  });

  std::vector<Element> elements;
  for (auto i : best) {
    elements.push_back(i < g.num_vertices() ? Element::vertex(i) : Element::edge(i - g.num_vertices()));
  }
  result.optimum = ElementSet(g, std::move(elements));
  result.size = result.optimum.size();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

ExactResult exact_dominating_set(const Graph& g, const SearchLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const auto n = g.num_vertices();
  check_size(n, limits, "graph");

  ExactResult result;
  std::vector<char> hit(n, 0);
  const auto best = staged_search(n, limits, result.candidates_checked, [&](const auto& pick) {
    std::fill(hit.begin(), hit.end(), 0);
    std::size_t count = 0;
    auto mark = [&](VertexId x) {
      if (!hit[x]) {
        hit[x] = 1;
        ++count;
      }
    };
    for (auto v : pick) {
      mark(v);
      for (VertexId w : g.neighbors(v)) mark(w);
    }
    return count == n;
  });

  std::vector<Element> elements;
  for (auto v : best) elements.push_back(Element::vertex(v));
  result.optimum = ElementSet(g, std::move(elements));
  result.size = result.optimum.size();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

Alpha2Report cross_check_alpha2(const Graph& g, const SearchLimits& limits) {
  Alpha2Report report;
  report.alpha2 = exact_total_cover(g, limits).size;
  report.gamma_total = exact_dominating_set(total_graph(g).graph, limits).size;
  report.agree = report.alpha2 == report.gamma_total;
  return report;
}

}  // namespace tcover
