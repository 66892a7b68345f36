#pragma once

#include <cstdint>
#include <vector>

#include "tcover/graph.hpp"

namespace tcover {

// A set of pairwise vertex-disjoint edges of one graph.
class Matching {
 public:
  Matching() = default;

  // Throws Error{InvalidArgument} if two edges share an endpoint or an id is
  // not an edge of g.
  Matching(const Graph& g, std::vector<EdgeId> edges);

  std::size_t size() const { return edges_.size(); }
  const std::vector<EdgeId>& edges() const { return edges_; }  // ascending

  bool is_matched(VertexId v) const { return partner_.at(v) != kNoVertex; }
  VertexId partner(VertexId v) const { return partner_.at(v); }
  bool contains(EdgeId e) const;

 private:
  std::vector<EdgeId> edges_;
  std::vector<VertexId> partner_;
};

// Scans edges by ascending id, keeping every edge with two free endpoints.
Matching greedy_maximal_matching(const Graph& g);

// Maximum-cardinality matching via Edmonds' blossom algorithm. Roots are
// tried in ascending vertex order and neighbors in ascending order, so the
// returned edge set is reproducible.
Matching maximum_matching(const Graph& g);

inline constexpr std::uint32_t kBruteForceMatchingEdgeLimit = 24;

// Exhaustive include/exclude search. Throws Error{TooLarge} above
// kBruteForceMatchingEdgeLimit edges.
Matching brute_force_maximum_matching(const Graph& g);

enum class MatchingCheck { Valid, Maximal, Maximum };

// Maximum mode looks for an augmenting path by exhaustive alternating
// simple-path search, independent of the blossom code. Throws Error{TooLarge}
// if that search exceeds search_budget steps.
bool verify_matching(const Graph& g, const std::vector<EdgeId>& edges, MatchingCheck mode,
                     std::uint64_t search_budget = 50'000'000);
bool verify_matching(const Graph& g, const Matching& m, MatchingCheck mode,
                     std::uint64_t search_budget = 50'000'000);

}  // namespace tcover
