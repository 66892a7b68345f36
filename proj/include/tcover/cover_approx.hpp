#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcover/graph.hpp"
#include "tcover/matching.hpp"
#include "tcover/rational.hpp"

namespace tcover {

// A bad vertex is unmatched and adjacent to both endpoints of a matching
// edge. Entries are in ascending vertex order; each carries the lowest-id
// qualifying matching edge.
struct BadVertexAssignment {
  struct Entry {
    VertexId vertex;
    EdgeId edge;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;

  std::size_t k() const { return entries.size(); }
};

// Throws Error{NotMaximum} when two bad vertices share a matching edge,
// which can only happen if m is not maximum.
BadVertexAssignment bad_vertex_assignment(const Graph& g, const Matching& m);

enum class StepReason { Isolated, BadVertex, BadEdge, Endpoint, MatchingEdge };

const char* to_string(StepReason reason);

struct TraceStep {
  int step;  // 1, 2 or 3
  StepReason reason;
  Element element;
};

struct ApproxResult {
  ElementSet cover;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t lower_bound = 0;
  Rational certified_ratio{1, 1};  // cover size / lower bound; 1 for the empty graph
  std::vector<TraceStep> trace;
};

// Cover of size exactly m + k + t using a blossom maximum matching.
ApproxResult approx_total_cover(const Graph& g);

// Same algorithm over a caller-supplied matching, which must be maximum.
// Throws Error{NotMaximum} if the run detects that it is not.
ApproxResult approx_total_cover(const Graph& g, const Matching& maximum);

// "<step> <reason> <element>", e.g. "3 endpoint v 2".
std::string format_trace_step(const Graph& g, const TraceStep& step);

// ceil((m + k) / 2) + t. Throws Error{InvalidArgument} when k > m.
std::size_t lemma1_lower_bound(std::size_t m, std::size_t k, std::size_t t);

enum class MatchingMode { Maximal, Maximum };

// Endpoints of a matching plus all isolated vertices.
ElementSet matched_vertices_cover(const Graph& g, MatchingMode mode = MatchingMode::Maximum);

// Greedy dominating set on T(G), lowest id on ties, mapped back to elements.
ElementSet greedy_domination_cover(const Graph& g);

}  // namespace tcover
