#include "tcover/cover_approx.hpp"

#include <string>
#include <unordered_map>

#include "tcover/error.hpp"

namespace tcover {

const char* to_string(StepReason reason) {
  switch (reason) {
    case StepReason::Isolated: return "isolated";
    case StepReason::BadVertex: return "bad-vertex";
    case StepReason::BadEdge: return "bad-edge";
    case StepReason::Endpoint: return "endpoint";
    case StepReason::MatchingEdge: return "matching-edge";
  }
  return "unknown";
}

std::string format_trace_step(const Graph& g, const TraceStep& step) {
  return std::to_string(step.step) + " " + to_string(step.reason) + " " + format_element(g, step.element);
}

std::size_t lemma1_lower_bound(std::size_t m, std::size_t k, std::size_t t) {
  if (k > m) throw Error(ErrorCode::InvalidArgument, "bad vertex count exceeds matching size");
  return (m + k + 1) / 2 + t;
}

BadVertexAssignment bad_vertex_assignment(const Graph& g, const Matching& m) {
  BadVertexAssignment out;
  std::unordered_map<EdgeId, VertexId> owner;
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    if (m.is_matched(w)) continue;
    EdgeId chosen = static_cast<EdgeId>(-1);
    for (VertexId a : g.neighbors(w)) {
      if (!m.is_matched(a)) continue;
      const VertexId b = m.partner(a);
      if (a > b || !g.adjacent(w, b)) continue;
      const EdgeId e = *g.find_edge(a, b);
      if (auto [it, fresh] = owner.emplace(e, w); !fresh) {
        throw Error(ErrorCode::NotMaximum, "bad vertices " + std::to_string(it->second + 1) + " and " +
                                               std::to_string(w + 1) + " share matching " +
                                               describe_element(g, Element::edge(e)) +
                                               "; the matching is not maximum");
      }
      chosen = std::min(chosen, e);
    }
    if (chosen != static_cast<EdgeId>(-1)) out.entries.push_back({w, chosen});
  }
  return out;
}

ApproxResult approx_total_cover(const Graph& g) { return approx_total_cover(g, maximum_matching(g)); }

ApproxResult approx_total_cover(const Graph& g, const Matching& maximum) {
  ApproxResult result;
  std::vector<Element> cover;
  std::vector<char> removed(g.num_vertices(), 0);
  std::vector<char> consumed(g.num_edges(), 0);
  auto add = [&](int step, StepReason reason, Element x) {
    cover.push_back(x);
    result.trace.push_back({step, reason, x});
  };

  // Step 1: isolated vertices.
  for (VertexId v : isolated_vertices(g)) {
    add(1, StepReason::Isolated, Element::vertex(v));
    removed[v] = 1;
  }
  result.t = cover.size();

  // Step 2: each bad vertex together with its matching edge.
  const auto bad = bad_vertex_assignment(g, maximum);
  for (const auto& [w, e] : bad.entries) {
    add(2, StepReason::BadVertex, Element::vertex(w));
    add(2, StepReason::BadEdge, Element::edge(e));
    removed[w] = removed[g.edge(e).u] = removed[g.edge(e).v] = 1;
    consumed[e] = 1;
  }
  result.k = bad.k();

  // Step 3: one element per remaining matching edge. Only unmatched vertices
  // of the working graph need coverage tracking; edges added so far have
  // matched endpoints and cannot cover them.
  std::vector<char> covered(g.num_vertices(), 0);
  auto is_free = [&](VertexId z) { return !maximum.is_matched(z) && !removed[z]; };
  auto has_free = [&](VertexId x, bool uncovered_only) {
    for (VertexId z : g.neighbors(x)) {
      if (is_free(z) && !(uncovered_only && covered[z])) return true;
    }
    return false;
  };

  for (EdgeId id : maximum.edges()) {
    if (consumed[id]) continue;
    const auto& e = g.edge(id);
    if (has_free(e.u, false) && has_free(e.v, false)) {
      throw Error(ErrorCode::NotMaximum, "both endpoints of matching " + describe_element(g, Element::edge(id)) +
                                             " see unmatched vertices; the matching is not maximum");
    }
    VertexId pick = kNoVertex;
    if (has_free(e.u, true)) {
      pick = e.u;
    } else if (has_free(e.v, true)) {
      pick = e.v;
    }
    if (pick != kNoVertex) {
      add(3, StepReason::Endpoint, Element::vertex(pick));
      for (VertexId z : g.neighbors(pick)) {
        if (is_free(z)) covered[z] = 1;
      }
    } else {
      add(3, StepReason::MatchingEdge, Element::edge(id));
    }
  }

  result.m = maximum.size();
  result.cover = ElementSet(g, std::move(cover));
  if (result.cover.size() != result.m + result.k + result.t) {
    throw Error(ErrorCode::Internal, "cover size differs from m + k + t");
  }
  result.lower_bound = lemma1_lower_bound(result.m, result.k, result.t);
  if (result.lower_bound > 0) {
    result.certified_ratio = Rational(result.cover.size(), result.lower_bound);
  }
  if (result.certified_ratio > Rational(2, 1)) {
    throw Error(ErrorCode::Internal, "certified ratio exceeds 2");
  }
  return result;
}

ElementSet matched_vertices_cover(const Graph& g, MatchingMode mode) {
  const auto matching = mode == MatchingMode::Maximum ? maximum_matching(g) : greedy_maximal_matching(g);
  std::vector<Element> out;
  for (EdgeId id : matching.edges()) {
    out.push_back(Element::vertex(g.edge(id).u));
    out.push_back(Element::vertex(g.edge(id).v));
  }
  for (VertexId v : isolated_vertices(g)) out.push_back(Element::vertex(v));
  return ElementSet(g, std::move(out));
}

ElementSet greedy_domination_cover(const Graph& g) {
  const auto t = total_graph(g);
  const auto& tg = t.graph;
  const auto size = tg.num_vertices();
  std::vector<char> dominated(size, 0);
  std::size_t remaining = size;
  std::vector<Element> out;

  while (remaining > 0) {
    VertexId best = kNoVertex;
    std::size_t best_gain = 0;
    for (VertexId x = 0; x < size; ++x) {
      std::size_t gain = dominated[x] ? 0 : 1;
      for (VertexId y : tg.neighbors(x)) gain += dominated[y] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    out.push_back(t.elements[best]);
    if (!dominated[best]) {
      dominated[best] = 1;
      --remaining;
    }
    for (VertexId y : tg.neighbors(best)) {
      if (!dominated[y]) {
        dominated[y] = 1;
        --remaining;
      }
    }
  }
  return ElementSet(g, std::move(out));
}

}  // namespace tcover
