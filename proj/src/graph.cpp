#include "tcover/graph.hpp"

#include <algorithm>
#include <string>

#include "tcover/error.hpp"

namespace tcover {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotMaximum: return "NotMaximum";
    case ErrorCode::OddParameter: return "OddParameter";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::string pair_text(VertexPair p) {
  // 0-indexed, as given to build()
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

Graph Graph::build(std::uint32_t n, std::span<const VertexPair> pairs) {
  Graph g;
  g.n_ = n;
  g.adjacency_.resize(n);
  g.incidence_.resize(n);
  g.edges_.reserve(pairs.size());

  for (const auto& p : pairs) {
    if (p.first >= n || p.second >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + pair_text(p) + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (p.first == p.second) {
      throw Error(ErrorCode::SelfLoop, "edge " + pair_text(p) + " is a self-loop");
    }
    const auto u = std::min(p.first, p.second);
    const auto v = std::max(p.first, p.second);
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({u, v, id});
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.incidence_[u].push_back(id);
    g.incidence_[v].push_back(id);
  }

  for (VertexId x = 0; x < n; ++x) {
    auto& adj = g.adjacency_[x];
    std::sort(adj.begin(), adj.end());
    if (auto dup = std::adjacent_find(adj.begin(), adj.end()); dup != adj.end()) {
      // report the first pair in input order that repeats an earlier one
      const VertexId y = *dup;
      const VertexPair key{std::min(x, y), std::max(x, y)};
      std::size_t seen = 0;
      for (const auto& p : pairs) {
        if (VertexPair{std::min(p.first, p.second), std::max(p.first, p.second)} == key && ++seen == 2) {
          throw Error(ErrorCode::DuplicateEdge, "edge " + pair_text(p) + " is a duplicate");
        }
      }
      throw Error(ErrorCode::DuplicateEdge, "edge " + pair_text(key) + " is a duplicate");
    }
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  const VertexId scan = degree(u) <= degree(v) ? u : v;
  const VertexId target = scan == u ? v : u;
  for (EdgeId e : incidence_[scan]) {
    if (edges_[e].other(scan) == target) return e;
  }
  return std::nullopt;
}

bool Graph::contains(Element x) const {
  return x.is_vertex() ? x.index < n_ : x.index < num_edges();
}

ElementSet::ElementSet(const Graph& g, std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& x = elements_[i];
    if (!g.contains(x)) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(x.is_vertex() ? "vertex " : "edge ") + std::to_string(x.index) +
                      " does not belong to the graph");
    }
    if (i > 0 && elements_[i - 1] == x) {
      throw Error(ErrorCode::InvalidArgument, "duplicate element " + describe_element(g, x));
    }
  }
}

bool ElementSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::vector<VertexId> isolated_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

TotalGraph total_graph(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<VertexPair> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : g.edges()) {
    pairs.emplace_back(e.u, n + e.id);
    pairs.emplace_back(e.v, n + e.id);
  }
  // Two distinct edges of a simple graph share at most one endpoint, so the
  // edge-edge pairs below are unique.
  for (VertexId v = 0; v < n; ++v) {
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) pairs.emplace_back(n + inc[i], n + inc[j]);
    }
  }

  TotalGraph t{Graph::build(g.num_elements(), pairs), {}};
  t.elements.reserve(g.num_elements());
  for (VertexId v = 0; v < n; ++v) t.elements.push_back(Element::vertex(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e) t.elements.push_back(Element::edge(e));
  return t;
}

std::optional<Element> first_uncovered(const Graph& g, std::span<const char> in_set) {
  const auto n = g.num_vertices();
  auto has_vertex = [&](VertexId v) { return in_set[v] != 0; };
  auto has_edge = [&](EdgeId e) { return in_set[n + e] != 0; };

  for (VertexId v = 0; v < n; ++v) {
    if (has_vertex(v)) continue;
    const auto adj = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    const bool covered = std::any_of(adj.begin(), adj.end(), has_vertex) ||
                         std::any_of(inc.begin(), inc.end(), has_edge);
    if (!covered) return Element::vertex(v);
  }
  for (const auto& e : g.edges()) {
    if (has_edge(e.id) || has_vertex(e.u) || has_vertex(e.v)) continue;
    // any edge in the set at either endpoint other than e itself; e is not in it
    const auto iu = g.incident_edges(e.u);
    const auto iv = g.incident_edges(e.v);
    if (std::any_of(iu.begin(), iu.end(), has_edge) || std::any_of(iv.begin(), iv.end(), has_edge)) continue;
    return Element::edge(e.id);
  }
  return std::nullopt;
}

CoverCheck is_total_cover(const Graph& g, const ElementSet& d) {
  std::vector<char> in_set(g.num_elements(), 0);
  for (const auto& x : d) {
    if (!g.contains(x)) throw Error(ErrorCode::InvalidArgument, "element does not belong to the graph");
    in_set[x.is_vertex() ? x.index : g.num_vertices() + x.index] = 1;
  }
  CoverCheck check;
  check.witness = first_uncovered(g, in_set);
  check.valid = !check.witness.has_value();
  return check;
}

}  // namespace tcover
