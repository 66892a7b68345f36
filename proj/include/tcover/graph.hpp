#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Canonical storage: u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeId id = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

enum class ElementKind : std::uint8_t { Vertex = 0, Edge = 1 };

// A vertex or an edge of a graph. Orders all vertices before all edges, which
// is also the element order used by the exhaustive searches.
struct Element {
  ElementKind kind = ElementKind::Vertex;
  std::uint32_t index = 0;

  static constexpr Element vertex(VertexId v) { return {ElementKind::Vertex, v}; }
  static constexpr Element edge(EdgeId e) { return {ElementKind::Edge, e}; }

  bool is_vertex() const { return kind == ElementKind::Vertex; }
  bool is_edge() const { return kind == ElementKind::Edge; }

  auto operator<=>(const Element&) const = default;
};

using VertexPair = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph. Edge ids follow construction order,
// adjacency lists are sorted by neighbor id, incidence lists by edge id.
class Graph {
 public:
  Graph() = default;

  // Throws Error{SelfLoop, DuplicateEdge, VertexOutOfRange} naming the pair.
  static Graph build(std::uint32_t n, std::span<const VertexPair> pairs);

  std::uint32_t num_vertices() const { return n_; }
  std::uint32_t num_edges() const { return static_cast<std::uint32_t>(edges_.size()); }
  std::uint32_t num_elements() const { return n_ + num_edges(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool contains(Element x) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Sorted, duplicate-free set of elements of one graph.
class ElementSet {
 public:
  ElementSet() = default;

  // Throws Error{InvalidArgument} on duplicates or elements foreign to g.
  ElementSet(const Graph& g, std::vector<Element> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Element x) const;

  const std::vector<Element>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<Element> elements_;
};

std::vector<VertexId> isolated_vertices(const Graph& g);

// T(G): element vertices [0,n) keep their id, edge e becomes vertex n + e.
struct TotalGraph {
  Graph graph;
  std::vector<Element> elements;  // T(G) vertex -> element of G

  VertexId vertex_of(const Graph& g, Element x) const {
    return x.is_vertex() ? x.index : g.num_vertices() + x.index;
  }
};

TotalGraph total_graph(const Graph& g);

struct CoverCheck {
  bool valid = true;
  std::optional<Element> witness;  // first uncovered element when invalid

  explicit operator bool() const { return valid; }
};

CoverCheck is_total_cover(const Graph& g, const ElementSet& d);

// Membership-mask form of is_total_cover: in_set is indexed by the element
// order (vertices, then n + edge id). Returns the first uncovered element.
std::optional<Element> first_uncovered(const Graph& g, std::span<const char> in_set);

// Graph file: "#"/"c" comments, one "p edge <n> <m>" header, m "e <u> <v>"
// lines with 1-indexed endpoints.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Cover file: "v <id>" or "e <u> <v>" lines, 1-indexed, "#" comments.
ElementSet parse_cover(std::string_view text, const Graph& g);
std::string serialize_cover(const Graph& g, const ElementSet& d);

// "v 3" / "e 1 2", 1-indexed; the token form used by cover files and traces.
std::string format_element(const Graph& g, Element x);
// "vertex 3" / "edge (1,2)", 1-indexed; used in human-facing reports.
std::string describe_element(const Graph& g, Element x);

std::string read_file(const std::string& path);

}  // namespace tcover
