#include "tcover/instances.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tcover/error.hpp"

namespace tcover {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, message);
}

}  // namespace

Graph figure1(std::uint32_t n) {
  require(n >= 2, "figure1 needs n >= 2");
  if (n % 2 != 0) throw Error(ErrorCode::OddParameter, "figure1 needs an even n, got " + std::to_string(n));
  std::vector<VertexPair> pairs;
  for (std::uint32_t i = 1; i <= n; ++i) pairs.emplace_back(0, i);
  for (std::uint32_t i = 1; i <= n; ++i) pairs.emplace_back(i, n + i);
  for (std::uint32_t j = 1; j <= n / 2; ++j) pairs.emplace_back(n + 2 * j - 1, n + 2 * j);
  return Graph::build(2 * n + 1, pairs);
}

std::vector<EdgeId> figure1_rungs(std::uint32_t n) {
  figure1(n);  // validates n
  std::vector<EdgeId> ids;
  for (std::uint32_t j = 0; j < n / 2; ++j) ids.push_back(2 * n + j);
  return ids;
}

Graph path(std::uint32_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<VertexPair> pairs;
  for (VertexId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::build(n, pairs);
}

Graph cycle(std::uint32_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<VertexPair> pairs;
  for (VertexId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, n - 1);
  return Graph::build(n, pairs);
}

Graph star(std::uint32_t n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<VertexPair> pairs;
  for (VertexId i = 1; i < n; ++i) pairs.emplace_back(0, i);
  return Graph::build(n, pairs);
}

Graph complete(std::uint32_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<VertexPair> pairs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph::build(n, pairs);
}

Graph petersen() {
  std::vector<VertexPair> pairs;
  for (VertexId i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);      // outer cycle
    pairs.emplace_back(i, i + 5);            // spokes
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::build(10, pairs);
}

Graph gnp(std::uint32_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<VertexPair> pairs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      const double x = std::ldexp(static_cast<double>(rng() >> 11), -53);
      if (x < p) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(n, pairs);
}

Graph add_isolated(const Graph& g, std::uint32_t t) {
  std::vector<VertexPair> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return Graph::build(g.num_vertices() + t, pairs);
}

Graph graph_from_mask(std::uint32_t n, std::uint64_t mask) {
  require(n <= kMaxEnumerationOrder, "graph enumeration supports n <= 6");
  require(mask < graph_count(n), "edge mask out of range");
  std::vector<VertexPair> pairs;
  std::uint32_t bit = 0;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1u) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(n, pairs);
}

std::uint64_t graph_count(std::uint32_t n) {
  require(n <= kMaxEnumerationOrder, "graph enumeration supports n <= 6");
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

void enumerate_graphs(std::uint32_t n, const std::function<void(const Graph&)>& fn) {
  const auto count = graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) fn(graph_from_mask(n, mask));
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.num_vertices();
}

}  // namespace tcover
