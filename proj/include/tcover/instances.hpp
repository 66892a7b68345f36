#pragma once

#include <cstdint>
#include <functional>

#include "tcover/graph.hpp"

namespace tcover {

// Hard family for the matched-vertices heuristic. Apex 0, v_i = i and
// u_i = n + i for i = 1..n. Edges in id order: spokes (0, i), rails
// (i, n + i), rungs (n + 2j - 1, n + 2j) for j = 1..n/2.
// Throws Error{OddParameter} for odd n, ParameterOutOfRange for n < 2.
Graph figure1(std::uint32_t n);

// Edge ids of the rungs of figure1(n).
std::vector<EdgeId> figure1_rungs(std::uint32_t n);

Graph path(std::uint32_t n);
Graph cycle(std::uint32_t n);  // n >= 3
// n vertices total: center 0 joined to leaves 1..n-1, i.e. K_{1,n-1}.
Graph star(std::uint32_t n);
Graph complete(std::uint32_t n);
Graph petersen();

// G(n, p). Pairs (i, j), i < j, are visited in lexicographic order; each
// draws x from std::mt19937_64(seed) and is kept iff (x >> 11) * 2^-53 < p.
Graph gnp(std::uint32_t n, double p, std::uint64_t seed);

// Appends t isolated vertices numbered n, n+1, ...
Graph add_isolated(const Graph& g, std::uint32_t t);

inline constexpr std::uint32_t kMaxEnumerationOrder = 6;

// Labeled graph on n vertices whose edges are the set bits of mask; bit i is
// the i-th pair (a, b), a < b, in lexicographic order.
Graph graph_from_mask(std::uint32_t n, std::uint64_t mask);

// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t graph_count(std::uint32_t n);

// Calls fn for every labeled graph on n <= 6 vertices, in mask order.
void enumerate_graphs(std::uint32_t n, const std::function<void(const Graph&)>& fn);

bool is_connected(const Graph& g);

}  // namespace tcover
