#include "tcover/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "tcover/error.hpp"

namespace tcover {

Matching::Matching(const Graph& g, std::vector<EdgeId> edges)
    : edges_(std::move(edges)), partner_(g.num_vertices(), kNoVertex) {
  std::sort(edges_.begin(), edges_.end());
  for (EdgeId id : edges_) {
    if (id >= g.num_edges()) {
      throw Error(ErrorCode::InvalidArgument, "edge id " + std::to_string(id) + " is not in the graph");
    }
    const auto& e = g.edge(id);
    if (partner_[e.u] != kNoVertex || partner_[e.v] != kNoVertex) {
      throw Error(ErrorCode::InvalidArgument, "edges of a matching share an endpoint at " + describe_element(g, Element::edge(id)));
    }
    partner_[e.u] = e.v;
    partner_[e.v] = e.u;
  }
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Matching greedy_maximal_matching(const Graph& g) {
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<EdgeId> chosen;
  for (const auto& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      chosen.push_back(e.id);
    }
  }
  return Matching(g, std::move(chosen));
}

namespace {

// Edmonds' algorithm with explicit blossom bases; one BFS per free root.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.num_vertices()), match_(n_, kNoVertex), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<VertexId> run() {
    for (VertexId root = 0; root < n_; ++root) {
      if (match_[root] != kNoVertex) continue;
      VertexId v = find_path(root);
      while (v != kNoVertex) {
        const VertexId pv = parent_[v];
        const VertexId next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNoVertex) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;

    std::deque<VertexId> queue{root};
    used_[root] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
          // odd cycle: contract it onto its base
          const VertexId cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNoVertex) {
          parent_[to] = v;
          if (match_[to] == kNoVertex) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNoVertex;
  }

  const Graph& g_;
  std::uint32_t n_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

std::vector<EdgeId> edges_from_partners(const Graph& g, const std::vector<VertexId>& partner) {
  std::vector<EdgeId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (partner[v] != kNoVertex && v < partner[v]) out.push_back(*g.find_edge(v, partner[v]));
  }
  return out;
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  return Matching(g, edges_from_partners(g, Blossom(g).run()));
}

namespace {

struct BruteForce {
  const Graph& g;
  std::vector<char> used;
  std::vector<EdgeId> current, best;

  void search(EdgeId next) {
    if (current.size() > best.size()) best = current;
    if (next == g.num_edges()) return;
    // even taking every remaining edge cannot beat best
    if (current.size() + (g.num_edges() - next) <= best.size()) return;
    if (current.size() + (g.num_vertices() - 2 * current.size()) / 2 <= best.size()) return;

    const auto& e = g.edge(next);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      current.push_back(next);
      search(next + 1);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
    search(next + 1);
  }
};

}  // namespace

Matching brute_force_maximum_matching(const Graph& g) {
  if (g.num_edges() > kBruteForceMatchingEdgeLimit) {
    throw Error(ErrorCode::TooLarge, "brute-force matching limited to " +
                                         std::to_string(kBruteForceMatchingEdgeLimit) + " edges, graph has " +
                                         std::to_string(g.num_edges()));
  }
  BruteForce bf{g, std::vector<char>(g.num_vertices(), 0), {}, {}};
  bf.search(0);
  return Matching(g, bf.best);
}

namespace {

// Depth-first enumeration of alternating simple paths from a free vertex.
class AugmentingPathSearch {
 public:
  AugmentingPathSearch(const Graph& g, const std::vector<VertexId>& partner, std::uint64_t budget)
      : g_(g), partner_(partner), on_path_(g.num_vertices(), 0), budget_(budget) {}

  bool from(VertexId root) {
    on_path_[root] = 1;
    const bool found = extend(root, root);
    on_path_[root] = 0;
    return found;
  }

 private:
  // x is reached by a matched edge (or is the root); leave via a non-matching edge.
  bool extend(VertexId root, VertexId x) {
    for (VertexId y : g_.neighbors(x)) {
      if (++steps_ > budget_) {
        throw Error(ErrorCode::TooLarge, "augmenting-path search exceeded its step budget");
      }
      if (on_path_[y] || partner_[x] == y) continue;
      if (partner_[y] == kNoVertex) return y != root;
      const VertexId z = partner_[y];
      if (on_path_[z]) continue;
      on_path_[y] = on_path_[z] = 1;
      const bool found = extend(root, z);
      on_path_[y] = on_path_[z] = 0;
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<VertexId>& partner_;
  std::vector<char> on_path_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

}  // namespace

bool verify_matching(const Graph& g, const std::vector<EdgeId>& edges, MatchingCheck mode,
                     std::uint64_t search_budget) {
  std::vector<VertexId> partner(g.num_vertices(), kNoVertex);
  for (EdgeId id : edges) {
    if (id >= g.num_edges()) return false;
    const auto& e = g.edge(id);
    if (partner[e.u] != kNoVertex || partner[e.v] != kNoVertex) return false;
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  if (mode == MatchingCheck::Valid) return true;

  for (const auto& e : g.edges()) {
    if (partner[e.u] == kNoVertex && partner[e.v] == kNoVertex) return false;
  }
  if (mode == MatchingCheck::Maximal) return true;

  std::vector<VertexId> free;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (partner[v] == kNoVertex && g.degree(v) > 0) free.push_back(v);
  }
  if (free.size() < 2) return true;
  AugmentingPathSearch search(g, partner, search_budget);
  for (VertexId r : free) {
    if (search.from(r)) return false;
  }
  return true;
}

bool verify_matching(const Graph& g, const Matching& m, MatchingCheck mode, std::uint64_t search_budget) {
  return verify_matching(g, m.edges(), mode, search_budget);
}

}  // namespace tcover
