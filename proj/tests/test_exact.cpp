#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tcover/cover_approx.hpp"
#include "tcover/error.hpp"
#include "tcover/exact.hpp"
#include "tcover/instances.hpp"

using namespace tcover;

TEST_CASE("exact_total_cover examples") {
  const auto k3 = complete(3);
  const auto r = exact_total_cover(k3);
  CHECK(r.size == 2);
  CHECK(oracle::min_total_cover_size(k3) == 2);
  CHECK(r.candidates_checked > 7);  // the empty set and all 6 singletons fail first

  const auto p3 = exact_total_cover(path(3));
  CHECK(p3.size == 1);
  CHECK(p3.optimum.contains(Element::vertex(1)));

  CHECK(exact_total_cover(Graph::build(3, std::vector<VertexPair>{})).size == 3);
  CHECK(exact_total_cover(Graph{}).size == 0);
}

TEST_CASE("exact_total_cover on figure1(4)") {
  const auto g = figure1(4);
  const auto r = exact_total_cover(g);
  CHECK(r.size == 3);
  // lexicographically first optimum: apex plus both rungs
  CHECK(r.optimum == ElementSet(g, {Element::vertex(0), Element::edge(8), Element::edge(9)}));
  // independent confirmation that no pair works: all C(19,2) pairs
  const auto elems = oracle::all_elements(g);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) CHECK_FALSE(oracle::is_total_cover(g, {elems[a], elems[b]}));
  }
}

TEST_CASE("exact_total_cover limits") {
  try {
    exact_total_cover(complete(20));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  SearchLimits tight;
  tight.max_candidates = 10;
  try {
    exact_total_cover(figure1(4), tight);
    FAIL("no error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.reached_size() == 1);
  }
  SearchLimits from_bound;
  from_bound.start_size = 3;
  const auto r = exact_total_cover(figure1(4), from_bound);
  CHECK(r.size == 3);
  from_bound.start_size = 4;
  CHECK(exact_total_cover(figure1(4), from_bound).size == 4);  // forfeits minimality by construction
  from_bound.start_size = 100;
  CHECK_THROWS_AS(exact_total_cover(figure1(4), from_bound), Error);
}

TEST_CASE("exact_dominating_set examples") {
  CHECK(exact_dominating_set(complete(3)).size == 1);
  CHECK(exact_dominating_set(cycle(5)).size == 2);
  CHECK(exact_dominating_set(Graph::build(2, std::vector<VertexPair>{})).size == 2);
  CHECK(exact_dominating_set(petersen()).size == 3);
}

TEST_CASE("cross_check_alpha2 examples") {
  auto r = cross_check_alpha2(complete(3));
  CHECK(r.alpha2 == 2);
  CHECK(r.gamma_total == 2);
  CHECK(r.agree);
  r = cross_check_alpha2(path(4));
  CHECK(r.alpha2 == 2);
  CHECK(r.gamma_total == 2);
  CHECK(r.agree);
  r = cross_check_alpha2(Graph::build(1, std::vector<VertexPair>{}));
  CHECK(r.alpha2 == 1);
  CHECK(r.gamma_total == 1);
  CHECK(r.agree);
}

TEST_CASE("exact oracle matches bitmask enumeration on n <= 4") {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    enumerate_graphs(n, [](const Graph& g) {
      const auto r = exact_total_cover(g);
      CHECK(r.size == oracle::min_total_cover_size(g));
      CHECK(oracle::is_total_cover(g, {r.optimum.begin(), r.optimum.end()}));
    });
  }
}

TEST_CASE("no cover one smaller than the optimum, random samples") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const auto mask = rng() % graph_count(5);
    const auto g = graph_from_mask(5, mask);
    const auto r = exact_total_cover(g);
    if (r.size == 0) continue;
    const auto elems = oracle::all_elements(g);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << elems.size()); ++sub) {
      if (static_cast<std::size_t>(__builtin_popcountll(sub)) != r.size - 1) continue;
      std::vector<Element> d;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (sub >> i & 1u) d.push_back(elems[i]);
      }
      CHECK_FALSE(oracle::is_total_cover(g, d));
    }
  }
}

TEST_CASE("exact sandwiches the approximation") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gnp(6 + seed % 3, 0.3, seed);
    if (g.num_elements() > 24) continue;
    const auto r = approx_total_cover(g);
    const auto opt = exact_total_cover(g).size;
    CHECK(r.lower_bound <= opt);
    CHECK(opt <= r.cover.size());
    CHECK(r.cover.size() <= 2 * opt);
  }
}
