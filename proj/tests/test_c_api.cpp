// Exercises libtcover purely through its C header.

#include <cstdio>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "tcover/tcover.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tcover_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  const uint32_t pairs[] = {0, 1, 1, 2, 0, 2};
  tcover_graph* g = nullptr;
  REQUIRE(tcover_graph_build(3, pairs, 3, &g) == TCOVER_OK);
  CHECK(tcover_graph_num_vertices(g) == 3);
  CHECK(tcover_graph_num_edges(g) == 3);
  uint32_t u = 0, v = 0;
  CHECK(tcover_graph_edge(g, 1, &u, &v) == TCOVER_OK);
  CHECK(u == 1);
  CHECK(v == 2);
  CHECK(tcover_graph_edge(g, 3, &u, &v) == TCOVER_ERR_INVALID_ARGUMENT);

  char* text = nullptr;
  REQUIRE(tcover_graph_serialize(g, &text) == TCOVER_OK);
  CHECK(take(text) == "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");

  tcover_graph* t = nullptr;
  REQUIRE(tcover_graph_total(g, &t) == TCOVER_OK);
  CHECK(tcover_graph_num_vertices(t) == 6);
  CHECK(tcover_graph_num_edges(t) == 3 + 6 + 3);
  tcover_graph_free(t);
  tcover_graph_free(g);
}

TEST_CASE("error statuses and messages") {
  tcover_graph* g = nullptr;
  const uint32_t loop[] = {0, 0};
  CHECK(tcover_graph_build(3, loop, 1, &g) == TCOVER_ERR_SELF_LOOP);
  CHECK(std::strstr(tcover_last_error(), "self-loop") != nullptr);
  CHECK(tcover_graph_parse("p edge 2 1\ne 1 3\n", &g) == TCOVER_ERR_VERTEX_OUT_OF_RANGE);
  CHECK(tcover_graph_parse("p edge 2 1\nq\n", &g) == TCOVER_ERR_SYNTAX);
  CHECK(std::strstr(tcover_last_error(), "line 2") != nullptr);
  CHECK(tcover_graph_load("/nonexistent/graph.txt", &g) == TCOVER_ERR_IO);
  CHECK(tcover_gen_figure1(3, &g) == TCOVER_ERR_ODD_PARAMETER);
  CHECK(tcover_gen_cycle(2, &g) == TCOVER_ERR_PARAMETER_OUT_OF_RANGE);
  CHECK(tcover_graph_parse(nullptr, &g) == TCOVER_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(std::string(tcover_status_name(TCOVER_ERR_TOO_LARGE)) == "TooLarge");

  REQUIRE(tcover_gen_path(2, &g) == TCOVER_OK);
  CHECK(std::string(tcover_last_error()).empty());
  tcover_cover* c = nullptr;
  CHECK(tcover_cover_parse("e 1 3\n", g, &c) == TCOVER_ERR_VERTEX_OUT_OF_RANGE);
  tcover_graph_free(g);
}

TEST_CASE("covers and verification") {
  tcover_graph* g = nullptr;
  REQUIRE(tcover_gen_complete(3, &g) == TCOVER_OK);
  tcover_cover* c = nullptr;
  REQUIRE(tcover_cover_parse("v 1\n", g, &c) == TCOVER_OK);
  int ok = -1;
  tcover_element w{};
  REQUIRE(tcover_check_total_cover(g, c, &ok, &w) == TCOVER_OK);
  CHECK(ok == 0);
  CHECK(take([&] { char* s = nullptr; tcover_describe_element(g, w, &s); return s; }()) == "edge (2,3)");
  tcover_cover_free(c);

  const tcover_element two[] = {{TCOVER_VERTEX, 0}, {TCOVER_EDGE, 2}};
  REQUIRE(tcover_cover_create(g, two, 2, &c) == TCOVER_OK);
  REQUIRE(tcover_check_total_cover(g, c, &ok, nullptr) == TCOVER_OK);
  CHECK(ok == 1);
  CHECK(tcover_cover_size(c) == 2);
  tcover_element e{};
  CHECK(tcover_cover_element(c, 1, &e) == TCOVER_OK);
  CHECK(e.kind == TCOVER_EDGE);
  CHECK(e.index == 2);
  char* text = nullptr;
  REQUIRE(tcover_cover_serialize(g, c, &text) == TCOVER_OK);
  CHECK(take(text) == "v 1\ne 2 3\n");
  tcover_cover_free(c);

  const tcover_element dup[] = {{TCOVER_VERTEX, 0}, {TCOVER_VERTEX, 0}};
  CHECK(tcover_cover_create(g, dup, 2, &c) == TCOVER_ERR_INVALID_ARGUMENT);
  tcover_graph_free(g);
}

TEST_CASE("approximation through the C API") {
  tcover_graph* g = nullptr;
  REQUIRE(tcover_gen_figure1(4, &g) == TCOVER_OK);
  tcover_approx* a = nullptr;
  REQUIRE(tcover_approx_solve(g, &a) == TCOVER_OK);
  CHECK(tcover_cover_size(tcover_approx_cover(a)) == 4);
  CHECK(tcover_approx_m(a) == 4);
  CHECK(tcover_approx_k(a) == 0);
  CHECK(tcover_approx_t(a) == 0);
  CHECK(tcover_approx_lower_bound(a) == 2);
  uint64_t num = 0, den = 0;
  tcover_approx_ratio(a, &num, &den);
  CHECK(num == 2);
  CHECK(den == 1);
  REQUIRE(tcover_approx_trace_length(a) == 4);
  CHECK(std::string(tcover_approx_trace_line(a, 0)) == "3 endpoint v 2");
  CHECK(tcover_approx_trace_line(a, 4) == nullptr);
  tcover_approx_free(a);

  uint32_t m = 0;
  CHECK(tcover_matching_size(g, TCOVER_MATCHING_MAXIMUM, &m) == TCOVER_OK);
  CHECK(m == 4);

  tcover_cover* b = nullptr;
  REQUIRE(tcover_baseline_matched_vertices(g, TCOVER_MATCHING_MAXIMUM, &b) == TCOVER_OK);
  CHECK(tcover_cover_size(b) == 8);
  tcover_cover_free(b);
  REQUIRE(tcover_baseline_greedy_domination(g, &b) == TCOVER_OK);
  int ok = 0;
  CHECK(tcover_check_total_cover(g, b, &ok, nullptr) == TCOVER_OK);
  CHECK(ok == 1);
  tcover_cover_free(b);

  uint32_t lb = 0;
  CHECK(tcover_lemma1_lower_bound(3, 1, 2, &lb) == TCOVER_OK);
  CHECK(lb == 4);
  CHECK(tcover_lemma1_lower_bound(1, 2, 0, &lb) == TCOVER_ERR_INVALID_ARGUMENT);
  tcover_graph_free(g);
}

TEST_CASE("exact oracles through the C API") {
  tcover_graph* g = nullptr;
  REQUIRE(tcover_gen_figure1(4, &g) == TCOVER_OK);
  tcover_search_limits limits;
  tcover_search_limits_default(&limits);
  CHECK(limits.max_elements == 32);
  CHECK(limits.max_candidates == 100000000u);
  CHECK(limits.start_size == 0);

  tcover_exact* x = nullptr;
  REQUIRE(tcover_exact_total_cover(g, &limits, &x, nullptr) == TCOVER_OK);
  CHECK(tcover_exact_size(x) == 3);
  CHECK(tcover_cover_size(tcover_exact_optimum(x)) == 3);
  CHECK(tcover_exact_candidates(x) > 0);
  CHECK(tcover_exact_seconds(x) >= 0.0);
  tcover_exact_free(x);

  limits.max_candidates = 5;
  uint32_t reached = 0;
  CHECK(tcover_exact_total_cover(g, &limits, &x, &reached) == TCOVER_ERR_BUDGET_EXCEEDED);
  CHECK(reached == 1);

  uint32_t alpha2 = 0, gamma = 0;
  int agree = 0;
  REQUIRE(tcover_cross_check_alpha2(g, nullptr, &alpha2, &gamma, &agree) == TCOVER_OK);
  CHECK(alpha2 == 3);
  CHECK(gamma == 3);
  CHECK(agree == 1);
  tcover_graph_free(g);

  REQUIRE(tcover_gen_complete(20, &g) == TCOVER_OK);
  CHECK(tcover_exact_total_cover(g, nullptr, &x, nullptr) == TCOVER_ERR_TOO_LARGE);
  tcover_graph_free(g);
}

TEST_CASE("ratio formatting") {
  char* s = nullptr;
  REQUIRE(tcover_format_ratio(4, 3, 4, &s) == TCOVER_OK);
  CHECK(take(s) == "1.3333");
  REQUIRE(tcover_format_ratio(2, 3, 4, &s) == TCOVER_OK);
  CHECK(take(s) == "0.6667");
  REQUIRE(tcover_format_ratio(100, 51, 2, &s) == TCOVER_OK);
  CHECK(take(s) == "1.96");
  CHECK(tcover_format_ratio(1, 0, 4, &s) == TCOVER_ERR_INVALID_ARGUMENT);
}

TEST_CASE("error state is per thread") {
  tcover_graph* g = nullptr;
  CHECK(tcover_gen_figure1(3, &g) == TCOVER_ERR_ODD_PARAMETER);
  std::string other;
  std::thread([&] {
    tcover_graph* h = nullptr;
    tcover_gen_path(3, &h);
    other = tcover_last_error();
    tcover_graph_free(h);
  }).join();
  CHECK(other.empty());
  CHECK(std::strstr(tcover_last_error(), "even") != nullptr);
}

TEST_CASE("generators through the C API") {
  tcover_graph* a = nullptr;
  tcover_graph* b = nullptr;
  REQUIRE(tcover_gen_gnp(10, 0.3, 42, &a) == TCOVER_OK);
  REQUIRE(tcover_gen_gnp(10, 0.3, 42, &b) == TCOVER_OK);
  char* sa = nullptr;
  char* sb = nullptr;
  tcover_graph_serialize(a, &sa);
  tcover_graph_serialize(b, &sb);
  CHECK(take(sa) == take(sb));
  tcover_graph* padded = nullptr;
  REQUIRE(tcover_graph_add_isolated(a, 2, &padded) == TCOVER_OK);
  uint32_t iso = 0;
  CHECK(tcover_graph_num_isolated(padded, &iso) == TCOVER_OK);
  CHECK(iso >= 2);
  tcover_graph_free(padded);
  tcover_graph_free(a);
  tcover_graph_free(b);
  REQUIRE(tcover_gen_petersen(&a) == TCOVER_OK);
  CHECK(tcover_graph_num_edges(a) == 15);
  tcover_graph_free(a);
  REQUIRE(tcover_gen_star(10, &a) == TCOVER_OK);
  CHECK(tcover_graph_num_edges(a) == 9);
  tcover_graph_free(a);
}
