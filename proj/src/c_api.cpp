#include "tcover/tcover.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "tcover/cover_approx.hpp"
#include "tcover/error.hpp"
#include "tcover/exact.hpp"
#include "tcover/graph.hpp"
#include "tcover/instances.hpp"
#include "tcover/matching.hpp"

struct tcover_graph {
  tcover::Graph graph;
};

struct tcover_cover {
  tcover::ElementSet set;
};

struct tcover_approx {
  tcover::ApproxResult result;
  tcover_cover cover;
  std::vector<std::string> trace;
};

struct tcover_exact {
  tcover::ExactResult result;
  tcover_cover cover;
};

namespace {

thread_local std::string last_error;

tcover_status status_of(tcover::ErrorCode code) {
  using tcover::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TCOVER_ERR_INVALID_ARGUMENT;
    case ErrorCode::Syntax: return TCOVER_ERR_SYNTAX;
    case ErrorCode::SelfLoop: return TCOVER_ERR_SELF_LOOP;
    case ErrorCode::DuplicateEdge: return TCOVER_ERR_DUPLICATE_EDGE;
    case ErrorCode::VertexOutOfRange: return TCOVER_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::UnknownEdge: return TCOVER_ERR_UNKNOWN_EDGE;
    case ErrorCode::TooLarge: return TCOVER_ERR_TOO_LARGE;
    case ErrorCode::BudgetExceeded: return TCOVER_ERR_BUDGET_EXCEEDED;
    case ErrorCode::NotMaximum: return TCOVER_ERR_NOT_MAXIMUM;
    case ErrorCode::OddParameter: return TCOVER_ERR_ODD_PARAMETER;
    case ErrorCode::ParameterOutOfRange: return TCOVER_ERR_PARAMETER_OUT_OF_RANGE;
    case ErrorCode::Io: return TCOVER_ERR_IO;
    case ErrorCode::Internal: return TCOVER_ERR_INTERNAL;
  }
  return TCOVER_ERR_INTERNAL;
}

tcover_status fail(tcover_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
tcover_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return TCOVER_OK;
  } catch (const tcover::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TCOVER_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TCOVER_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tcover_status emit_graph(tcover::Graph g, tcover_graph** out) {
  *out = new tcover_graph{std::move(g)};
  return TCOVER_OK;
}

tcover::Element from_c(tcover_element x) {
  return x.kind == TCOVER_VERTEX ? tcover::Element::vertex(x.index) : tcover::Element::edge(x.index);
}

tcover_element to_c(tcover::Element x) {
  return {x.is_vertex() ? TCOVER_VERTEX : TCOVER_EDGE, x.index};
}

tcover::SearchLimits limits_of(const tcover_search_limits* limits) {
  tcover::SearchLimits out;
  if (limits != nullptr) {
    out.max_elements = limits->max_elements;
    out.max_candidates = limits->max_candidates;
    out.start_size = limits->start_size;
  }
  return out;
}

template <typename Search>
tcover_status run_exact(Search&& search, tcover_exact** out, uint32_t* reached_size) {
  try {
    auto x = std::make_unique<tcover_exact>();
    x->result = search();
    x->cover.set = x->result.optimum;
    *out = x.release();
    last_error.clear();
    return TCOVER_OK;
  } catch (const tcover::BudgetExceeded& e) {
    if (reached_size != nullptr) *reached_size = static_cast<uint32_t>(e.reached_size());
    return fail(TCOVER_ERR_BUDGET_EXCEEDED, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

#define TCOVER_REQUIRE(cond)                                                     \
  do {                                                                           \
    if (!(cond)) return fail(TCOVER_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* tcover_last_error(void) { return last_error.c_str(); }

const char* tcover_status_name(tcover_status status) {
  switch (status) {
    case TCOVER_OK: return "OK";
    case TCOVER_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TCOVER_ERR_SYNTAX: return "SyntaxError";
    case TCOVER_ERR_SELF_LOOP: return "SelfLoop";
    case TCOVER_ERR_DUPLICATE_EDGE: return "DuplicateEdge";
    case TCOVER_ERR_VERTEX_OUT_OF_RANGE: return "VertexOutOfRange";
    case TCOVER_ERR_UNKNOWN_EDGE: return "UnknownEdge";
    case TCOVER_ERR_TOO_LARGE: return "TooLarge";
    case TCOVER_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case TCOVER_ERR_NOT_MAXIMUM: return "NotMaximum";
    case TCOVER_ERR_ODD_PARAMETER: return "OddParameter";
    case TCOVER_ERR_PARAMETER_OUT_OF_RANGE: return "ParameterOutOfRange";
    case TCOVER_ERR_IO: return "IoError";
    case TCOVER_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void tcover_string_free(char* s) { std::free(s); }

tcover_status tcover_graph_build(uint32_t n, const uint32_t* pairs, size_t num_pairs, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  TCOVER_REQUIRE(pairs != nullptr || num_pairs == 0);
  return guarded([&] {
    std::vector<tcover::VertexPair> list;
    list.reserve(num_pairs);
    for (size_t i = 0; i < num_pairs; ++i) list.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    emit_graph(tcover::Graph::build(n, list), out);
  });
}

tcover_status tcover_graph_parse(const char* text, tcover_graph** out) {
  TCOVER_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { emit_graph(tcover::parse_graph(text), out); });
}

tcover_status tcover_graph_load(const char* path, tcover_graph** out) {
  TCOVER_REQUIRE(path != nullptr && out != nullptr);
  return guarded([&] { emit_graph(tcover::parse_graph(tcover::read_file(path)), out); });
}

tcover_status tcover_graph_serialize(const tcover_graph* g, char** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = copy_string(tcover::serialize_graph(g->graph)); });
}

void tcover_graph_free(tcover_graph* g) { delete g; }

uint32_t tcover_graph_num_vertices(const tcover_graph* g) { return g ? g->graph.num_vertices() : 0; }

uint32_t tcover_graph_num_edges(const tcover_graph* g) { return g ? g->graph.num_edges() : 0; }

tcover_status tcover_graph_edge(const tcover_graph* g, uint32_t edge, uint32_t* u, uint32_t* v) {
  TCOVER_REQUIRE(g != nullptr && u != nullptr && v != nullptr);
  if (edge >= g->graph.num_edges()) return fail(TCOVER_ERR_INVALID_ARGUMENT, "edge id out of range");
  *u = g->graph.edge(edge).u;
  *v = g->graph.edge(edge).v;
  last_error.clear();
  return TCOVER_OK;
}

tcover_status tcover_graph_num_isolated(const tcover_graph* g, uint32_t* out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = static_cast<uint32_t>(tcover::isolated_vertices(g->graph).size()); });
}

tcover_status tcover_graph_total(const tcover_graph* g, tcover_graph** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { emit_graph(tcover::total_graph(g->graph).graph, out); });
}

tcover_status tcover_gen_figure1(uint32_t n, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::figure1(n), out); });
}

tcover_status tcover_gen_path(uint32_t n, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::path(n), out); });
}

tcover_status tcover_gen_cycle(uint32_t n, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::cycle(n), out); });
}

tcover_status tcover_gen_star(uint32_t n, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::star(n), out); });
}

tcover_status tcover_gen_complete(uint32_t n, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::complete(n), out); });
}

tcover_status tcover_gen_petersen(tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::petersen(), out); });
}

tcover_status tcover_gen_gnp(uint32_t n, double p, uint64_t seed, tcover_graph** out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { emit_graph(tcover::gnp(n, p, seed), out); });
}

tcover_status tcover_graph_add_isolated(const tcover_graph* g, uint32_t t, tcover_graph** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { emit_graph(tcover::add_isolated(g->graph, t), out); });
}

tcover_status tcover_cover_create(const tcover_graph* g, const tcover_element* elements, size_t count,
                                  tcover_cover** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  TCOVER_REQUIRE(elements != nullptr || count == 0);
  return guarded([&] {
    std::vector<tcover::Element> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) list.push_back(from_c(elements[i]));
    *out = new tcover_cover{tcover::ElementSet(g->graph, std::move(list))};
  });
}

tcover_status tcover_cover_parse(const char* text, const tcover_graph* g, tcover_cover** out) {
  TCOVER_REQUIRE(text != nullptr && g != nullptr && out != nullptr);
  return guarded([&] { *out = new tcover_cover{tcover::parse_cover(text, g->graph)}; });
}

tcover_status tcover_cover_load(const char* path, const tcover_graph* g, tcover_cover** out) {
  TCOVER_REQUIRE(path != nullptr && g != nullptr && out != nullptr);
  return guarded([&] { *out = new tcover_cover{tcover::parse_cover(tcover::read_file(path), g->graph)}; });
}

tcover_status tcover_cover_serialize(const tcover_graph* g, const tcover_cover* c, char** out) {
  TCOVER_REQUIRE(g != nullptr && c != nullptr && out != nullptr);
  return guarded([&] { *out = copy_string(tcover::serialize_cover(g->graph, c->set)); });
}

size_t tcover_cover_size(const tcover_cover* c) { return c ? c->set.size() : 0; }

tcover_status tcover_cover_element(const tcover_cover* c, size_t i, tcover_element* out) {
  TCOVER_REQUIRE(c != nullptr && out != nullptr);
  if (i >= c->set.size()) return fail(TCOVER_ERR_INVALID_ARGUMENT, "element index out of range");
  *out = to_c(c->set.elements()[i]);
  last_error.clear();
  return TCOVER_OK;
}

void tcover_cover_free(tcover_cover* c) { delete c; }

tcover_status tcover_check_total_cover(const tcover_graph* g, const tcover_cover* c, int* is_cover,
                                       tcover_element* witness) {
  TCOVER_REQUIRE(g != nullptr && c != nullptr && is_cover != nullptr);
  return guarded([&] {
    const auto check = tcover::is_total_cover(g->graph, c->set);
    *is_cover = check.valid ? 1 : 0;
    if (!check.valid && witness != nullptr) *witness = to_c(*check.witness);
  });
}

tcover_status tcover_describe_element(const tcover_graph* g, tcover_element x, char** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  if (!g->graph.contains(from_c(x))) return fail(TCOVER_ERR_INVALID_ARGUMENT, "element not in graph");
  return guarded([&] { *out = copy_string(tcover::describe_element(g->graph, from_c(x))); });
}

tcover_status tcover_matching_size(const tcover_graph* g, tcover_matching_mode mode, uint32_t* out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    const auto m = mode == TCOVER_MATCHING_MAXIMUM ? tcover::maximum_matching(g->graph)
                                                   : tcover::greedy_maximal_matching(g->graph);
    *out = static_cast<uint32_t>(m.size());
  });
}

tcover_status tcover_approx_solve(const tcover_graph* g, tcover_approx** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    auto a = std::make_unique<tcover_approx>();
    a->result = tcover::approx_total_cover(g->graph);
    a->cover.set = a->result.cover;
    for (const auto& step : a->result.trace) a->trace.push_back(tcover::format_trace_step(g->graph, step));
    *out = a.release();
  });
}

void tcover_approx_free(tcover_approx* a) { delete a; }

const tcover_cover* tcover_approx_cover(const tcover_approx* a) { return a ? &a->cover : nullptr; }
uint32_t tcover_approx_m(const tcover_approx* a) { return a ? static_cast<uint32_t>(a->result.m) : 0; }
uint32_t tcover_approx_k(const tcover_approx* a) { return a ? static_cast<uint32_t>(a->result.k) : 0; }
uint32_t tcover_approx_t(const tcover_approx* a) { return a ? static_cast<uint32_t>(a->result.t) : 0; }

uint32_t tcover_approx_lower_bound(const tcover_approx* a) {
  return a ? static_cast<uint32_t>(a->result.lower_bound) : 0;
}

void tcover_approx_ratio(const tcover_approx* a, uint64_t* num, uint64_t* den) {
  if (a == nullptr) return;
  if (num) *num = a->result.certified_ratio.num();
  if (den) *den = a->result.certified_ratio.den();
}

size_t tcover_approx_trace_length(const tcover_approx* a) { return a ? a->trace.size() : 0; }

const char* tcover_approx_trace_line(const tcover_approx* a, size_t i) {
  return a && i < a->trace.size() ? a->trace[i].c_str() : nullptr;
}

tcover_status tcover_lemma1_lower_bound(uint32_t m, uint32_t k, uint32_t t, uint32_t* out) {
  TCOVER_REQUIRE(out != nullptr);
  return guarded([&] { *out = static_cast<uint32_t>(tcover::lemma1_lower_bound(m, k, t)); });
}

tcover_status tcover_baseline_matched_vertices(const tcover_graph* g, tcover_matching_mode mode,
                                               tcover_cover** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    const auto m = mode == TCOVER_MATCHING_MAXIMUM ? tcover::MatchingMode::Maximum : tcover::MatchingMode::Maximal;
    *out = new tcover_cover{tcover::matched_vertices_cover(g->graph, m)};
  });
}

tcover_status tcover_baseline_greedy_domination(const tcover_graph* g, tcover_cover** out) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = new tcover_cover{tcover::greedy_domination_cover(g->graph)}; });
}

void tcover_search_limits_default(tcover_search_limits* limits) {
  if (limits == nullptr) return;
  const tcover::SearchLimits d;
  limits->max_elements = d.max_elements;
  limits->max_candidates = d.max_candidates;
  limits->start_size = d.start_size;
}


tcover_status tcover_exact_total_cover(const tcover_graph* g, const tcover_search_limits* limits,
                                       tcover_exact** out, uint32_t* reached_size) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return run_exact([&] { return tcover::exact_total_cover(g->graph, limits_of(limits)); }, out, reached_size);
}

tcover_status tcover_exact_dominating_set(const tcover_graph* g, const tcover_search_limits* limits,
                                          tcover_exact** out, uint32_t* reached_size) {
  TCOVER_REQUIRE(g != nullptr && out != nullptr);
  return run_exact([&] { return tcover::exact_dominating_set(g->graph, limits_of(limits)); }, out, reached_size);
}

void tcover_exact_free(tcover_exact* x) { delete x; }
uint32_t tcover_exact_size(const tcover_exact* x) { return x ? static_cast<uint32_t>(x->result.size) : 0; }
const tcover_cover* tcover_exact_optimum(const tcover_exact* x) { return x ? &x->cover : nullptr; }
uint64_t tcover_exact_candidates(const tcover_exact* x) { return x ? x->result.candidates_checked : 0; }

double tcover_exact_seconds(const tcover_exact* x) {
  return x ? std::chrono::duration<double>(x->result.elapsed).count() : 0.0;
}

tcover_status tcover_cross_check_alpha2(const tcover_graph* g, const tcover_search_limits* limits, uint32_t* alpha2,
                                        uint32_t* gamma_total, int* agree) {
  TCOVER_REQUIRE(g != nullptr && alpha2 != nullptr && gamma_total != nullptr && agree != nullptr);
  return guarded([&] {
    const auto r = tcover::cross_check_alpha2(g->graph, limits_of(limits));
    *alpha2 = static_cast<uint32_t>(r.alpha2);
    *gamma_total = static_cast<uint32_t>(r.gamma_total);
    *agree = r.agree ? 1 : 0;
  });
}

tcover_status tcover_format_ratio(uint64_t num, uint64_t den, int digits, char** out) {
  TCOVER_REQUIRE(out != nullptr);
  if (digits < 0 || digits > 18) return fail(TCOVER_ERR_INVALID_ARGUMENT, "digits must be in [0,18]");
  return guarded([&] { *out = copy_string(tcover::Rational(num, den).to_fixed(digits)); });
}

}  // extern "C"
