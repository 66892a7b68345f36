/*
 * C interface to the total cover library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a tcover_status; on
 * failure the message is available from tcover_last_error() until the next
 * call on the same thread. Strings returned through char** are allocated by
 * the library and released with tcover_string_free().
 *
 * Vertex and edge indices are 0-based; text formats are 1-based.
 */
#ifndef TCOVER_H
#define TCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TCOVER_BUILDING)
#    define TCOVER_API __declspec(dllexport)
#  else
#    define TCOVER_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define TCOVER_API __attribute__((visibility("default")))
#else
#  define TCOVER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tcover_status {
  TCOVER_OK = 0,
  TCOVER_ERR_INVALID_ARGUMENT = 1,
  TCOVER_ERR_SYNTAX = 2,
  TCOVER_ERR_SELF_LOOP = 3,
  TCOVER_ERR_DUPLICATE_EDGE = 4,
  TCOVER_ERR_VERTEX_OUT_OF_RANGE = 5,
  TCOVER_ERR_UNKNOWN_EDGE = 6,
  TCOVER_ERR_TOO_LARGE = 7,
  TCOVER_ERR_BUDGET_EXCEEDED = 8,
  TCOVER_ERR_NOT_MAXIMUM = 9,
  TCOVER_ERR_ODD_PARAMETER = 10,
  TCOVER_ERR_PARAMETER_OUT_OF_RANGE = 11,
  TCOVER_ERR_IO = 12,
  TCOVER_ERR_INTERNAL = 13
} tcover_status;

typedef enum tcover_element_kind {
  TCOVER_VERTEX = 0,
  TCOVER_EDGE = 1
} tcover_element_kind;

typedef struct tcover_element {
  tcover_element_kind kind;
  uint32_t index;
} tcover_element;

typedef enum tcover_matching_mode {
  TCOVER_MATCHING_MAXIMAL = 0,
  TCOVER_MATCHING_MAXIMUM = 1
} tcover_matching_mode;

typedef struct tcover_search_limits {
  uint32_t max_elements;
  uint64_t max_candidates;
  uint32_t start_size;
} tcover_search_limits;

typedef struct tcover_graph tcover_graph;
typedef struct tcover_cover tcover_cover;
typedef struct tcover_approx tcover_approx;
typedef struct tcover_exact tcover_exact;

/* errors and strings */
TCOVER_API const char* tcover_last_error(void);
TCOVER_API const char* tcover_status_name(tcover_status status);
TCOVER_API void tcover_string_free(char* s);

/* graphs; pairs holds num_pairs (u, v) couples, flattened */
TCOVER_API tcover_status tcover_graph_build(uint32_t n, const uint32_t* pairs, size_t num_pairs,
                                            tcover_graph** out);
TCOVER_API tcover_status tcover_graph_parse(const char* text, tcover_graph** out);
TCOVER_API tcover_status tcover_graph_load(const char* path, tcover_graph** out);
TCOVER_API tcover_status tcover_graph_serialize(const tcover_graph* g, char** out);
TCOVER_API void tcover_graph_free(tcover_graph* g);
TCOVER_API uint32_t tcover_graph_num_vertices(const tcover_graph* g);
TCOVER_API uint32_t tcover_graph_num_edges(const tcover_graph* g);
TCOVER_API tcover_status tcover_graph_edge(const tcover_graph* g, uint32_t edge, uint32_t* u, uint32_t* v);
TCOVER_API tcover_status tcover_graph_num_isolated(const tcover_graph* g, uint32_t* out);
/* T(g); vertex i < n is vertex i of g, vertex n + e is edge e of g */
TCOVER_API tcover_status tcover_graph_total(const tcover_graph* g, tcover_graph** out);

/* generators */
TCOVER_API tcover_status tcover_gen_figure1(uint32_t n, tcover_graph** out);
TCOVER_API tcover_status tcover_gen_path(uint32_t n, tcover_graph** out);
TCOVER_API tcover_status tcover_gen_cycle(uint32_t n, tcover_graph** out);
TCOVER_API tcover_status tcover_gen_star(uint32_t n, tcover_graph** out);
TCOVER_API tcover_status tcover_gen_complete(uint32_t n, tcover_graph** out);
TCOVER_API tcover_status tcover_gen_petersen(tcover_graph** out);
TCOVER_API tcover_status tcover_gen_gnp(uint32_t n, double p, uint64_t seed, tcover_graph** out);
TCOVER_API tcover_status tcover_graph_add_isolated(const tcover_graph* g, uint32_t t, tcover_graph** out);

/* element sets */
TCOVER_API tcover_status tcover_cover_create(const tcover_graph* g, const tcover_element* elements, size_t count,
                                             tcover_cover** out);
TCOVER_API tcover_status tcover_cover_parse(const char* text, const tcover_graph* g, tcover_cover** out);
TCOVER_API tcover_status tcover_cover_load(const char* path, const tcover_graph* g, tcover_cover** out);
TCOVER_API tcover_status tcover_cover_serialize(const tcover_graph* g, const tcover_cover* c, char** out);
TCOVER_API size_t tcover_cover_size(const tcover_cover* c);
TCOVER_API tcover_status tcover_cover_element(const tcover_cover* c, size_t i, tcover_element* out);
TCOVER_API void tcover_cover_free(tcover_cover* c);

/* *is_cover is 1 or 0; when 0 and witness is non-null it receives the first
   uncovered element */
TCOVER_API tcover_status tcover_check_total_cover(const tcover_graph* g, const tcover_cover* c, int* is_cover,
                                                  tcover_element* witness);
/* "vertex 3" / "edge (1,2)", 1-based */
TCOVER_API tcover_status tcover_describe_element(const tcover_graph* g, tcover_element x, char** out);

/* matchings */
TCOVER_API tcover_status tcover_matching_size(const tcover_graph* g, tcover_matching_mode mode, uint32_t* out);

/* approximation */
TCOVER_API tcover_status tcover_approx_solve(const tcover_graph* g, tcover_approx** out);
TCOVER_API void tcover_approx_free(tcover_approx* a);
/* borrowed; valid while a lives */
TCOVER_API const tcover_cover* tcover_approx_cover(const tcover_approx* a);
TCOVER_API uint32_t tcover_approx_m(const tcover_approx* a);
TCOVER_API uint32_t tcover_approx_k(const tcover_approx* a);
TCOVER_API uint32_t tcover_approx_t(const tcover_approx* a);
TCOVER_API uint32_t tcover_approx_lower_bound(const tcover_approx* a);
TCOVER_API void tcover_approx_ratio(const tcover_approx* a, uint64_t* num, uint64_t* den);
TCOVER_API size_t tcover_approx_trace_length(const tcover_approx* a);
/* "<step> <reason> <element>"; borrowed */
TCOVER_API const char* tcover_approx_trace_line(const tcover_approx* a, size_t i);

TCOVER_API tcover_status tcover_lemma1_lower_bound(uint32_t m, uint32_t k, uint32_t t, uint32_t* out);

/* baselines */
TCOVER_API tcover_status tcover_baseline_matched_vertices(const tcover_graph* g, tcover_matching_mode mode,
                                                          tcover_cover** out);
TCOVER_API tcover_status tcover_baseline_greedy_domination(const tcover_graph* g, tcover_cover** out);

/* exact oracles */
TCOVER_API void tcover_search_limits_default(tcover_search_limits* limits);
/* on TCOVER_ERR_BUDGET_EXCEEDED, *reached_size (if non-null) receives the
   cardinality being searched */
TCOVER_API tcover_status tcover_exact_total_cover(const tcover_graph* g, const tcover_search_limits* limits,
                                                  tcover_exact** out, uint32_t* reached_size);
TCOVER_API tcover_status tcover_exact_dominating_set(const tcover_graph* g, const tcover_search_limits* limits,
                                                     tcover_exact** out, uint32_t* reached_size);
TCOVER_API void tcover_exact_free(tcover_exact* x);
TCOVER_API uint32_t tcover_exact_size(const tcover_exact* x);
TCOVER_API const tcover_cover* tcover_exact_optimum(const tcover_exact* x);
TCOVER_API uint64_t tcover_exact_candidates(const tcover_exact* x);
TCOVER_API double tcover_exact_seconds(const tcover_exact* x);
TCOVER_API tcover_status tcover_cross_check_alpha2(const tcover_graph* g, const tcover_search_limits* limits,
                                                   uint32_t* alpha2, uint32_t* gamma_total, int* agree);

/* num/den rounded half-up to the given number of decimals */
TCOVER_API tcover_status tcover_format_ratio(uint64_t num, uint64_t den, int digits, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TCOVER_H */
