#ifndef GPNUM_GPNUM_H
#define GPNUM_GPNUM_H

/* C interface to the general position toolkit. Objects are opaque handles
 * released with their *_free function; strings returned through char** are
 * released with gpn_string_free. Every fallible call returns a gpn_status and
 * leaves a thread-local message readable through gpn_last_error. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GPNUM_BUILDING)
#    define GPN_API __declspec(dllexport)
#  else
#    define GPN_API __declspec(dllimport)
#  endif
#else
#  define GPN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpn_status {
  GPN_OK = 0,
  GPN_INPUT_ERROR = 2,
  GPN_PARSE_ERROR = 4,
  GPN_INTERNAL_ERROR = 5
} gpn_status;

typedef enum gpn_format { GPN_FORMAT_GRAPH6 = 0, GPN_FORMAT_JSON = 1 } gpn_format;

typedef enum gpn_method { GPN_METHOD_AUTO = 0, GPN_METHOD_EXACT = 1, GPN_METHOD_DIAM2 = 2 } gpn_method;

typedef enum gpn_invariant_kind {
  GPN_OMEGA = 0,
  GPN_ALPHA = 1,
  GPN_ETA = 2,
  GPN_RHO = 3
} gpn_invariant_kind;

typedef enum gpn_grid_kind { GPN_GRID_QUICK = 0, GPN_GRID_STRETCH = 1 } gpn_grid_kind;

typedef enum gpn_table_format { GPN_TABLE_JSON_LINES = 0, GPN_TABLE_CSV = 1 } gpn_table_format;

/* Zero fields mean unlimited. */
typedef struct gpn_budget {
  uint64_t max_nodes;
  int64_t max_ms;
} gpn_budget;

typedef struct gpn_graph gpn_graph;
typedef struct gpn_result gpn_result;
typedef struct gpn_reports gpn_reports;

GPN_API const char* gpn_version(void);

/* Message of the last failed call on this thread ("" when none). */
GPN_API const char* gpn_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
GPN_API int64_t gpn_last_error_offset(void);

GPN_API void gpn_string_free(char* s);

/* Graphs. Expressions name constructors: "kneser(5,2)", "cart(K3,P4)",
 * "corona(P3,K2)", "line(K5)", "petersen", "C5", ... */
GPN_API gpn_status gpn_graph_from_expr(const char* expr, gpn_graph** out);
GPN_API gpn_status gpn_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                                        gpn_graph** out);
/* graph6 or sidecar JSON, detected from the first non-blank byte. */
GPN_API gpn_status gpn_graph_parse(const char* text, size_t length, gpn_graph** out);
GPN_API gpn_status gpn_graph_read(const char* path, gpn_graph** out);
GPN_API gpn_status gpn_graph_write(const gpn_graph* g, const char* path, gpn_format format);
GPN_API gpn_status gpn_graph_encode(const gpn_graph* g, gpn_format format, char** out);
GPN_API void gpn_graph_free(gpn_graph* g);

GPN_API size_t gpn_graph_order(const gpn_graph* g);
GPN_API size_t gpn_graph_size(const gpn_graph* g);
GPN_API int gpn_graph_adjacent(const gpn_graph* g, uint32_t u, uint32_t v);
/* -1 when the graph is disconnected. */
GPN_API int64_t gpn_graph_diameter(const gpn_graph* g);

/* Searches. */
GPN_API gpn_status gpn_gp(const gpn_graph* g, gpn_method method, gpn_budget budget,
                          gpn_result** out);
GPN_API gpn_status gpn_invariant(const gpn_graph* g, gpn_invariant_kind which, gpn_budget budget,
                                 gpn_result** out);

GPN_API size_t gpn_result_value(const gpn_result* r);
/* 1 when the value is proven optimal, 0 for a lower bound. */
GPN_API int gpn_result_exact(const gpn_result* r);
GPN_API size_t gpn_result_witness_size(const gpn_result* r);
GPN_API const uint32_t* gpn_result_witness(const gpn_result* r);
GPN_API uint64_t gpn_result_nodes(const gpn_result* r);
GPN_API int64_t gpn_result_ms(const gpn_result* r);
/* "exact", "diam2", or the invariant name. */
GPN_API const char* gpn_result_method(const gpn_result* r);
GPN_API gpn_status gpn_result_json(const gpn_result* r, char** out);
GPN_API void gpn_result_free(gpn_result* r);

/* Runs the definition check and, on connected graphs, the clique-partition
 * characterization. *general_position receives the definition verdict and
 * *agree whether the two checks coincide (1 on disconnected graphs, where
 * only the definition applies). `json_out` may be NULL. */
GPN_API gpn_status gpn_check_set(const gpn_graph* g, const uint32_t* members, size_t count,
                                 int* general_position, int* agree, char** json_out);

/* Prediction for one parameter point; `params_json` is an object such as
 * {"n":7} or {"G":"P3","H":"K2"}. */
GPN_API gpn_status gpn_predict(const char* theorem, const char* params_json, gpn_budget budget,
                               char** json_out);

/* JSON array of the registered theorem ids. */
GPN_API gpn_status gpn_theorem_ids(char** json_out);

/* Sweeps manifest grids. `manifest_json` NULL selects the built-in manifest;
 * `ids` NULL or `id_count` 0 selects every theorem. */
GPN_API gpn_status gpn_verify_manifest(const char* manifest_json, const char* const* ids,
                                       size_t id_count, gpn_grid_kind kind, gpn_budget budget,
                                       unsigned jobs, gpn_reports** out);
/* Sweeps one explicit grid for one theorem. */
GPN_API gpn_status gpn_verify_grid(const char* theorem, const char* grid_json, gpn_budget budget,
                                   unsigned jobs, gpn_reports** out);

GPN_API size_t gpn_reports_count(const gpn_reports* r);
/* Verdict of report i: "match", "within-bound", "mismatch", "timeout" or
 * "not-applicable"; "" when i is out of range. */
GPN_API const char* gpn_reports_verdict(const gpn_reports* r, size_t i);
GPN_API gpn_status gpn_reports_table(const gpn_reports* r, gpn_table_format format, char** out);
/* 0 all clear, 1 mismatch, 3 timeouts under `strict`. */
GPN_API int gpn_reports_exit_code(const gpn_reports* r, int strict);
GPN_API void gpn_reports_free(gpn_reports* r);

#ifdef __cplusplus
}
#endif

#endif /* GPNUM_GPNUM_H */
