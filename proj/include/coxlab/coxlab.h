/*
 * coxlab C API: Coxeter groups, braid-move graphs of reduced expressions and
 * the parity checks on their cycles.
 *
 * Handles are opaque and owned by the caller; free them with the matching
 * *_free function. A partition keeps its group alive and a graph keeps its
 * partition alive, so handles may be freed in any order.
 *
 * Words passed in are arrays of 0-indexed generators. JSON and DOT output
 * writes generators 1-indexed. Strings returned through char** are
 * heap-allocated and must be released with coxlab_string_free.
 *
 * Every function returning coxlab_status leaves a message retrievable with
 * coxlab_last_error() (per thread) when it fails.
 */
#ifndef COXLAB_COXLAB_H
#define COXLAB_COXLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define COXLAB_API __declspec(dllexport)
#else
#  define COXLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct coxlab_group     coxlab_group;
typedef struct coxlab_partition coxlab_partition;
typedef struct coxlab_graph     coxlab_graph;

typedef enum coxlab_status {
  COXLAB_OK = 0,
  COXLAB_ERR_DIAGONAL_NOT_ONE,
  COXLAB_ERR_OFF_DIAGONAL_BELOW_TWO,
  COXLAB_ERR_ASYMMETRIC,
  COXLAB_ERR_NOT_SQUARE,
  COXLAB_ERR_RANK_TOO_LARGE,
  COXLAB_ERR_INVALID_LETTER,
  COXLAB_ERR_CAP_EXCEEDED,
  COXLAB_ERR_ELEMENT_CAP_EXCEEDED,
  COXLAB_ERR_LENGTH_PARITY_MISMATCH,
  COXLAB_ERR_NOT_A_BRAID_STEP,
  COXLAB_ERR_INVALID_ARGUMENT,
  COXLAB_ERR_PARSE,
  COXLAB_ERR_UNKNOWN_CATALOG_TYPE,
  COXLAB_ERR_INTERNAL
} coxlab_status;

/* Values match the CLI exit codes. */
typedef enum coxlab_verdict {
  COXLAB_PASS         = 0,
  COXLAB_FAIL         = 1,
  COXLAB_INCONCLUSIVE = 2
} coxlab_verdict;

/* Matrix entry meaning m = infinity. */
#define COXLAB_INFINITY 0u

COXLAB_API const char* coxlab_last_error(void);
COXLAB_API void        coxlab_string_free(char* s);

/* Groups */
COXLAB_API coxlab_status coxlab_group_from_matrix(const unsigned* entries, size_t rank,
                                                  coxlab_group** out);
COXLAB_API coxlab_status coxlab_group_from_catalog(const char* name, coxlab_group** out);
COXLAB_API coxlab_status coxlab_group_from_matrix_text(const char* text, coxlab_group** out);
COXLAB_API void          coxlab_group_free(coxlab_group* group);
COXLAB_API size_t        coxlab_group_rank(const coxlab_group* group);
/* Matrix in the "rank n" text format. */
COXLAB_API coxlab_status coxlab_group_matrix_text(const coxlab_group* group, char** out);

/* Canonical (ShortLex-least) reduced word of the element represented by
 * `word`. `out` needs room for `len` letters; *out_len receives the length. */
COXLAB_API coxlab_status coxlab_reduce(const coxlab_group* group, const unsigned* word,
                                       size_t len, unsigned* out, size_t* out_len);

/* Number of elements (element_cap 0 means the default of 200000);
 * COXLAB_ERR_ELEMENT_CAP_EXCEEDED for larger or infinite groups. */
COXLAB_API coxlab_status coxlab_group_order(const coxlab_group* group, size_t element_cap,
                                            size_t* out);

/* Conjugacy classes of generator pairs. radius 0 asks for the exact
 * partition (COXLAB_ERR_ELEMENT_CAP_EXCEEDED when the orbits are too large);
 * radius > 0 gives a provisional partition from conjugating paths of at most
 * that length. */
COXLAB_API coxlab_status coxlab_partition_compute(const coxlab_group* group, unsigned radius,
                                                  coxlab_partition** out);
COXLAB_API void          coxlab_partition_free(coxlab_partition* partition);
COXLAB_API size_t        coxlab_partition_size(const coxlab_partition* partition);
COXLAB_API int           coxlab_partition_is_exact(const coxlab_partition* partition);
/* Class id of the generator pair (s, t), 0-indexed. */
COXLAB_API coxlab_status coxlab_partition_class_of(const coxlab_partition* partition,
                                                   unsigned s, unsigned t, uint32_t* out);
COXLAB_API coxlab_status coxlab_partition_op(const coxlab_partition* partition, uint32_t c,
                                             uint32_t* out);
COXLAB_API coxlab_status coxlab_partition_json(const coxlab_partition* partition, char** out);

/* Braid graphs */
COXLAB_API coxlab_status coxlab_graph_reduced(const coxlab_partition* partition,
                                              const unsigned* word, size_t len,
                                              coxlab_graph** out);
/* Braid-reachable component of the length-k expressions of the element. */
COXLAB_API coxlab_status coxlab_graph_expressions(const coxlab_partition* partition,
                                                  const unsigned* word, size_t len, size_t k,
                                                  coxlab_graph** out);
COXLAB_API void          coxlab_graph_free(coxlab_graph* graph);
COXLAB_API size_t        coxlab_graph_vertex_count(const coxlab_graph* graph);
COXLAB_API size_t        coxlab_graph_arc_count(const coxlab_graph* graph);
COXLAB_API coxlab_status coxlab_graph_json(const coxlab_graph* graph, char** out);
COXLAB_API coxlab_status coxlab_graph_dot(const coxlab_graph* graph, char** out);

/* Reduced graphs: Has-step check on every arc plus cycle parity.
 * Expression graphs: cycle parity only. *json_out (may be NULL) receives the
 * graph JSON with the report embedded. */
COXLAB_API coxlab_status coxlab_graph_verify(const coxlab_graph* graph,
                                             coxlab_verdict* verdict, char** json_out);

/* Verifies every element of length <= max_length (max_length < 0: all
 * elements, which needs a group within the element cap). threads 0 means 1. */
COXLAB_API coxlab_status coxlab_verify_elements(const coxlab_partition* partition,
                                                long max_length, unsigned threads,
                                                coxlab_verdict* verdict, char** json_out);

/* Inversion word and Has support of `word`. */
COXLAB_API coxlab_status coxlab_invs_json(const coxlab_partition* partition,
                                          const unsigned* word, size_t len, char** out);

/* Randomized property suites. */
COXLAB_API coxlab_status coxlab_properties(const coxlab_partition* partition, size_t samples,
                                           uint64_t seed, coxlab_verdict* verdict,
                                           char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* COXLAB_COXLAB_H */
