#ifndef EQUICUT_H
#define EQUICUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EquicutMethod {
  EQUICUT_METHOD_EXHAUSTIVE = 0,
  EQUICUT_METHOD_BRANCH_AND_BOUND = 1,
  EQUICUT_METHOD_LOCAL_SEARCH = 2,
} EquicutMethod;

typedef enum EquicutStatus {
  EQUICUT_STATUS_OK = 0,
  EQUICUT_STATUS_NULL_POINTER = 1,
  EQUICUT_STATUS_INVALID_INPUT = 2,
  EQUICUT_STATUS_CAP_EXCEEDED = 3,
  EQUICUT_STATUS_IO = 5,
  EQUICUT_STATUS_BUFFER_TOO_SMALL = 6,
  EQUICUT_STATUS_PANIC = 7,
} EquicutStatus;

/*
 Opaque simple undirected graph.
 */
typedef struct EquicutGraph EquicutGraph;

/*
 Opaque solver output.
 */
typedef struct EquicutSolveResult EquicutSolveResult;

/*
 Solver settings. `upper_bound` is ignored unless `has_upper_bound`.
 */
typedef struct EquicutSolverConfig {
  bool symmetry_reduction;
  size_t restarts;
  uint64_t rng_seed;
  size_t parallelism;
  bool has_upper_bound;
  size_t upper_bound;
  size_t enumeration_cap;
  bool first_improvement;
} EquicutSolverConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *equicut_last_error_message(void);

/*
 # Safety
 `out` must be valid for writes.
 */
enum EquicutStatus equicut_graph_cycle(size_t n, struct EquicutGraph **out);

/*
 # Safety
 `out` must be valid for writes.
 */
enum EquicutStatus equicut_graph_cycle_power(size_t n, size_t d, struct EquicutGraph **out);

/*
 # Safety
 `jumps` must point to `len` readable values; `out` must be valid for writes.
 */
enum EquicutStatus equicut_graph_circulant(size_t n,
                                           const size_t *jumps,
                                           size_t len,
                                           struct EquicutGraph **out);

/*
 # Safety
 `out` must be valid for writes.
 */
enum EquicutStatus equicut_graph_complete(size_t n, struct EquicutGraph **out);

/*
 Builds a graph from `m` edges stored as `2m` endpoints `u0 v0 u1 v1 ...`.

 # Safety
 `endpoints` must point to `2 * m` readable values; `out` must be valid for writes.
 */
enum EquicutStatus equicut_graph_from_edges(size_t n,
                                            const size_t *endpoints,
                                            size_t m,
                                            struct EquicutGraph **out);

/*
 # Safety
 `g` must be NULL or a handle from this library not yet freed.
 */
void equicut_graph_free(struct EquicutGraph *g);

/*
 Number of vertices, 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
size_t equicut_graph_order(const struct EquicutGraph *g);

/*
 Number of edges, 0 for NULL.

 # Safety
 `g` must be NULL or a live handle.
 */
size_t equicut_graph_edge_count(const struct EquicutGraph *g);

struct EquicutSolverConfig equicut_solver_config_default(void);

/*
 Solves `g`. A NULL `config` means the defaults.

 # Safety
 `g` must be a live handle, `config` NULL or readable, `out` valid for writes.
 */
enum EquicutStatus equicut_solve(const struct EquicutGraph *g,
                                 enum EquicutMethod method,
                                 const struct EquicutSolverConfig *config,
                                 struct EquicutSolveResult **out);

/*
 # Safety
 `r` must be NULL or a handle from this library not yet freed.
 */
void equicut_result_free(struct EquicutSolveResult *r);

/*
 # Safety
 `r` must be NULL or a live handle.
 */
size_t equicut_result_value(const struct EquicutSolveResult *r);

/*
 # Safety
 `r` must be NULL or a live handle.
 */
bool equicut_result_is_exact(const struct EquicutSolveResult *r);

/*
 # Safety
 `r` must be NULL or a live handle.
 */
size_t equicut_result_lower_bound(const struct EquicutSolveResult *r);

/*
 # Safety
 `r` must be NULL or a live handle.
 */
size_t equicut_result_upper_bound(const struct EquicutSolveResult *r);

/*
 Size of the certificate side, `floor(n/2)`.

 # Safety
 `r` must be NULL or a live handle.
 */
size_t equicut_result_certificate_len(const struct EquicutSolveResult *r);

/*
 Copies the sorted certificate side into `buf`.

 # Safety
 `r` must be a live handle and `buf` writable for `capacity` values.
 */
enum EquicutStatus equicut_result_certificate(const struct EquicutSolveResult *r,
                                              size_t *buf,
                                              size_t capacity);

/*
 Number of edges between `members` (of size `floor(n/2)`) and the rest.

 # Safety
 `g` must be a live handle, `members` readable for `len` values, `out` writable.
 */
enum EquicutStatus equicut_equicut_size(const struct EquicutGraph *g,
                                        const size_t *members,
                                        size_t len,
                                        size_t *out);

/*
 # Safety
 `g` must be a live handle and `out` writable.
 */
enum EquicutStatus equicut_edge_connectivity(const struct EquicutGraph *g, size_t *out);

/*
 Closed-form minimum equicut of `C_n^d` when one is known. Sets `*known`
 and, if true, `*value`.

 # Safety
 `known` and `value` must be writable.
 */
enum EquicutStatus equicut_known_rna_cycle_power(size_t n, size_t d, bool *known, size_t *value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUICUT_H */
