#ifndef CLIQUE_BOUNDS_H
#define CLIQUE_BOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every fallible call.
 */
typedef enum CbStatus {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  CB_STATUS_INVALID_UTF8 = 2,
  CB_STATUS_DOMAIN = 3,
  CB_STATUS_INAPPLICABLE = 4,
  CB_STATUS_RESOURCE_LIMIT = 5,
  CB_STATUS_OVERFLOW = 6,
  CB_STATUS_INVARIANT = 7,
  CB_STATUS_PARSE = 8,
  CB_STATUS_PANIC = 9,
} CbStatus;

/*
 Which of the two refined bounds is larger.
 */
typedef enum CbWinner {
  CB_WINNER_LGBD = 0,
  CB_WINNER_SMBD = 1,
  CB_WINNER_TIE = 2,
} CbWinner;

/*
 Opaque result of a bound computation.
 */
typedef struct CbBoundReport CbBoundReport;

/*
 Opaque graph handle.
 */
typedef struct CbGraph CbGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failure on this thread, or null. The pointer is
 valid until the next failing call on the same thread.
 */
const char *cb_last_error_message(void);

/*
 Library version as a static string.
 */
const char *cb_version(void);

/*
 Frees a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void cb_string_free(char *s);

/*
 Parses one graph6 string.

 # Safety
 `text` must be a nul-terminated string and `out` writable.
 */
enum CbStatus cb_graph_from_graph6(const char *text, struct CbGraph **out);

/*
 Parses the edge-list format (`n <count>` then 1-based `u v` lines).

 # Safety
 `text` must be a nul-terminated string and `out` writable.
 */
enum CbStatus cb_graph_from_edge_list(const char *text, struct CbGraph **out);

/*
 Builds a graph attaining a bound: `which` is 1, 2 or 3.

 # Safety
 `m` must be a nul-terminated decimal string and `out` writable.
 */
enum CbStatus cb_graph_construct(const char *m, uint64_t k, uint8_t which, struct CbGraph **out);

/*
 Releases a graph. Null is ignored.

 # Safety
 `g` must come from this library and not have been freed.
 */
void cb_graph_free(struct CbGraph *g);

/*
 Number of vertices, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t cb_graph_vertex_count(const struct CbGraph *g);

/*
 Number of `k`-cliques.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CbStatus cb_graph_clique_count(const struct CbGraph *g, size_t k, uint64_t *out);

/*
 graph6 encoding.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CbStatus cb_graph_to_graph6(const struct CbGraph *g, char **out);

/*
 Edge-list encoding.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum CbStatus cb_graph_to_edge_list(const struct CbGraph *g, char **out);

/*
 All bounds on `c_{k+1}` given `c_k = m`.

 # Safety
 `m` must be a nul-terminated decimal string and `out` writable.
 */
enum CbStatus cb_bound_report_new(const char *m, uint64_t k, struct CbBoundReport **out);

/*
 Releases a report. Null is ignored.

 # Safety
 `r` must come from this library and not have been freed.
 */
void cb_bound_report_free(struct CbBoundReport *r);

/*
 Kruskal-Katona bound, as a decimal string.

 # Safety
 `r` must be a live handle and `out` writable.
 */
enum CbStatus cb_bound_report_oldbd(const struct CbBoundReport *r, char **out);

/*
 Bound for graphs with the largest possible clique.

 # Safety
 `r` must be a live handle and `out` writable.
 */
enum CbStatus cb_bound_report_lgbd(const struct CbBoundReport *r, char **out);

/*
 Bound for graphs without it. Writes null when it is undefined.

 # Safety
 `r` must be a live handle and `out` writable.
 */
enum CbStatus cb_bound_report_smbd(const struct CbBoundReport *r, char **out);

/*
 The larger of the two.

 # Safety
 `r` must be a live handle and `out` writable.
 */
enum CbStatus cb_bound_report_main(const struct CbBoundReport *r, char **out);

/*
 # Safety
 `r` must be a live handle and `out` writable.
 */
enum CbStatus cb_bound_report_winner(const struct CbBoundReport *r, enum CbWinner *out);

/*
 The whole report as JSON, integers as strings.

 # Safety
 `r` must be a live handle and `out` writable.
 */
enum CbStatus cb_bound_report_json(const struct CbBoundReport *r, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CLIQUE_BOUNDS_H */
