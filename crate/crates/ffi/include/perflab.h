#ifndef PERFLAB_H
#define PERFLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PlStatus {
  PL_STATUS_OK = 0,
  PL_STATUS_PARSE_ERROR = 2,
  PL_STATUS_SIZE_LIMIT = 3,
  PL_STATUS_INVALID_ARGUMENT = 4,
  PL_STATUS_INTERNAL = 5,
  PL_STATUS_NULL_POINTER = 6,
  PL_STATUS_INVALID_UTF8 = 7,
  PL_STATUS_PANIC = 8,
} PlStatus;

typedef enum PlClass {
  PL_CLASS_PERFECT = 0,
  PL_CLASS_TWO_PERFECT = 1,
  PL_CLASS_PERFECTLY_DIVISIBLE = 2,
  PL_CLASS_NICE = 3,
  PL_CLASS_STABLE_PERFECT = 4,
  PL_CLASS_TWO_DIVISIBLE = 5,
} PlClass;

/**
 * Opaque graph handle.
 */
typedef struct PlGraph PlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *pl_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pl_version(void);

/**
 * Parses a graph6 string into a new handle.
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be writable.
 */
enum PlStatus pl_graph_from_graph6(const char *text, struct PlGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (u0, v0, u1, v1, ...). `edges` may be NULL when `edge_count` is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values.
 */
enum PlStatus pl_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct PlGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void pl_graph_free(struct PlGraph *g);

/**
 * Releases a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void pl_string_free(char *s);

/**
 * Number of vertices; 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t pl_graph_order(const struct PlGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlStatus pl_graph_has_edge(const struct PlGraph *g, size_t u, size_t v, bool *out);

/**
 * graph6 encoding of `g`, freed with `pl_string_free`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlStatus pl_graph_to_graph6(const struct PlGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlStatus pl_clique_number(const struct PlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlStatus pl_chromatic_number(const struct PlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlStatus pl_is_perfect(const struct PlGraph *g, bool *out);

/**
 * Membership of `g` in `class`. `certificate_json` may be NULL; otherwise it
 * receives the full verdict as JSON, freed with `pl_string_free`.
 *
 * # Safety
 * `g` must be a live handle; `holds` must be writable.
 */
enum PlStatus pl_check_class(const struct PlGraph *g,
                             enum PlClass class_,
                             bool *holds,
                             char **certificate_json);

/**
 * Verdicts for all six classes as one JSON object.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlStatus pl_classify_json(const struct PlGraph *g, char **out);

/**
 * Runs a verification suite (named as on the command line, e.g. "lemma6")
 * over the built-in enumeration. `n_max` 0 selects the suite default and
 * `threads` 0 uses every core. `passed` follows the suite's pass rule.
 *
 * # Safety
 * `suite` must be NUL-terminated; out-pointers must be writable.
 */
enum PlStatus pl_run_suite_json(const char *suite,
                                size_t n_max,
                                size_t threads,
                                char **report_json,
                                bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERFLAB_H */
