#ifndef NAKAYAMA_H
#define NAKAYAMA_H

/* Generated by cbindgen from the nakayama-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes mirroring the CLI exit-code classes, with two extra codes
// for ABI misuse that has no CLI counterpart.
typedef enum NkStatus {
  NK_STATUS_OK = 0,
  NK_STATUS_PARSE_ERROR = 1,
  NK_STATUS_PRECONDITION_ERROR = 2,
  NK_STATUS_CAPACITY_ERROR = 3,
  NK_STATUS_INTERNAL_ERROR = 4,
  NK_STATUS_NULL_ARGUMENT = 5,
  NK_STATUS_INVALID_UTF8 = 6,
} NkStatus;

// Parsed algebra file. Opaque to C; create with `nk_algebra_parse`.
typedef struct NkAlgebra NkAlgebra;

// Options for `nk_run`. Zero-initialize for defaults: nonpositive
// `max_degree`, `slack`, and `gldim` mean "unset"; `dim` is 2, 3, -1 for
// the general pipeline, or 0 to infer from the presentation shape.
typedef struct NkOptions {
  int32_t max_degree;
  int32_t slack;
  int32_t dim;
  int32_t gldim;
} NkOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error message raised on this thread, or null if none was raised.
// The pointer stays valid until the next failing call on the same thread.
const char *nk_last_error(void);

// Parse an algebra file from JSON into a handle. On success writes the
// handle to `out` and returns `Ok`.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid pointer.
enum NkStatus nk_algebra_parse(const char *json, struct NkAlgebra **out);

// Release a handle created by `nk_algebra_parse`. Null is ignored.
//
// # Safety
// `a` must be null or a pointer previously returned by `nk_algebra_parse`
// that has not been freed yet.
void nk_algebra_free(struct NkAlgebra *a);

// Number of generators of a parsed algebra, or -1 on a null handle.
//
// # Safety
// `a` must be null or a live handle.
int32_t nk_generator_count(const struct NkAlgebra *a);

// Run a command ("dual", "pbw", "nakayama", "cy", "potential",
// "frobenius") against a parsed algebra. On success writes a heap-owned
// JSON report to `report_out`; release it with `nk_string_free`.
//
// # Safety
// `a` must be a live handle, `command` a valid NUL-terminated string,
// `opts` null or a valid options struct, `report_out` a valid pointer.
enum NkStatus nk_run(const struct NkAlgebra *a,
                     const char *command,
                     const struct NkOptions *opts,
                     char **report_out);

// One-shot convenience: parse and run in a single call.
//
// # Safety
// Same contracts as `nk_algebra_parse` and `nk_run`.
enum NkStatus nk_run_json(const char *json,
                          const char *command,
                          const struct NkOptions *opts,
                          char **report_out);

// Release a string returned through a `report_out` parameter. Null is
// ignored.
//
// # Safety
// `s` must be null or a string previously written by this library that
// has not been freed yet.
void nk_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NAKAYAMA_H */
