#ifndef RESYN_H
#define RESYN_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ResynStatus {
  RESYN_STATUS_OK = 0,
  RESYN_STATUS_NULL_POINTER = 1,
  RESYN_STATUS_INVALID_UTF8 = 2,
  RESYN_STATUS_PARSE_ERROR = 3,
  RESYN_STATUS_REJECTED = 4,
  RESYN_STATUS_SYNTHESIS_FAILED = 5,
  RESYN_STATUS_BUDGET_EXCEEDED = 6,
  RESYN_STATUS_INTERNAL = 7,
} ResynStatus;

typedef enum ResynMode {
  RESYN_MODE_PRESERVING = 0,
  RESYN_MODE_FULL = 1,
} ResynMode;

/**
 * Outcome of the acceptance filters.
 */
typedef enum ResynReason {
  RESYN_REASON_ACCEPTED = 0,
  RESYN_REASON_UNPARSABLE = 1,
  RESYN_REASON_LOOKAROUND = 2,
  RESYN_REASON_BACKREFERENCE = 3,
  RESYN_REASON_NON_PRINTABLE = 4,
  RESYN_REASON_TOO_LONG = 5,
  RESYN_REASON_UNION_TOO_WIDE = 6,
  RESYN_REASON_EMPTY_AFTER_OPTIMIZE = 7,
} ResynReason;

/**
 * Opaque regex handle.
 */
typedef struct ResynRegex ResynRegex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `pattern` without canonicalizing it.
 *
 * # Safety
 * `pattern` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ResynStatus resyn_regex_parse(const char *pattern, struct ResynRegex **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `regex` must come from this library and not have been freed.
 */
void resyn_regex_free(struct ResynRegex *regex);

/**
 * The pattern string of a handle, or null if `regex` is null. Release with
 * [`resyn_string_free`].
 *
 * # Safety
 * `regex` must be null or a live handle.
 */
char *resyn_regex_to_string(const struct ResynRegex *regex);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void resyn_string_free(char *s);

/**
 * Writes a new canonicalized handle to `out`.
 *
 * # Safety
 * `regex` must be a live handle and `out` a valid pointer.
 */
enum ResynStatus resyn_regex_canonicalize(const struct ResynRegex *regex,
                                          enum ResynMode mode,
                                          struct ResynRegex **out);

/**
 * Full-string match of `input`.
 *
 * # Safety
 * `regex` must be a live handle, `input` NUL-terminated, `out` valid.
 */
enum ResynStatus resyn_regex_matches(const struct ResynRegex *regex, const char *input, bool *out);

/**
 * Runs the acceptance filters on `pattern`.
 *
 * # Safety
 * `pattern` must be NUL-terminated and `out` valid.
 */
enum ResynStatus resyn_validate(const char *pattern, enum ResynReason *out);

/**
 * Synthesizes a regex consistent with the examples. With a null
 * `ground_truth` the heuristic strategies are used; otherwise routing and
 * decomposition follow the given regex, which must pass the acceptance
 * filters.
 *
 * # Safety
 * The arrays must hold `n_pos`/`n_neg` NUL-terminated strings,
 * `ground_truth` must be null or a live handle and `out` valid.
 */
enum ResynStatus resyn_synthesize(const char *const *positives,
                                  size_t n_pos,
                                  const char *const *negatives,
                                  size_t n_neg,
                                  const struct ResynRegex *ground_truth,
                                  struct ResynRegex **out);

/**
 * Shortest common supersequence length of two strings.
 *
 * # Safety
 * `a` and `b` must be NUL-terminated and `out` valid.
 */
enum ResynStatus resyn_scs_length(const char *a, const char *b, size_t *out);

/**
 * Optimal alignment cost of a string set.
 *
 * # Safety
 * `strings` must hold `n` NUL-terminated strings and `out` be valid.
 */
enum ResynStatus resyn_alignment_cost(const char *const *strings, size_t n, size_t *out);

/**
 * Matthews correlation coefficient; 0 when a marginal is zero.
 */
double resyn_mcc(uint64_t tp, uint64_t tn, uint64_t fp, uint64_t fn_);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *resyn_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RESYN_H */
