#ifndef HECKE_TRACE_H
#define HECKE_TRACE_H

/* Generated by cbindgen from hecke-trace-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Where a weight sits relative to the valley-chamber family.
 */
typedef enum HeckeChamberKind {
  /**
   * Strictly decreasing-then-increasing with positive minimum; the
   * chamber index is reported separately.
   */
  HECKE_CHAMBER_KIND_INTERIOR = 0,
  /**
   * On the boundary of at least one chamber.
   */
  HECKE_CHAMBER_KIND_BOUNDARY = 1,
  /**
   * Some coordinate is negative.
   */
  HECKE_CHAMBER_KIND_OUTSIDE_POSITIVE_CONE = 2,
  /**
   * Non-negative but not valley-shaped.
   */
  HECKE_CHAMBER_KIND_INSIDE_CONE_NO_CHAMBER = 3,
} HeckeChamberKind;

/**
 * Result of every FFI call.
 */
typedef enum HeckeStatus {
  /**
   * Success; out-parameters are populated.
   */
  HECKE_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  HECKE_STATUS_NULL_POINTER = 1,
  /**
   * Bad rank, coordinate length, or other malformed input.
   */
  HECKE_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The weight is not interior to a valley chamber (residue/product).
   */
  HECKE_STATUS_NOT_IN_CHAMBER_INTERIOR = 3,
  /**
   * The weight's total degree exceeds the requested truncation cap.
   */
  HECKE_STATUS_OUT_OF_TRUNCATION = 4,
  /**
   * An internal exact division left a remainder; indicates a broken
   * identity upstream, not a caller error.
   */
  HECKE_STATUS_NON_DIVISIBLE = 5,
  /**
   * The engine panicked; the out-parameters are untouched.
   */
  HECKE_STATUS_INTERNAL_ERROR = 6,
} HeckeStatus;

/**
 * Opaque handle to an exact Laurent polynomial in `q`.
 */
typedef struct HeckeLaurent HeckeLaurent;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Trace via the weighted sum over Kostant partitions (the reference
 * pipeline; defined for every weight).
 *
 * # Safety
 * `lambda` must point to `len` readable `int64_t`s; `out` must be a valid
 * writable pointer. On `Ok` the caller owns the handle and must release it
 * with [`hecke_laurent_free`].
 */
enum HeckeStatus hecke_trace_kostant(uint32_t n,
                                     const int64_t *lambda,
                                     size_t len,
                                     struct HeckeLaurent **out);

/**
 * Trace via the permutation-indexed residue sum. Requires a
 * chamber-interior weight.
 *
 * # Safety
 * As for [`hecke_trace_kostant`].
 */
enum HeckeStatus hecke_trace_residue(uint32_t n,
                                     const int64_t *lambda,
                                     size_t len,
                                     struct HeckeLaurent **out);

/**
 * Trace via the closed q-integer product. Requires a chamber-interior
 * weight.
 *
 * # Safety
 * As for [`hecke_trace_kostant`].
 */
enum HeckeStatus hecke_trace_product(uint32_t n,
                                     const int64_t *lambda,
                                     size_t len,
                                     struct HeckeLaurent **out);

/**
 * Trace via truncated expansion of the generating function at the given
 * degree cap. Fails with `OutOfTruncation` when the weight's total degree
 * exceeds `degree`.
 *
 * # Safety
 * As for [`hecke_trace_kostant`].
 */
enum HeckeStatus hecke_trace_series(uint32_t n,
                                    const int64_t *lambda,
                                    size_t len,
                                    uint32_t degree,
                                    struct HeckeLaurent **out);

/**
 * Classifies a weight against the valley-chamber family. On `Ok`,
 * `out_kind` receives the kind and `out_m` the chamber index (for
 * `Interior`; 0 otherwise).
 *
 * # Safety
 * `lambda` must point to `len` readable `int64_t`s; `out_kind` and `out_m`
 * must be valid writable pointers.
 */
enum HeckeStatus hecke_classify_chamber(uint32_t n,
                                        const int64_t *lambda,
                                        size_t len,
                                        enum HeckeChamberKind *out_kind,
                                        uint32_t *out_m);

/**
 * Canonical text rendering (terms by decreasing exponent), newly
 * allocated; free with [`hecke_string_free`]. Null on null input.
 *
 * # Safety
 * `h` must be a live handle from this library or null.
 */
char *hecke_laurent_to_string(const struct HeckeLaurent *h);

/**
 * JSON rendering `{"terms":[{"exp":E,"coeff":"C"},...]}`, newly allocated;
 * free with [`hecke_string_free`]. Null on null input.
 *
 * # Safety
 * `h` must be a live handle from this library or null.
 */
char *hecke_laurent_to_json(const struct HeckeLaurent *h);

/**
 * Exact equality of two handles. Null compares unequal to everything,
 * including null.
 *
 * # Safety
 * Non-null arguments must be live handles from this library.
 */
bool hecke_laurent_eq(const struct HeckeLaurent *a, const struct HeckeLaurent *b);

/**
 * Releases a handle produced by the trace functions. Null is a no-op.
 *
 * # Safety
 * `h` must be a handle from this library, not yet freed.
 */
void hecke_laurent_free(struct HeckeLaurent *h);

/**
 * Releases a string produced by the `_to_string`/`_to_json` functions.
 * Null is a no-op.
 *
 * # Safety
 * `s` must be a string from this library, not yet freed.
 */
void hecke_string_free(char *s);

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *hecke_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HECKE_TRACE_H */
