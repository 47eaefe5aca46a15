#ifndef ICHOM_H
#define ICHOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IchomStatus {
  ICHOM_STATUS_OK = 0,
  ICHOM_STATUS_NULL_POINTER = 1,
  ICHOM_STATUS_INVALID_UTF8 = 2,
  ICHOM_STATUS_PARSE = 3,
  ICHOM_STATUS_VALIDATION = 4,
  ICHOM_STATUS_BUFFER_TOO_SMALL = 5,
  ICHOM_STATUS_INTERNAL = 6,
  ICHOM_STATUS_PANIC = 7,
} IchomStatus;

/**
 * Opaque finite-dimensional algebra.
 */
typedef struct IchomAlgebra IchomAlgebra;

/**
 * Opaque simplicial complex, with its filtration when the input had one.
 */
typedef struct IchomComplex IchomComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ichom_version(void);

/**
 * Message for the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next `ichom_*` call on the same thread.
 */
const char *ichom_last_error(void);

/**
 * Parses a complex file. On success `*out` owns a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum IchomStatus ichom_complex_parse(const char *text, struct IchomComplex **out);

/**
 * Releases a complex handle. Null is ignored.
 *
 * # Safety
 * `complex` must come from [`ichom_complex_parse`] and not be freed twice.
 */
void ichom_complex_free(struct IchomComplex *complex);

/**
 * Dimension of the complex.
 *
 * # Safety
 * `complex` must be a live handle and `out` writable.
 */
enum IchomStatus ichom_complex_dimension(const struct IchomComplex *complex, size_t *out);

/**
 * Simplicial betti numbers in degrees `0..=dim`.
 *
 * # Safety
 * `complex` must be a live handle; `out` must hold `cap` entries; `len` writable.
 */
enum IchomStatus ichom_complex_betti(const struct IchomComplex *complex,
                                     size_t *out,
                                     size_t cap,
                                     size_t *len);

/**
 * Intersection betti numbers in degrees `0..=n`. `perversity` holds
 * `p_0..p_n` (`perversity_len = n + 1`); null selects the zero perversity.
 *
 * # Safety
 * `complex` must be a live handle; `perversity` must hold `perversity_len`
 * values when non-null; `out` must hold `cap` entries; `len` writable.
 */
enum IchomStatus ichom_complex_intersection_betti(const struct IchomComplex *complex,
                                                  const int64_t *perversity,
                                                  size_t perversity_len,
                                                  size_t *out,
                                                  size_t cap,
                                                  size_t *len);

/**
 * Parses an algebra file. On success `*out` owns a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum IchomStatus ichom_algebra_parse(const char *text, struct IchomAlgebra **out);

/**
 * Releases an algebra handle. Null is ignored.
 *
 * # Safety
 * `algebra` must come from [`ichom_algebra_parse`] and not be freed twice.
 */
void ichom_algebra_free(struct IchomAlgebra *algebra);

/**
 * Hochschild betti numbers in degrees `0..max_degree`, all exact.
 *
 * # Safety
 * `algebra` must be a live handle; `out` must hold `cap` entries; `len` writable.
 */
enum IchomStatus ichom_algebra_hh(const struct IchomAlgebra *algebra,
                                  size_t max_degree,
                                  size_t *out,
                                  size_t cap,
                                  size_t *len);

/**
 * Cyclic betti numbers in degrees `0..max_degree`.
 *
 * # Safety
 * `algebra` must be a live handle; `out` must hold `cap` entries; `len` writable.
 */
enum IchomStatus ichom_algebra_hc(const struct IchomAlgebra *algebra,
                                  size_t max_degree,
                                  size_t *out,
                                  size_t cap,
                                  size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ICHOM_H */
