#ifndef HYPERIND_H
#define HYPERIND_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HiStatus {
  HI_STATUS_OK = 0,
  HI_STATUS_NULL_POINTER = 1,
  HI_STATUS_INVALID_ARGUMENT = 2,
  HI_STATUS_INVALID_VERTEX = 3,
  HI_STATUS_PARSE = 4,
  HI_STATUS_HYPOTHESIS_VIOLATED = 5,
  HI_STATUS_NON_CONVERGENT = 6,
  HI_STATUS_INTERIOR_POLE = 7,
  HI_STATUS_IO = 8,
  HI_STATUS_PANIC = 99,
} HiStatus;

/**
 * Opaque greedy-extraction certificate.
 */
typedef struct HiCertificate HiCertificate;

/**
 * Opaque hypergraph handle.
 */
typedef struct HiHypergraph HiHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *hi_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hi_string_free(char *s);

/**
 * Builds a hypergraph on `n` vertices from `m` edges in compressed form:
 * edge `i` is `vertices[offsets[i] .. offsets[i + 1]]`.
 *
 * # Safety
 * `offsets` must hold `m + 1` entries and `vertices` at least `offsets[m]`
 * (either may be null when `m == 0`); `out` must be writable.
 */
enum HiStatus hi_hypergraph_new(size_t n,
                                const size_t *offsets,
                                const size_t *vertices,
                                size_t m,
                                struct HiHypergraph **out);

/**
 * Parses `.hg` text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum HiStatus hi_hypergraph_parse(const char *text, struct HiHypergraph **out);

/**
 * # Safety
 * `h` must be null or a handle from this library, not yet freed.
 */
void hi_hypergraph_free(struct HiHypergraph *h);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hi_hypergraph_order(const struct HiHypergraph *h);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hi_hypergraph_size(const struct HiHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HiStatus hi_hypergraph_degree(const struct HiHypergraph *h, size_t v, size_t *out);

/**
 * `.hg` text of `h`, to be released with [`hi_string_free`].
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HiStatus hi_hypergraph_write(const struct HiHypergraph *h, char **out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HiStatus hi_is_linear(const struct HiHypergraph *h, bool *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HiStatus hi_is_triangle_free(const struct HiHypergraph *h, bool *out);

/**
 * [`HiStatus::HypothesisViolated`] when `h` is not r-uniform, linear and
 * triangle-free; the error message names the first failed predicate.
 *
 * # Safety
 * `h` must be a live handle.
 */
enum HiStatus hi_check_hypotheses(const struct HiHypergraph *h, size_t r);

/**
 * `f_r(d)` as a double; `text` (nullable) receives the exact value as `p/q`.
 *
 * # Safety
 * `out` must be writable; `text` must be null or writable.
 */
enum HiStatus hi_fr(size_t r, size_t d, double *out, char **text);

/**
 * # Safety
 * `value` must be writable; `error` must be null or writable.
 */
enum HiStatus hi_li_zang(size_t r, uint32_t m, double x, double tol, double *value, double *error);

/**
 * # Safety
 * `value` must be writable; `error` must be null or writable.
 */
enum HiStatus hi_chishti(size_t r, double x, double tol, double *value, double *error);

/**
 * `Σ_u f_r(d(u))`; `text` (nullable) receives the exact value as `p/q`.
 *
 * # Safety
 * `h` must be a live handle, `out` writable, `text` null or writable.
 */
enum HiStatus hi_theorem1_rhs(const struct HiHypergraph *h, size_t r, double *out, char **text);

/**
 * Greedy extraction. Without `allow_violations`, inputs failing the
 * hypotheses are refused with [`HiStatus::HypothesisViolated`].
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HiStatus hi_greedy_extract(const struct HiHypergraph *h,
                                size_t r,
                                bool allow_violations,
                                struct HiCertificate **out);

/**
 * # Safety
 * `c` must be null or a certificate from this library, not yet freed.
 */
void hi_certificate_free(struct HiCertificate *c);

/**
 * Size of the independent set, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live certificate.
 */
size_t hi_certificate_size(const struct HiCertificate *c);

/**
 * # Safety
 * `c` must be null or a live certificate.
 */
bool hi_certificate_guaranteed(const struct HiCertificate *c);

/**
 * Copies up to `cap` vertices of the set into `buf` and returns the full size.
 *
 * # Safety
 * `c` must be null or a live certificate; `buf` must hold `cap` entries
 * (or be null when `cap == 0`).
 */
size_t hi_certificate_vertices(const struct HiCertificate *c, size_t *buf, size_t cap);

/**
 * Certificate as JSON, to be released with [`hi_string_free`].
 *
 * # Safety
 * `c` must be a live certificate and `out` writable.
 */
enum HiStatus hi_certificate_json(const struct HiCertificate *c, char **out);

/**
 * Independence number by branch and bound within `budget` nodes; `exact`
 * is false when the budget ran out and `alpha` is only a lower bound.
 *
 * # Safety
 * `h` must be a live handle; `alpha` and `exact` writable.
 */
enum HiStatus hi_exact_alpha(const struct HiHypergraph *h,
                             uint64_t budget,
                             size_t *alpha,
                             bool *exact);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERIND_H */
