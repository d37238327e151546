#ifndef LINK_HOMOLOGY_H
#define LINK_HOMOLOGY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status codes. The first five agree with the `linkhom` exit codes.
 */
typedef enum LhStatus {
  LH_STATUS_OK = 0,
  LH_STATUS_INVALID_INPUT = 1,
  LH_STATUS_NOT_FOUND = 2,
  LH_STATUS_CONVENTION_VIOLATION = 3,
  LH_STATUS_MISMATCH = 4,
  LH_STATUS_NULL_POINTER = 5,
  /**
   * A value does not fit the output type or buffer.
   */
  LH_STATUS_OVERFLOW = 6,
  LH_STATUS_PANIC = 7,
} LhStatus;

/**
 * Betti number and torsion of a link.
 */
typedef struct LhHomology LhHomology;

/**
 * A validated weight vector with its degree.
 */
typedef struct LhLink LhLink;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a link from `len` weights and a degree.
 *
 * # Safety
 * `weights` must point to `len` readable values and `out` must be writable.
 */
enum LhStatus lh_link_new(const int64_t *weights, size_t len, uint64_t degree, struct LhLink **out);

/**
 * Builds a link with the Fano degree `Σ w_i − 1`.
 *
 * # Safety
 * Same as [`lh_link_new`].
 */
enum LhStatus lh_link_new_fano(const int64_t *weights, size_t len, struct LhLink **out);

/**
 * # Safety
 * `link` must come from `lh_link_new*` and not be freed twice. Null is ignored.
 */
void lh_link_free(struct LhLink *link);

/**
 * # Safety
 * `link` must be a live handle.
 */
uint64_t lh_link_degree(const struct LhLink *link);

/**
 * Computes the full homology summary.
 *
 * # Safety
 * `link` must be a live handle and `out` writable.
 */
enum LhStatus lh_link_homology(const struct LhLink *link, struct LhHomology **out);

/**
 * Betti number as a `u64`; `LH_STATUS_OVERFLOW` when it does not fit.
 *
 * # Safety
 * `link` must be a live handle and `out` writable.
 */
enum LhStatus lh_link_betti(const struct LhLink *link, uint64_t *out);

/**
 * Brieskorn-Pham exponents `d/w_i`. `LH_STATUS_NOT_FOUND` when the weights
 * do not admit that form.
 *
 * # Safety
 * `out` must have room for `cap` values; `out_len` must be writable.
 */
enum LhStatus lh_link_bp_exponents(const struct LhLink *link,
                                   uint64_t *out,
                                   size_t cap,
                                   size_t *out_len);

/**
 * Number of distinct chain orderings of the weights.
 *
 * # Safety
 * `link` must be a live handle and `out` writable.
 */
enum LhStatus lh_link_chain_count(const struct LhLink *link, size_t *out);

/**
 * Chain ordering number `index`: original variable indices in `order` and
 * matching exponents in `exponents`, both `cap` long.
 *
 * # Safety
 * Buffers must hold `cap` values; `out_len` must be writable.
 */
enum LhStatus lh_link_chain_form(const struct LhLink *link,
                                 size_t index,
                                 size_t *order,
                                 uint64_t *exponents,
                                 size_t cap,
                                 size_t *out_len);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum LhStatus lh_homology_betti(const struct LhHomology *h, uint64_t *out);

/**
 * Number of torsion factors. Null handles give 0.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t lh_homology_torsion_len(const struct LhHomology *h);

/**
 * Torsion factor `index`, largest first.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum LhStatus lh_homology_torsion_at(const struct LhHomology *h, size_t index, uint64_t *out);

/**
 * Group label such as `Z^10 ⊕ Z/55 ⊕ (Z/5)^4`, UTF-8. Free with
 * [`lh_string_free`]. Null on a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
char *lh_homology_label(const struct LhHomology *h);

/**
 * # Safety
 * `h` must come from [`lh_link_homology`] and not be freed twice.
 */
void lh_homology_free(struct LhHomology *h);

/**
 * Compares the matrix oracle with the subset algorithm for the
 * Brieskorn-Pham exponents `a`. `LH_STATUS_MISMATCH` on disagreement.
 *
 * # Safety
 * `a` must point to `len` values.
 */
enum LhStatus lh_oracle_check(const uint64_t *a, size_t len, uint64_t cap);

/**
 * Scans catalog CSV text and renders the report as `table`, `json` or
 * `csv`. The returned string is freed with [`lh_string_free`].
 *
 * # Safety
 * `text` and `format` must be NUL-terminated; `out` must be writable.
 */
enum LhStatus lh_scan_csv(const char *text, const char *format, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. Null is ignored.
 */
void lh_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *lh_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LINK_HOMOLOGY_H */
