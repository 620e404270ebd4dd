#ifndef Z4PERFECT_H
#define Z4PERFECT_H

/* Generated from the z4perfect-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * How perfectness is checked.
 */
typedef enum Z4pPolicy {
  /**
   * Enumerate when the code fits under the cap, otherwise fall back
   * to the structural test.
   */
  Z4P_POLICY_AUTO = 0,
  /**
   * Always enumerate; fails with a resource status above the cap.
   */
  Z4P_POLICY_EXHAUSTIVE = 1,
  /**
   * Structural test only.
   */
  Z4P_POLICY_STRUCTURAL = 2,
} Z4pPolicy;

/**
 * How the binary rank is computed.
 */
typedef enum Z4pRankMethod {
  /**
   * Pick by code size.
   */
  Z4P_RANK_METHOD_AUTO = 0,
  /**
   * Enumerate the code and accumulate a basis of its binary image.
   */
  Z4P_RANK_METHOD_STREAM = 1,
  /**
   * Span the image from generator words and pairwise corrections.
   */
  Z4P_RANK_METHOD_SHORTCUT = 2,
} Z4pRankMethod;

/**
 * Result of a library call.
 */
typedef enum Z4pStatus {
  /**
   * The call succeeded.
   */
  Z4P_STATUS_OK = 0,
  /**
   * A pointer was null, a parameter was out of range, or an input
   * could not be parsed.
   */
  Z4P_STATUS_INVALID_ARGUMENT = 1,
  /**
   * The input failed a perfectness requirement.
   */
  Z4P_STATUS_VERIFICATION_FAILED = 2,
  /**
   * The computation would exceed the enumeration or column cap.
   */
  Z4P_STATUS_RESOURCE_LIMIT = 3,
} Z4pStatus;

/**
 * An opaque check matrix handle; the kernel of the matrix is the code
 * all other calls operate on.
 */
typedef struct Z4pMatrix Z4pMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the family check matrix with parameters `r1`, `r2` and stores
 * a handle in `out`.
 *
 * # Safety
 * `out` must be a valid pointer; the handle it receives must be
 * released with `z4p_matrix_free`.
 */
enum Z4pStatus z4p_matrix_family(uint32_t r1, uint32_t r2, struct Z4pMatrix **out);

/**
 * Parses a check matrix from text, one row of digits `0123` per line;
 * `#` starts a comment and blank lines are skipped.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid
 * pointer; the handle must be released with `z4p_matrix_free`.
 */
enum Z4pStatus z4p_matrix_parse(const char *text, struct Z4pMatrix **out);

/**
 * Renders the matrix in the same text format `z4p_matrix_parse` reads.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer; the string
 * must be released with `z4p_string_free`.
 */
enum Z4pStatus z4p_matrix_to_text(const struct Z4pMatrix *matrix, char **out);

/**
 * Number of rows; 0 when `matrix` is null.
 *
 * # Safety
 * `matrix` must be null or a live handle.
 */
size_t z4p_matrix_rows(const struct Z4pMatrix *matrix);

/**
 * Number of columns; 0 when `matrix` is null.
 *
 * # Safety
 * `matrix` must be null or a live handle.
 */
size_t z4p_matrix_cols(const struct Z4pMatrix *matrix);

/**
 * Releases a handle returned by this library; null is ignored.
 *
 * # Safety
 * `matrix` must be null or a handle not yet freed.
 */
void z4p_matrix_free(struct Z4pMatrix *matrix);

/**
 * Checks whether the kernel of `matrix` is a perfect code and writes
 * the verdict to `out_perfect`.
 *
 * # Safety
 * `matrix` must be a live handle and `out_perfect` a valid pointer.
 */
enum Z4pStatus z4p_is_perfect(const struct Z4pMatrix *matrix,
                              enum Z4pPolicy policy,
                              bool *out_perfect);

/**
 * Computes the GF(2) rank of the kernel's binary image and the
 * dimension of the dual's repetitive subspace.
 *
 * # Safety
 * `matrix` must be a live handle; `out_rank` and `out_rep_dual_dim`
 * must be valid pointers.
 */
enum Z4pStatus z4p_rank(const struct Z4pMatrix *matrix,
                        enum Z4pRankMethod method,
                        size_t *out_rank,
                        size_t *out_rep_dual_dim);

/**
 * Writes the classification table for binary length `2^k` as a JSON
 * object with fields `k`, `count`, `entries`, and `method`.
 *
 * # Safety
 * `out` must be a valid pointer; the string must be released with
 * `z4p_string_free`.
 */
enum Z4pStatus z4p_classify_json(uint32_t k, char **out);

/**
 * Canonicalizes a perfect check matrix onto the family and writes the
 * transcript as JSON: `{"r1": …, "r2": …, "signs": "+-…",
 * "permutation": […]}`.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer; the string
 * must be released with `z4p_string_free`.
 */
enum Z4pStatus z4p_canonicalize_json(const struct Z4pMatrix *matrix, char **out);

/**
 * Builds the product of the kernels of `left` and `right` and stores a
 * handle to its check matrix in `out`.
 *
 * # Safety
 * `left` and `right` must be live handles and `out` a valid pointer;
 * the handle must be released with `z4p_matrix_free`.
 */
enum Z4pStatus z4p_product(const struct Z4pMatrix *left,
                           const struct Z4pMatrix *right,
                           struct Z4pMatrix **out);

/**
 * Writes the generator matrix of the dual code as text, one row per
 * line.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer; the string
 * must be released with `z4p_string_free`.
 */
enum Z4pStatus z4p_dual_generators_text(const struct Z4pMatrix *matrix, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `text` must be null or a string not yet freed.
 */
void z4p_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* Z4PERFECT_H */
