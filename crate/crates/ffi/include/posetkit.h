#ifndef POSETKIT_H
#define POSETKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest `n` accepted by [`posetkit_led_boolean`].
 */
#define POSETKIT_MAX_BOOLEAN_N 10000

/**
 * Result codes. The first four match the exit codes of the command-line tool.
 */
typedef enum PosetkitStatus {
  POSETKIT_STATUS_OK = 0,
  /**
   * Malformed input text or relation list, including cycles.
   */
  POSETKIT_STATUS_PARSE = 1,
  POSETKIT_STATUS_NOT_TWO_DIMENSIONAL = 2,
  POSETKIT_STATUS_CAP_EXCEEDED = 3,
  /**
   * A null pointer or out-of-range argument.
   */
  POSETKIT_STATUS_INVALID_ARGUMENT = 4,
  POSETKIT_STATUS_INTERNAL = 5,
} PosetkitStatus;

/**
 * Opaque poset handle.
 */
typedef struct PosetkitPoset PosetkitPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the line-based text format into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for one
 * pointer write.
 */
enum PosetkitStatus posetkit_poset_parse(const char *text, struct PosetkitPoset **out);

/**
 * Builds a poset on `n` elements from `count` pairs `pairs[2k] < pairs[2k+1]`
 * (1-based), closing transitively.
 *
 * # Safety
 * `pairs` must point to `2 * count` readable values (may be null when
 * `count` is 0); `out` must be valid for one pointer write.
 */
enum PosetkitStatus posetkit_poset_from_relations(size_t n,
                                                  const size_t *pairs,
                                                  size_t count,
                                                  struct PosetkitPoset **out);

/**
 * # Safety
 * `p` must be null or a handle from this library not yet freed.
 */
void posetkit_poset_free(struct PosetkitPoset *p);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t posetkit_poset_len(const struct PosetkitPoset *p);

/**
 * `led(B_n)` as a decimal string, for `n <= POSETKIT_MAX_BOOLEAN_N`.
 *
 * # Safety
 * `out` must be valid for one pointer write.
 */
enum PosetkitStatus posetkit_led_boolean(uint32_t n, char **out);

/**
 * `led(D_P)` for a 2-dimensional poset.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one pointer write.
 */
enum PosetkitStatus posetkit_led_downset(const struct PosetkitPoset *p, char **out);

/**
 * Number of antichains of a 2-dimensional poset, the empty one included.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for one pointer write.
 */
enum PosetkitStatus posetkit_count_antichains(const struct PosetkitPoset *p, char **out);

/**
 * `led` of the downset lattice of disjoint chains of the given lengths.
 *
 * # Safety
 * `lengths` must point to `count` readable values (may be null when
 * `count` is 0); `out` must be valid for one pointer write.
 */
enum PosetkitStatus posetkit_led_chain_union(const size_t *lengths, size_t count, char **out);

/**
 * Writes the two members of the realizer of a 2-dimensional poset as
 * 1-based element numbers.
 *
 * # Safety
 * `p` must be a live handle; `sigma` and `sigma_bar` must each be valid for
 * `posetkit_poset_len(p)` writes.
 */
enum PosetkitStatus posetkit_realizer(const struct PosetkitPoset *p,
                                      size_t *sigma,
                                      size_t *sigma_bar);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void posetkit_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *posetkit_last_error(void);

/**
 * Library version, a static NUL-terminated string.
 */
const char *posetkit_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSETKIT_H */
