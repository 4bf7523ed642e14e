#ifndef SPRINGER_FFI_H
#define SPRINGER_FFI_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpringerStatus {
  SPRINGER_STATUS_OK = 0,
  SPRINGER_STATUS_NULL_POINTER = 1,
  SPRINGER_STATUS_INVALID_UTF8 = 2,
  /**
   * Text that does not parse, or an object violating its defining conditions.
   */
  SPRINGER_STATUS_INVALID_INPUT = 3,
  /**
   * Well-formed input outside the image of the correspondence.
   */
  SPRINGER_STATUS_NOT_IN_IMAGE = 4,
  SPRINGER_STATUS_OUT_OF_RANGE = 5,
  SPRINGER_STATUS_INTERNAL = 6,
} SpringerStatus;

/**
 * A built correspondence table for one case.
 */
typedef struct SpringerTableHandle SpringerTableHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread. The pointer stays valid
 * until the next call into this library from the same thread.
 */
const char *springer_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or a string produced by this library and not yet freed.
 */
void springer_string_free(char *s);

/**
 * Builds the correspondence for `case_name` (`sp`, `o-outer`, `a-odd`,
 * `a-even`) at size `n`.
 *
 * # Safety
 * `case_name` is a NUL-terminated string; `out` is writable.
 */
enum SpringerStatus springer_table_new(const char *case_name,
                                       uint32_t n,
                                       struct SpringerTableHandle **out);

/**
 * # Safety
 * `handle` is null or came from [`springer_table_new`] and was not freed.
 */
void springer_table_free(struct SpringerTableHandle *handle);

/**
 * Number of pairs in the table, 0 for a null handle.
 *
 * # Safety
 * `handle` is null or a live table.
 */
uintptr_t springer_table_len(const struct SpringerTableHandle *handle);

/**
 * JSON record of row `index`.
 *
 * # Safety
 * `handle` is a live table; `out` is writable.
 */
enum SpringerStatus springer_table_record_json(const struct SpringerTableHandle *handle,
                                               uintptr_t index,
                                               char **out);

/**
 * Image of a pair given as class text such as `(11)(2)(44)` and a
 * character bit string.
 *
 * # Safety
 * `handle` is a live table; `class` and `chi` are NUL-terminated strings;
 * `out` is writable.
 */
enum SpringerStatus springer_table_map(const struct SpringerTableHandle *handle,
                                       const char *class_,
                                       const char *chi,
                                       char **out);

/**
 * Pair sent to block `defect` and bipartition text such as `1,1|2`.
 *
 * # Safety
 * `handle` is a live table; `bipartition` is a NUL-terminated string;
 * `out` is writable.
 */
enum SpringerStatus springer_table_inverse(const struct SpringerTableHandle *handle,
                                           int64_t defect,
                                           const char *bipartition,
                                           char **out);

/**
 * The Spin correspondence on a partition of `n` given as `1,3`.
 *
 * # Safety
 * `partition` is a NUL-terminated string; `out` is writable.
 */
enum SpringerStatus springer_spin_map(uint64_t n, const char *partition, char **out);

/**
 * Similarity classes of the symbols of rank `n`, as a JSON array.
 * `defects` is `even`, `odd` or `odd-positive`.
 *
 * # Safety
 * `defects` is a NUL-terminated string; `out` is writable.
 */
enum SpringerStatus springer_symbol_classes_json(uint32_t rho,
                                                 uint32_t s,
                                                 int64_t n,
                                                 const char *defects,
                                                 char **out);

/**
 * Class-count reports as a JSON array. `family` is `a`, `d` or `sporadic`;
 * `m` is ignored for `sporadic`.
 *
 * # Safety
 * `family` is a NUL-terminated string; `out` is writable.
 */
enum SpringerStatus springer_count_json(const char *family, uint64_t m, char **out);

/**
 * Version string of this library, statically allocated.
 */
const char *springer_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SPRINGER_FFI_H */
