#ifndef HBCELLS_H
#define HBCELLS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum HbStatus {
  HB_STATUS_OK = 0,
  HB_STATUS_NULL_POINTER = 1,
  HB_STATUS_INVALID_UTF8 = 2,
  HB_STATUS_INVALID_PARTITION = 3,
  HB_STATUS_INVALID_ARGUMENT = 4,
  HB_STATUS_NOT_PRIME = 5,
  HB_STATUS_INDEX_OUT_OF_RANGE = 6,
  HB_STATUS_COMPUTATION_FAILED = 7,
  HB_STATUS_PANIC = 8,
} HbStatus;

// One cell with its Hilbert-Burch data.
typedef struct HbCell HbCell;

// All cells for one `n`.
typedef struct HbDecomposition HbDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *hb_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *hb_version(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void hb_string_free(char *s);

// Builds the cell of a partition written like `"1,5,8,10"` or `"[2,4]"`.
//
// # Safety
// `m` must be a NUL-terminated string; `out` must be writable.
enum HbStatus hb_cell_new(const char *m, struct HbCell **out);

// # Safety
// `c` must come from [`hb_cell_new`] and not have been freed. NULL is ignored.
void hb_cell_free(struct HbCell *c);

// # Safety
// `c` must be a live cell handle; `out` must be writable.
enum HbStatus hb_cell_dim(const struct HbCell *c, size_t *out);

// # Safety
// `c` must be a live cell handle; `out` must be writable.
enum HbStatus hb_cell_dim_hom(const struct HbCell *c, size_t *out);

// Number of columns `t` of the Hilbert-Burch matrix.
//
// # Safety
// `c` must be a live cell handle; `out` must be writable.
enum HbStatus hb_cell_t(const struct HbCell *c, size_t *out);

// Whether the cell is covered by the proven case.
//
// # Safety
// `c` must be a live cell handle; `out` must be writable.
enum HbStatus hb_cell_proven(const struct HbCell *c, bool *out);

// Range of minimal numbers of generators over the cell.
//
// # Safety
// `c` must be a live cell handle; `lo` and `hi` must be writable.
enum HbStatus hb_cell_mu_range(const struct HbCell *c, size_t *lo, size_t *hi);

// # Safety
// `c` must be a live cell handle; `out` must be writable. Free the result
// with [`hb_string_free`].
enum HbStatus hb_cell_to_json(const struct HbCell *c, char **out);

// Strata of the cell of `m` by number of generators, as JSON.
//
// # Safety
// `m` must be a NUL-terminated string; `out` must be writable.
enum HbStatus hb_strata_to_json(const char *m, char **out);

// All cells for colength `n >= 1`, sorted by `(dim, m)`.
//
// # Safety
// `out` must be writable.
enum HbStatus hb_decomposition_new(uint32_t n, struct HbDecomposition **out);

// # Safety
// `d` must come from [`hb_decomposition_new`] and not have been freed. NULL is ignored.
void hb_decomposition_free(struct HbDecomposition *d);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum HbStatus hb_decomposition_cell_count(const struct HbDecomposition *d, size_t *out);

// A copy of cell `index`; free it with [`hb_cell_free`].
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum HbStatus hb_decomposition_cell(const struct HbDecomposition *d,
                                    size_t index,
                                    struct HbCell **out);

// Copies up to `len` Betti numbers `b_0, b_2, ...` into `buf` and stores the
// total count in `needed`. `buf` may be NULL when `len` is 0.
//
// # Safety
// `d` must be a live handle; `buf` must have room for `len` values.
enum HbStatus hb_decomposition_betti_numbers(const struct HbDecomposition *d,
                                             uint64_t *buf,
                                             size_t len,
                                             size_t *needed);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum HbStatus hb_decomposition_to_json(const struct HbDecomposition *d, char **out);

// Counting checks for colength `n`, plus randomized verification when
// `trials > 0`. Stores the verdict in `passed`; if `json` is not NULL the
// full report is written there.
//
// # Safety
// `passed` must be writable; `json` must be NULL or writable.
enum HbStatus hb_check(uint32_t n,
                       size_t trials,
                       uint64_t prime,
                       uint64_t seed,
                       bool *passed,
                       char **json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HBCELLS_H */
