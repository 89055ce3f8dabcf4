#ifndef INDEL_BOUNDS_H
#define INDEL_BOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which side of `A_q(n,d)` a bound lies on.
typedef enum IbDirection {
  IB_DIRECTION_UPPER = 0,
  IB_DIRECTION_LOWER = 1,
  IB_DIRECTION_EXACT = 2,
} IbDirection;

// Status codes returned by every fallible function.
typedef enum IbStatus {
  IB_STATUS_OK = 0,
  IB_STATUS_NULL_POINTER = 1,
  IB_STATUS_INVALID_PARAMS = 2,
  IB_STATUS_INAPPLICABLE = 3,
  IB_STATUS_PRECONDITION = 4,
  IB_STATUS_DOMAIN = 5,
  IB_STATUS_GUARD_EXCEEDED = 6,
  IB_STATUS_SEARCH_BUDGET = 7,
  IB_STATUS_UNKNOWN_METHOD = 8,
  IB_STATUS_UTF8 = 9,
  IB_STATUS_PANIC = 10,
} IbStatus;

// One evaluated bound.
typedef struct IbBound IbBound;

// Validated code parameters `(q, n, d)`.
typedef struct IbParams IbParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Length in bytes of the last error message on this thread, excluding the
// terminating NUL; 0 if there is none.
size_t ib_last_error_length(void);

// Copies the last error message into `buf` (always NUL-terminated when
// `len > 0`, truncated if needed). Returns the number of bytes written
// excluding the NUL.
//
// # Safety
// `buf` must be NULL or point to at least `len` writable bytes.
size_t ib_last_error_message(char *buf, size_t len);

// Validates `(q, n, d)` and stores a new handle in `*out`.
//
// # Safety
// `out` must be NULL or a valid pointer to writable storage.
enum IbStatus ib_params_new(uint32_t q, uint32_t n, uint32_t d, struct IbParams **out);

// # Safety
// `params` must be NULL or a handle from [`ib_params_new`] not yet freed.
void ib_params_free(struct IbParams *params);

// Evaluates the method named by `method` (`thm1`, `thm2`, `lev`, `cor3`,
// `thm4`, `exact`, `greedy`). `guard_bits` bounds the enumeration of the
// oracle methods; pass 0 for the default.
//
// # Safety
// `params` must be a live handle, `method` a NUL-terminated string and
// `out` a valid pointer.
enum IbStatus ib_bound_evaluate(const struct IbParams *params,
                                const char *method,
                                uint32_t guard_bits,
                                struct IbBound **out);

// Decimal value of the bound, as a new string in `*out`.
//
// # Safety
// `bound` must be a live handle and `out` a valid pointer.
enum IbStatus ib_bound_value(const struct IbBound *bound, char **out);

// Auxiliary parameters as `key=value` pairs joined by `;`, e.g. `t=5`.
//
// # Safety
// `bound` must be a live handle and `out` a valid pointer.
enum IbStatus ib_bound_aux(const struct IbBound *bound, char **out);

// # Safety
// `bound` must be a live handle.
enum IbStatus ib_bound_direction(const struct IbBound *bound, enum IbDirection *out);

// # Safety
// `bound` must be NULL or a handle from [`ib_bound_evaluate`] not yet freed.
void ib_bound_free(struct IbBound *bound);

// # Safety
// `s` must be NULL or a string returned by this library not yet freed.
void ib_string_free(char *s);

// Asymptotic rate bound `method` (`cor1`, `cor2`, `elias`, `mrrw`, `gv_lb`)
// at normalized distance `delta`.
//
// # Safety
// `method` must be a NUL-terminated string and `out` a valid pointer.
enum IbStatus ib_rate(uint32_t q, const char *method, double delta, double *out);

// `1 - 2/(q + sqrt q)`; NaN for `q < 2`.
double ib_bgh_threshold(uint32_t q);

// Library version, a static string.
const char *ib_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDEL_BOUNDS_H */
