#ifndef POALIGN_H
#define POALIGN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call. The numeric values of the first four match
 * the exit codes of the `poalign` binary.
 */
typedef enum PoaStatus {
  POA_STATUS_OK = 0,
  /**
   * I/O failure or an internal invariant broke.
   */
  POA_STATUS_INTERNAL = 1,
  /**
   * Malformed text or an input outside the supported domain.
   */
  POA_STATUS_INVALID = 2,
  /**
   * The enumeration cap was hit before the optimum was proven.
   */
  POA_STATUS_CAP_EXCEEDED = 3,
  POA_STATUS_NULL_ARGUMENT = 4,
  POA_STATUS_INVALID_UTF8 = 5,
  POA_STATUS_PANIC = 6,
} PoaStatus;

typedef enum PoaFamily {
  POA_FAMILY_LINEAR = 0,
  POA_FAMILY_WEAK = 1,
  POA_FAMILY_SEMIORDER = 2,
  POA_FAMILY_INTERVAL = 3,
  POA_FAMILY_PARTIAL = 4,
} PoaFamily;

typedef enum PoaMethod {
  POA_METHOD_AUTO = 0,
  POA_METHOD_DP = 1,
  POA_METHOD_ORACLE = 2,
} PoaMethod;

typedef enum PoaReduction {
  POA_REDUCTION_MIS3 = 0,
  POA_REDUCTION_SAT32 = 1,
} PoaReduction;

/**
 * Parsed alignment instance.
 */
typedef struct PoaInstance PoaInstance;

/**
 * Linearization pair with its adjacency count.
 */
typedef struct PoaSolution PoaSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *poa_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void poa_string_free(char *s);

/**
 * Parse an instance document.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PoaStatus poa_instance_parse(const char *text, struct PoaInstance **out);

/**
 * # Safety
 * `inst` must be null or a handle from [`poa_instance_parse`], not yet freed.
 */
void poa_instance_free(struct PoaInstance *inst);

/**
 * Number of markers, or 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live instance handle.
 */
size_t poa_instance_marker_count(const struct PoaInstance *inst);

/**
 * # Safety
 * `inst` must be a live instance handle; `out` must be writable.
 */
enum PoaStatus poa_instance_to_string(const struct PoaInstance *inst, char **out);

/**
 * Finest family of each order of the instance.
 *
 * # Safety
 * `inst` must be a live instance handle; both out pointers must be writable.
 */
enum PoaStatus poa_classify(const struct PoaInstance *inst,
                            enum PoaFamily *gamma,
                            enum PoaFamily *pi);

/**
 * Compute an optimal alignment. `method` is a [`PoaMethod`] value.
 *
 * On [`PoaStatus::CapExceeded`] `*out` holds the best alignment found before
 * the cap when there is one, and null otherwise. On every other failure it
 * is null.
 *
 * # Safety
 * `inst` must be a live instance handle; `out` must be writable.
 */
enum PoaStatus poa_solve(const struct PoaInstance *inst,
                         uint32_t method,
                         uint64_t cap,
                         struct PoaSolution **out);

/**
 * # Safety
 * `sol` must be null or a handle from [`poa_solve`], not yet freed.
 */
void poa_solution_free(struct PoaSolution *sol);

/**
 * Adjacency count, or 0 for a null handle.
 *
 * # Safety
 * `sol` must be null or a live solution handle.
 */
size_t poa_solution_n_adj(const struct PoaSolution *sol);

/**
 * Breakpoint count, or 0 for a null handle.
 *
 * # Safety
 * `sol` must be null or a live solution handle.
 */
size_t poa_solution_n_brk(const struct PoaSolution *sol);

/**
 * # Safety
 * `sol` must be a live solution handle; `out` must be writable.
 */
enum PoaStatus poa_solution_to_string(const struct PoaSolution *sol, char **out);

/**
 * Compile a graph or a SAT instance into an instance document and a
 * certificate document. `kind` is a [`PoaReduction`] value.
 *
 * # Safety
 * `source` must be a NUL-terminated string; both out pointers must be
 * writable.
 */
enum PoaStatus poa_reduce(uint32_t kind,
                          const char *source,
                          bool allow_high_degree,
                          char **out_instance,
                          char **out_certificate);

/**
 * Map an independent set or an assignment through a certificate to a
 * solution document.
 *
 * # Safety
 * Both inputs must be NUL-terminated strings; `out` must be writable.
 */
enum PoaStatus poa_build_solution(const char *certificate, const char *input, char **out);

/**
 * Read an independent set (`iset` line) or an assignment (`assign` line)
 * back from a solution document.
 *
 * # Safety
 * Both inputs must be NUL-terminated strings; `out` must be writable.
 */
enum PoaStatus poa_extract(const char *certificate, const char *solution, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POALIGN_H */
