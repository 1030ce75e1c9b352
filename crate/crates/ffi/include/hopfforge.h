#ifndef HOPFFORGE_H
#define HOPFFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Degeneration method selector for [`hf_degenerate`].
 */
typedef enum HfMode {
  HF_MODE_CLOSED_FORM = 0,
  HF_MODE_SYMBOLIC = 1,
} HfMode;

/**
 * Result codes shared by every fallible entry point.
 */
typedef enum HfStatus {
  HF_STATUS_OK = 0,
  /**
   * The computation ran and gave a negative verdict (axiom failure, no degeneration).
   */
  HF_STATUS_NEGATIVE = 1,
  HF_STATUS_INVALID_ARGUMENT = 2,
  HF_STATUS_PARSE_ERROR = 3,
  HF_STATUS_NULL_POINTER = 4,
  HF_STATUS_PANIC = 5,
} HfStatus;

/**
 * Opaque handle to a Hopf algebra.
 */
typedef struct HfHopf HfHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread; never free it.
 */
const char *hf_last_error_message(void);

/**
 * Parses a Hopf algebra from its JSON file format.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HfStatus hf_hopf_from_json(const char *json, struct HfHopf **out);

/**
 * Builds a catalog entry by id or alias.
 *
 * # Safety
 * `id` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HfStatus hf_catalog_get(const char *id, struct HfHopf **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void hf_hopf_free(struct HfHopf *h);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hf_string_free(char *s);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hf_hopf_dim(const struct HfHopf *h);

/**
 * Serializes to the JSON file format.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum HfStatus hf_hopf_to_json(const struct HfHopf *h, char **out);

/**
 * Checks all axioms. Returns `OK` when they hold and `NEGATIVE` otherwise;
 * the verification report is written to `report` unless it is null.
 *
 * # Safety
 * `h` must be a live handle; `report` must be null or a valid pointer.
 */
enum HfStatus hf_verify(const struct HfHopf *h, char **report);

/**
 * The dual Hopf algebra as a new handle.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum HfStatus hf_dual(const struct HfHopf *h, struct HfHopf **out);

/**
 * Basis-independent invariants as JSON.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum HfStatus hf_fingerprint_json(const struct HfHopf *h, char **out);

/**
 * Dimension of the orbit under change of basis.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum HfStatus hf_orbit_dimension(const struct HfHopf *h, size_t *out);

/**
 * Degenerates along `φ + t·id`, with `φ` given in the JSON matrix format.
 * On success `OK` is returned and the limit is written to `limit` (if not
 * null); `NEGATIVE` means no degeneration exists along this family. The report
 * is written to `report` unless it is null.
 *
 * # Safety
 * `h` must be a live handle, `phi_json` a valid string; `limit` and
 * `report` must be null or valid pointers.
 */
enum HfStatus hf_degenerate(const struct HfHopf *h,
                            const char *phi_json,
                            enum HfMode mode,
                            struct HfHopf **limit,
                            char **report);

/**
 * Associated graded Hopf algebra for per-basis-vector degrees.
 *
 * # Safety
 * `h` must be a live handle and `degrees` point to `len` values; `limit`
 * and `report` must be null or valid pointers.
 */
enum HfStatus hf_graded(const struct HfHopf *h,
                        const size_t *degrees,
                        size_t len,
                        struct HfHopf **limit,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFFORGE_H */
