#ifndef CHIPFIRE_H
#define CHIPFIRE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every fallible call.
 */
typedef enum ChipfireStatus {
  CHIPFIRE_STATUS_OK = 0,
  CHIPFIRE_STATUS_NULL_POINTER = 1,
  CHIPFIRE_STATUS_INVALID_ARGUMENT = 2,
  CHIPFIRE_STATUS_NOT_TOTALLY_UNIMODULAR = 3,
  CHIPFIRE_STATUS_MATH = 4,
  CHIPFIRE_STATUS_OVERFLOW = 5,
  CHIPFIRE_STATUS_BUFFER_TOO_SMALL = 6,
  CHIPFIRE_STATUS_INTERNAL = 7,
  CHIPFIRE_STATUS_PANIC = 8,
} ChipfireStatus;

typedef enum ChipfireMoveKind {
  CHIPFIRE_MOVE_KIND_A = 0,
  CHIPFIRE_MOVE_KIND_B = 1,
  CHIPFIRE_MOVE_KIND_NEG_A = 2,
  CHIPFIRE_MOVE_KIND_NEG_B = 3,
} ChipfireMoveKind;

/**
 * A chip configuration on the five pentagon nodes.
 */
typedef struct ChipfireConfig ChipfireConfig;

/**
 * A regular matroid given by a totally unimodular standard representation.
 */
typedef struct ChipfireMatroid ChipfireMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a
 * successful one. Valid until the next chipfire call on the same thread.
 */
const char *chipfire_last_error(void);

/**
 * Library version as a static string.
 */
const char *chipfire_version(void);

/**
 * Creates a configuration from real and imaginary chip counts (5 each).
 */
enum ChipfireStatus chipfire_config_new(const int64_t *re,
                                        const int64_t *im,
                                        struct ChipfireConfig **out);

void chipfire_config_free(struct ChipfireConfig *config);

/**
 * Copies the chip counts out; either output may be null.
 */
enum ChipfireStatus chipfire_config_get(const struct ChipfireConfig *config,
                                        int64_t *re_out,
                                        int64_t *im_out);

/**
 * Fires `kind` at `node` in place.
 */
enum ChipfireStatus chipfire_config_apply(struct ChipfireConfig *config,
                                          size_t node,
                                          enum ChipfireMoveKind kind);

/**
 * Sum of real and imaginary chips over all nodes.
 */
enum ChipfireStatus chipfire_config_total_chips(const struct ChipfireConfig *config, int64_t *out);

/**
 * Canonical representative (5 real counts) and, if the certificate outputs
 * are non-null, the firings taking `config` to it.
 */
enum ChipfireStatus chipfire_canonicalize(const struct ChipfireConfig *config,
                                          int64_t *canonical_out,
                                          int64_t *cert_re_out,
                                          int64_t *cert_im_out);

/**
 * Decides whether `from` and `to` are firing equivalent. When they are and
 * the certificate outputs are non-null, writes `x` with `K̄·x = to − from`.
 */
enum ChipfireStatus chipfire_solve_firings(const struct ChipfireConfig *from,
                                           const struct ChipfireConfig *to,
                                           bool *equivalent_out,
                                           int64_t *cert_re_out,
                                           int64_t *cert_im_out);

/**
 * Builds the matroid represented by `[I | D]` from the row-major
 * `rows × cols` matrix `D`, checking total unimodularity.
 */
enum ChipfireStatus chipfire_matroid_new(size_t rows,
                                         size_t cols,
                                         const int64_t *d,
                                         struct ChipfireMatroid **out);

enum ChipfireStatus chipfire_matroid_new_r10(struct ChipfireMatroid **out);

void chipfire_matroid_free(struct ChipfireMatroid *matroid);

/**
 * Nontrivial invariant factors of the sandpile group and its order.
 * `*len_out` always receives the number of factors; if it exceeds
 * `capacity` nothing is written to `factors_out` and the call returns
 * `BUFFER_TOO_SMALL`.
 */
enum ChipfireStatus chipfire_sandpile_group(const struct ChipfireMatroid *matroid,
                                            int64_t *factors_out,
                                            size_t capacity,
                                            size_t *len_out,
                                            int64_t *order_out);

enum ChipfireStatus chipfire_count_bases(const struct ChipfireMatroid *matroid, uint64_t *out);

/**
 * Runs one JSON protocol request and returns the JSON response line. Never
 * returns null for a non-null request; release the result with
 * [`chipfire_string_free`].
 */
char *chipfire_engine_request(const char *request);

void chipfire_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHIPFIRE_H */
