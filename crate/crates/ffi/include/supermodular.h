#ifndef SUPERMODULAR_H
#define SUPERMODULAR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum SmStatus {
  SM_STATUS_OK = 0,
  SM_STATUS_NULL_POINTER = 1,
  SM_STATUS_INVALID_INPUT = 2,
  SM_STATUS_GUARD_EXCEEDED = 3,
  SM_STATUS_NOT_SUPERMODULAR = 4,
  SM_STATUS_INTERNAL = 5,
  SM_STATUS_PANIC = 6,
} SmStatus;

/**
 * A game together with its ground-set labels.
 */
typedef struct SmGame SmGame;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a game from its JSON encoding.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SmStatus sm_game_from_json(const char *text, struct SmGame **out);

/**
 * Draws a seeded random supermodular game on `n` letters.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SmStatus sm_game_random(uint32_t n,
                             uint64_t seed,
                             uint32_t terms,
                             uint32_t max_coeff,
                             struct SmGame **out);

/**
 * Releases a game handle; null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void sm_game_free(struct SmGame *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SmStatus sm_game_ground_size(const struct SmGame *g, uint32_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SmStatus sm_game_is_supermodular(const struct SmGame *g, bool *out);

/**
 * Writes the game's JSON encoding to `*out`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SmStatus sm_game_to_json(const struct SmGame *g, char **out);

/**
 * Writes the descriptor bundle as JSON to `*out`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SmStatus sm_game_descriptors_json(const struct SmGame *g, char **out);

/**
 * Writes the face-inclusion report for `(a, b)` as JSON to `*out`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum SmStatus sm_compare_json(const struct SmGame *a, const struct SmGame *b, char **out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum SmStatus sm_face_dimension(const struct SmGame *g, uint32_t *out);

/**
 * Number of extreme rays of the standardized supermodular cone on `n` elements.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SmStatus sm_extreme_ray_count(uint32_t n, bool force, uint64_t *out);

/**
 * Message of the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call on the same thread.
 */
const char *sm_last_error_message(void);

/**
 * Releases a string returned by the library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERMODULAR_H */
