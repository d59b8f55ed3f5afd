#ifndef RINGLOGIC_H
#define RINGLOGIC_H

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

typedef enum RlStatus {
  RL_STATUS_OK = 0,
  RL_STATUS_NULL_POINTER = 1,
  RL_STATUS_INVALID_UTF8 = 2,
  RL_STATUS_PARSE = 3,
  RL_STATUS_INVALID_INPUT = 4,
  RL_STATUS_BUDGET = 5,
  RL_STATUS_INTERNAL = 6,
  RL_STATUS_PANIC = 7,
} RlStatus;

/**
 * Per-thread state: the search budget, the last error message and the last
 * report produced by [`rl_run`].
 */
typedef struct RlContext RlContext;

/**
 * A finite ring built from a spec string such as `Z/6` or `GF(9)`.
 */
typedef struct RlRing RlRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a context with the default budget. Returns null on allocation
 * failure only.
 */
struct RlContext *rl_context_new(void);

/**
 * # Safety
 * `ctx` must come from [`rl_context_new`] and not be used afterwards.
 */
void rl_context_free(struct RlContext *ctx);

/**
 * Sets the tuple and hom-candidate limits. Zero leaves a limit unchanged.
 *
 * # Safety
 * `ctx` must be a live context.
 */
enum RlStatus rl_context_set_budget(struct RlContext *ctx,
                                    uint64_t max_tuples,
                                    uint64_t max_hom_candidates);

/**
 * The message of the last failed call, or null.
 *
 * # Safety
 * `ctx` must be a live context.
 */
const char *rl_last_error(const struct RlContext *ctx);

/**
 * # Safety
 * `ctx` must be a live context, `spec` a C string and `out` writable.
 */
enum RlStatus rl_ring_new(struct RlContext *ctx, const char *spec, struct RlRing **out);

/**
 * # Safety
 * `ring` must come from [`rl_ring_new`] and not be used afterwards.
 */
void rl_ring_free(struct RlRing *ring);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `ring` must be a live ring or null.
 */
uint32_t rl_ring_card(const struct RlRing *ring);

/**
 * Counts the points of a presentation such as `Z[x]/(x^2+1)` in `ring`.
 *
 * # Safety
 * All pointers must be live; `out` must be writable.
 */
enum RlStatus rl_count_points(struct RlContext *ctx,
                              const char *pres,
                              const struct RlRing *ring,
                              uint64_t *out);

/**
 * Decides whether `ring` satisfies a sentence such as
 * `forall x,y (x*y=0) => (x=0) \/ (y=0)`.
 *
 * # Safety
 * All pointers must be live; `out` must be writable.
 */
enum RlStatus rl_satisfies(struct RlContext *ctx,
                           const struct RlRing *ring,
                           const char *sentence,
                           bool *out);

/**
 * Runs one command-line invocation (without the program name) and stores
 * its JSON report, readable through [`rl_output`]. `exit_code` receives the
 * command's exit status: 0 ok, 1 property violated, 2 error.
 *
 * # Safety
 * `argv` must point to `argc` C strings; `exit_code` must be writable.
 */
enum RlStatus rl_run(struct RlContext *ctx,
                     const char *const *argv,
                     uintptr_t argc,
                     int32_t *exit_code);

/**
 * The report of the last [`rl_run`], or null.
 *
 * # Safety
 * `ctx` must be a live context.
 */
const char *rl_output(const struct RlContext *ctx);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RINGLOGIC_H */
