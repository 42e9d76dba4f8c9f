#ifndef LEXBS_H
#define LEXBS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LexbsStatus {
  LEXBS_STATUS_OK = 0,
  LEXBS_STATUS_NULL_POINTER = 1,
  LEXBS_STATUS_INVALID_UTF8 = 2,
  LEXBS_STATUS_PARSE = 3,
  LEXBS_STATUS_INVALID_INPUT = 4,
  LEXBS_STATUS_OUT_OF_RANGE = 5,
  LEXBS_STATUS_PANIC = 6,
} LexbsStatus;

typedef enum LexbsOutcome {
  LEXBS_OUTCOME_PASS = 0,
  LEXBS_OUTCOME_FAIL = 1,
  LEXBS_OUTCOME_EXCLUDED = 2,
  LEXBS_OUTCOME_VACUOUS = 3,
} LexbsOutcome;

// Values accepted by [`lexbs_check`].
typedef enum LexbsCheck {
  LEXBS_CHECK_THEOREM1 = 0,
  LEXBS_CHECK_COROLLARY = 1,
  LEXBS_CHECK_THEOREM2 = 2,
  LEXBS_CHECK_CONJECTURE = 3,
  LEXBS_CHECK_BHP = 4,
  LEXBS_CHECK_EK_VS_CONE = 5,
  LEXBS_CHECK_LEMMAS = 6,
} LexbsCheck;

typedef struct LexbsBetti LexbsBetti;

typedef struct LexbsDecomposition LexbsDecomposition;

typedef struct LexbsIdeal LexbsIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses comma-separated generators in `n_vars` variables.
//
// # Safety
// `text` must be a NUL-terminated string and `out` valid for writes.
enum LexbsStatus lexbs_ideal_parse(const char *text, size_t n_vars, struct LexbsIdeal **out);

// # Safety
// `ideal` must come from [`lexbs_ideal_parse`] and not be freed twice.
void lexbs_ideal_free(struct LexbsIdeal *ideal);

// # Safety
// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
enum LexbsStatus lexbs_ideal_to_string(const struct LexbsIdeal *ideal, char **out);

// # Safety
// Pointers must be valid.
enum LexbsStatus lexbs_ideal_num_generators(const struct LexbsIdeal *ideal, size_t *out);

// Writes lex-segment, stable and Artinian flags; any output may be null.
//
// # Safety
// `ideal` must be valid; non-null outputs must be valid for writes.
enum LexbsStatus lexbs_ideal_properties(const struct LexbsIdeal *ideal,
                                        bool *is_lex,
                                        bool *is_stable,
                                        bool *is_artinian);

// Betti diagram of a stable ideal, or of its quotient ring.
//
// # Safety
// Pointers must be valid.
enum LexbsStatus lexbs_betti(const struct LexbsIdeal *ideal,
                             bool quotient,
                             struct LexbsBetti **out);

// # Safety
// `betti` must come from [`lexbs_betti`] and not be freed twice.
void lexbs_betti_free(struct LexbsBetti *betti);

// Entry `beta_{i,j}` as `num / den`.
//
// # Safety
// Pointers must be valid.
enum LexbsStatus lexbs_betti_get(const struct LexbsBetti *betti,
                                 size_t i,
                                 uint32_t j,
                                 int64_t *num,
                                 int64_t *den);

// # Safety
// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
enum LexbsStatus lexbs_betti_render(const struct LexbsBetti *betti, char **out);

// Greedy Boij-Söderberg decomposition.
//
// # Safety
// Pointers must be valid.
enum LexbsStatus lexbs_decompose(const struct LexbsBetti *betti, struct LexbsDecomposition **out);

// # Safety
// `d` must come from [`lexbs_decompose`] and not be freed twice.
void lexbs_decomposition_free(struct LexbsDecomposition *d);

// # Safety
// Pointers must be valid.
enum LexbsStatus lexbs_decomposition_len(const struct LexbsDecomposition *d, size_t *out);

// Coefficient of summand `index`, against lcm-normalized pure diagrams
// or, with `unit`, against `lambda = 1` ones.
//
// # Safety
// Pointers must be valid.
enum LexbsStatus lexbs_decomposition_coefficient(const struct LexbsDecomposition *d,
                                                 size_t index,
                                                 bool unit,
                                                 int64_t *num,
                                                 int64_t *den);

// Degree sequence of summand `index`. `len` always receives the full
// length; only `min(cap, len)` values are copied into `buf`.
//
// # Safety
// `buf` must hold `cap` values (it may be null when `cap` is 0).
enum LexbsStatus lexbs_decomposition_sequence(const struct LexbsDecomposition *d,
                                              size_t index,
                                              uint32_t *buf,
                                              size_t cap,
                                              size_t *len);

// # Safety
// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
enum LexbsStatus lexbs_decomposition_render(const struct LexbsDecomposition *d,
                                            bool unit,
                                            char **out);

// Runs one check. `which` takes a [`LexbsCheck`] value. `report` may be
// null; otherwise it receives the printed report.
//
// # Safety
// `ideal` and `outcome` must be valid; `report` null or valid for writes.
enum LexbsStatus lexbs_check(const struct LexbsIdeal *ideal,
                             int32_t which,
                             enum LexbsOutcome *outcome,
                             char **report);

// Provenance of each summand of an Artinian lex ideal in three variables.
//
// # Safety
// Pointers must be valid; `out` receives a string for [`lexbs_string_free`].
enum LexbsStatus lexbs_explain(const struct LexbsIdeal *ideal, char **out);

// # Safety
// `s` must come from this library and not be freed twice.
void lexbs_string_free(char *s);

// Message for the last failed call on this thread; empty after a success.
// Valid until the next call on the same thread.
const char *lexbs_last_error(void);

const char *lexbs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEXBS_H */
