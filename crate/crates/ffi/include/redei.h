#ifndef REDEI_H
#define REDEI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RedeiStatus {
  REDEI_STATUS_OK = 0,
  REDEI_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Inadmissible pair or third prime, missing square root, or an
   * oracle that cannot be applied.
   */
  REDEI_STATUS_INADMISSIBLE = 3,
  REDEI_STATUS_IO = 4,
  REDEI_STATUS_CHECKPOINT = 5,
  /**
   * Internal consistency failure, including exhausted normalization.
   */
  REDEI_STATUS_CONSISTENCY = 6,
  REDEI_STATUS_NULL_POINTER = 7,
  REDEI_STATUS_PANIC = 8,
} RedeiStatus;

/**
 * Opaque admissible pair with its normalized solution.
 */
typedef struct RedeiPair RedeiPair;

typedef struct RedeiSolution {
  int64_t x;
  int64_t y;
  int64_t z;
} RedeiSolution;

typedef struct RedeiTripleVerdict {
  bool congruence_ok[3];
  bool legendre_ok;
  /**
   * -1 or +1; 0 when the symbol is not defined for the triple.
   */
  int32_t redei;
  bool borromean;
} RedeiTripleVerdict;

typedef struct RedeiPairCounts {
  uint64_t x;
  uint64_t pi_x;
  uint64_t pi_x_1mod4;
  uint64_t ordered_linked;
  double ratio;
} RedeiPairCounts;

typedef struct RedeiTripleCounts {
  uint64_t x;
  uint64_t pi_x;
  uint64_t unordered_distinct;
  uint64_t linked_unordered;
  uint64_t borromean_unordered;
  double ratio_all;
  double ratio_linked;
} RedeiTripleCounts;

typedef struct RedeiBoundReport {
  uint64_t x;
  double main_term;
  double error_bound;
  uint64_t empirical;
  bool within_bound;
} RedeiBoundReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *redei_last_error(void);

/**
 * # Safety
 * `out_pair` must be valid for writes.
 */
enum RedeiStatus redei_pair_new(uint64_t p1, uint64_t p2, struct RedeiPair **out_pair);

/**
 * # Safety
 * `pair` must be null or a handle from [`redei_pair_new`] not yet freed.
 */
void redei_pair_free(struct RedeiPair *pair);

/**
 * # Safety
 * `pair` must be a live handle and `out_solution` valid for writes.
 */
enum RedeiStatus redei_pair_solution(const struct RedeiPair *pair,
                                     struct RedeiSolution *out_solution);

/**
 * Writes -1 or +1 to `out_symbol`. `out_solution` may be null; otherwise
 * it receives the solution actually used.
 *
 * # Safety
 * `pair` must be a live handle; the out-pointers valid for writes or null
 * where allowed.
 */
enum RedeiStatus redei_symbol(const struct RedeiPair *pair,
                              uint64_t p3,
                              int32_t *out_symbol,
                              struct RedeiSolution *out_solution);

/**
 * Whether `p3` splits completely in the quartic attached to the pair's
 * solution.
 *
 * # Safety
 * `pair` must be a live handle and `out_split` valid for writes.
 */
enum RedeiStatus redei_splitting_oracle(const struct RedeiPair *pair, uint64_t p3, bool *out_split);

/**
 * # Safety
 * `out_verdict` must be valid for writes.
 */
enum RedeiStatus redei_classify_triple(uint64_t p1,
                                       uint64_t p2,
                                       uint64_t p3,
                                       struct RedeiTripleVerdict *out_verdict);

/**
 * # Safety
 * `out_symbol` must be valid for writes.
 */
enum RedeiStatus redei_legendre(int64_t a, uint64_t p, int32_t *out_symbol);

/**
 * # Safety
 * `out_symbol` must be valid for writes.
 */
enum RedeiStatus redei_jacobi(int64_t a, uint64_t m, int32_t *out_symbol);

/**
 * Smaller square root of `a` modulo the odd prime `p`.
 *
 * # Safety
 * `out_root` must be valid for writes.
 */
enum RedeiStatus redei_sqrt_mod(int64_t a, uint64_t p, uint64_t *out_root);

/**
 * `li(x)` measured from 2.
 *
 * # Safety
 * `out_value` must be valid for writes.
 */
enum RedeiStatus redei_log_integral(double x, double *out_value);

/**
 * # Safety
 * `out_counts` must be valid for writes.
 */
enum RedeiStatus redei_count_pairs(uint64_t x, struct RedeiPairCounts *out_counts);

/**
 * # Safety
 * `out_counts` must be valid for writes.
 */
enum RedeiStatus redei_count_triples(uint64_t x, struct RedeiTripleCounts *out_counts);

/**
 * `label` is a [`RedeiFieldLabel`] value.
 *
 * # Safety
 * `pair` must be a live handle and `out_report` valid for writes.
 */
enum RedeiStatus redei_check_bound(const struct RedeiPair *pair,
                                   uint64_t x,
                                   uint32_t label,
                                   struct RedeiBoundReport *out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REDEI_H */
