/*
 * Copyright 2026 The Baskets Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the basket solver.
 *
 * N apples and N pears go into baskets; every basket gets the same number of
 * apples and a different number of pears. The solver returns the largest
 * usable basket count, classifies N, counts every valid pear assignment, and
 * runs batch sweeps that write CSV datasets.
 *
 * Conventions:
 *  - Every fallible function returns baskets_status. On failure, outputs are
 *    left untouched and baskets_last_error() describes the failure for the
 *    calling thread.
 *  - Variable-length results use caller buffers: pass capacity, receive the
 *    required length in *count (or *length). BASKETS_E_BUFFER_TOO_SMALL means
 *    *count holds the size needed; nothing else was written.
 *  - Handles are opaque; each _create has a matching _destroy, and destroy
 *    accepts NULL.
 *  - A baskets_sieve is immutable and may be shared by any number of threads.
 */

#ifndef BASKETS_BASKETS_H
#define BASKETS_BASKETS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BASKETS_BUILDING_LIBRARY)
#    define BASKETS_API __declspec(dllexport)
#  else
#    define BASKETS_API __declspec(dllimport)
#  endif
#else
#  define BASKETS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum baskets_status {
  BASKETS_OK = 0,
  BASKETS_E_INVALID_ARGUMENT = 1, /* precondition violated (N = 0, NULL output, ...) */
  BASKETS_E_CAPACITY = 2,         /* beyond sieve limit or oracle guard */
  BASKETS_E_DOMAIN = 3,           /* infeasible basket count */
  BASKETS_E_OVERFLOW = 4,         /* result does not fit the output type */
  BASKETS_E_IO = 5,
  BASKETS_E_BUFFER_TOO_SMALL = 6,
  BASKETS_E_INTERNAL = 7
} baskets_status;

typedef enum baskets_class {
  BASKETS_CLASS_PERFECT = 0,
  BASKETS_CLASS_PRIME = 1,
  BASKETS_CLASS_NEAR_PERFECT = 2,
  BASKETS_CLASS_HIGHLY_COMPOSITE = 3,
  BASKETS_CLASS_PLAIN = 4
} baskets_class;

typedef struct baskets_sieve baskets_sieve;
typedef struct baskets_distribution_list baskets_distribution_list;

typedef struct baskets_solution {
  uint64_t n_input;
  uint64_t n_max;
  uint64_t apples_per_basket;
  double pear_bound;
  double efficiency;
  uint64_t surplus;
} baskets_solution;

typedef struct baskets_flags {
  int perfect;
  int prime;
  int near_perfect;
  int highly_composite;
  baskets_class display_class;
} baskets_flags;

typedef struct baskets_sweep_config {
  uint64_t limit;
  uint64_t stride;       /* sampling of nmax_sampled.csv; 0 selects 10 */
  uint64_t stride_large; /* sampling of nmax_1m_sampled.csv; 0 selects 997 */
  const char* output_dir;
  unsigned thread_count; /* 0 = hardware concurrency */
} baskets_sweep_config;

typedef struct baskets_sweep_summary {
  uint64_t record_count;
  uint64_t perfect_count;
  uint64_t prime_count;
  double elapsed_seconds;
  size_t file_count;
} baskets_sweep_summary;

typedef struct baskets_record {
  uint64_t n_input;
  uint64_t n_max;
  baskets_flags flags;
} baskets_record;

typedef struct baskets_mismatch {
  uint64_t n_input;
  uint64_t oracle_n_max;
  uint64_t solver_n_max;
} baskets_mismatch;

/* ---- diagnostics ---- */

BASKETS_API const char* baskets_version(void);
BASKETS_API const char* baskets_status_string(baskets_status status);
/* Message for the last failure on this thread; "" if none. */
BASKETS_API const char* baskets_last_error(void);
BASKETS_API const char* baskets_class_name(baskets_class c);

/* ---- arithmetic ---- */

/* limit in [2, 2^31 - 1]. */
BASKETS_API baskets_status baskets_sieve_create(uint64_t limit, baskets_sieve** out);
BASKETS_API void baskets_sieve_destroy(baskets_sieve* sieve);
BASKETS_API uint64_t baskets_sieve_limit(const baskets_sieve* sieve);

/* sieve may be NULL (trial division). */
BASKETS_API baskets_status baskets_divisors(uint64_t n, const baskets_sieve* sieve, uint64_t* out,
                                            size_t capacity, size_t* count);
BASKETS_API baskets_status baskets_is_prime(uint64_t n, const baskets_sieve* sieve, int* out);
BASKETS_API baskets_status baskets_triangular(uint64_t m, uint64_t* out);
BASKETS_API baskets_status baskets_is_highly_composite(uint64_t n, const baskets_sieve* sieve,
                                                       int* out);

/* ---- solver ---- */

BASKETS_API baskets_status baskets_pear_bound(uint64_t n_input, double* out);
BASKETS_API baskets_status baskets_feasible(uint64_t baskets, uint64_t n_input, int* out);
/* sieve may be NULL. */
BASKETS_API baskets_status baskets_solve(uint64_t n_input, const baskets_sieve* sieve,
                                         baskets_solution* out);
BASKETS_API baskets_status baskets_canonical_distribution(uint64_t baskets, uint64_t n_input,
                                                          uint64_t* out, size_t capacity,
                                                          size_t* count);

/* ---- census ---- */

BASKETS_API baskets_status baskets_classify(const baskets_solution* solution,
                                            const baskets_sieve* sieve, baskets_flags* out);
/* Exact count as a NUL-terminated decimal string; *length excludes the NUL. */
BASKETS_API baskets_status baskets_count_distributions(uint64_t baskets, uint64_t n_input, char* out,
                                                       size_t capacity, size_t* length);
/* Same count; BASKETS_E_OVERFLOW when it exceeds UINT64_MAX. */
BASKETS_API baskets_status baskets_count_distributions_u64(uint64_t baskets, uint64_t n_input,
                                                           uint64_t* out);
BASKETS_API baskets_status baskets_enumerate_distributions(uint64_t baskets, uint64_t n_input,
                                                           uint64_t limit,
                                                           baskets_distribution_list** out);
BASKETS_API void baskets_distribution_list_destroy(baskets_distribution_list* list);
BASKETS_API size_t baskets_distribution_list_size(const baskets_distribution_list* list);
BASKETS_API baskets_status baskets_distribution_list_get(const baskets_distribution_list* list,
                                                         size_t index, uint64_t* out,
                                                         size_t capacity, size_t* count);
/* Parallel arrays of (N, n) pairs. */
BASKETS_API baskets_status baskets_perfect_values(uint64_t limit, uint64_t* n_input, uint64_t* n_max,
                                                  size_t capacity, size_t* count);

/* ---- sweep ---- */

BASKETS_API baskets_status baskets_sweep_run(const baskets_sweep_config* config,
                                             baskets_sweep_summary* out);
/* Records for N = 1..limit without writing files; out must hold limit entries. */
BASKETS_API baskets_status baskets_sweep_records(uint64_t limit, unsigned thread_count,
                                                 baskets_record* out, size_t capacity);

/* ---- brute-force oracle ---- */

/* N <= 2000. */
BASKETS_API baskets_status baskets_oracle_n_max(uint64_t n_input, uint64_t* out);
/* Checks every N in [1, limit]. *count receives the number of mismatches;
 * the first min(capacity, *count) are written to out (out may be NULL when
 * capacity is 0). Does not return BASKETS_E_BUFFER_TOO_SMALL. */
BASKETS_API baskets_status baskets_oracle_verify(uint64_t limit, baskets_mismatch* out,
                                                 size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* BASKETS_BASKETS_H */
