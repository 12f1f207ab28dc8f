/*
 * bqroot C API: n-th roots of quaternions with complex coefficients.
 *
 * Every object crossing this boundary is either a plain struct or an opaque
 * handle released with its matching *_free function. Functions report
 * failure through bqr_status; bqr_last_error() holds a message for the most
 * recent failure on the calling thread.
 */
#ifndef BQROOT_H
#define BQROOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BQROOT_BUILDING)
#    define BQR_API __declspec(dllexport)
#  else
#    define BQR_API __declspec(dllimport)
#  endif
#else
#  define BQR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bqr_status {
  BQR_OK = 0,
  BQR_ERR_NULL_ARGUMENT = 1,
  BQR_ERR_DOMAIN = 2,           /* n out of range, non-finite input, ... */
  BQR_ERR_INDEX = 3,            /* accessor index past the end */
  BQR_ERR_NOT_QMATRIX = 4,
  BQR_ERR_DEGENERATE_SUBCASE = 5,
  BQR_ERR_COUNT_MISMATCH = 6,
  BQR_ERR_INTERNAL = 7
} bqr_status;

typedef enum bqr_branch { BQR_BRANCH_PRINCIPAL = 0, BQR_BRANCH_NEGATED = 1 } bqr_branch;

typedef enum bqr_case {
  BQR_CASE_1A_SCALAR_INVERTIBLE = 0,
  BQR_CASE_1B_ZERO = 1,
  BQR_CASE_2A_GENERIC_INVERTIBLE = 2,
  BQR_CASE_2B_GENERIC_SINGULAR = 3,
  BQR_CASE_3A_NILPOTENT_INVERTIBLE = 4,
  BQR_CASE_3B_NILPOTENT_SINGULAR = 5
} bqr_case;

typedef enum bqr_family_origin { BQR_FAMILY_PAIR_OF_ROOTS = 0, BQR_FAMILY_NULL_CONE = 1 } bqr_family_origin;

typedef enum bqr_stream {
  BQR_STREAM_GENERIC = 0,
  BQR_STREAM_SCALAR = 1,
  BQR_STREAM_NULL_CONE = 2,
  BQR_STREAM_SINGULAR = 3,
  BQR_STREAM_NILPOTENT = 4,
  BQR_STREAM_INSOLUBLE = 5
} bqr_stream;

/* Boundary flag bits returned by bqr_solution_boundary_flags. */
#define BQR_BOUNDARY_SCALAR_PART 0x1u
#define BQR_BOUNDARY_VECTOR_PART 0x2u
#define BQR_BOUNDARY_VECTOR_SQUARE 0x4u
#define BQR_BOUNDARY_NORM_FORM 0x8u

typedef struct bqr_complex {
  double re;
  double im;
} bqr_complex;

/* Components (a0, a1, a2, a3). */
typedef struct bqr_quat {
  bqr_complex c[4];
} bqr_quat;

/* {X | scalar part == x0, x1^2 + x2^2 + x3^2 == c}; w1/w2 are the generating
 * roots for BQR_FAMILY_PAIR_OF_ROOTS. */
typedef struct bqr_family {
  bqr_complex x0;
  bqr_complex c;
  bqr_family_origin origin;
  bqr_complex w1;
  bqr_complex w2;
} bqr_family;

typedef struct bqr_solution_set bqr_solution_set;
typedef struct bqr_report bqr_report;

BQR_API const char* bqr_version(void);
BQR_API const char* bqr_last_error(void);
BQR_API const char* bqr_status_string(bqr_status status);

/* Algebra */
BQR_API bqr_status bqr_quat_mul(const bqr_quat* a, const bqr_quat* b, bqr_quat* out);
BQR_API bqr_status bqr_quat_pow(const bqr_quat* x, int n, bqr_quat* out);
BQR_API bqr_status bqr_residual(const bqr_quat* x, int n, const bqr_quat* a, double* out);

/* Row-major 4x4 q-matrix of a (16 entries). */
BQR_API bqr_status bqr_to_qmatrix(const bqr_quat* a, bqr_complex out[16]);
/* Jordan decomposition to_qmatrix(a) = U J Uinv; kind: 0 scalar,
 * 1 diagonalizable, 2 nilpotent; subcase: 0..2 for a/b/c, -1 n/a. */
BQR_API bqr_status bqr_jordan_form(const bqr_quat* a, double tol, bqr_branch branch, int* kind,
                                   int* subcase, bqr_complex j[16], bqr_complex u[16],
                                   bqr_complex uinv[16]);

/* Classification and solving */
BQR_API bqr_status bqr_classify(const bqr_quat* a, double tol, bqr_case* out);
BQR_API const char* bqr_case_code(bqr_case c); /* "1a" ... "3b" */
BQR_API const char* bqr_case_name(bqr_case c); /* "ScalarInvertible" ... */

BQR_API bqr_status bqr_solve(const bqr_quat* a, int n, double tol, bqr_branch branch,
                             bqr_solution_set** out);
BQR_API void bqr_solution_free(bqr_solution_set* set);

BQR_API bqr_case bqr_solution_case(const bqr_solution_set* set);
BQR_API int bqr_solution_n(const bqr_solution_set* set);
BQR_API double bqr_solution_tol(const bqr_solution_set* set);
BQR_API bqr_branch bqr_solution_branch(const bqr_solution_set* set);
BQR_API unsigned bqr_solution_boundary_flags(const bqr_solution_set* set);
BQR_API double bqr_solution_self_check_residual(const bqr_solution_set* set);
BQR_API int bqr_solution_self_check_passed(const bqr_solution_set* set);
/* NULL when the equation has solutions. */
BQR_API const char* bqr_solution_insoluble_reason(const bqr_solution_set* set);

BQR_API size_t bqr_solution_isolated_count(const bqr_solution_set* set);
BQR_API bqr_status bqr_solution_isolated(const bqr_solution_set* set, size_t index, bqr_quat* out);
BQR_API size_t bqr_solution_family_count(const bqr_solution_set* set);
BQR_API bqr_status bqr_solution_family(const bqr_solution_set* set, size_t index, bqr_family* out);

/* Family members: explicit parameters, or the k-th deterministic sample. */
BQR_API bqr_status bqr_family_sample(const bqr_family* family, bqr_complex p1, bqr_complex p2,
                                     bqr_branch branch, bqr_quat* out);
BQR_API bqr_status bqr_family_sample_deterministic(const bqr_family* family, size_t k,
                                                   bqr_quat* out);

/* Verification */
BQR_API bqr_status bqr_check(const bqr_quat* a, const bqr_solution_set* set, double tol,
                             size_t family_samples, bqr_report** out);
BQR_API bqr_status bqr_oracle_roundtrip(uint64_t seed, int n, size_t count, bqr_stream stream,
                                        double recovery_tol, bqr_report** out);
BQR_API void bqr_report_free(bqr_report* report);

BQR_API int bqr_report_pass(const bqr_report* report);
BQR_API double bqr_report_max_residual(const bqr_report* report);
BQR_API double bqr_report_tolerance(const bqr_report* report);
BQR_API size_t bqr_report_residual_count(const bqr_report* report);
BQR_API double bqr_report_residual(const bqr_report* report, size_t index);
/* Round-trip counters; zero for reports from bqr_check. */
BQR_API size_t bqr_report_trials(const bqr_report* report);
BQR_API size_t bqr_report_recovered(const bqr_report* report);
BQR_API size_t bqr_report_skipped(const bqr_report* report);

#ifdef __cplusplus
}
#endif

#endif /* BQROOT_H */
