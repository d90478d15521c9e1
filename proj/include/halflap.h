/* halflap: fast, spectrally accurate half Laplacian (-Delta)^{1/2} of
 * functions on the real line, computed through the cotangent map
 * x = L*cot(s), closed-form Fourier-mode kernels and FFT-based fast
 * convolution.
 *
 * C API of the shared library.  All functions return hl_status; on failure
 * hl_last_error() describes the problem for the calling thread.  Complex
 * arrays are passed as interleaved doubles (re0, im0, re1, im1, ...).
 */
#ifndef HALFLAP_H
#define HALFLAP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_ERR_INVALID_ARGUMENT = 1,
    HL_ERR_EVALUATION = 2,
    HL_ERR_NO_CONVERGENCE = 3,
    HL_ERR_SINGULAR = 4,
    HL_ERR_INTERNAL = 5
} hl_status;

typedef enum hl_extension {
    HL_EXT_NONE = 0,
    HL_EXT_EVEN = 1,
    HL_EXT_ODD = 2,
    HL_EXT_SMOOTH_CLOSED_FORM = 3,
    HL_EXT_SMOOTH_GENERIC = 4
} hl_extension;

/* Built-in test functions with known exact half Laplacians. */
typedef enum hl_function {
    HL_FN_QUARTIC = 0,  /* (1+x^4)^{-1}        */
    HL_FN_INV_SQRT = 1, /* (1+x^2)^{-1/2}      */
    HL_FN_ARCTAN = 2,   /* arctan(x)           */
    HL_FN_ODD_SQRT = 3, /* x (1+x^2)^{-1/2}    */
    HL_FN_ERF = 4       /* erf(x)              */
} hl_function;

#define HL_FUNCTION_COUNT 5

/* Default Krasny filter threshold (2^-52); pass a negative epsilon to any
 * driver call to select it. */
#define HL_DEFAULT_KRASNY_EPS -1.0

const char* hl_version(void);

/* Message describing the most recent failure on this thread. */
const char* hl_last_error(void);

/* ------------------------------------------------------------------ grids */

typedef struct hl_grid hl_grid;

/* n >= 2 modes, map scale L > 0.  full_period == 0: n nodes on (0,pi);
 * full_period != 0: 2n nodes on (0,2pi). */
hl_status hl_grid_create(int64_t n, double map_scale, int full_period, hl_grid** out);
void hl_grid_destroy(hl_grid* grid);
int64_t hl_grid_node_count(const hl_grid* grid);
/* Fills s (and/or x) with the node coordinates; either pointer may be NULL. */
hl_status hl_grid_nodes(const hl_grid* grid, double* s, double* x);

/* ---------------------------------------------------------------- drivers */

/* Half Laplacian of samples on a half-period grid (pi-periodic case).
 * samples: node_count complex values; out: n complex values.  is_real (may
 * be NULL) reports whether the output was projected to real. */
hl_status hl_apply_periodic(const hl_grid* grid, const double* samples,
                            double krasny_eps, double* out, int* is_real);

/* Half Laplacian of samples on a full-period grid (general case).
 * samples: 2n complex values; out: n complex values at the first n nodes
 * (the result is pi-periodic). */
hl_status hl_apply_full(const hl_grid* grid, const double* samples,
                        double krasny_eps, double* out, int* is_real);

/* Samples a callback f(x) at the half-period nodes, applies the extension,
 * and runs the matching driver.  x_out (length n) and values_out (n complex
 * values) may be NULL if not wanted. */
typedef double (*hl_real_fn)(double x, void* user);
hl_status hl_apply_fn(hl_real_fn f, void* user, int64_t n, double map_scale,
                      hl_extension ext, double krasny_eps,
                      double* x_out, double* values_out, int* is_real);

/* Same pipeline for a built-in function. */
hl_status hl_apply_named(hl_function fn, int64_t n, double map_scale,
                         hl_extension ext, double krasny_eps,
                         double* x_out, double* values_out, int* is_real);

/* ------------------------------------------------------- test functions */

hl_status hl_function_by_name(const char* name, hl_function* out);
const char* hl_function_name(hl_function fn);
double hl_function_value(hl_function fn, double x);  /* f(x) */
double hl_function_exact(hl_function fn, double x);  /* (-Delta)^{1/2} f (x) */
hl_extension hl_function_recommended_extension(hl_function fn);

/* ------------------------------------------------------------ mode kernels */

/* Closed forms of (-Delta)_s^{1/2} e^{iks} at s in (0,pi); out = {re, im}. */
hl_status hl_mode_even(int64_t k, double s, double map_scale, double out[2]);
hl_status hl_mode_odd(int64_t k, double s, double map_scale, double out[2]);

/* ------------------------------------------------------------ verification */

typedef struct hl_check_result {
    char name[96];
    double max_error;
    double tolerance;
    double elapsed_ms;
    int passed;
} hl_check_result;

/* Number of self-check suites (independent of level). */
int64_t hl_check_count(void);

/* Runs suite `index` at the given level (0 = fast, 1 = full, which raises
 * the series-oracle depth to 10^6 terms).  Deterministic for a fixed seed. */
hl_status hl_check_run(int64_t index, int level, uint64_t seed, hl_check_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HALFLAP_H */
