/*
 * gharmonics C API.
 *
 * Generalised harmonic functions: solutions of
 *
 *     M_{s,t,r} u = dd̄u - s z du - t z̄ d̄u - r u = 0
 *
 * on the unit disc, the series kernels they are built from, and the
 * four-dimensional operator algebra behind them.
 *
 * Every function returns a gh_status. On failure, gh_last_error() returns a
 * message describing the most recent failure on the calling thread. Output
 * pointers are left untouched on failure. A NULL gh_eval_config selects
 * gh_default_eval_config().
 */
#ifndef GHARMONICS_H
#define GHARMONICS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GHARMONICS_BUILDING)
#    define GH_API __declspec(dllexport)
#  else
#    define GH_API __declspec(dllimport)
#  endif
#else
#  define GH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gh_status {
  GH_OK = 0,
  GH_ERR_INVALID_ARGUMENT = 1,
  GH_ERR_DENOMINATOR_POLE = 2,
  GH_ERR_NO_CONVERGENCE = 3,
  GH_ERR_BAD_SAMPLE_COUNT = 4,
  GH_ERR_DIVISOR_NEAR_ZERO = 5,
  GH_ERR_STEP_TOO_COARSE = 6,
  GH_ERR_NOT_EQUIVALENT = 7,
  GH_ERR_CALLBACK = 8,
  GH_ERR_INTERNAL = 9
} gh_status;

typedef struct gh_complex {
  double re;
  double im;
} gh_complex;

typedef struct gh_params {
  gh_complex s;
  gh_complex t;
  gh_complex r;
} gh_params;

typedef struct gh_eval_config {
  double tol;      /* absolute bound on the discarded series tail */
  int max_terms;   /* hard cap on summed terms */
  double fd_step;  /* finite-difference step h */
} gh_eval_config;

/* a1 + a2 z d + a3 z̄ d̄ + a4 dd̄ */
typedef struct gh_operator {
  gh_complex a1;
  gh_complex a2;
  gh_complex a3;
  gh_complex a4;
} gh_operator;

/* q2 x d²/dx² + (q1c + q1l x) d/dx + q0 */
typedef struct gh_ode_operator {
  gh_complex q2;
  gh_complex q1c;
  gh_complex q1l;
  gh_complex q0;
} gh_ode_operator;

/* n x n lattice on [-radius, radius]^2, clipped to the disc; a negative
 * exclude_origin_radius means twice the finite-difference step. */
typedef struct gh_grid {
  double radius;
  int n;
  double exclude_origin_radius;
} gh_grid;

typedef struct gh_residual_report {
  double max_abs;
  gh_complex argmax_point;
  int points_checked;
  double fd_step;
} gh_residual_report;

/* Callbacks return nonzero to abort; the calling function then fails with
 * GH_ERR_CALLBACK. */
typedef int (*gh_sampler_fn)(void* user, gh_complex z, gh_complex* out);
typedef int (*gh_polar_sampler_fn)(void* user, double rho, double theta,
                                   gh_complex* out);

/* Opaque finite mode sum. */
typedef struct gh_solution gh_solution;

/* ---- diagnostics -------------------------------------------------------- */

GH_API const char* gh_last_error(void);
GH_API const char* gh_status_string(gh_status status);
GH_API const char* gh_version(void);
GH_API gh_eval_config gh_default_eval_config(void);

/* ---- series kernels ----------------------------------------------------- */

GH_API gh_status gh_poch(gh_complex x, gh_complex y, unsigned n, gh_complex* out);
GH_API gh_status gh_eval_g(gh_complex a, gh_complex b, gh_complex c, gh_complex d,
                           gh_complex z, const gh_eval_config* cfg, gh_complex* out);
GH_API gh_status gh_eval_p(const gh_params* params, int m, gh_complex z,
                           const gh_eval_config* cfg, gh_complex* out);
GH_API gh_status gh_eval_kummer(gh_complex a, gh_complex b, gh_complex z,
                                const gh_eval_config* cfg, gh_complex* out);
GH_API gh_status gh_eval_theta(int m, gh_complex z, const gh_eval_config* cfg,
                               gh_complex* out);
GH_API gh_status gh_eval_bessel_i(int n, gh_complex z, const gh_eval_config* cfg,
                                  gh_complex* out);
GH_API gh_status gh_deriv_g(gh_complex a, gh_complex b, gh_complex c, gh_complex d,
                            unsigned n, gh_complex z, const gh_eval_config* cfg,
                            gh_complex* out);
GH_API gh_status gh_growth_bound(const gh_params* params, double abs_z, double* out);
GH_API gh_status gh_asymptotic_gap(const gh_params* params, int m, double radius,
                                   int n_grid, const gh_eval_config* cfg, double* out);

/* ---- operator algebra --------------------------------------------------- */

GH_API gh_status gh_from_params(const gh_params* params, gh_operator* out);
GH_API gh_status gh_bracket(const gh_operator* d1, const gh_operator* d2,
                            gh_operator* out);
/* m may be negative: the input is then f(|z|²) z̄^|m|. */
GH_API gh_status gh_lambda_map(const gh_operator* d, int m, gh_ode_operator* out);
GH_API gh_status gh_kernel_basis(int m, gh_operator* out);
GH_API gh_status gh_equivalent(const gh_operator* v, const gh_operator* w, int m,
                               int* equivalent, gh_complex* mu);
GH_API gh_status gh_rescale_params(const gh_params* params, double rho,
                                   gh_params* out);

/* ---- solutions ---------------------------------------------------------- */

GH_API gh_status gh_solution_create(const gh_params* params, const gh_eval_config* cfg,
                                    gh_solution** out);
/* k_m = d^m u(0)/m! from d_plus[0..n_plus), k_{-m} = d̄^m u(0)/m! from
 * d_minus[m-1], m = 1..n_minus. */
GH_API gh_status gh_solution_from_taylor(const gh_params* params,
                                         const gh_eval_config* cfg,
                                         const gh_complex* d_plus, size_t n_plus,
                                         const gh_complex* d_minus, size_t n_minus,
                                         gh_solution** out);
GH_API void gh_solution_destroy(gh_solution* sol);
GH_API gh_status gh_solution_add_mode(gh_solution* sol, int m, gh_complex k);
GH_API gh_status gh_solution_check_bound(const gh_solution* sol, double bound,
                                         double rho0);
GH_API gh_status gh_solution_mode_count(const gh_solution* sol, size_t* out);
GH_API gh_status gh_solution_get_mode(const gh_solution* sol, size_t index, int* m,
                                      gh_complex* k);
GH_API gh_status gh_solution_params(const gh_solution* sol, gh_params* out);
GH_API gh_status gh_solution_eval(const gh_solution* sol, gh_complex z, gh_complex* out);

GH_API gh_status gh_mode_value(const gh_params* params, int m, gh_complex k,
                               gh_complex z, const gh_eval_config* cfg, gh_complex* out);

/* Fourier coefficients c_m(rho) for |m| < n/2 of samples at
 * rho e^{2 pi i j/n}, n a power of two. out[i] receives c_m with
 * m = i - (n-1)/2 (integer division); out needs max(n-1, 1) slots. */
GH_API gh_status gh_decompose_circle(const gh_complex* values, size_t n, double rho,
                                     gh_complex* out);
/* Coefficients k_m for m = m_lo..m_hi into out[m - m_lo]. */
GH_API gh_status gh_extract_from_samples(const gh_params* params,
                                         const gh_complex* values, size_t n,
                                         double rho, int m_lo, int m_hi,
                                         const gh_eval_config* cfg, gh_complex* out,
                                         int* alias_warning);
GH_API gh_status gh_extract_coefficients(gh_sampler_fn sampler, void* user,
                                         const gh_params* params, int m_lo, int m_hi,
                                         double rho, size_t n,
                                         const gh_eval_config* cfg, gh_complex* out,
                                         int* alias_warning);
GH_API gh_status gh_fejer_reconstruct(gh_polar_sampler_fn sampler, void* user, int N,
                                      gh_complex z, gh_complex* out);

/* ---- verification ------------------------------------------------------- */

/* Points of the grid for finite-difference step h (the exclusion radius
 * resolves against h). *count receives the number of points; out may be NULL
 * to query it, otherwise it needs capacity >= *count. */
GH_API gh_status gh_grid_points(const gh_grid* grid, double h, gh_complex* out,
                                size_t capacity, size_t* count);
GH_API gh_status gh_residual_solution(const gh_params* params, const gh_solution* sol,
                                      const gh_grid* grid, double h,
                                      gh_residual_report* out);
GH_API gh_status gh_residual_sampler(const gh_params* params, gh_sampler_fn sampler,
                                     void* user, const gh_grid* grid, double h,
                                     gh_residual_report* out);
GH_API gh_status gh_p_coefficients(const gh_params* params, int m, size_t count,
                                   gh_complex* out);
GH_API gh_status gh_ode_recurrence_residual(const gh_params* params, int m,
                                            const gh_complex* coeffs, size_t count,
                                            double* out);
GH_API gh_status gh_wronskian_check(const gh_params* params, int m, double x0,
                                    double x1, int steps, double* out);
GH_API gh_status gh_equivalence_action_check(const gh_operator* v, const gh_operator* w,
                                             int m, const gh_complex* f_poly,
                                             size_t n_poly, const gh_grid* grid,
                                             double h, double* out);

#ifdef __cplusplus
}
#endif

#endif /* GHARMONICS_H */
