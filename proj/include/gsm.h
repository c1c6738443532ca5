/*
 * gsm.h -- C interface to the glucose-sensitive membrane transport library.
 *
 * The library simulates coupled glucose / oxygen / gluconic-acid transport
 * across an enzyme-loaded composite membrane in reduced (dimensionless)
 * variables. It exposes:
 *
 *   - the dimensional -> dimensionless parameter reduction and the
 *     saturating reaction kinetics,
 *   - closed-form steady and short-time profile approximations,
 *   - a nonlinear finite-difference solver (transient and steady),
 *   - validation tables, closed-form parameter sweeps, sensitivity shares
 *     and a steady-state invariant audit.
 *
 * Conventions: every fallible call returns a gsm_status; results travel
 * through out-parameters or opaque handles. On failure the out-parameters
 * are untouched and gsm_last_error() returns a message for the calling
 * thread. Handles are freed with their matching *_free function; freeing
 * NULL is a no-op.
 */

#ifndef GSM_H
#define GSM_H

#include <stddef.h>

#if defined(_WIN32)
#define GSM_API __declspec(dllexport)
#else
#define GSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsm_status {
    GSM_OK = 0,
    GSM_ERROR_DOMAIN = 1,   /* argument outside the physical/valid domain */
    GSM_ERROR_CONTRACT = 2, /* API misuse: null handle, size mismatch, bad name */
    GSM_ERROR_NUMERIC = 3,  /* iteration failure inside a solver */
    GSM_ERROR_INTERNAL = 4
} gsm_status;

/* Message for the most recent failing call in this thread. Never NULL. */
GSM_API const char* gsm_last_error(void);

GSM_API const char* gsm_version(void);

/* ------------------------------------------------------------------ */
/* Parameters and kinetics                                             */
/* ------------------------------------------------------------------ */

typedef struct gsm_dimensional_params {
    double c_g_star;  /* external glucose concentration [mol/cm^3] */
    double c_ox_star; /* external oxygen concentration [mol/cm^3] */
    double d_g;       /* glucose diffusion coefficient [cm^2/s] */
    double d_ox;      /* oxygen diffusion coefficient [cm^2/s] */
    double d_a;       /* gluconic acid diffusion coefficient [cm^2/s] */
    double k_g;       /* glucose Michaelis-Menten constant [mol/cm^3] */
    double k_ox;      /* oxygen Michaelis-Menten constant [mol/cm^3] */
    double v_max;     /* maximal reaction rate [mol/(s cm^3)] */
    double half_thickness; /* membrane half-thickness [cm] */
} gsm_dimensional_params;

/* The six reduced parameters driving every solver. */
typedef struct gsm_params {
    double alpha;    /* c_g_star / k_g */
    double beta;     /* c_ox_star / k_ox */
    double gamma_e1; /* glucose Thiele parameter */
    double gamma_s1; /* oxygen/acid Thiele parameter */
    double eta;      /* d_ox / d_g */
    double mu;       /* d_a / d_g */
} gsm_params;

GSM_API gsm_status gsm_nondimensionalize(const gsm_dimensional_params* in, gsm_params* out);

/* Saturating two-substrate rate law [mol/(s cm^3)]. */
GSM_API gsm_status gsm_reaction_rate(const gsm_dimensional_params* p, double c_g, double c_ox,
                                     double* rate);

/* Reduced reaction term g(u, v) = u v / (u v + v/alpha + u/beta). */
GSM_API gsm_status gsm_reaction_term(double u, double v, double alpha, double beta, double* g);

/* Initial reduced concentrations at x in [0, 1]. */
GSM_API gsm_status gsm_initial_profile(double x, double* u, double* v, double* w);

/* ------------------------------------------------------------------ */
/* Closed-form profiles                                                */
/* ------------------------------------------------------------------ */

typedef struct gsm_closed_form_coefficients {
    double k;      /* linearized Thiele group */
    double sqrt_k;
    double m;      /* trial-solution constant; equals sqrt(k) to root tolerance */
    double a_v;    /* oxygen amplitude  gamma_s1 / (2 eta gamma_e1) */
    double b_w;    /* gluconic amplitude gamma_s1 / (mu gamma_e1) */
} gsm_closed_form_coefficients;

GSM_API gsm_status gsm_thiele_k(double gamma_e1, double alpha, double beta, double* k);

/* Root of the trial-solution constraint at X = 1, |m^2 - k| < tol. */
GSM_API gsm_status gsm_agm_m(double gamma_e1, double alpha, double beta, double tol, double* m);

GSM_API gsm_status gsm_closed_form_coefficients_compute(const gsm_params* p, double root_tol,
                                                        gsm_closed_form_coefficients* out);

enum {
    GSM_CLOSED_FORM_VIM = 0, /* cosh profile with sqrt(k) */
    GSM_CLOSED_FORM_AGM = 1  /* cosh profile with the root-solved m */
};

/* Steady closed-form profiles of all three species at x in [0, 1]. */
GSM_API gsm_status gsm_closed_form_profile(const gsm_params* p, int method, double x, double* u,
                                           double* v, double* w);

/* Short-time transient profiles at (x, tau). */
GSM_API gsm_status gsm_vim_profile(const gsm_params* p, double x, double tau, double* u,
                                   double* v, double* w);

/* ------------------------------------------------------------------ */
/* Nonlinear solver                                                    */
/* ------------------------------------------------------------------ */

typedef struct gsm_solver_config {
    int grid_n;        /* number of grid points, >= 3 */
    double dt;         /* implicit Euler step */
    double newton_tol; /* residual infinity-norm target */
    int newton_max_iters;
    double steady_tol; /* rate norm marking steady state */
    double damping_min;
} gsm_solver_config;

/* n = 201, dt = 1e-3, newton_tol = 1e-10, 50 iterations,
 * steady_tol = 1e-8, damping_min = 1/64. */
GSM_API void gsm_solver_config_defaults(gsm_solver_config* cfg);

/* A concentration field sampled on a uniform grid; opaque. */
typedef struct gsm_field gsm_field;

GSM_API size_t gsm_field_size(const gsm_field* f);

/* Sampling time; HUGE_VAL marks a directly solved steady state. */
GSM_API double gsm_field_tau(const gsm_field* f);

/* Copies the grid and concentrations into caller buffers of gsm_field_size
 * elements. Any destination may be NULL to skip that column. */
GSM_API gsm_status gsm_field_values(const gsm_field* f, double* x, double* u, double* v,
                                    double* w);

GSM_API void gsm_field_free(gsm_field* f);

/* Newton solve of the steady system started from the closed forms. */
GSM_API gsm_status gsm_solve_steady(const gsm_params* p, const gsm_solver_config* cfg,
                                    gsm_field** out);

/* Implicit Euler integration from the built-in initial profile, sampling at
 * the requested times (sorted, within [0, tau_end]). On success *fields_out
 * receives an array of n_samples handles, released as a whole with
 * gsm_field_array_free. reached_steady (optional) is set to 1 if the rate
 * norm fell below steady_tol before tau_end. */
GSM_API gsm_status gsm_solve_transient(const gsm_params* p, const gsm_solver_config* cfg,
                                       double tau_end, const double* sample_taus,
                                       size_t n_samples, gsm_field*** fields_out,
                                       int* reached_steady);

GSM_API void gsm_field_array_free(gsm_field** fields, size_t n);

/* Infinity norm of the semidiscrete time derivatives at the field state. */
GSM_API gsm_status gsm_residual_norm(const gsm_field* f, const gsm_params* p, double* rate_norm);

/* Richardson order estimate from steady solves on nested grids
 * (each size 2n-1 of the previous; at least 3 sizes). *exact is set to 1
 * when solutions agree to roundoff and *order then carries NaN. */
GSM_API gsm_status gsm_estimate_convergence_order(const gsm_params* p,
                                                  const gsm_solver_config* cfg,
                                                  const int* grid_sizes, size_t n_sizes,
                                                  double* order, int* exact);

/* ------------------------------------------------------------------ */
/* Validation                                                          */
/* ------------------------------------------------------------------ */

enum {
    GSM_SPECIES_GLUCOSE = 0,
    GSM_SPECIES_OXYGEN = 1,
    GSM_SPECIES_GLUCONIC_ACID = 2
};

typedef struct gsm_invariant_audit {
    double coupling_uv; /* max |gS1 u - 2 eta gE1 v - (gS1 - 2 eta gE1)| */
    double coupling_uw; /* max |gS1 u + mu gE1 w - gS1| */
    double boundary;    /* max violation of u=v=1, w=0 at X=1 */
    int u_nondecreasing;
    int v_nondecreasing;
    int w_nonincreasing;
    double min_u, min_v, min_w;
    int negative_concentration;
} gsm_invariant_audit;

GSM_API gsm_status gsm_check_steady_invariants(const gsm_field* f, const gsm_params* p,
                                               gsm_invariant_audit* out);

/* Numerical-vs-closed-form comparison table; opaque. */
typedef struct gsm_table gsm_table;

/* table_id is 1 (glucose), 2 (oxygen) or 3 (gluconic acid); cfg may be NULL
 * for defaults. */
GSM_API gsm_status gsm_reproduce_table(int table_id, const gsm_solver_config* cfg,
                                       gsm_table** out);
GSM_API size_t gsm_table_scenario_count(const gsm_table* t);
GSM_API gsm_status gsm_table_scenario(const gsm_table* t, size_t scenario, gsm_params* params,
                                      int* qualitative);
GSM_API size_t gsm_table_row_count(const gsm_table* t, size_t scenario);
/* columns[6] = { x, numerical, vim, agm, dev_vim, dev_agm } */
GSM_API gsm_status gsm_table_row(const gsm_table* t, size_t scenario, size_t row,
                                 double columns[6]);
GSM_API gsm_status gsm_table_means(const gsm_table* t, size_t scenario, double* mean_dev_vim,
                                   double* mean_dev_agm);
GSM_API void gsm_table_free(gsm_table* t);

/* Closed-form profile sweep over one parameter; opaque. Valid parameter
 * names: alpha, beta, gammaE1, gammaS1, eta, mu, k. */
typedef struct gsm_sweep gsm_sweep;

GSM_API gsm_status gsm_profile_sweep(int species, const char* parameter, const double* values,
                                     size_t n_values, const gsm_params* fixed, size_t resolution,
                                     gsm_sweep** out);
GSM_API size_t gsm_sweep_series_count(const gsm_sweep* s);
GSM_API size_t gsm_sweep_resolution(const gsm_sweep* s);
GSM_API gsm_status gsm_sweep_x(const gsm_sweep* s, double* x);
/* name_out (optional) receives a pointer owned by the sweep handle. */
GSM_API gsm_status gsm_sweep_series(const gsm_sweep* s, size_t series, const char** name_out,
                                    double* value_out, double* y_out);
GSM_API void gsm_sweep_free(gsm_sweep* s);

/* Local sensitivity shares; opaque. */
typedef struct gsm_sensitivity gsm_sensitivity;

enum {
    GSM_FUNCTIONAL_VALUE_AT_CENTER = 0, /* profile value at X = 0 */
    GSM_FUNCTIONAL_MEAN_OVER_X = 1      /* trapezoidal mean over [0, 1] */
};

/* Central-difference normalized sensitivities of the steady solution with
 * relative perturbation delta in (0, 0.1]; cfg may be NULL for defaults. */
GSM_API gsm_status gsm_sensitivity_analysis(int target_species, const gsm_params* p,
                                            const gsm_solver_config* cfg, double delta,
                                            int functional, gsm_sensitivity** out);
GSM_API size_t gsm_sensitivity_count(const gsm_sensitivity* s);
GSM_API gsm_status gsm_sensitivity_entry(const gsm_sensitivity* s, size_t index,
                                         const char** parameter, double* sensitivity,
                                         double* share_percent, int* failed);
GSM_API void gsm_sensitivity_free(gsm_sensitivity* s);

#ifdef __cplusplus
}
#endif

#endif /* GSM_H */
