/* frds: Fourier pseudo-spectral solver for space-fractional
 * reaction-diffusion systems on periodic rectangles.
 *
 * C interface to the solver library. All functions returning frds_status
 * report failure through the return code; frds_last_error() then carries a
 * human-readable message for the calling thread. Nodal arrays are n*n
 * doubles, row-major with the x1 index outermost. Handles are created and
 * destroyed by matching create/destroy calls; buffers returned through
 * double** are released with frds_buffer_free().
 */
#ifndef FRDS_H
#define FRDS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frds_status {
  FRDS_OK = 0,
  FRDS_ERR_CONFIG = 1,   /* bad parameters or configuration */
  FRDS_ERR_COMPUTE = 2,  /* numeric failure inside a computation */
  FRDS_ERR_DIVERGED = 3, /* solution blew up; frds_last_error_step() says when */
  FRDS_ERR_FORMAT = 4,   /* malformed input file */
  FRDS_ERR_IO = 5        /* filesystem failure */
} frds_status;

typedef struct frds_grid frds_grid;
typedef struct frds_model frds_model;
typedef struct frds_result frds_result;
typedef struct frds_table frds_table;
typedef struct frds_config frds_config;

const char* frds_version(void);

/* Message for the last failure on this thread; empty string if none. */
const char* frds_last_error(void);
/* Step index of the last divergence on this thread, -1 if none. */
long long frds_last_error_step(void);

/* ---- grids ---- */

/* Periodic rectangle [a1,b1) x [a2,b2) on an n x n grid; n even, >= 4. */
frds_status frds_grid_create(int n, double a1, double b1, double a2, double b2, frds_grid** out);
void frds_grid_destroy(frds_grid* grid);
int frds_grid_n(const frds_grid* grid);
void frds_grid_bounds(const frds_grid* grid, double out[4]);

/* ---- spectral field operations (nodal in, nodal out) ---- */

/* L2 norm over the rectangle, computed from Fourier coefficients. */
frds_status frds_l2_norm(const frds_grid* grid, const double* values, double* out);
/* Homogeneous Sobolev seminorm of order r (zero mode excluded). */
frds_status frds_hr_seminorm(const frds_grid* grid, const double* values, double r, double* out);
/* k_diff * (-Laplacian)^(alpha/2) applied spectrally; alpha in (1,2]. */
frds_status frds_fractional_laplacian(const frds_grid* grid, const double* in, double alpha,
                                      double k_diff, double* out);
/* Band-limit to modes [-m/2, m/2-1]^2; m even, 4 <= m <= n. */
frds_status frds_project(const frds_grid* grid, const double* in, int m, double* out);
/* Named benchmark initial data. Single-component names fill u and ignore v;
 * two-component names require both pointers. Names: ac_case1, ac_case2,
 * gs_disc, fhn_strips. */
frds_status frds_initial_condition(const frds_grid* grid, const char* name, double* u, double* v);

/* ---- models ---- */

frds_status frds_model_allen_cahn(const frds_grid* grid, double k_alpha, frds_model** out);
frds_status frds_model_gray_scott(const frds_grid* grid, double k_u, double k_v, double f_rate,
                                  double lambda_rate, frds_model** out);
frds_status frds_model_fitzhugh_nagumo(const frds_grid* grid, double k_u, double mu,
                                       double epsilon, double beta, double gamma, double delta,
                                       frds_model** out);
/* Forced scalar benchmark with closed-form solution; alpha is pinned. */
frds_status frds_model_manufactured(const frds_grid* grid, double k_alpha, double alpha,
                                    frds_model** out);
void frds_model_destroy(frds_model* model);
int frds_model_arity(const frds_model* model);
/* Linearization coefficient used by the stability analysis. */
double frds_model_rho(const frds_model* model);
/* Closed-form solution value; FRDS_ERR_CONFIG if the model has none. */
frds_status frds_model_exact(const frds_model* model, double x1, double x2, double t, double* out);
const char* frds_model_catalog(void);

/* ---- time integration ---- */

/* Called at each requested snapshot time; v is NULL for scalar models. */
typedef void (*frds_snapshot_cb)(void* user, double t, const double* u, const double* v, int n);

/* Integrate from nodal initial data to t_end (t_end/tau must be integral).
 * v0 is NULL for scalar models. snapshot_times may be NULL with count 0.
 * record_divergence nonzero: blow-up is recorded in the result instead of
 * failing the call. */
frds_status frds_run(const frds_model* model, const double* u0, const double* v0, double tau,
                     double kappa, double alpha, double t_end, const double* snapshot_times,
                     int snapshot_count, frds_snapshot_cb cb, void* user, int record_divergence,
                     frds_result** out);

void frds_result_destroy(frds_result* result);
int frds_result_arity(const frds_result* result);
int frds_result_n(const frds_result* result);
long long frds_result_steps(const frds_result* result);
int frds_result_diverged(const frds_result* result);
long long frds_result_diverged_step(const frds_result* result);
double frds_result_wall_seconds(const frds_result* result);
/* Running min / max / max-abs of component comp over the whole run. */
frds_status frds_result_stats(const frds_result* result, int comp, double* min_value,
                              double* max_value, double* max_abs);
/* Copy the final nodal field of component comp into out (n*n doubles). */
frds_status frds_result_field(const frds_result* result, int comp, double* out);
/* Deterministic text report (configuration echo plus component statistics);
 * available for results produced by frds_run_config, else NULL. */
const char* frds_result_report(const frds_result* result);

/* ---- stability of the two-step scheme ---- */

/* Verdicts: 0 stable, 1 marginal, 2 unstable. */
frds_status frds_stability_roots(double mu, double rho, double kappa, double tau,
                                 double* root_plus_re, double* root_plus_im,
                                 double* root_minus_re, double* root_minus_im,
                                 double* max_modulus);
frds_status frds_stability_verdict(double mu, double rho, double kappa, double tau, double tol,
                                   int* verdict);
frds_status frds_kappa_threshold(double mu, double rho, double tau, double* out);
frds_status frds_unconditional_kappa(double rho, double* out);
/* Smallest shift that keeps every step size below tau_star stable. */
frds_status frds_practical_kappa(double rho, double tau_star, double* out);
/* Worst verdict over mu_values per (tau, kappa) cell on a uniform grid.
 * verdicts: tau_count*kappa_count ints, tau outermost. boundary_kappa
 * (tau_count doubles, NULL to skip) gets the closed-form stability boundary
 * of the least-damped mode per tau sample. */
frds_status frds_stability_map(const double* mu_values, int mu_count, double rho, double tau_min,
                               double tau_max, int tau_count, double kappa_min, double kappa_max,
                               int kappa_count, double tol, int* verdicts, double* boundary_kappa);

/* ---- configuration-driven harness ---- */

frds_status frds_config_load(const char* path, frds_config** out);
frds_status frds_config_parse(const char* text, frds_config** out);
void frds_config_destroy(frds_config* config);

/* Run a `run` config. out_dir NULL or empty: nothing is written to disk;
 * otherwise snapshots, heatmaps, and a summary land there. Divergence is
 * recorded in the result, not returned as an error. A config handle is
 * consumed by the first harness call made with it. */
frds_status frds_run_config(frds_config* config, const char* out_dir, frds_result** out);

/* Temporal / spatial refinement studies over a config. */
frds_status frds_temporal_table(frds_config* config, frds_table** out);
frds_status frds_spatial_table(frds_config* config, frds_table** out);

void frds_table_destroy(frds_table* table);
int frds_table_rows(const frds_table* table);
/* Row status: 0 ok, 1 unstable, 2 saturated. error/order are NaN when the
 * row carries none. refinement is tau for time studies, n for space. */
frds_status frds_table_row(const frds_table* table, int row, double* refinement, double* error,
                           double* order, int* status);
const char* frds_table_csv(const frds_table* table);
frds_status frds_table_write_csv(const frds_table* table, const char* path);

/* ---- snapshots and images ---- */

frds_status frds_snapshot_write(const char* path, const frds_grid* grid, double time,
                                const double* values);
/* Allocates *grid_out and *values_out (n*n doubles). */
frds_status frds_snapshot_read(const char* path, frds_grid** grid_out, double* time_out,
                               double** values_out);
void frds_buffer_free(double* buffer);
/* 8-bit PGM, rows top-to-bottom in decreasing x2. use_range nonzero fixes
 * the gray scale to [lo, hi]; use_crop nonzero keeps nodes with
 * x1 in [x1_lo, x1_hi) and x2 in [x2_lo, x2_hi). */
frds_status frds_heatmap_write(const char* path, const frds_grid* grid, const double* values,
                               int use_range, double lo, double hi, int use_crop, double x1_lo,
                               double x1_hi, double x2_lo, double x2_hi);

#ifdef __cplusplus
}
#endif

#endif /* FRDS_H */
