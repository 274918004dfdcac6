/* C interface to the lvspread library.
 *
 * Every function returns an lvs_status. On failure lvs_last_error() returns a
 * message for the calling thread, valid until that thread's next call.
 * Objects behind opaque pointers are released with their *_free function;
 * passing NULL to a *_free function is allowed. */
#ifndef LVSPREAD_H
#define LVSPREAD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LVS_API __declspec(dllexport)
#else
#define LVS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LVS_OK = 0,
  LVS_ERR_ARGUMENT = 1,
  LVS_ERR_PARAMS = 2,
  LVS_ERR_SOLVER = 3,
  LVS_ERR_MARGIN = 4,
  LVS_ERR_VERIFY = 5,
  LVS_ERR_INTERNAL = 9
} lvs_status;

LVS_API const char* lvs_last_error(void);
LVS_API const char* lvs_version(void);

/* ---- model ---------------------------------------------------------- */

typedef struct {
  double d, r, a, b;
} lvs_params;

enum { LVS_REGIME_FAST_V = 0, LVS_REGIME_BALANCED = 1, LVS_REGIME_FAST_U = 2 };

LVS_API int lvs_params_validate(const lvs_params* p);
LVS_API int lvs_coexistence(const lvs_params* p, double* k1, double* k2);
LVS_API int lvs_classify_regime(const lvs_params* p, int* regime);
LVS_API int lvs_swap_roles(const lvs_params* p, lvs_params* swapped, double* speed_scale);

/* ---- speeds --------------------------------------------------------- */

typedef struct {
  double lo, hi;
} lvs_interval;

enum { LVS_BRANCH_NONLOCAL = 0, LVS_BRANCH_LOCAL = 1 };
enum { LVS_STATE_SEMI_U = 0, LVS_STATE_COEXISTENCE = 1, LVS_STATE_SEMI_V = 2, LVS_STATE_TRIVIAL = 3 };

#define LVS_MAX_DIAGRAM 4

typedef struct {
  int state;
  int has_boundary;
  lvs_interval boundary; /* speed of the interface to the next state */
} lvs_diagram_entry;

typedef struct {
  int regime;
  int determinacy_assumed;
  double c1;
  lvs_interval c2;
  lvs_interval c3;
  double c_nlp;
  int nlp_branch;
  double bar_c_nlp;
  lvs_interval c_llw;
  lvs_interval tilde_c_llw;
  lvs_interval lambda_llw;
  lvs_interval tilde_lambda_llw;
  int diagram_len;
  lvs_diagram_entry diagram[LVS_MAX_DIAGRAM];
} lvs_speed_report;

LVS_API int lvs_speed_report_compute(const lvs_params* p, int assume_determinacy,
                                     lvs_speed_report* out);
LVS_API const char* lvs_state_name(int state);

LVS_API int lvs_c1(const lvs_params* p, double* out);
LVS_API int lvs_c_nlp(const lvs_params* p, double* value, int* branch);
LVS_API int lvs_bar_c_nlp(double c1, double a, double* out);
LVS_API int lvs_lambda_llw(double c_llw, double a, double* out);
LVS_API int lvs_tilde_lambda_llw(double tilde_c_llw, double d, double r, double b, double* out);
LVS_API int lvs_c_hat_mu(double c_hat, double mu_hat, double a, double c_llw, double lambda,
                         double* out);
LVS_API int lvs_tilde_c_hat_mu(double c_hat, double mu_hat, double d, double r, double b,
                               double tilde_c_llw, double tilde_lambda, double* out);
LVS_API int lvs_j1_closed(double t, double x, double c1, double a, double* out);
LVS_API int lvs_w1_closed(double t, double x, double c1, double a, double* out);
LVS_API int lvs_mu_hat(double c_hat, double c1, double a, double* out);
LVS_API int lvs_zero_level_speed(double c1, double a, double* out);

/* ---- action --------------------------------------------------------- */

enum { LVS_L1 = 0, LVS_L2 = 1 };
enum { LVS_METHOD_TWO_SEGMENT = 0, LVS_METHOD_NUMERIC = 1 };

typedef struct {
  int kind;
  double c1;
  double tilde_c1;
  double a;
} lvs_lagrangian;

typedef struct {
  int n_knots;
  int n_restarts;
  uint64_t seed;
  int has_min_speed;
  double min_speed;
} lvs_minimize_options;

typedef struct lvs_action_result lvs_action_result;

LVS_API void lvs_minimize_options_default(lvs_minimize_options* opt);
LVS_API int lvs_lagrangian_eval(const lvs_lagrangian* spec, double s, double x, double q,
                                double* out);
LVS_API int lvs_hamiltonian_eval(const lvs_lagrangian* spec, double t, double x, double p,
                                 double* out);
LVS_API int lvs_legendre_numeric(const lvs_lagrangian* spec, double s, double x, double q,
                                 double dp, double* out);
LVS_API int lvs_path_action(const double* times, const double* positions, size_t n,
                            const lvs_lagrangian* spec, double* out);
LVS_API int lvs_minimize_action(double t, double x, const lvs_lagrangian* spec,
                                const lvs_minimize_options* opt, lvs_action_result** out);
LVS_API int lvs_minimize_two_segment(double t, double x, const lvs_lagrangian* spec,
                                     lvs_action_result** out);
LVS_API double lvs_action_value(const lvs_action_result* r);
LVS_API int lvs_action_converged(const lvs_action_result* r);
LVS_API int lvs_action_method(const lvs_action_result* r);
LVS_API size_t lvs_action_knot_count(const lvs_action_result* r);
/* Copies min(cap, knot_count) knots. */
LVS_API int lvs_action_knots(const lvs_action_result* r, double* times, double* positions,
                             size_t cap);
LVS_API void lvs_action_result_free(lvs_action_result* r);

LVS_API int lvs_freidlin_check(const lvs_lagrangian* spec, const double* ts, const double* xs,
                               size_t n, const lvs_minimize_options* opt,
                               double* max_discrepancy);

typedef struct {
  double delta;
  int warning;
  double discrepancy;
  double tolerance;
  int probes;
} lvs_delta_star;

LVS_API int lvs_delta_star_estimate(const lvs_lagrangian* l2_spec,
                                    const lvs_minimize_options* opt, int bisection_steps,
                                    lvs_delta_star* out);

/* ---- solver --------------------------------------------------------- */

enum { LVS_SCHEME_EXPLICIT = 0, LVS_SCHEME_IMEX_CN = 1 };

typedef struct {
  double x_left, x_right, dx;
} lvs_grid;

typedef struct {
  double lo, hi;  /* closed interval */
  double inside;  /* value on [lo, hi] */
  double outside; /* value elsewhere */
} lvs_step_profile;

typedef struct {
  lvs_step_profile u0;
  lvs_step_profile v0;
  int require_hinf;
} lvs_initial_condition;

typedef struct {
  int scheme;
  double cfl;
  double dt;
  double snapshot_every;
} lvs_scheme;

typedef struct lvs_trajectory lvs_trajectory;

LVS_API void lvs_scheme_default(lvs_scheme* s);
LVS_API int lvs_grid_size(const lvs_grid* g, size_t* n);
LVS_API int lvs_margin_check(const lvs_params* p, const lvs_grid* g, double t_end, int* ok,
                             double* need_left, double* need_right);
LVS_API int lvs_simulate(const lvs_params* p, const lvs_grid* g, const lvs_initial_condition* ic,
                         const lvs_scheme* s, double t_end, int check_margins,
                         lvs_trajectory** out);
LVS_API size_t lvs_trajectory_snapshot_count(const lvs_trajectory* tr);
LVS_API size_t lvs_trajectory_node_count(const lvs_trajectory* tr);
LVS_API double lvs_trajectory_node_x(const lvs_trajectory* tr, size_t i);
LVS_API double lvs_trajectory_dt_used(const lvs_trajectory* tr);
LVS_API int64_t lvs_trajectory_steps(const lvs_trajectory* tr);
LVS_API double lvs_trajectory_max_excursion(const lvs_trajectory* tr);
/* Pointers stay valid until the trajectory is freed. */
LVS_API int lvs_trajectory_snapshot(const lvs_trajectory* tr, size_t k, double* t,
                                    const double** u, const double** v);
/* CSV with header x,u,v and 17 significant digits. */
LVS_API int lvs_trajectory_write_csv(const lvs_trajectory* tr, size_t k, const char* path);
LVS_API void lvs_trajectory_free(lvs_trajectory* tr);

/* ---- fronts --------------------------------------------------------- */

enum { LVS_FIELD_U = 0, LVS_FIELD_V = 1 };
enum { LVS_RIGHTMOST_ABOVE = 0, LVS_LEFTMOST_BELOW = 1 };

typedef struct {
  int field;
  double threshold;
  int direction;
} lvs_level;

typedef struct lvs_front_trace lvs_front_trace;

typedef struct {
  double ratio_at_end;
  double slope;
  double t_lo;
  double t_end;
  double residual;
  int samples;
} lvs_speed_estimate;

typedef struct {
  double deviation;
  double x_at_max;
  double t;
  int nodes;
} lvs_plateau;

typedef struct {
  double mu;
  double c_hat;
  double t_lo;
  double t_hi;
  double residual;
  int samples;
} lvs_rate;

LVS_API int lvs_front_position(const lvs_trajectory* tr, size_t k, const lvs_level* spec,
                               int* found, double* x);
LVS_API int lvs_track(const lvs_trajectory* tr, const lvs_level* spec, lvs_front_trace** out);
LVS_API size_t lvs_front_trace_length(const lvs_front_trace* ft);
LVS_API size_t lvs_front_trace_gap_count(const lvs_front_trace* ft);
LVS_API int lvs_front_trace_data(const lvs_front_trace* ft, double* times, double* positions,
                                 size_t cap);
LVS_API void lvs_front_trace_free(lvs_front_trace* ft);
LVS_API int lvs_estimate_speed(const lvs_front_trace* ft, double window_fraction,
                               lvs_speed_estimate* out);
/* c_lo may be -INFINITY. */
LVS_API int lvs_plateau_deviation(const lvs_trajectory* tr, double c_lo, double c_hi, double eta,
                                  double u_target, double v_target, lvs_plateau* out);
/* NaN bounds select the default window (later half of the run). */
LVS_API int lvs_decay_rate(const lvs_trajectory* tr, double c_hat, double t_lo, double t_hi,
                           lvs_rate* out);
/* Writes up to cap samples; *n_out receives the total node count. */
LVS_API int lvs_wkb_profile(const lvs_trajectory* tr, double epsilon, double* xi, double* w,
                            size_t cap, size_t* n_out);
LVS_API int lvs_estimate_c_llw(const lvs_params* p, const lvs_grid* g, const lvs_scheme* s,
                               double t_end, lvs_speed_estimate* out);

/* ---- verify --------------------------------------------------------- */

typedef struct {
  lvs_params params;
  lvs_minimize_options action;
  int grid_n;
  int run_simulation;
  int threads;
  lvs_grid grid;
  lvs_initial_condition ic;
  lvs_scheme scheme;
  double t_end;
  double c_hat;
} lvs_verify_config;

typedef struct lvs_verify_report lvs_verify_report;

LVS_API void lvs_verify_config_default(lvs_verify_config* cfg);
LVS_API int lvs_verify_run(const lvs_verify_config* cfg, lvs_verify_report** out);
LVS_API size_t lvs_verify_check_count(const lvs_verify_report* rep);
/* Strings stay valid until the report is freed; any output may be NULL. */
LVS_API int lvs_verify_check(const lvs_verify_report* rep, size_t i, const char** name,
                             int* mandatory, int* passed, int* skipped, double* measured,
                             double* tolerance, const char** detail);
LVS_API int lvs_verify_all_passed(const lvs_verify_report* rep);
LVS_API void lvs_verify_report_free(lvs_verify_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* LVSPREAD_H */
