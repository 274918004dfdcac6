/* Exercises the C interface from C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "lvspread/lvspread.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

#define NEAR(x, y, tol) EXPECT(fabs((x) - (y)) <= (tol))

static void test_model(void) {
  lvs_params p = {1.5, 1.0, 0.6, 0.5};
  double k1, k2, scale;
  int regime;
  lvs_params q;
  EXPECT(lvs_params_validate(&p) == LVS_OK);
  EXPECT(lvs_coexistence(&p, &k1, &k2) == LVS_OK);
  NEAR(k1, 0.4 / 0.7, 1e-12);
  NEAR(k2, 0.5 / 0.7, 1e-12);
  EXPECT(lvs_classify_regime(&p, &regime) == LVS_OK && regime == LVS_REGIME_FAST_V);

  lvs_params fast_u = {0.5, 1.0, 0.6, 0.5};
  EXPECT(lvs_swap_roles(&fast_u, &q, &scale) == LVS_OK);
  NEAR(q.d, 2.0, 1e-14);
  EXPECT(q.a == 0.5 && q.b == 0.6);
  NEAR(scale, sqrt(0.5), 1e-14);

  lvs_params bad = {1.0, 1.0, 1.2, 0.5};
  EXPECT(lvs_params_validate(&bad) == LVS_ERR_PARAMS);
  EXPECT(strstr(lvs_last_error(), "a") != NULL);
  EXPECT(lvs_coexistence(NULL, &k1, &k2) == LVS_ERR_ARGUMENT);
  EXPECT(strlen(lvs_version()) > 0);
}

static void test_speeds(void) {
  lvs_params p = {1.5, 1.0, 0.6, 0.5};
  lvs_speed_report s;
  double v;
  int branch;
  EXPECT(lvs_speed_report_compute(&p, 1, &s) == LVS_OK);
  NEAR(s.c1, 2.4495, 5e-5);
  NEAR(s.c2.lo, 1.3387, 5e-5);
  NEAR(s.c3.lo, -1.7321, 5e-5);
  NEAR(s.c_llw.lo, 1.2649, 5e-5);
  EXPECT(s.diagram_len == 4);
  EXPECT(strcmp(lvs_state_name(s.diagram[1].state), "(k1,k2)") == 0);
  EXPECT(!s.diagram[3].has_boundary);

  lvs_params bal = {1.0, 1.0, 0.6, 0.5};
  EXPECT(lvs_speed_report_compute(&bal, 1, &s) == LVS_OK);
  EXPECT(s.regime == LVS_REGIME_BALANCED && s.diagram_len == 3);
  NEAR(s.diagram[0].boundary.lo, -sqrt(2.0), 1e-12);

  EXPECT(lvs_c_nlp(&p, &v, &branch) == LVS_OK);
  NEAR(v, 1.338744, 1e-6);
  EXPECT(branch == LVS_BRANCH_NONLOCAL);
  EXPECT(lvs_j1_closed(1.0, 3.0, 2.0 * sqrt(1.5), 0.6, &v) == LVS_OK);
  NEAR(v, 1.25, 1e-12);
  EXPECT(lvs_mu_hat(2.0, 2.0 * sqrt(1.5), 0.6, &v) == LVS_OK);
  NEAR(v, 0.297665, 5e-6);
  EXPECT(lvs_mu_hat(0.5, 2.0 * sqrt(1.5), 0.6, &v) == LVS_ERR_ARGUMENT);
  EXPECT(lvs_lambda_llw(2.0, 0.6, &v) == LVS_OK);
  NEAR(v, 0.225403, 1e-6);
}

static void test_action(void) {
  lvs_lagrangian l1 = {LVS_L1, 2.0 * sqrt(1.5), 2.0, 0.6};
  lvs_minimize_options opt;
  lvs_action_result* r = NULL;
  double times[2] = {0.0, 1.0}, xs[2] = {-1.0, -1.0}, v;
  lvs_minimize_options_default(&opt);
  EXPECT(opt.n_knots == 64 && opt.n_restarts == 8);

  EXPECT(lvs_path_action(times, xs, 2, &l1, &v) == LVS_OK);
  NEAR(v, -0.4, 1e-14);
  EXPECT(lvs_minimize_action(1.0, 2.0, &l1, &opt, &r) == LVS_OK);
  NEAR(lvs_action_value(r), 0.297665, 1e-3);
  EXPECT(lvs_action_knot_count(r) == 64);
  EXPECT(lvs_action_method(r) == LVS_METHOD_NUMERIC);
  {
    double kt[64], kx[64];
    EXPECT(lvs_action_knots(r, kt, kx, 64) == LVS_OK);
    EXPECT(kt[0] == 0.0 && kt[63] == 1.0 && kx[63] == 2.0);
  }
  lvs_action_result_free(r);

  r = NULL;
  EXPECT(lvs_minimize_two_segment(1.0, 2.0, &l1, &r) == LVS_OK);
  NEAR(lvs_action_value(r), 0.297665, 5e-6);
  lvs_action_result_free(r);

  lvs_lagrangian bad = {LVS_L2, 2.0, 2.0, 0.6};
  r = NULL;
  EXPECT(lvs_minimize_action(1.0, 2.0, &bad, &opt, &r) == LVS_ERR_ARGUMENT);
  EXPECT(r == NULL);
  lvs_action_result_free(NULL);
}

static void test_simulation(void) {
  lvs_params p = {1.5, 1.0, 0.6, 0.5};
  lvs_grid g = {-120.0, 120.0, 0.1};
  lvs_initial_condition ic = {{-80.0, 0.0, 1.0, 0.0}, {-20.0, 0.0, 1.0, 0.0}, 1};
  lvs_scheme s;
  lvs_trajectory* tr = NULL;
  lvs_front_trace* ft = NULL;
  lvs_level lv = {LVS_FIELD_V, 0.6, LVS_RIGHTMOST_ABOVE};
  lvs_speed_estimate e;
  size_t n;
  int found;
  double x, t;
  const double *u, *v;

  lvs_scheme_default(&s);
  EXPECT(lvs_grid_size(&g, &n) == LVS_OK && n == 2401);
  EXPECT(lvs_simulate(&p, &g, &ic, &s, 20.0, 1, &tr) == LVS_OK);
  EXPECT(lvs_trajectory_snapshot_count(tr) == 21);
  EXPECT(lvs_trajectory_node_count(tr) == 2401);
  EXPECT(lvs_trajectory_snapshot(tr, 20, &t, &u, &v) == LVS_OK);
  NEAR(t, 20.0, 1e-12);
  EXPECT(u[0] >= 0.0 && u[0] <= 1.0);
  EXPECT(lvs_front_position(tr, 20, &lv, &found, &x) == LVS_OK && found);
  EXPECT(x > 30.0 && x < 2.0 * sqrt(1.5) * 20.0);
  EXPECT(lvs_track(tr, &lv, &ft) == LVS_OK);
  EXPECT(lvs_front_trace_length(ft) == 21);
  EXPECT(lvs_estimate_speed(ft, 0.5, &e) == LVS_OK);
  EXPECT(e.slope > 2.2 && e.slope < 2.6);
  lvs_front_trace_free(ft);
  EXPECT(lvs_trajectory_snapshot(tr, 99, &t, &u, &v) == LVS_ERR_ARGUMENT);
  lvs_trajectory_free(tr);

  tr = NULL;
  EXPECT(lvs_simulate(&p, &g, &ic, &s, 200.0, 1, &tr) == LVS_ERR_MARGIN);
  EXPECT(tr == NULL);
  EXPECT(strlen(lvs_last_error()) > 0);
}

int main(void) {
  test_model();
  test_speeds();
  test_action();
  test_simulation();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
