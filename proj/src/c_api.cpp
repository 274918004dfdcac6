#include "lvspread/lvspread.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "lvspread/action.hpp"
#include "lvspread/error.hpp"
#include "lvspread/fronts.hpp"
#include "lvspread/model.hpp"
#include "lvspread/solver.hpp"
#include "lvspread/speeds.hpp"
#include "lvspread/verify.hpp"

struct lvs_action_result {
  lvs::ActionResult r;
};

struct lvs_trajectory {
  lvs::Trajectory t;
};

struct lvs_front_trace {
  lvs::FrontTrace f;
};

struct lvs_verify_report {
  lvs::VerifyReport r;
};

namespace {

thread_local std::string g_error;

template <class Fn>
int guard(Fn&& fn) {
  try {
    fn();
    g_error.clear();
    return LVS_OK;
  } catch (const lvs::Error& e) {
    g_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return LVS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return LVS_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return LVS_ERR_INTERNAL;
  }
}

template <class T>
T& deref(T* p, const char* what) {
  lvs::require(p != nullptr, std::string(what) + " is NULL");
  return *p;
}

template <class T>
const T& deref(const T* p, const char* what) {
  lvs::require(p != nullptr, std::string(what) + " is NULL");
  return *p;
}

lvs::ModelParams to_cpp(const lvs_params* p) {
  const lvs_params& q = deref(p, "params");
  return lvs::ModelParams(q.d, q.r, q.a, q.b);
}

lvs::LagrangianSpec to_cpp(const lvs_lagrangian* s) {
  const lvs_lagrangian& q = deref(s, "lagrangian");
  lvs::require(q.kind == LVS_L1 || q.kind == LVS_L2, "unknown Lagrangian kind");
  lvs::LagrangianSpec out{q.kind == LVS_L1 ? lvs::LagrangianKind::L1 : lvs::LagrangianKind::L2,
                          q.c1, q.tilde_c1, q.a};
  lvs::validate(out);
  return out;
}

lvs::MinimizeOptions to_cpp(const lvs_minimize_options* o) {
  lvs::MinimizeOptions out;
  if (!o) return out;
  out.n_knots = o->n_knots;
  out.n_restarts = o->n_restarts;
  out.seed = o->seed;
  if (o->has_min_speed) out.min_speed = o->min_speed;
  return out;
}

lvs::Grid1D to_cpp(const lvs_grid* g) {
  const lvs_grid& q = deref(g, "grid");
  lvs::Grid1D out{q.x_left, q.x_right, q.dx};
  lvs::validate(out);
  return out;
}

lvs::StepProfile to_cpp(const lvs_step_profile& s) { return {s.lo, s.hi, s.inside, s.outside}; }

lvs::InitialCondition to_cpp(const lvs_initial_condition* ic) {
  const lvs_initial_condition& q = deref(ic, "initial condition");
  return {to_cpp(q.u0), to_cpp(q.v0), q.require_hinf != 0};
}

lvs::SchemeConfig to_cpp(const lvs_scheme* s) {
  const lvs_scheme& q = deref(s, "scheme");
  lvs::require(q.scheme == LVS_SCHEME_EXPLICIT || q.scheme == LVS_SCHEME_IMEX_CN,
               "unknown scheme");
  lvs::SchemeConfig out;
  out.scheme = q.scheme == LVS_SCHEME_EXPLICIT ? lvs::Scheme::ExplicitEuler : lvs::Scheme::ImexCN;
  out.cfl = q.cfl;
  out.dt = q.dt;
  out.snapshot_every = q.snapshot_every;
  lvs::validate(out);
  return out;
}

lvs::LevelSpec to_cpp(const lvs_level* l) {
  const lvs_level& q = deref(l, "level");
  lvs::require(q.field == LVS_FIELD_U || q.field == LVS_FIELD_V, "unknown field");
  lvs::require(q.direction == LVS_RIGHTMOST_ABOVE || q.direction == LVS_LEFTMOST_BELOW,
               "unknown direction");
  lvs::LevelSpec out{q.field == LVS_FIELD_U ? lvs::Field::U : lvs::Field::V, q.threshold,
                     q.direction == LVS_RIGHTMOST_ABOVE ? lvs::Direction::RightmostAbove
                                                        : lvs::Direction::LeftmostBelow};
  lvs::validate(out);
  return out;
}

lvs_interval to_c(const lvs::Interval& i) { return {i.lo, i.hi}; }

int state_code(lvs::Plateau p) {
  switch (p) {
    case lvs::Plateau::SemiU: return LVS_STATE_SEMI_U;
    case lvs::Plateau::Coexistence: return LVS_STATE_COEXISTENCE;
    case lvs::Plateau::SemiV: return LVS_STATE_SEMI_V;
    case lvs::Plateau::Trivial: return LVS_STATE_TRIVIAL;
  }
  return LVS_STATE_TRIVIAL;
}

int regime_code(lvs::RegimeTag t) {
  switch (t) {
    case lvs::RegimeTag::FastV: return LVS_REGIME_FAST_V;
    case lvs::RegimeTag::Balanced: return LVS_REGIME_BALANCED;
    case lvs::RegimeTag::FastU: return LVS_REGIME_FAST_U;
  }
  return LVS_REGIME_FAST_V;
}

void to_c(const lvs::SpeedEstimate& e, lvs_speed_estimate* out) {
  *out = {e.ratio_at_end, e.slope, e.t_lo, e.t_end, e.residual, e.samples};
}

template <class Fn>
int scalar(double* out, Fn&& fn) {
  return guard([&] { deref(out, "output") = fn(); });
}

const lvs::Snapshot& snapshot_at(const lvs_trajectory* tr, size_t k) {
  const lvs::Trajectory& t = deref(tr, "trajectory").t;
  lvs::require(k < t.snapshots.size(), "snapshot index out of range");
  return t.snapshots[k];
}

}  // namespace

extern "C" {

const char* lvs_last_error(void) { return g_error.c_str(); }

const char* lvs_version(void) { return "1.0.0"; }

int lvs_params_validate(const lvs_params* p) {
  return guard([&] { (void)to_cpp(p); });
}

int lvs_coexistence(const lvs_params* p, double* k1, double* k2) {
  return guard([&] {
    const lvs::Density k = lvs::coexistence_equilibrium(to_cpp(p));
    deref(k1, "k1") = k.u;
    deref(k2, "k2") = k.v;
  });
}

int lvs_classify_regime(const lvs_params* p, int* regime) {
  return guard([&] { deref(regime, "regime") = regime_code(lvs::classify_regime(to_cpp(p)).tag); });
}

int lvs_swap_roles(const lvs_params* p, lvs_params* swapped, double* speed_scale) {
  return guard([&] {
    const lvs::SwappedParams s = lvs::swap_roles(to_cpp(p));
    deref(swapped, "swapped") = {s.params.d(), s.params.r(), s.params.a(), s.params.b()};
    deref(speed_scale, "speed_scale") = s.speed_scale;
  });
}

int lvs_speed_report_compute(const lvs_params* p, int assume_determinacy, lvs_speed_report* out) {
  return guard([&] {
    const lvs::SpeedTheory s = lvs::speed_report(to_cpp(p), assume_determinacy != 0);
    lvs_speed_report& r = deref(out, "report");
    r = lvs_speed_report{};
    r.regime = regime_code(s.regime.tag);
    r.determinacy_assumed = s.determinacy_assumed ? 1 : 0;
    r.c1 = s.c1;
    r.c2 = to_c(s.c2);
    r.c3 = to_c(s.c3);
    r.c_nlp = s.c_nlp.value;
    r.nlp_branch = s.c_nlp.branch == lvs::NlpBranch::Nonlocal ? LVS_BRANCH_NONLOCAL : LVS_BRANCH_LOCAL;
    r.bar_c_nlp = s.bar_c_nlp;
    r.c_llw = to_c(s.c_llw);
    r.tilde_c_llw = to_c(s.tilde_c_llw);
    r.lambda_llw = to_c(s.lambda_llw);
    r.tilde_lambda_llw = to_c(s.tilde_lambda_llw);
    r.diagram_len = static_cast<int>(s.diagram.size());
    for (std::size_t i = 0; i < s.diagram.size() && i < LVS_MAX_DIAGRAM; ++i) {
      r.diagram[i].state = state_code(s.diagram[i].state);
      r.diagram[i].has_boundary = s.diagram[i].boundary.has_value() ? 1 : 0;
      if (s.diagram[i].boundary) r.diagram[i].boundary = to_c(*s.diagram[i].boundary);
    }
  });
}

const char* lvs_state_name(int state) {
  switch (state) {
    case LVS_STATE_SEMI_U: return "(1,0)";
    case LVS_STATE_COEXISTENCE: return "(k1,k2)";
    case LVS_STATE_SEMI_V: return "(0,1)";
    case LVS_STATE_TRIVIAL: return "(0,0)";
    default: return "?";
  }
}

int lvs_c1(const lvs_params* p, double* out) {
  return scalar(out, [&] { return lvs::c1(to_cpp(p)); });
}

int lvs_c_nlp(const lvs_params* p, double* value, int* branch) {
  return guard([&] {
    const lvs::NlpSpeed s = lvs::c_nlp(to_cpp(p));
    deref(value, "value") = s.value;
    if (branch) *branch = s.branch == lvs::NlpBranch::Nonlocal ? LVS_BRANCH_NONLOCAL : LVS_BRANCH_LOCAL;
  });
}

int lvs_bar_c_nlp(double c1, double a, double* out) {
  return scalar(out, [&] { return lvs::bar_c_nlp(c1, a); });
}

int lvs_lambda_llw(double c_llw, double a, double* out) {
  return scalar(out, [&] { return lvs::lambda_llw(c_llw, a); });
}

int lvs_tilde_lambda_llw(double tilde_c_llw, double d, double r, double b, double* out) {
  return scalar(out, [&] { return lvs::tilde_lambda_llw(tilde_c_llw, d, r, b); });
}

int lvs_c_hat_mu(double c_hat, double mu_hat, double a, double c_llw, double lambda, double* out) {
  return scalar(out, [&] { return lvs::c_hat_mu(c_hat, mu_hat, a, c_llw, lambda); });
}

int lvs_tilde_c_hat_mu(double c_hat, double mu_hat, double d, double r, double b,
                       double tilde_c_llw, double tilde_lambda, double* out) {
  return scalar(out, [&] {
    return lvs::tilde_c_hat_mu(c_hat, mu_hat, d, r, b, tilde_c_llw, tilde_lambda);
  });
}

int lvs_j1_closed(double t, double x, double c1, double a, double* out) {
  return scalar(out, [&] { return lvs::j1_closed(t, x, c1, a); });
}

int lvs_w1_closed(double t, double x, double c1, double a, double* out) {
  return scalar(out, [&] { return lvs::w1_closed(t, x, c1, a); });
}

int lvs_mu_hat(double c_hat, double c1, double a, double* out) {
  return scalar(out, [&] { return lvs::mu_hat(c_hat, c1, a); });
}

int lvs_zero_level_speed(double c1, double a, double* out) {
  return scalar(out, [&] { return lvs::zero_level_speed(c1, a); });
}

void lvs_minimize_options_default(lvs_minimize_options* opt) {
  if (!opt) return;
  const lvs::MinimizeOptions d;
  *opt = {d.n_knots, d.n_restarts, d.seed, 0, 0.0};
}

int lvs_lagrangian_eval(const lvs_lagrangian* spec, double s, double x, double q, double* out) {
  return scalar(out, [&] { return lvs::lagrangian(to_cpp(spec), s, x, q); });
}

int lvs_hamiltonian_eval(const lvs_lagrangian* spec, double t, double x, double p, double* out) {
  return scalar(out, [&] { return lvs::hamiltonian(to_cpp(spec), t, x, p); });
}

int lvs_legendre_numeric(const lvs_lagrangian* spec, double s, double x, double q, double dp,
                         double* out) {
  return scalar(out, [&] { return lvs::legendre_numeric(to_cpp(spec), s, x, q, dp); });
}

int lvs_path_action(const double* times, const double* positions, size_t n,
                    const lvs_lagrangian* spec, double* out) {
  return scalar(out, [&] {
    lvs::require(times && positions, "path arrays are NULL");
    lvs::PiecewisePath p{{times, times + n}, {positions, positions + n}};
    return lvs::path_action(p, to_cpp(spec));
  });
}

int lvs_minimize_action(double t, double x, const lvs_lagrangian* spec,
                        const lvs_minimize_options* opt, lvs_action_result** out) {
  return guard([&] {
    lvs_action_result*& slot = deref(out, "output");
    slot = new lvs_action_result{lvs::minimize_action(t, x, to_cpp(spec), to_cpp(opt))};
  });
}

int lvs_minimize_two_segment(double t, double x, const lvs_lagrangian* spec,
                             lvs_action_result** out) {
  return guard([&] {
    lvs_action_result*& slot = deref(out, "output");
    slot = new lvs_action_result{lvs::minimize_two_segment(t, x, to_cpp(spec))};
  });
}

double lvs_action_value(const lvs_action_result* r) {
  return r ? r->r.value : std::numeric_limits<double>::quiet_NaN();
}

int lvs_action_converged(const lvs_action_result* r) { return r && r->r.converged ? 1 : 0; }

int lvs_action_method(const lvs_action_result* r) {
  return r && r->r.method == lvs::ActionMethod::TwoSegmentClosed ? LVS_METHOD_TWO_SEGMENT
                                                                  : LVS_METHOD_NUMERIC;
}

size_t lvs_action_knot_count(const lvs_action_result* r) {
  return r ? r->r.minimizer.times.size() : 0;
}

int lvs_action_knots(const lvs_action_result* r, double* times, double* positions, size_t cap) {
  return guard([&] {
    const lvs::PiecewisePath& p = deref(r, "result").r.minimizer;
    for (size_t i = 0; i < cap && i < p.times.size(); ++i) {
      if (times) times[i] = p.times[i];
      if (positions) positions[i] = p.positions[i];
    }
  });
}

void lvs_action_result_free(lvs_action_result* r) { delete r; }

int lvs_freidlin_check(const lvs_lagrangian* spec, const double* ts, const double* xs, size_t n,
                       const lvs_minimize_options* opt, double* max_discrepancy) {
  return scalar(max_discrepancy, [&] {
    lvs::require(n == 0 || (ts && xs), "point arrays are NULL");
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < n; ++i) pts.emplace_back(ts[i], xs[i]);
    return lvs::freidlin_check(to_cpp(spec), pts, to_cpp(opt)).max_discrepancy;
  });
}

int lvs_delta_star_estimate(const lvs_lagrangian* l2_spec, const lvs_minimize_options* opt,
                            int bisection_steps, lvs_delta_star* out) {
  return guard([&] {
    const lvs::DeltaStarEstimate e =
        lvs::delta_star_estimate(to_cpp(l2_spec), to_cpp(opt), bisection_steps);
    deref(out, "output") = {e.delta, e.warning ? 1 : 0, e.discrepancy, e.tolerance, e.probes};
  });
}

void lvs_scheme_default(lvs_scheme* s) {
  if (!s) return;
  const lvs::SchemeConfig d;
  *s = {LVS_SCHEME_EXPLICIT, d.cfl, d.dt, d.snapshot_every};
}

int lvs_grid_size(const lvs_grid* g, size_t* n) {
  return guard([&] { deref(n, "output") = static_cast<size_t>(to_cpp(g).n()); });
}

int lvs_margin_check(const lvs_params* p, const lvs_grid* g, double t_end, int* ok,
                     double* need_left, double* need_right) {
  return guard([&] {
    const lvs::MarginCheck m = lvs::margin_check(to_cpp(p), to_cpp(g), t_end);
    deref(ok, "ok") = m.ok ? 1 : 0;
    if (need_left) *need_left = m.need_left;
    if (need_right) *need_right = m.need_right;
  });
}

int lvs_simulate(const lvs_params* p, const lvs_grid* g, const lvs_initial_condition* ic,
                 const lvs_scheme* s, double t_end, int check_margins, lvs_trajectory** out) {
  return guard([&] {
    lvs_trajectory*& slot = deref(out, "output");
    lvs::RunOptions opt;
    opt.check_margins = check_margins != 0;
    slot = new lvs_trajectory{lvs::run(to_cpp(p), to_cpp(g), to_cpp(ic), to_cpp(s), t_end, opt)};
  });
}

size_t lvs_trajectory_snapshot_count(const lvs_trajectory* tr) {
  return tr ? tr->t.snapshots.size() : 0;
}

size_t lvs_trajectory_node_count(const lvs_trajectory* tr) {
  return tr ? static_cast<size_t>(tr->t.grid.n()) : 0;
}

double lvs_trajectory_node_x(const lvs_trajectory* tr, size_t i) {
  return tr ? tr->t.grid.x(static_cast<int>(i)) : std::numeric_limits<double>::quiet_NaN();
}

double lvs_trajectory_dt_used(const lvs_trajectory* tr) { return tr ? tr->t.dt_used : 0.0; }

int64_t lvs_trajectory_steps(const lvs_trajectory* tr) { return tr ? tr->t.steps : 0; }

double lvs_trajectory_max_excursion(const lvs_trajectory* tr) {
  return tr ? tr->t.max_excursion : 0.0;
}

int lvs_trajectory_snapshot(const lvs_trajectory* tr, size_t k, double* t, const double** u,
                            const double** v) {
  return guard([&] {
    const lvs::Snapshot& s = snapshot_at(tr, k);
    if (t) *t = s.t;
    if (u) *u = s.u.data();
    if (v) *v = s.v.data();
  });
}

int lvs_trajectory_write_csv(const lvs_trajectory* tr, size_t k, const char* path) {
  return guard([&] {
    const lvs::Snapshot& s = snapshot_at(tr, k);
    lvs::require(path != nullptr, "path is NULL");
    std::FILE* f = std::fopen(path, "w");
    lvs::require(f != nullptr, std::string("cannot open ") + path + " for writing");
    std::fputs("x,u,v\n", f);
    const lvs::Grid1D& g = tr->t.grid;
    for (int i = 0; i < g.n(); ++i) std::fprintf(f, "%.17g,%.17g,%.17g\n", g.x(i), s.u[i], s.v[i]);
    const bool ok = std::fclose(f) == 0;
    lvs::require(ok, std::string("failed writing ") + path);
  });
}

void lvs_trajectory_free(lvs_trajectory* tr) { delete tr; }

int lvs_front_position(const lvs_trajectory* tr, size_t k, const lvs_level* spec, int* found,
                       double* x) {
  return guard([&] {
    const auto pos = lvs::front_position(deref(tr, "trajectory").t.grid, snapshot_at(tr, k), to_cpp(spec));
    deref(found, "found") = pos ? 1 : 0;
    if (x) *x = pos ? *pos : std::numeric_limits<double>::quiet_NaN();
  });
}

int lvs_track(const lvs_trajectory* tr, const lvs_level* spec, lvs_front_trace** out) {
  return guard([&] {
    lvs_front_trace*& slot = deref(out, "output");
    slot = new lvs_front_trace{lvs::track(deref(tr, "trajectory").t, {to_cpp(spec)}).front()};
  });
}

size_t lvs_front_trace_length(const lvs_front_trace* ft) { return ft ? ft->f.times.size() : 0; }

size_t lvs_front_trace_gap_count(const lvs_front_trace* ft) { return ft ? ft->f.gaps.size() : 0; }

int lvs_front_trace_data(const lvs_front_trace* ft, double* times, double* positions, size_t cap) {
  return guard([&] {
    const lvs::FrontTrace& f = deref(ft, "trace").f;
    for (size_t i = 0; i < cap && i < f.times.size(); ++i) {
      if (times) times[i] = f.times[i];
      if (positions) positions[i] = f.positions[i];
    }
  });
}

void lvs_front_trace_free(lvs_front_trace* ft) { delete ft; }

int lvs_estimate_speed(const lvs_front_trace* ft, double window_fraction, lvs_speed_estimate* out) {
  return guard([&] {
    to_c(lvs::estimate_speed(deref(ft, "trace").f, window_fraction), &deref(out, "output"));
  });
}

int lvs_plateau_deviation(const lvs_trajectory* tr, double c_lo, double c_hi, double eta,
                          double u_target, double v_target, lvs_plateau* out) {
  return guard([&] {
    const lvs::PlateauDeviation d =
        lvs::plateau_deviation(deref(tr, "trajectory").t, c_lo, c_hi, eta, {u_target, v_target});
    deref(out, "output") = {d.deviation, d.x_at_max, d.t, d.nodes};
  });
}

int lvs_decay_rate(const lvs_trajectory* tr, double c_hat, double t_lo, double t_hi,
                   lvs_rate* out) {
  return guard([&] {
    std::optional<double> lo, hi;
    if (!std::isnan(t_lo)) lo = t_lo;
    if (!std::isnan(t_hi)) hi = t_hi;
    const lvs::RateEstimate r = lvs::decay_rate(deref(tr, "trajectory").t, c_hat, lo, hi);
    deref(out, "output") = {r.mu, r.c_hat, r.t_lo, r.t_hi, r.residual, r.samples};
  });
}

int lvs_wkb_profile(const lvs_trajectory* tr, double epsilon, double* xi, double* w, size_t cap,
                    size_t* n_out) {
  return guard([&] {
    const lvs::WkbProfile p = lvs::wkb_profile(deref(tr, "trajectory").t, epsilon);
    for (size_t i = 0; i < cap && i < p.xi.size(); ++i) {
      if (xi) xi[i] = p.xi[i];
      if (w) w[i] = p.w[i];
    }
    if (n_out) *n_out = p.xi.size();
  });
}

int lvs_estimate_c_llw(const lvs_params* p, const lvs_grid* g, const lvs_scheme* s, double t_end,
                       lvs_speed_estimate* out) {
  return guard([&] {
    to_c(lvs::estimate_c_llw(to_cpp(p), to_cpp(g), to_cpp(s), t_end).speed, &deref(out, "output"));
  });
}

void lvs_verify_config_default(lvs_verify_config* cfg) {
  if (!cfg) return;
  const lvs::VerifyConfig d;
  *cfg = lvs_verify_config{};
  cfg->params = {d.params.d(), d.params.r(), d.params.a(), d.params.b()};
  cfg->action = {d.action.n_knots, d.action.n_restarts, d.action.seed, 0, 0.0};
  cfg->grid_n = d.grid_n;
  cfg->run_simulation = d.run_simulation ? 1 : 0;
  cfg->threads = d.threads;
  cfg->grid = {d.grid.x_left, d.grid.x_right, d.grid.dx};
  cfg->ic.u0 = {d.ic.u0.lo, d.ic.u0.hi, d.ic.u0.inside, d.ic.u0.outside};
  cfg->ic.v0 = {d.ic.v0.lo, d.ic.v0.hi, d.ic.v0.inside, d.ic.v0.outside};
  cfg->ic.require_hinf = d.ic.require_hinf ? 1 : 0;
  lvs_scheme_default(&cfg->scheme);
  cfg->t_end = d.t_end;
  cfg->c_hat = d.c_hat;
}

int lvs_verify_run(const lvs_verify_config* cfg, lvs_verify_report** out) {
  return guard([&] {
    const lvs_verify_config& c = deref(cfg, "config");
    lvs_verify_report*& slot = deref(out, "output");
    lvs::VerifyConfig v;
    v.params = to_cpp(&c.params);
    v.action = to_cpp(&c.action);
    v.grid_n = c.grid_n;
    v.run_simulation = c.run_simulation != 0;
    v.threads = c.threads;
    v.grid = to_cpp(&c.grid);
    v.ic = to_cpp(&c.ic);
    v.scheme = to_cpp(&c.scheme);
    v.t_end = c.t_end;
    v.c_hat = c.c_hat;
    slot = new lvs_verify_report{lvs::verify_run(v)};
  });
}

size_t lvs_verify_check_count(const lvs_verify_report* rep) {
  return rep ? rep->r.checks.size() : 0;
}

int lvs_verify_check(const lvs_verify_report* rep, size_t i, const char** name, int* mandatory,
                     int* passed, int* skipped, double* measured, double* tolerance,
                     const char** detail) {
  return guard([&] {
    const lvs::VerifyReport& r = deref(rep, "report").r;
    lvs::require(i < r.checks.size(), "check index out of range");
    const lvs::CheckResult& c = r.checks[i];
    if (name) *name = c.name.c_str();
    if (mandatory) *mandatory = c.mandatory ? 1 : 0;
    if (passed) *passed = c.passed ? 1 : 0;
    if (skipped) *skipped = c.skipped ? 1 : 0;
    if (measured) *measured = c.measured;
    if (tolerance) *tolerance = c.tolerance;
    if (detail) *detail = c.detail.c_str();
  });
}

int lvs_verify_all_passed(const lvs_verify_report* rep) {
  return rep && rep->r.all_mandatory_passed() ? 1 : 0;
}

void lvs_verify_report_free(lvs_verify_report* rep) { delete rep; }

}  // extern "C"
