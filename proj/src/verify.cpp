#include "lvspread/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "lvspread/error.hpp"
#include "lvspread/fronts.hpp"
#include "lvspread/speeds.hpp"
#include "parallel.hpp"

namespace lvs {

namespace {

std::string describe(const char* what, double v) {
  std::ostringstream os;
  os.precision(6);
  os << what << " " << v;
  return os.str();
}

CheckResult upper_check(std::string name, double measured, double tol, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tol;
  c.passed = measured <= tol;
  c.detail = std::move(detail);
  return c;
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult c;
  c.name = std::move(name);
  c.skipped = true;
  c.passed = true;
  c.detail = std::move(why);
  return c;
}

struct GridPoint {
  double t, x, closed, numeric, line_excess;
  std::optional<double> two_segment;
};

}  // namespace

bool VerifyReport::all_mandatory_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.mandatory || c.passed; });
}

LagrangianSpec slow_species_lagrangian(const ModelParams& p) {
  if (p.dr() >= 1.0) return {LagrangianKind::L1, c1(p), 2.0, p.a()};
  const SwappedParams sw = swap_roles(p);
  return {LagrangianKind::L1, c1(sw.params), 2.0, sw.params.a()};
}

VerifyReport verify_run(const VerifyConfig& cfg) {
  require(cfg.grid_n >= 2, "verify grid needs at least 2 points per axis");
  VerifyReport rep;
  const LagrangianSpec l1 = slow_species_lagrangian(cfg.params);
  const double c1 = l1.c1, a = l1.a;
  const int n_knots = cfg.action.n_knots;

  // Oracle grid over all four branches of J1.
  const int g = cfg.grid_n;
  std::vector<GridPoint> pts(static_cast<std::size_t>(g * g));
  detail::parallel_for(pts.size(), cfg.threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / g, j = static_cast<int>(idx) % g;
    GridPoint& p = pts[idx];
    p.t = 0.5 + 1.5 * i / (g - 1);
    p.x = -2.0 + (1.2 * c1 * p.t + 2.0) * j / (g - 1);
    p.closed = j1_closed(p.t, p.x, c1, a);
    const ActionResult r = minimize_action(p.t, p.x, l1, cfg.action);
    p.numeric = r.value;
    p.line_excess = -std::numeric_limits<double>::infinity();
    if (p.x < c1 * p.t) {
      for (std::size_t k = 0; k < r.minimizer.times.size(); ++k) {
        p.line_excess =
            std::max(p.line_excess, r.minimizer.positions[k] - c1 * r.minimizer.times[k]);
      }
    }
    if (p.x >= 0.0 && p.x < c1 * p.t) p.two_segment = minimize_two_segment(p.t, p.x, l1).value;
  });

  double worst = 0.0, undershoot = 0.0, seg_closed = 0.0, seg_numeric = 0.0, excess = 0.0;
  for (const GridPoint& p : pts) {
    worst = std::max(worst, std::abs(p.numeric - p.closed));
    undershoot = std::max(undershoot, p.closed - p.numeric);
    if (p.two_segment) {
      seg_closed = std::max(seg_closed, std::abs(*p.two_segment - p.closed));
      seg_numeric = std::max(seg_numeric, std::abs(*p.two_segment - p.numeric));
    }
    if (p.x < c1 * p.t) excess = std::max(excess, p.line_excess / (c1 * p.t / (n_knots - 1)));
  }
  {
    CheckResult c = upper_check("oracle_vs_closed_form", worst, 1e-3,
                                describe("largest closed - numeric", undershoot));
    c.passed = c.passed && undershoot <= 1e-6;
    rep.checks.push_back(c);
  }
  rep.checks.push_back(upper_check("two_segment_vs_closed_form", seg_closed, 1e-9));
  rep.checks.push_back(upper_check("two_segment_vs_numeric", seg_numeric, 1e-3));
  rep.checks.push_back(upper_check("minimizer_below_fast_line", excess, 1.0,
                                   "in units of one knot step c1 t/(n_knots-1)"));

  // Freidlin's condition on the zero level line.
  const double c0 = zero_level_speed(c1, a);
  {
    const FreidlinReport fr = freidlin_check(l1, {{1.0, c0}, {2.0, 2.0 * c0}}, cfg.action);
    rep.checks.push_back(upper_check("freidlin", fr.max_discrepancy, 2e-3));
  }

  // Cone behind the fast front where J1 = J2.
  double delta_star = 0.0;
  if (c1 > 2.0) {
    const LagrangianSpec l2{LagrangianKind::L2, c1, 2.0, a};
    const DeltaStarEstimate ds = delta_star_estimate(l2, cfg.action);
    delta_star = ds.warning ? 0.0 : ds.delta;
    CheckResult c;
    c.name = "delta_star_positive";
    c.measured = delta_star;
    c.tolerance = 0.0;
    c.passed = delta_star > 0.0;
    c.detail = describe("max |J1 - J2| on accepted ray", ds.discrepancy);
    rep.checks.push_back(c);

    double beyond = 0.0;
    for (double t : {0.5, 1.0, 1.5, 2.0}) {
      for (double dq : {0.05, 0.3, 1.0}) {
        const double x = (c1 + dq) * t;
        beyond = std::max(beyond,
                          std::abs(minimize_action(t, x, l2, cfg.action).value - j1_closed(t, x, c1, a)));
      }
    }
    rep.checks.push_back(upper_check("j1_equals_j2_beyond_c1", beyond, 1e-3));
  } else {
    rep.checks.push_back(skipped("delta_star_positive", "needs c1 > 2"));
    rep.checks.push_back(skipped("j1_equals_j2_beyond_c1", "needs c1 > 2"));
  }

  // Closed-form sweeps.
  std::mt19937_64 rng(cfg.action.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  {
    double err = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double s = 0.1 + 2.0 * unit(rng);
      const double x = (unit(rng) * 2.0 - 0.5) * c1 * s;
      const double q = 8.0 * unit(rng) - 4.0;
      const LagrangianSpec spec = i % 2 == 0 || c1 <= 2.0 ? l1 : LagrangianSpec{LagrangianKind::L2, c1, 2.0, a};
      err = std::max(err, std::abs(legendre_numeric(spec, s, x, q, 1e-3) - lagrangian(spec, s, x, q)));
    }
    rep.checks.push_back(upper_check("legendre_duality", err, 1e-6));
  }
  {
    double jump = 0.0, scale_err = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double aa = 0.02 + 0.96 * unit(rng);
      const double cc = 2.0 * std::sqrt(aa) + 0.05 + 3.0 * unit(rng);
      const double t = 0.2 + 3.0 * unit(rng);
      for (double q : {0.0, cc - 2.0 * std::sqrt(aa), cc}) {
        const double h = 1e-12 * std::max(1.0, std::abs(q));
        const double left = j1_closed(t, (q - h) * t, cc, aa);
        const double right = j1_closed(t, (q + h) * t, cc, aa);
        jump = std::max(jump, std::abs(left - right));
      }
      const double k = 0.1 + 5.0 * unit(rng);
      const double x = (unit(rng) * 1.6 - 0.3) * cc * t;
      const double base = j1_closed(t, x, cc, aa);
      scale_err = std::max(scale_err, std::abs(j1_closed(k * t, k * x, cc, aa) - k * base) /
                                          std::max(1.0, std::abs(k * base)));
    }
    rep.checks.push_back(upper_check("j1_continuity", jump, 1e-10));
    rep.checks.push_back(upper_check("j1_scaling", scale_err, 1e-12));
  }

  if (!cfg.run_simulation) {
    rep.checks.push_back(skipped("wkb_vs_w1", "simulation skipped"));
    rep.checks.push_back(skipped("decay_rate", "simulation skipped"));
    return rep;
  }
  if (classify_regime(cfg.params).tag != RegimeTag::FastV) {
    rep.checks.push_back(skipped("wkb_vs_w1", "needs dr > 1"));
    rep.checks.push_back(skipped("decay_rate", "needs dr > 1"));
    return rep;
  }

  const Trajectory traj = run(cfg.params, cfg.grid, cfg.ic, cfg.scheme, cfg.t_end);
  const double cn = c_nlp(cfg.params).value;
  if (delta_star > 0.0) {
    const WkbProfile w = wkb_profile(traj, 1.0 / cfg.t_end);
    double err = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < w.xi.size(); ++i) {
      if (w.xi[i] < cn + 0.1 || w.xi[i] > c1 - delta_star) continue;
      err = std::max(err, std::abs(w.w[i] - w1_closed(1.0, w.xi[i], c1, a)));
      ++used;
    }
    CheckResult c = upper_check("wkb_vs_w1", err, 0.15, describe("nodes compared", used));
    c.passed = c.passed && used > 0;
    rep.checks.push_back(c);
  } else {
    rep.checks.push_back(skipped("wkb_vs_w1", "no positive delta* estimate"));
  }
  {
    const double target = mu_hat(cfg.c_hat, c1, a);
    const RateEstimate r = decay_rate(traj, cfg.c_hat, 0.5 * cfg.t_end, cfg.t_end);
    rep.checks.push_back(upper_check("decay_rate", std::abs(r.mu - target) / target, 0.2,
                                     describe("fitted mu", r.mu)));
  }
  return rep;
}

}  // namespace lvs
