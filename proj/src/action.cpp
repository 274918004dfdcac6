#include "lvspread/action.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lvspread/error.hpp"
#include "lvspread/speeds.hpp"
#include "nelder_mead.hpp"

namespace lvs {

namespace {

constexpr double kSnap = 1e-12;
constexpr double kRideBand = 1e-6;

double snap(double h, double scale) { return std::abs(h) <= kSnap * scale ? 0.0 : h; }

// Sub-interval of [0, 1] on which h0 + (h1 - h0) th < 0 (possibly empty).
std::pair<double, double> negative_part(double h0, double h1) {
  if (h0 < 0.0 && h1 < 0.0) return {0.0, 1.0};
  if (h0 >= 0.0 && h1 >= 0.0) return {0.0, 0.0};
  const double cross = h0 / (h0 - h1);
  return h0 < 0.0 ? std::pair{0.0, cross} : std::pair{cross, 1.0};
}

double interval_length(std::pair<double, double> i) { return std::max(0.0, i.second - i.first); }

double penalized_fraction(const LagrangianSpec& spec, double s0, double x0, double s1,
                          double x1) {
  const double scale = 1.0 + std::abs(x0) + std::abs(x1) + std::abs(spec.c1) * s1;
  const double h0 = snap(x0 - spec.c1 * s0, scale);
  const double h1 = snap(x1 - spec.c1 * s1, scale);
  const auto below_fast = negative_part(h0, h1);
  if (spec.kind == LagrangianKind::L1) return interval_length(below_fast);
  const double g0 = snap(spec.tilde_c1 * s0 - x0, scale);
  const double g1 = snap(spec.tilde_c1 * s1 - x1, scale);
  const auto above_slow = negative_part(g0, g1);
  return interval_length({std::max(below_fast.first, above_slow.first),
                          std::min(below_fast.second, above_slow.second)});
}

double segment_action(const LagrangianSpec& spec, double s0, double x0, double s1, double x1) {
  const double ds = s1 - s0;
  const double q = (x1 - x0) / ds;
  return ds * (0.25 * q * q - 1.0 + spec.a * penalized_fraction(spec, s0, x0, s1, x1));
}

bool in_penalty(const LagrangianSpec& spec, double s, double x) {
  if (spec.kind == LagrangianKind::L1) return x <= spec.c1 * s;
  return spec.tilde_c1 * s < x && x < spec.c1 * s;
}

// Multilevel block Nelder-Mead over the knot positions y[0..n-2]; y[n-1] = x
// stays pinned. Corrections are hat functions on strided subsets of knots, so
// coarse levels move long stretches of the path at once.
class PathOptimizer {
 public:
  PathOptimizer(const LagrangianSpec& spec, double t, double x, int n,
                std::optional<double> min_speed)
      : spec_(spec), x_(x), n_(n), min_speed_(min_speed), times_(static_cast<std::size_t>(n)) {
    for (int k = 0; k < n; ++k) times_[k] = t * k / (n - 1);
    times_.back() = t;
    scale_ = std::max({1.0, std::abs(x), std::abs(spec.c1) * t});
  }

  const std::vector<double>& times() const { return times_; }

  // Knots within a small band of a penalty boundary line are put exactly on
  // it, so riding the line is reachable by a derivative-free search. The
  // result is still an admissible path evaluated exactly.
  double project(int k, double v) const {
    if (k == n_ - 1) return x_;
    const double band = kRideBand * scale_;
    const double s = times_[k];
    if (std::abs(v - spec_.c1 * s) <= band) v = spec_.c1 * s;
    if (spec_.kind == LagrangianKind::L2 && std::abs(v - spec_.tilde_c1 * s) <= band) {
      v = spec_.tilde_c1 * s;
    }
    if (k == 0) v = std::min(v, 0.0);
    if (min_speed_) v = std::max(v, *min_speed_ * s);
    return v;
  }

  std::vector<double> sample(auto&& f) const {
    std::vector<double> y(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) y[k] = project(k, f(times_[k]));
    return y;
  }

  double segments(const std::vector<double>& y, int lo, int hi) const {
    double sum = 0.0;
    for (int j = lo; j < hi; ++j) {
      sum += segment_action(spec_, times_[j], y[j], times_[j + 1], y[j + 1]);
    }
    return sum;
  }

  double total(const std::vector<double>& y) const { return segments(y, 0, n_ - 1); }

  double optimize(std::vector<double>& y, bool& converged, int max_cycles = 40) const {
    constexpr int kBlock = 6;
    std::vector<int> strides;
    for (int h = 1; h <= std::max(1, (n_ - 1) / 2); h *= 2) strides.push_back(h);
    std::reverse(strides.begin(), strides.end());

    std::vector<double> trial = y;
    double current = total(y);
    converged = false;
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
      const double before = current;
      for (int h : strides) {
        std::vector<int> nodes;
        for (int k = 0; k <= n_ - 2; k += h) nodes.push_back(k);
        const int m = static_cast<int>(nodes.size());
        const int offset = (cycle % 2 == 1 && m > kBlock) ? kBlock / 2 : 0;
        std::vector<std::pair<int, int>> blocks;
        if (offset > 0) blocks.emplace_back(0, offset);
        for (int b = offset; b < m; b += kBlock) blocks.emplace_back(b, std::min(m, b + kBlock));
        const double step =
            std::max(0.1 * scale_ * h / (n_ - 1) * std::pow(0.5, cycle), 1e-9 * scale_);
        for (auto [b0, b1] : blocks) optimize_block(y, trial, nodes, b0, b1, h, step);
      }
      current = total(y);
      if (cycle > 0 && before - current <= 1e-9 * (1.0 + std::abs(current))) {
        converged = true;
        break;
      }
    }
    return current;
  }

 private:
  void optimize_block(std::vector<double>& y, std::vector<double>& trial,
                      const std::vector<int>& nodes, int b0, int b1, int h, double step) const {
    const int k_lo = std::max(0, nodes[b0] - h + 1);
    const int k_hi = std::min(n_ - 2, nodes[b1 - 1] + h - 1);
    const int seg_lo = std::max(0, k_lo - 1);
    const int seg_hi = std::min(n_ - 1, k_hi + 1);
    const double base = segments(y, seg_lo, seg_hi);

    auto apply = [&](const std::vector<double>& delta) {
      for (int k = k_lo; k <= k_hi; ++k) {
        double shift = 0.0;
        for (int i = b0; i < b1; ++i) {
          const double w = 1.0 - std::abs(k - nodes[i]) / static_cast<double>(h);
          if (w > 0.0) shift += w * delta[i - b0];
        }
        trial[k] = project(k, y[k] + shift);
      }
    };
    auto local = [&](const std::vector<double>& delta) {
      apply(delta);
      return segments(trial, seg_lo, seg_hi);
    };

    detail::NelderMeadOptions nm;
    nm.initial_step = step;
    nm.xtol = 1e-9 * scale_;
    nm.max_evals = 40 * (b1 - b0) + 20;
    const auto res = detail::nelder_mead(local, std::vector<double>(b1 - b0, 0.0), nm);
    if (res.f < base) {
      apply(res.x);
      for (int k = k_lo; k <= k_hi; ++k) y[k] = trial[k];
    } else {
      for (int k = k_lo; k <= k_hi; ++k) trial[k] = y[k];
    }
  }

  LagrangianSpec spec_;
  double x_;
  int n_;
  std::optional<double> min_speed_;
  std::vector<double> times_;
  double scale_;
};

}  // namespace

std::string_view to_string(LagrangianKind kind) { return kind == LagrangianKind::L1 ? "L1" : "L2"; }

std::string_view to_string(ActionMethod method) {
  return method == ActionMethod::TwoSegmentClosed ? "two_segment_closed" : "n_segment_numeric";
}

void validate(const LagrangianSpec& spec) {
  require(std::isfinite(spec.a) && spec.a > 0.0 && spec.a < 1.0,
          "Lagrangian requires 0 < a < 1");
  require(std::isfinite(spec.c1) && spec.c1 > 0.0, "Lagrangian requires c1 > 0");
  if (spec.kind == LagrangianKind::L2) {
    require(std::isfinite(spec.tilde_c1) && spec.c1 > spec.tilde_c1 && spec.tilde_c1 >= 2.0,
            "L2 requires c1 > tilde_c1 >= 2");
  }
}

double lagrangian(const LagrangianSpec& spec, double s, double x, double q) {
  require(s >= 0.0, "lagrangian requires s >= 0");
  return 0.25 * q * q - 1.0 + (in_penalty(spec, s, x) ? spec.a : 0.0);
}

double hamiltonian(const LagrangianSpec& spec, double t, double x, double p) {
  require(t >= 0.0, "hamiltonian requires t >= 0");
  return p * p + 1.0 - (in_penalty(spec, t, x) ? spec.a : 0.0);
}

double legendre_numeric(const LagrangianSpec& spec, double s, double x, double q, double dp) {
  require(dp > 0.0, "legendre_numeric requires dp > 0");
  const double p_max = 0.5 * std::abs(q) + 2.0;
  const int n = static_cast<int>(std::ceil(2.0 * p_max / dp)) + 1;
  auto g = [&](double p) { return q * p - hamiltonian(spec, s, x, p); };
  int best = 0;
  double best_val = g(-p_max);
  for (int i = 1; i < n; ++i) {
    const double v = g(-p_max + i * dp);
    if (v > best_val) {
      best = i;
      best_val = v;
    }
  }
  if (best == 0 || best == n - 1) return best_val;
  const double f0 = g(-p_max + (best - 1) * dp), f1 = best_val, f2 = g(-p_max + (best + 1) * dp);
  const double curv = f0 - 2.0 * f1 + f2;
  if (curv >= 0.0) return best_val;
  return f1 - 0.125 * (f2 - f0) * (f2 - f0) / curv;
}

void validate(const PiecewisePath& path) {
  require(path.times.size() >= 2 && path.times.size() == path.positions.size(),
          "path needs at least two knots with matching positions");
  require(path.times.front() == 0.0, "path must start at s = 0");
  for (std::size_t i = 1; i < path.times.size(); ++i) {
    require(path.times[i] > path.times[i - 1], "path knot times must strictly increase");
  }
  require(path.positions.front() <= 0.0, "path must start in (-inf, 0]");
}

double path_action(const PiecewisePath& path, const LagrangianSpec& spec) {
  validate(path);
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < path.times.size(); ++j) {
    sum += segment_action(spec, path.times[j], path.positions[j], path.times[j + 1],
                          path.positions[j + 1]);
  }
  return sum;
}

ActionResult minimize_two_segment(double t, double x, const LagrangianSpec& spec) {
  validate(spec);
  require(spec.kind == LagrangianKind::L1, "two-segment minimizer is defined for L1");
  require(t > 0.0, "two-segment minimizer requires t > 0");
  require(x >= 0.0 && x < spec.c1 * t,
          "two-segment minimizer requires 0 <= x/t < c1; use the straight path beyond c1");
  const double tau =
      std::clamp(t - std::abs(x - spec.c1 * t) / (2.0 * std::sqrt(spec.a)), 0.0, t);

  ActionResult res;
  res.method = ActionMethod::TwoSegmentClosed;
  res.converged = true;
  res.minimizer.times = {0.0};
  res.minimizer.positions = {0.0};
  if (tau > 0.0 && tau < t) {
    res.minimizer.times.push_back(tau);
    res.minimizer.positions.push_back(spec.c1 * tau);
  }
  res.minimizer.times.push_back(t);
  res.minimizer.positions.push_back(x);
  res.value = path_action(res.minimizer, spec);
  return res;
}

ActionResult minimize_action(double t, double x, const LagrangianSpec& spec,
                             const MinimizeOptions& opt) {
  validate(spec);
  require(t > 0.0 && std::isfinite(t), "minimize_action requires t > 0");
  require(std::isfinite(x), "minimize_action requires finite x");
  require(opt.n_knots >= 2, "minimize_action requires n_knots >= 2");
  require(opt.n_restarts >= 0, "minimize_action requires n_restarts >= 0");

  const int n = opt.n_knots;
  const PathOptimizer po(spec, t, x, n, opt.min_speed);
  const double c1 = spec.c1;

  // Structured starts follow the known optimal-path shapes: a straight line,
  // riding a penalty boundary line up to some knot time and then heading
  // straight for x, and resting at min(x, 0) before a final dash.
  std::vector<std::vector<double>> starts;
  starts.push_back(po.sample([&](double s) { return x * s / t; }));
  auto ride_then_dash = [&](double speed, double tau) {
    return po.sample([&](double s) {
      return s <= tau ? speed * s : speed * tau + (s - tau) / (t - tau) * (x - speed * tau);
    });
  };
  std::vector<double> taus = {0.1 * t, 0.3 * t, 0.5 * t, 0.7 * t, 0.9 * t};
  for (int k = 1; k + 1 < n; ++k) taus.push_back(po.times()[k]);
  for (double tau : taus) {
    starts.push_back(ride_then_dash(c1, tau));
    if (spec.kind == LagrangianKind::L2) starts.push_back(ride_then_dash(spec.tilde_c1, tau));
  }
  const double rest = std::min(x, 0.0);
  for (double tau : {0.5 * t, t * (n - 2.0) / (n - 1.0)}) {
    starts.push_back(po.sample([&](double s) {
      return s <= tau ? rest : rest + (s - tau) / (t - tau) * (x - rest);
    }));
  }

  // The first start with the lowest raw action is polished; seeded
  // perturbations of the polished path follow.
  std::size_t first = 0;
  double first_val = po.total(starts[0]);
  for (std::size_t i = 1; i < starts.size(); ++i) {
    const double v = po.total(starts[i]);
    if (v < first_val) {
      first = i;
      first_val = v;
    }
  }
  std::vector<double> best = std::move(starts[first]);
  bool best_conv = false;
  double best_val = po.optimize(best, best_conv);

  const double sigma = 0.02 * std::max({1.0, std::abs(x), c1 * t});
  const std::vector<double> anchor = best;
  for (int i = 0; i < opt.n_restarts; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(opt.seed >> 32), static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> noise(0.0, sigma);
    // Smooth perturbation: random amplitudes on a coarse hat basis.
    const int h = std::max(1, (n - 1) / 8);
    std::vector<double> amp(static_cast<std::size_t>((n - 1) / h + 2));
    for (double& v : amp) v = noise(rng);
    std::vector<double> y = anchor;
    for (int k = 0; k + 1 < n; ++k) {
      const int m = k / h;
      const double w = static_cast<double>(k - m * h) / h;
      y[k] = po.project(k, y[k] + (1.0 - w) * amp[m] + w * amp[m + 1]);
    }
    // Two cheap cycles decide whether the perturbed path found a better basin.
    bool conv = false;
    double v = po.optimize(y, conv, 2);
    if (v >= best_val) continue;
    if (!conv) v = po.optimize(y, conv);
    if (v < best_val) {
      best = std::move(y);
      best_val = v;
      best_conv = conv;
    }
  }

  ActionResult res;
  res.method = ActionMethod::NSegmentNumeric;
  res.converged = best_conv;
  res.minimizer.times = po.times();
  res.minimizer.positions = std::move(best);
  res.value = path_action(res.minimizer, spec);
  return res;
}

FreidlinReport freidlin_check(const LagrangianSpec& spec,
                              const std::vector<std::pair<double, double>>& boundary_points,
                              const MinimizeOptions& opt) {
  validate(spec);
  require(spec.kind == LagrangianKind::L1, "Freidlin check is defined for L1");
  const double c0 = zero_level_speed(spec.c1, spec.a);
  FreidlinReport rep;
  for (auto [t, x] : boundary_points) {
    const double j = j1_closed(t, x, spec.c1, spec.a);
    if (std::abs(j) > 1e-6) {
      std::ostringstream os;
      os.precision(17);
      os << "point (" << t << ", " << x << ") is not on the zero level of J1 (J1 = " << j << ")";
      fail(ErrorCode::InvalidArgument, os.str());
    }
    MinimizeOptions free_opt = opt;
    free_opt.min_speed.reset();
    MinimizeOptions tied = opt;
    tied.min_speed = c0;
    FreidlinPoint fp{t, x, minimize_action(t, x, spec, free_opt).value,
                     minimize_action(t, x, spec, tied).value};
    rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(fp.constrained - fp.unconstrained));
    rep.points.push_back(fp);
  }
  return rep;
}

DeltaStarEstimate delta_star_estimate(const LagrangianSpec& l2_spec, const MinimizeOptions& opt,
                                      int bisection_steps) {
  validate(l2_spec);
  require(l2_spec.kind == LagrangianKind::L2, "delta_star_estimate takes the L2 spec");
  require(bisection_steps >= 0, "bisection_steps must be >= 0");
  const double c1 = l2_spec.c1, a = l2_spec.a;
  const double width = c1 - l2_spec.tilde_c1;

  DeltaStarEstimate est;
  auto discrepancy = [&](double delta) {
    ++est.probes;
    double worst = 0.0;
    for (int j = 0; j < 20; ++j) {
      const double t = 0.5 + 1.5 * j / 19.0;
      const double x = (c1 - delta) * t;
      const double numeric = minimize_action(t, x, l2_spec, opt).value;
      worst = std::max(worst, std::abs(j1_closed(t, x, c1, a) - numeric));
    }
    return worst;
  };

  const double tiny = 1e-3 * width;
  const double d_tiny = discrepancy(tiny);
  if (d_tiny > est.tolerance) {
    est.delta = 0.0;
    est.warning = true;
    est.discrepancy = d_tiny;
    return est;
  }
  double lo = tiny, hi = width, d_lo = d_tiny;
  const double d_hi = discrepancy(hi);
  if (d_hi <= est.tolerance) {
    est.delta = hi;
    est.discrepancy = d_hi;
    return est;
  }
  for (int i = 0; i < bisection_steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double d = discrepancy(mid);
    if (d <= est.tolerance) {
      lo = mid;
      d_lo = d;
    } else {
      hi = mid;
    }
  }
  est.delta = lo;
  est.discrepancy = d_lo;
  return est;
}

}  // namespace lvs
