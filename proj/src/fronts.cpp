#include "lvspread/fronts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lvspread/error.hpp"

namespace lvs {

namespace {

constexpr double kFloor = 1e-300;

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  require(sxx > 0.0, "line fit needs at least two distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ss += e * e;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

const Snapshot& final_snapshot(const Trajectory& traj) {
  require(!traj.snapshots.empty(), "trajectory has no snapshots");
  return traj.snapshots.back();
}

}  // namespace

std::string_view to_string(Field f) { return f == Field::U ? "u" : "v"; }

std::string_view to_string(Direction d) {
  return d == Direction::RightmostAbove ? "rightmost_above" : "leftmost_below";
}

void validate(const LevelSpec& spec) {
  require(spec.threshold > 0.0 && spec.threshold < 1.0, "level threshold must lie in (0, 1)");
}

std::optional<double> front_position(const Grid1D& grid, const std::vector<double>& f,
                                     const LevelSpec& spec) {
  validate(spec);
  const int n = static_cast<int>(f.size());
  require(n == grid.n(), "field length does not match the grid");
  const double th = spec.threshold;
  if (spec.direction == Direction::RightmostAbove) {
    int i = n - 1;
    while (i >= 0 && !(f[i] > th)) --i;
    if (i < 0 || i == n - 1) return std::nullopt;
    const double frac = (f[i] - th) / (f[i] - f[i + 1]);
    return grid.x(i) + frac * grid.dx;
  }
  int i = 0;
  while (i < n && !(f[i] < th)) ++i;
  if (i >= n || i == 0) return std::nullopt;
  const double frac = (f[i - 1] - th) / (f[i - 1] - f[i]);
  return grid.x(i - 1) + frac * grid.dx;
}

std::optional<double> front_position(const Grid1D& grid, const Snapshot& snap,
                                     const LevelSpec& spec) {
  return front_position(grid, spec.field == Field::U ? snap.u : snap.v, spec);
}

std::vector<FrontTrace> track(const Trajectory& traj, const std::vector<LevelSpec>& specs) {
  std::vector<FrontTrace> out;
  out.reserve(specs.size());
  for (const LevelSpec& spec : specs) {
    FrontTrace tr;
    tr.spec = spec;
    for (const Snapshot& s : traj.snapshots) {
      if (const auto x = front_position(traj.grid, s, spec)) {
        tr.times.push_back(s.t);
        tr.positions.push_back(*x);
      } else {
        tr.gaps.push_back(s.t);
      }
    }
    out.push_back(std::move(tr));
  }
  return out;
}

SpeedEstimate estimate_speed(const FrontTrace& trace, double window_fraction) {
  require(window_fraction > 0.0 && window_fraction <= 1.0, "window_fraction must be in (0, 1]");
  const std::size_t n = trace.times.size();
  const auto w = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(n)));
  if (w < 10) {
    fail(ErrorCode::InvalidArgument,
         "speed estimate needs at least 10 samples in the window (have " + std::to_string(w) +
             ")");
  }
  const std::vector<double> t(trace.times.end() - static_cast<std::ptrdiff_t>(w), trace.times.end());
  const std::vector<double> x(trace.positions.end() - static_cast<std::ptrdiff_t>(w),
                              trace.positions.end());
  require(t.back() > 0.0, "speed estimate needs t_end > 0");
  const LineFit fit = fit_line(t, x);
  SpeedEstimate e;
  e.ratio_at_end = x.back() / t.back();
  e.slope = fit.slope;
  e.t_lo = t.front();
  e.t_end = t.back();
  e.residual = fit.rms;
  e.samples = static_cast<int>(w);
  return e;
}

PlateauDeviation plateau_deviation(const Trajectory& traj, double c_lo, double c_hi, double eta,
                                   const Density& target) {
  const Snapshot& s = final_snapshot(traj);
  const double lo = (c_lo + eta) * s.t;
  const double hi = (c_hi - eta) * s.t;
  require(!(lo >= hi), "plateau window is empty");
  PlateauDeviation out;
  out.t = s.t;
  const int n = traj.grid.n();
  for (int i = 0; i < n; ++i) {
    const double x = traj.grid.x(i);
    if (!(x > lo && x < hi)) continue;
    const double dev = std::abs(s.u[i] - target.u) + std::abs(s.v[i] - target.v);
    if (out.nodes == 0 || dev > out.deviation) {
      out.deviation = dev;
      out.x_at_max = x;
    }
    ++out.nodes;
  }
  require(out.nodes > 0, "plateau window contains no grid nodes");
  return out;
}

WkbProfile wkb_profile(const Trajectory& traj, double epsilon) {
  require(epsilon > 0.0 && std::isfinite(epsilon), "epsilon must be > 0");
  const double t = 1.0 / epsilon;
  const Snapshot* hit = nullptr;
  for (const Snapshot& s : traj.snapshots) {
    if (std::abs(s.t - t) <= 1e-9 * std::max(1.0, t)) hit = &s;
  }
  if (!hit) {
    std::ostringstream os;
    os.precision(17);
    os << "no snapshot at t = 1/epsilon = " << t;
    fail(ErrorCode::InvalidArgument, os.str());
  }
  WkbProfile p;
  p.epsilon = epsilon;
  const int n = traj.grid.n();
  p.xi.resize(static_cast<std::size_t>(n));
  p.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    p.xi[i] = epsilon * traj.grid.x(i);
    const double u = hit->u[i];
    p.w[i] = u < kFloor ? std::numeric_limits<double>::infinity() : -epsilon * std::log(u);
  }
  return p;
}

RateEstimate decay_rate(const Trajectory& traj, double c_hat, std::optional<double> t_lo,
                        std::optional<double> t_hi) {
  const Snapshot& last = final_snapshot(traj);
  const double hi = t_hi.value_or(last.t);
  const double lo = t_lo.value_or(0.5 * last.t);
  require(lo < hi, "decay-rate window is empty");
  const Grid1D& g = traj.grid;
  std::vector<double> ts, ys;
  for (const Snapshot& s : traj.snapshots) {
    if (s.t <= 0.0 || s.t < lo - 1e-12 || s.t > hi + 1e-12) continue;
    const double x = c_hat * s.t;
    const double pos = (x - g.x_left) / g.dx;
    const int i = static_cast<int>(std::floor(pos));
    require(i >= 0 && i + 1 < g.n(), "ray leaves the domain inside the fitting window");
    const double ua = s.u[i], ub = s.u[i + 1];
    if (ua < kFloor || ub < kFloor) {
      std::ostringstream os;
      os.precision(17);
      os << "u underflows below 1e-300 on the ray at t = " << s.t;
      fail(ErrorCode::InvalidArgument, os.str());
    }
    const double th = pos - i;
    ts.push_back(s.t);
    ys.push_back(-((1.0 - th) * std::log(ua) + th * std::log(ub)));
  }
  require(ts.size() >= 3, "decay-rate fit needs at least 3 snapshots in the window");
  const LineFit fit = fit_line(ts, ys);
  RateEstimate r;
  r.mu = fit.slope;
  r.c_hat = c_hat;
  r.t_lo = ts.front();
  r.t_hi = ts.back();
  r.residual = fit.rms;
  r.samples = static_cast<int>(ts.size());
  return r;
}

LlwEstimate estimate_c_llw(const ModelParams& p, const Grid1D& grid, const SchemeConfig& scheme,
                           double t_end) {
  InitialCondition ic;
  ic.u0 = {-5.0, 5.0, 0.5, 0.0};
  ic.v0 = {-5.0, 5.0, 0.5, 1.0};
  const Trajectory traj = run(p, grid, ic, scheme, t_end);
  const LevelSpec spec{Field::U, 0.5 * coexistence_equilibrium(p).u, Direction::RightmostAbove};
  LlwEstimate e;
  e.trace = track(traj, {spec}).front();
  e.speed = estimate_speed(e.trace);
  return e;
}

}  // namespace lvs
