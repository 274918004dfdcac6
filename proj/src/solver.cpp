#include "lvspread/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lvspread/error.hpp"

namespace lvs {

namespace {

constexpr double kClamp = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_profile(const StepProfile& p, const char* name) {
  require(std::isfinite(p.lo) && std::isfinite(p.hi) && p.lo <= p.hi,
          std::string(name) + ": interval needs finite lo <= hi");
  require(p.inside >= 0.0 && p.inside <= 1.0 && p.outside >= 0.0 && p.outside <= 1.0,
          std::string(name) + ": values must lie in [0, 1]");
}

// Forward elimination for the matrix with -k on the off-diagonals, 1 + 2k on
// the interior diagonal and doubled coupling in the boundary rows (ghost nodes).
void thomas_factor(int n, double k, std::vector<double>& c, std::vector<double>& piv) {
  c.assign(static_cast<std::size_t>(n), 0.0);
  piv.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 1) {
    piv[0] = 1.0;
    return;
  }
  auto lower = [&](int i) { return i == n - 1 ? -2.0 * k : -k; };
  auto upper = [&](int i) { return i == 0 ? -2.0 * k : -k; };
  piv[0] = 1.0 + 2.0 * k;
  c[0] = upper(0) / piv[0];
  for (int i = 1; i < n; ++i) {
    piv[i] = 1.0 + 2.0 * k - lower(i) * c[i - 1];
    if (i < n - 1) c[i] = upper(i) / piv[i];
  }
}

void thomas_solve(int n, double k, const std::vector<double>& c, const std::vector<double>& piv,
                  std::vector<double>& rhs) {
  if (n == 1) return;
  rhs[0] /= piv[0];
  for (int i = 1; i < n; ++i) {
    const double lo = i == n - 1 ? -2.0 * k : -k;
    rhs[i] = (rhs[i] - lo * rhs[i - 1]) / piv[i];
  }
  for (int i = n - 2; i >= 0; --i) rhs[i] -= c[i] * rhs[i + 1];
}

// Second difference with reflecting ghost nodes.
inline double lap(const std::vector<double>& f, int i, int n) {
  if (n == 1) return 0.0;
  if (i == 0) return 2.0 * (f[1] - f[0]);
  if (i == n - 1) return 2.0 * (f[n - 2] - f[n - 1]);
  return f[i - 1] - 2.0 * f[i] + f[i + 1];
}

}  // namespace

int Grid1D::n() const { return static_cast<int>(std::lround((x_right - x_left) / dx)) + 1; }

void validate(const Grid1D& g) {
  require(std::isfinite(g.x_left) && std::isfinite(g.x_right) && g.x_right > g.x_left,
          "grid requires x_left < x_right");
  require(std::isfinite(g.dx) && g.dx > 0.0, "grid requires dx > 0");
  require(g.n() >= 3, "grid requires at least 3 nodes");
}

std::string_view to_string(Scheme s) {
  return s == Scheme::ExplicitEuler ? "explicit_euler" : "imex_cn";
}

void validate(const SchemeConfig& s) {
  if (s.scheme == Scheme::ExplicitEuler) {
    require(s.cfl > 0.0 && s.cfl <= 0.9, "explicit scheme requires 0 < cfl <= 0.9");
  } else {
    require(std::isfinite(s.dt) && s.dt > 0.0, "imex_cn requires dt > 0");
  }
  require(std::isfinite(s.snapshot_every) && s.snapshot_every > 0.0,
          "snapshot_every must be > 0");
}

SimState init(const Grid1D& grid, const InitialCondition& ic) {
  validate(grid);
  check_profile(ic.u0, "u0");
  check_profile(ic.v0, "v0");
  if (ic.require_hinf) {
    require(ic.u0.inside > 0.0 && ic.u0.outside == 0.0,
            "(H-inf) requires u0 >= theta0 > 0 on its support and 0 to the right");
    require(ic.v0.outside == 0.0 && ic.v0.inside > 0.0 && ic.v0.hi > ic.v0.lo,
            "(H-inf) requires a compactly supported, nontrivial v0");
  }
  const int n = grid.n();
  SimState s;
  s.fields.u.resize(static_cast<std::size_t>(n));
  s.fields.v.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    s.fields.u[i] = ic.u0(x);
    s.fields.v[i] = ic.v0(x);
  }
  if (ic.require_hinf) {
    bool any = false;
    for (double v : s.fields.v) any = any || v > 0.0;
    require(any, "(H-inf) requires v0 to be nonzero on some grid node");
  }
  return s;
}

Stepper::Stepper(const ModelParams& p, const Grid1D& grid, const SchemeConfig& scheme)
    : p_(p), n_(grid.n()), inv_dx2_(1.0 / (grid.dx * grid.dx)), scheme_(scheme) {
  validate(grid);
  validate(scheme);
  max_dt_ = scheme.scheme == Scheme::ExplicitEuler
                ? scheme.cfl * grid.dx * grid.dx / (2.0 * std::max(1.0, p.d()))
                : scheme.dt;
  nu_.resize(static_cast<std::size_t>(n_));
  nv_.resize(static_cast<std::size_t>(n_));
}

void Stepper::step(FieldPair& f, double dt) {
  require(dt > 0.0 && dt <= max_dt_ * (1.0 + 1e-12), "time step exceeds the scheme limit");
  if (scheme_.scheme == Scheme::ExplicitEuler) {
    explicit_step(f, dt);
  } else {
    imex_step(f, dt);
  }
  finish(f);
}

void Stepper::explicit_step(FieldPair& f, double dt) {
  const double a = p_.a(), b = p_.b(), d = p_.d(), r = p_.r();
  const std::vector<double>& u = f.u;
  const std::vector<double>& v = f.v;
  for (int i = 0; i < n_; ++i) {
    const double ui = u[i], vi = v[i];
    nu_[i] = ui + dt * (lap(u, i, n_) * inv_dx2_ + ui * (1.0 - ui - a * vi));
    nv_[i] = vi + dt * (d * lap(v, i, n_) * inv_dx2_ + r * vi * (1.0 - b * ui - vi));
  }
  f.u.swap(nu_);
  f.v.swap(nv_);
}

void Stepper::factor(double dt) {
  thomas_factor(n_, 0.5 * dt * inv_dx2_, cu_, pu_);
  thomas_factor(n_, 0.5 * dt * p_.d() * inv_dx2_, cv_, pv_);
  factored_dt_ = dt;
}

void Stepper::imex_step(FieldPair& f, double dt) {
  if (dt != factored_dt_) factor(dt);
  const double a = p_.a(), b = p_.b(), d = p_.d(), r = p_.r();
  const double ku = 0.5 * dt * inv_dx2_, kv = 0.5 * dt * d * inv_dx2_;
  const std::vector<double>& u = f.u;
  const std::vector<double>& v = f.v;
  for (int i = 0; i < n_; ++i) {
    const double ui = u[i], vi = v[i];
    nu_[i] = ui + ku * lap(u, i, n_) + dt * ui * (1.0 - ui - a * vi);
    nv_[i] = vi + kv * lap(v, i, n_) + dt * r * vi * (1.0 - b * ui - vi);
  }
  thomas_solve(n_, ku, cu_, pu_, nu_);
  thomas_solve(n_, kv, cv_, pv_, nv_);
  f.u.swap(nu_);
  f.v.swap(nv_);
}

void Stepper::finish(FieldPair& f) {
  for (std::vector<double>* field : {&f.u, &f.v}) {
    for (double& x : *field) {
      if (!std::isfinite(x)) {
        fail(ErrorCode::SolverAbort,
             "solver abort: non-finite density (time step too large for the grid?)");
      }
      if (x < 0.0) {
        if (x < -kClamp) max_excursion_ = std::max(max_excursion_, -x);
        x = 0.0;
      } else if (x > 1.0) {
        if (x > 1.0 + kClamp) max_excursion_ = std::max(max_excursion_, x - 1.0);
        x = 1.0;
      }
    }
  }
}

MarginCheck margin_check(const ModelParams& p, const Grid1D& grid, double t_end) {
  MarginCheck m;
  const double sdr = std::sqrt(p.dr());
  m.c_right = std::max(2.0, 2.0 * sdr);
  m.c_left = -2.0 * sdr;
  m.need_right = m.c_right * t_end + 50.0;
  m.need_left = m.c_left * t_end - 50.0;
  m.ok = grid.x_right >= m.need_right && grid.x_left <= m.need_left;
  return m;
}

Trajectory run(const ModelParams& p, const Grid1D& grid, const InitialCondition& ic,
               const SchemeConfig& scheme, double t_end, const RunOptions& opt) {
  validate(grid);
  validate(scheme);
  require(std::isfinite(t_end) && t_end >= 0.0, "t_end must be >= 0");
  if (opt.check_margins) {
    const MarginCheck m = margin_check(p, grid, t_end);
    if (!m.ok) {
      fail(ErrorCode::DomainMargin,
           "domain margin check failed: need x_left <= " + fmt(m.need_left) + " and x_right >= " +
               fmt(m.need_right) + ", have [" + fmt(grid.x_left) + ", " + fmt(grid.x_right) +
               "]");
    }
  }

  SimState state = init(grid, ic);
  Stepper stepper(p, grid, scheme);
  Trajectory traj;
  traj.grid = grid;
  traj.params = p;
  traj.scheme = scheme;
  traj.snapshots.push_back({0.0, state.fields.u, state.fields.v});

  const double every = scheme.snapshot_every;
  double t_prev = 0.0;
  for (std::int64_t k = 1; t_prev < t_end; ++k) {
    double t_next = static_cast<double>(k) * every;
    if (t_next > t_end || t_end - t_next < 1e-9 * every) t_next = t_end;
    const double span = t_next - t_prev;
    const auto m = static_cast<std::int64_t>(std::ceil(span / stepper.max_dt() * (1.0 - 1e-12)));
    const double dt = span / static_cast<double>(std::max<std::int64_t>(m, 1));
    for (std::int64_t j = 0; j < std::max<std::int64_t>(m, 1); ++j) stepper.step(state.fields, dt);
    traj.steps += std::max<std::int64_t>(m, 1);
    traj.dt_used = std::max(traj.dt_used, dt);
    t_prev = t_next;
    traj.snapshots.push_back({t_next, state.fields.u, state.fields.v});
  }
  traj.max_excursion = stepper.max_excursion();
  return traj;
}

}  // namespace lvs
