#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "lvspread/model.hpp"

namespace lvs {

struct Grid1D {
  double x_left = 0.0;
  double x_right = 0.0;
  double dx = 0.1;

  int n() const;  // round((x_right - x_left) / dx) + 1
  double x(int i) const { return x_left + i * dx; }
};

void validate(const Grid1D& g);

/// `inside` on the closed interval [lo, hi], `outside` elsewhere.
struct StepProfile {
  double lo = 0.0;
  double hi = 0.0;
  double inside = 1.0;
  double outside = 0.0;

  double operator()(double x) const { return (x >= lo && x <= hi) ? inside : outside; }
};

struct InitialCondition {
  StepProfile u0;
  StepProfile v0;
  /// Require u0 positive on its support and zero to the right of it, and v0
  /// compactly supported and nontrivial.
  bool require_hinf = false;
};

enum class Scheme { ExplicitEuler, ImexCN };

std::string_view to_string(Scheme s);

struct SchemeConfig {
  Scheme scheme = Scheme::ExplicitEuler;
  double cfl = 0.4;             // explicit: dt <= cfl dx^2 / (2 max(1, d)), cfl <= 0.9
  double dt = 0.01;             // imex_cn
  double snapshot_every = 1.0;  // time between stored snapshots
};

void validate(const SchemeConfig& s);

struct FieldPair {
  std::vector<double> u;
  std::vector<double> v;
};

struct SimState {
  double t = 0.0;
  FieldPair fields;
};

SimState init(const Grid1D& grid, const InitialCondition& ic);

/// One time step of the discretized system with zero-flux ends. After each
/// step values are clamped to [0, 1]; the largest pre-clamp distance from
/// [0, 1] is kept. Non-finite values raise SolverAbort.
class Stepper {
 public:
  Stepper(const ModelParams& p, const Grid1D& grid, const SchemeConfig& scheme);

  void step(FieldPair& f, double dt);
  double max_excursion() const { return max_excursion_; }
  /// Largest explicit step permitted by the CFL rule (imex_cn: configured dt).
  double max_dt() const { return max_dt_; }

 private:
  void explicit_step(FieldPair& f, double dt);
  void imex_step(FieldPair& f, double dt);
  void factor(double dt);
  void finish(FieldPair& f);

  ModelParams p_;
  int n_;
  double inv_dx2_;
  SchemeConfig scheme_;
  double max_dt_;
  double max_excursion_ = 0.0;
  double factored_dt_ = -1.0;
  std::vector<double> nu_, nv_;
  // Thomas factorization per species: modified super-diagonal and pivot.
  std::vector<double> cu_, pu_, cv_, pv_;
};

struct Snapshot {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> v;
};

struct Trajectory {
  Grid1D grid;
  ModelParams params{1.0, 1.0, 0.5, 0.5};
  SchemeConfig scheme;
  std::vector<Snapshot> snapshots;
  double dt_used = 0.0;
  std::int64_t steps = 0;
  double max_excursion = 0.0;
};

struct MarginCheck {
  double c_right = 0.0;  // fastest rightward speed bound
  double c_left = 0.0;   // leftmost speed bound
  double need_right = 0.0;
  double need_left = 0.0;
  bool ok = false;
};

/// x_right >= c_right t_end + 50 and x_left <= c_left t_end - 50, with
/// c_right the fast front speed and c_left = -2 sqrt(dr), the upper end of
/// the leftward speed interval.
MarginCheck margin_check(const ModelParams& p, const Grid1D& grid, double t_end);

struct RunOptions {
  bool check_margins = true;
};

/// Integrates to t_end storing snapshots at multiples of snapshot_every (and
/// at t_end). The step is shortened inside each interval so snapshot times
/// are hit exactly. Throws DomainMargin before stepping if the preflight fails.
Trajectory run(const ModelParams& p, const Grid1D& grid, const InitialCondition& ic,
               const SchemeConfig& scheme, double t_end, const RunOptions& opt = {});

}  // namespace lvs
