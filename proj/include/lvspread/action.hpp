#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lvs {

enum class LagrangianKind { L1, L2 };

std::string_view to_string(LagrangianKind kind);

/// L1 = q^2/4 - 1 + a chi{x <= c1 s}
/// L2 = q^2/4 - 1 + a chi{tilde_c1 s < x < c1 s}
struct LagrangianSpec {
  LagrangianKind kind = LagrangianKind::L1;
  double c1 = 2.0;
  double tilde_c1 = 2.0;  // L2 only
  double a = 0.5;
};

/// Throws InvalidArgument unless 0 < a < 1, c1 > 0, and for L2 c1 > tilde_c1 >= 2.
void validate(const LagrangianSpec& spec);

double lagrangian(const LagrangianSpec& spec, double s, double x, double q);
double hamiltonian(const LagrangianSpec& spec, double t, double x, double p);

/// sup_p (q p - H(s, x, p)) over a uniform p-grid of spacing dp, polished by a
/// parabola through the best three grid values. Used only as an oracle.
double legendre_numeric(const LagrangianSpec& spec, double s, double x, double q, double dp);

struct PiecewisePath {
  std::vector<double> times;
  std::vector<double> positions;
};

/// knot_times start at 0, strictly increase, and positions[0] <= 0.
void validate(const PiecewisePath& path);

/// Exact action of a piecewise-linear path. Each segment is split where it
/// crosses x = c1 s (and x = tilde_c1 s for L2). A segment lying exactly on
/// one of those lines counts as outside the penalty set; this realizes the
/// infimum over paths approaching the line from the unpenalized side.
double path_action(const PiecewisePath& path, const LagrangianSpec& spec);

enum class ActionMethod { TwoSegmentClosed, NSegmentNumeric };

std::string_view to_string(ActionMethod method);

struct ActionResult {
  double value = 0.0;
  PiecewisePath minimizer;
  ActionMethod method = ActionMethod::NSegmentNumeric;
  bool converged = false;
};

/// Minimum over (0,0) -> (tau, c1 tau) -> (t, x); requires L1 and 0 <= x/t < c1.
ActionResult minimize_two_segment(double t, double x, const LagrangianSpec& spec);

struct MinimizeOptions {
  int n_knots = 64;    // including both endpoints, equally spaced in time
  int n_restarts = 8;  // seeded perturbations on top of the structured starts
  std::uint64_t seed = 0;
  /// If set, every knot is projected onto x >= min_speed * s. With
  /// min_speed = c0 this keeps the path inside the closure of {J1 > 0}.
  std::optional<double> min_speed;
};

ActionResult minimize_action(double t, double x, const LagrangianSpec& spec,
                             const MinimizeOptions& opt = {});

struct FreidlinPoint {
  double t = 0.0;
  double x = 0.0;
  double unconstrained = 0.0;
  double constrained = 0.0;
};

struct FreidlinReport {
  double max_discrepancy = 0.0;
  std::vector<FreidlinPoint> points;
};

/// Compares constrained and unconstrained infima at points of the zero level
/// line x = c0 t of J1. Points with |J1| > 1e-6 are rejected.
FreidlinReport freidlin_check(const LagrangianSpec& spec,
                              const std::vector<std::pair<double, double>>& boundary_points,
                              const MinimizeOptions& opt = {});

struct DeltaStarEstimate {
  double delta = 0.0;
  bool warning = false;        // even the smallest probe disagreed
  double discrepancy = 0.0;    // worst |J1 - J2| on the accepted ray
  double tolerance = 3e-3;
  int probes = 0;
};

/// Bisection for the widest cone x >= (c1 - delta) t on which the closed-form
/// J1 agrees with the numeric J2, sampled at 20 times in [0.5, 2].
DeltaStarEstimate delta_star_estimate(const LagrangianSpec& l2_spec,
                                      const MinimizeOptions& opt = {},
                                      int bisection_steps = 10);

}  // namespace lvs
