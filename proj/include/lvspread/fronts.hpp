#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "lvspread/model.hpp"
#include "lvspread/solver.hpp"

namespace lvs {

enum class Field { U, V };
enum class Direction { RightmostAbove, LeftmostBelow };

std::string_view to_string(Field f);
std::string_view to_string(Direction d);

/// RightmostAbove: sup{x : f(x) > threshold}. LeftmostBelow: inf{x : f(x) < threshold}.
struct LevelSpec {
  Field field = Field::U;
  double threshold = 0.5;
  Direction direction = Direction::RightmostAbove;
};

void validate(const LevelSpec& spec);

/// Outermost crossing, linearly interpolated between the bracketing nodes.
/// None when the level is never crossed or the extreme node itself already
/// satisfies the condition (the front would lie outside the domain).
std::optional<double> front_position(const Grid1D& grid, const std::vector<double>& f,
                                     const LevelSpec& spec);
std::optional<double> front_position(const Grid1D& grid, const Snapshot& snap,
                                     const LevelSpec& spec);

struct FrontTrace {
  LevelSpec spec;
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> gaps;  // snapshot times without a crossing
};

std::vector<FrontTrace> track(const Trajectory& traj, const std::vector<LevelSpec>& specs);

struct SpeedEstimate {
  double ratio_at_end = 0.0;  // x(t_end) / t_end
  double slope = 0.0;         // least squares over the window
  double t_lo = 0.0;
  double t_end = 0.0;
  double residual = 0.0;  // rms
  int samples = 0;
};

/// Window = last ceil(window_fraction * N) samples; at least 10 are required.
SpeedEstimate estimate_speed(const FrontTrace& trace, double window_fraction = 0.5);

struct PlateauDeviation {
  double deviation = 0.0;  // max of |u - u*| + |v - v*|
  double x_at_max = 0.0;
  double t = 0.0;
  int nodes = 0;
};

/// Over the final snapshot on the open window ((c_lo + eta) t, (c_hi - eta) t);
/// c_lo may be -infinity.
PlateauDeviation plateau_deviation(const Trajectory& traj, double c_lo, double c_hi, double eta,
                                   const Density& target);

struct WkbProfile {
  double epsilon = 0.0;
  std::vector<double> xi;  // epsilon * x
  std::vector<double> w;   // -epsilon log u, +inf where u < 1e-300
};

/// Requires a snapshot at t = 1/epsilon.
WkbProfile wkb_profile(const Trajectory& traj, double epsilon);

struct RateEstimate {
  double mu = 0.0;
  double c_hat = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double residual = 0.0;
  int samples = 0;
};

/// Least-squares slope of -log u(t, c_hat t) against t over snapshots with
/// t in [t_lo, t_hi]; u is interpolated log-linearly in x. Default window is
/// the later half of the run.
RateEstimate decay_rate(const Trajectory& traj, double c_hat,
                        std::optional<double> t_lo = std::nullopt,
                        std::optional<double> t_hi = std::nullopt);

struct LlwEstimate {
  SpeedEstimate speed;
  FrontTrace trace;
};

/// Runs u0 = 0.5 chi[-5,5], v0 = 1 - 0.5 chi[-5,5] and measures the rightmost
/// u > k1/2 front.
LlwEstimate estimate_c_llw(const ModelParams& p, const Grid1D& grid, const SchemeConfig& scheme,
                           double t_end);

}  // namespace lvs
