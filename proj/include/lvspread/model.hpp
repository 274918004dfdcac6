#pragma once

#include <string_view>

namespace lvs {

/// Constants of the competition-diffusion system
///
///   u_t = u_xx + u(1 - u - a v)
///   v_t = d v_xx + r v(1 - b u - v)
///
/// Construction validates d, r > 0 and 0 < a, b < 1; every other module
/// relies on that.
class ModelParams {
 public:
  ModelParams(double d, double r, double a, double b);

  double d() const noexcept { return d_; }
  double r() const noexcept { return r_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double dr() const noexcept { return d_ * r_; }

  bool operator==(const ModelParams&) const = default;

 private:
  double d_, r_, a_, b_;
};

struct Density {
  double u = 0.0;
  double v = 0.0;
  bool operator==(const Density&) const = default;
};

struct Equilibria {
  Density trivial{0.0, 0.0};
  Density semi_u{1.0, 0.0};
  Density semi_v{0.0, 1.0};
  Density coexistence;
};

enum class RegimeTag { FastV, Balanced, FastU };

struct Regime {
  RegimeTag tag;
  double dr;
};

std::string_view to_string(RegimeTag tag);

/// (k1, k2) = ((1-a)/(1-ab), (1-b)/(1-ab)).
Density coexistence_equilibrium(const ModelParams& p);
Equilibria equilibria(const ModelParams& p);

/// Exact comparison of d*r against 1; no tolerance band.
Regime classify_regime(const ModelParams& p);

struct SwappedParams {
  ModelParams params;
  double speed_scale;  // sqrt(dr): multiply a speed of the swapped system by this
};

/// Exchange the roles of u and v. Rescaling time by r and space by
/// sqrt(r/d) gives d' = 1/d, r' = 1/r, a' = b, b' = a; a speed c' of the
/// swapped system is sqrt(dr) * c' in the original coordinates.
SwappedParams swap_roles(const ModelParams& p);

}  // namespace lvs
