#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lvspread/model.hpp"

namespace lvs {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double x) { return {x, x}; }
  bool is_point() const noexcept { return lo == hi; }
  Interval operator-() const { return {-hi, -lo}; }
  Interval scaled(double k) const;  // k > 0
};

Interval max(const Interval& x, double y);
Interval max(const Interval& x, const Interval& y);

enum class NlpBranch { Nonlocal, Local };

std::string_view to_string(NlpBranch branch);

struct NlpSpeed {
  double value;
  NlpBranch branch;
};

/// 2*sqrt(dr). Callers with dr < 1 go through swap_roles first.
double c1(const ModelParams& p);

/// Nonlocally pulled speed; requires dr >= 1 (dr = 1 is the continuous limit).
NlpSpeed c_nlp(const ModelParams& p);

/// Same dispatch written in terms of the fast speed c1 = 2*sqrt(dr).
NlpSpeed c_nlp_from_c1(double c1, double a);

/// c1/2 - sqrt(a) + (1-a)/(c1/2 - sqrt(a)); rejects c1/2 <= sqrt(a).
double bar_c_nlp(double c1, double a);

/// (c - sqrt(c^2 - 4(1-a))) / 2
double lambda_llw(double c_llw, double a);
/// (c - sqrt(c^2 - 4dr(1-b))) / (2d)
double tilde_lambda_llw(double tilde_c_llw, double d, double r, double b);

/// Upper bound for the slower species' spreading speed obtained by
/// comparison with traveling waves, given a decay rate mu_hat along x = c_hat t.
double c_hat_mu(double c_hat, double mu_hat, double a, double c_llw, double lambda);
double tilde_c_hat_mu(double c_hat, double mu_hat, double d, double r, double b,
                      double tilde_c_llw, double tilde_lambda);

/// Closed-form minimal action J1(t, x) for the Lagrangian
/// q^2/4 - 1 + a*chi{x <= c1 s} with paths starting in (-inf, 0].
double j1_closed(double t, double x, double c1, double a);

/// Positive part of j1_closed.
double w1_closed(double t, double x, double c1, double a);

/// Large-deviation rate of u along x = c_hat t, for c_hat in (bar_c_nlp, c1].
double mu_hat(double c_hat, double c1, double a);

/// The zero-crossing speed of J1: bar_c_nlp or 2 sqrt(1-a).
double zero_level_speed(double c1, double a);

enum class Plateau { SemiU, Coexistence, SemiV, Trivial };

std::string_view to_string(Plateau state);
Density plateau_density(Plateau state, const ModelParams& p);

/// Homogeneous states from left to right; `boundary` is the speed of the
/// interface separating entry i from entry i+1 (absent on the last entry).
struct DiagramEntry {
  Plateau state;
  std::optional<Interval> boundary;
};

using TransitionDiagram = std::vector<DiagramEntry>;

struct SpeedTheory {
  Regime regime;
  bool determinacy_assumed;

  double c1;            // rightmost front, carried by the faster species
  Interval c2;          // slower species chasing; point under determinacy
  Interval c3;          // leftward front of v into (1,0)
  NlpSpeed c_nlp;       // c~_nlp when u is the faster species
  double bar_c_nlp;
  Interval c_llw;
  Interval tilde_c_llw;
  Interval lambda_llw;        // at c_llw endpoints (lambda decreases in c)
  Interval tilde_lambda_llw;  // at tilde_c_llw endpoints

  TransitionDiagram diagram;
};

SpeedTheory speed_report(const ModelParams& p, bool assume_determinacy);

}  // namespace lvs
