#include "lvspread/speeds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lvspread/error.hpp"

namespace lvs {

namespace {

// Roundoff can push an exactly-zero discriminant slightly negative.
double checked_sqrt_discriminant(double disc, double scale, const char* what) {
  if (disc >= 0.0) return std::sqrt(disc);
  if (disc > -1e-12 * std::max(1.0, scale)) return 0.0;
  std::ostringstream os;
  os.precision(17);
  os << what << ": negative discriminant " << disc;
  fail(ErrorCode::InvalidArgument, os.str());
}

void require_coefficient(double a, const char* name) {
  require(std::isfinite(a) && a > 0.0 && a < 1.0,
          std::string(name) + " must lie in (0, 1)");
}

}  // namespace

Interval Interval::scaled(double k) const { return {k * lo, k * hi}; }

Interval max(const Interval& x, double y) { return {std::max(x.lo, y), std::max(x.hi, y)}; }

Interval max(const Interval& x, const Interval& y) {
  return {std::max(x.lo, y.lo), std::max(x.hi, y.hi)};
}

std::string_view to_string(NlpBranch branch) {
  return branch == NlpBranch::Nonlocal ? "nonlocal" : "local";
}

std::string_view to_string(Plateau state) {
  switch (state) {
    case Plateau::SemiU: return "(1,0)";
    case Plateau::Coexistence: return "(k1,k2)";
    case Plateau::SemiV: return "(0,1)";
    case Plateau::Trivial: return "(0,0)";
  }
  return "?";
}

Density plateau_density(Plateau state, const ModelParams& p) {
  switch (state) {
    case Plateau::SemiU: return {1.0, 0.0};
    case Plateau::Coexistence: return coexistence_equilibrium(p);
    case Plateau::SemiV: return {0.0, 1.0};
    case Plateau::Trivial: return {0.0, 0.0};
  }
  return {};
}

double c1(const ModelParams& p) { return 2.0 * std::sqrt(p.dr()); }

NlpSpeed c_nlp_from_c1(double c1, double a) {
  require_coefficient(a, "a");
  require(std::isfinite(c1) && c1 >= 2.0, "c_nlp requires c1 >= 2");
  const double half = 0.5 * c1;
  const double sa = std::sqrt(a);
  const double s1a = std::sqrt(1.0 - a);
  if (half <= sa + s1a) {
    return {half - sa + (1.0 - a) / (half - sa), NlpBranch::Nonlocal};
  }
  return {2.0 * s1a, NlpBranch::Local};
}

NlpSpeed c_nlp(const ModelParams& p) {
  require(p.dr() >= 1.0, "c_nlp requires dr >= 1; swap roles first");
  return c_nlp_from_c1(c1(p), p.a());
}

double bar_c_nlp(double c1, double a) {
  require_coefficient(a, "a");
  const double m = 0.5 * c1 - std::sqrt(a);
  require(m > 0.0, "bar_c_nlp requires c1/2 > sqrt(a)");
  return m + (1.0 - a) / m;
}

double lambda_llw(double c_llw, double a) {
  require_coefficient(a, "a");
  const double root =
      checked_sqrt_discriminant(c_llw * c_llw - 4.0 * (1.0 - a), c_llw * c_llw, "lambda_llw");
  return 0.5 * (c_llw - root);
}

double tilde_lambda_llw(double tilde_c_llw, double d, double r, double b) {
  require_coefficient(b, "b");
  require(d > 0.0 && r > 0.0, "tilde_lambda_llw requires d, r > 0");
  const double c = tilde_c_llw;
  const double root =
      checked_sqrt_discriminant(c * c - 4.0 * d * r * (1.0 - b), c * c, "tilde_lambda_llw");
  return (c - root) / (2.0 * d);
}

double c_hat_mu(double c_hat, double mu_hat, double a, double c_llw, double lambda) {
  require_coefficient(a, "a");
  require(c_hat > 0.0 && mu_hat > 0.0, "c_hat_mu requires c_hat > 0 and mu_hat > 0");
  if (mu_hat >= lambda * (c_hat - c_llw)) return c_llw;
  const double root = checked_sqrt_discriminant(
      c_hat * c_hat - 4.0 * (mu_hat + 1.0 - a), c_hat * c_hat, "c_hat_mu");
  return c_hat - 2.0 * mu_hat / (c_hat - root);
}

double tilde_c_hat_mu(double c_hat, double mu_hat, double d, double r, double b,
                      double tilde_c_llw, double tilde_lambda) {
  require_coefficient(b, "b");
  require(d > 0.0 && r > 0.0, "tilde_c_hat_mu requires d, r > 0");
  require(c_hat > 0.0 && mu_hat > 0.0, "tilde_c_hat_mu requires c_hat > 0 and mu_hat > 0");
  if (mu_hat >= tilde_lambda * (c_hat - tilde_c_llw)) return tilde_c_llw;
  const double root = checked_sqrt_discriminant(
      c_hat * c_hat - 4.0 * d * (mu_hat + r * (1.0 - b)), c_hat * c_hat, "tilde_c_hat_mu");
  return c_hat - 2.0 * d * mu_hat / (c_hat - root);
}

double j1_closed(double t, double x, double c1, double a) {
  require(t > 0.0, "j1_closed requires t > 0");
  const double m = 0.5 * c1 - std::sqrt(a);
  const double bar = bar_c_nlp(c1, a);
  const double q = x / t;
  if (q >= c1) return 0.25 * t * (q * q - 4.0);
  if (q >= c1 - 2.0 * std::sqrt(a)) return m * (x - bar * t);
  if (q >= 0.0) return 0.25 * t * (q * q - 4.0 * (1.0 - a));
  return -t * (1.0 - a);
}

double w1_closed(double t, double x, double c1, double a) {
  return std::max(j1_closed(t, x, c1, a), 0.0);
}

double mu_hat(double c_hat, double c1, double a) {
  const double bar = bar_c_nlp(c1, a);
  require(c_hat >= bar && c_hat <= c1, "mu_hat requires bar_c_nlp <= c_hat <= c1");
  return (0.5 * c1 - std::sqrt(a)) * (c_hat - bar);
}

double zero_level_speed(double c1, double a) { return c_nlp_from_c1(c1, a).value; }

SpeedTheory speed_report(const ModelParams& p, bool assume_determinacy) {
  SpeedTheory s{};
  s.regime = classify_regime(p);
  s.determinacy_assumed = assume_determinacy;

  const double dr = p.dr();
  const double llw_lo = 2.0 * std::sqrt(1.0 - p.a());
  const double tilde_lo = 2.0 * std::sqrt(dr * (1.0 - p.b()));
  s.c_llw = assume_determinacy ? Interval::point(llw_lo) : Interval{llw_lo, 2.0};
  s.tilde_c_llw =
      assume_determinacy ? Interval::point(tilde_lo) : Interval{tilde_lo, 2.0 * std::sqrt(dr)};
  s.lambda_llw = {lambda_llw(s.c_llw.hi, p.a()), lambda_llw(s.c_llw.lo, p.a())};
  s.tilde_lambda_llw = {tilde_lambda_llw(s.tilde_c_llw.hi, p.d(), p.r(), p.b()),
                        tilde_lambda_llw(s.tilde_c_llw.lo, p.d(), p.r(), p.b())};
  s.c3 = -s.tilde_c_llw;

  switch (s.regime.tag) {
    case RegimeTag::FastV: {
      s.c1 = c1(p);
      s.c_nlp = c_nlp(p);
      s.bar_c_nlp = bar_c_nlp(s.c1, p.a());
      s.c2 = max(s.c_llw, s.c_nlp.value);
      s.diagram = {{Plateau::SemiU, s.c3},
                   {Plateau::Coexistence, s.c2},
                   {Plateau::SemiV, Interval::point(s.c1)},
                   {Plateau::Trivial, std::nullopt}};
      break;
    }
    case RegimeTag::Balanced: {
      s.c1 = 2.0;
      s.c_nlp = c_nlp(p);
      s.bar_c_nlp = bar_c_nlp(s.c1, p.a());
      s.c2 = Interval::point(2.0);
      s.diagram = {{Plateau::SemiU, s.c3},
                   {Plateau::Coexistence, Interval::point(2.0)},
                   {Plateau::Trivial, std::nullopt}};
      break;
    }
    case RegimeTag::FastU: {
      // Rightward fronts come from the swapped system; the leftward front is
      // still v invading (1,0) and keeps its direct form.
      const SwappedParams sw = swap_roles(p);
      const ModelParams& q = sw.params;
      const Interval swapped_llw = assume_determinacy
                                       ? Interval::point(2.0 * std::sqrt(1.0 - q.a()))
                                       : Interval{2.0 * std::sqrt(1.0 - q.a()), 2.0};
      const NlpSpeed swapped_nlp = c_nlp(q);
      s.c1 = 2.0;
      s.c_nlp = {sw.speed_scale * swapped_nlp.value, swapped_nlp.branch};
      s.bar_c_nlp = sw.speed_scale * bar_c_nlp(c1(q), q.a());
      s.c2 = max(swapped_llw, swapped_nlp.value).scaled(sw.speed_scale);
      s.diagram = {{Plateau::SemiU, s.c3},
                   {Plateau::Coexistence, s.c2},
                   {Plateau::SemiU, Interval::point(s.c1)},
                   {Plateau::Trivial, std::nullopt}};
      break;
    }
  }
  return s;
}

}  // namespace lvs
