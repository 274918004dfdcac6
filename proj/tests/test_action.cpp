#include <cmath>
#include <random>

#include "doctest.h"
#include "lvspread/action.hpp"
#include "lvspread/error.hpp"
#include "lvspread/speeds.hpp"

using namespace lvs;

namespace {

const double kC1 = 2.0 * std::sqrt(1.5);

LagrangianSpec l1(double a = 0.6) { return {LagrangianKind::L1, kC1, 2.0, a}; }
LagrangianSpec l2(double a = 0.6) { return {LagrangianKind::L2, kC1, 2.0, a}; }

double oracle_j1(double t, double x, double c1, double a) {
  const double s = x / t;
  if (s >= c1) return t / 4.0 * (s * s - 4.0);
  const double m = c1 / 2.0 - std::sqrt(a);
  if (s >= c1 - 2.0 * std::sqrt(a)) return m * (x - (m + (1.0 - a) / m) * t);
  if (s >= 0.0) return t / 4.0 * (s * s - 4.0 * (1.0 - a));
  return -t * (1.0 - a);
}

}  // namespace

TEST_CASE("lagrangian and hamiltonian examples") {
  CHECK(lagrangian(l1(), 1.0, 3.0, 0.0) == -1.0);
  CHECK(lagrangian(l1(), 1.0, 0.0, 2.0) == doctest::Approx(0.6));
  CHECK(lagrangian(l2(), 1.0, 1.0, 0.0) == -1.0);
  CHECK(lagrangian(l2(), 1.0, 2.2, 0.0) == doctest::Approx(-0.4));
  CHECK(hamiltonian(l1(), 1.0, 100.0, 0.0) == 1.0);
  CHECK(hamiltonian(l1(), 1.0, 0.0, 1.0) == doctest::Approx(1.4));
  CHECK(hamiltonian(l2(), 1.0, 1.0, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("lagrangian spec validation") {
  CHECK_THROWS_AS(validate(LagrangianSpec{LagrangianKind::L1, kC1, 2.0, 1.0}), Error);
  CHECK_THROWS_AS(validate(LagrangianSpec{LagrangianKind::L2, 2.0, 2.0, 0.5}), Error);
  CHECK_THROWS_AS(validate(LagrangianSpec{LagrangianKind::L2, 3.0, 1.5, 0.5}), Error);
  CHECK_NOTHROW(validate(l2()));
  CHECK(to_string(LagrangianKind::L2) == "L2");
}

TEST_CASE("legendre duality at random points") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> xs(-2.0, 6.0), qs(-4.0, 4.0), ss(0.1, 2.0);
  for (const LagrangianSpec& spec : {l1(), l2()}) {
    for (int i = 0; i < 100; ++i) {
      const double s = ss(rng), x = xs(rng), q = qs(rng);
      const double coarse = legendre_numeric(spec, s, x, q, 1e-2);
      const double fine = legendre_numeric(spec, s, x, q, 1e-3);
      CHECK(std::abs(fine - lagrangian(spec, s, x, q)) <= 1e-6);
      CHECK(std::abs(coarse - lagrangian(spec, s, x, q)) <= 1e-6);
    }
  }
}

TEST_CASE("path_action examples") {
  CHECK(path_action({{0.0, 1.0}, {0.0, 3.0}}, l1()) == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(path_action({{0.0, 1.0}, {-1.0, -1.0}}, l1()) == doctest::Approx(-0.4).epsilon(1e-14));
  const double a = 0.6, tau = 1.0 - std::abs(2.0 - kC1) / (2.0 * std::sqrt(a));
  const double two = path_action({{0.0, tau, 1.0}, {0.0, kC1 * tau, 2.0}}, l1());
  CHECK(two == doctest::Approx(0.297665).epsilon(1e-5));
  CHECK(two == doctest::Approx(oracle_j1(1.0, 2.0, kC1, a)).epsilon(1e-12));
  // Crossing the line splits a segment exactly: from x=0 at slope 4 the path
  // sits below c1 s for s < 0 only, so it pays no penalty.
  CHECK(path_action({{0.0, 1.0}, {0.0, 4.0}}, l1()) == doctest::Approx(3.0).epsilon(1e-14));
  // Straight line at slope 2 to (1,2) stays below the line and pays a throughout.
  CHECK(path_action({{0.0, 1.0}, {0.0, 2.0}}, l1()) == doctest::Approx(0.6).epsilon(1e-14));
  // Start at -c1/2 with slope 2c1: below the line until s = 1/2.
  const double half = path_action({{0.0, 1.0}, {-0.5 * kC1, 1.5 * kC1}}, l1());
  CHECK(half == doctest::Approx(kC1 * kC1 - 1.0 + 0.3).epsilon(1e-13));
}

TEST_CASE("path validation") {
  CHECK_THROWS_AS(validate(PiecewisePath{{0.0, 1.0}, {0.5, 1.0}}), Error);
  CHECK_THROWS_AS(validate(PiecewisePath{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}}), Error);
  CHECK_THROWS_AS(validate(PiecewisePath{{0.1, 1.0}, {0.0, 1.0}}), Error);
  CHECK_THROWS_AS(validate(PiecewisePath{{0.0, 1.0}, {0.0}}), Error);
  CHECK_NOTHROW(validate(PiecewisePath{{0.0, 1.0}, {-3.0, 1.0}}));
}

TEST_CASE("path_action scaling") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    PiecewisePath p;
    p.times = {0.0};
    p.positions = {-u01(rng)};
    for (int k = 1; k <= 6; ++k) {
      p.times.push_back(p.times.back() + 0.1 + u01(rng));
      p.positions.push_back(-2.0 + 8.0 * u01(rng));
    }
    const double k = 0.2 + 4.0 * u01(rng);
    PiecewisePath q = p;
    for (size_t j = 0; j < q.times.size(); ++j) {
      q.times[j] *= k;
      q.positions[j] *= k;
    }
    for (const LagrangianSpec& spec : {l1(), l2()}) {
      const double base = path_action(p, spec);
      CHECK(path_action(q, spec) == doctest::Approx(k * base).epsilon(1e-12));
    }
  }
}

TEST_CASE("two-segment minimizer equals the closed form on its branch") {
  for (int i = 0; i < 15; ++i) {
    const double t = 0.5 + 1.5 * i / 14.0;
    for (int j = 0; j < 15; ++j) {
      const double x = kC1 * t * j / 15.0;
      const ActionResult r = minimize_two_segment(t, x, l1());
      CHECK(r.method == ActionMethod::TwoSegmentClosed);
      CHECK(std::abs(r.value - oracle_j1(t, x, kC1, 0.6)) <= 1e-9);
      CHECK(std::abs(r.value - path_action(r.minimizer, l1())) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(minimize_two_segment(1.0, 3.0, l1()), Error);
}

TEST_CASE("numeric minimizer examples") {
  const ActionResult a = minimize_action(1.0, 2.0, l1());
  CHECK(std::abs(a.value - 0.297665) <= 1e-3);
  CHECK(a.value >= oracle_j1(1.0, 2.0, kC1, 0.6) - 1e-6);
  CHECK(a.method == ActionMethod::NSegmentNumeric);
  CHECK(a.minimizer.times.size() == 64);
  CHECK(std::abs(a.value - path_action(a.minimizer, l1())) <= 1e-12);

  const ActionResult b = minimize_action(1.0, -1.0, l1());
  CHECK(std::abs(b.value + 0.4) <= 1e-3);
  CHECK(b.minimizer.positions.front() <= 0.0);
  CHECK(b.minimizer.positions.back() == -1.0);
}

TEST_CASE("numeric minimizer matches the closed form on a coarse sweep") {
  const MinimizeOptions opt{128, 0, 0, std::nullopt};
  for (double t : {0.5, 1.3, 2.0}) {
    for (double f : {-0.8, -0.1, 0.2, 0.55, 0.8, 0.97, 1.15}) {
      const double x = f * kC1 * t;
      const ActionResult r = minimize_action(t, x, l1(), opt);
      const double ref = oracle_j1(t, x, kC1, 0.6);
      CHECK(r.value >= ref - 1e-6);
      CHECK(r.value - ref <= 1e-3);
      if (f < 1.0) {
        // The minimizer stays at or below x = c1 s up to one knot step.
        const double step = t / 127.0 * kC1;
        for (size_t k = 0; k < r.minimizer.times.size(); ++k) {
          CHECK(r.minimizer.positions[k] <= kC1 * r.minimizer.times[k] + step);
        }
      }
    }
  }
}

TEST_CASE("numeric minimizer is deterministic for a seed") {
  const MinimizeOptions opt{32, 3, 42, std::nullopt};
  const ActionResult a = minimize_action(1.0, 1.7, l1(), opt);
  const ActionResult b = minimize_action(1.0, 1.7, l1(), opt);
  CHECK(a.value == b.value);
  CHECK(a.minimizer.positions == b.minimizer.positions);
}

TEST_CASE("J1 equals J2 beyond the fast line") {
  const MinimizeOptions opt{128, 0, 0, std::nullopt};
  for (double t : {0.5, 1.0, 2.0}) {
    for (double dq : {0.05, 0.3, 1.0}) {
      const double x = (kC1 + dq) * t;
      const double j1 = minimize_action(t, x, l1(), opt).value;
      const double j2 = minimize_action(t, x, l2(), opt).value;
      const double exact = t / 4.0 * (x * x / (t * t) - 4.0);
      CHECK(std::abs(j1 - exact) <= 1e-3);
      CHECK(std::abs(j2 - exact) <= 1e-3);
    }
  }
}

TEST_CASE("Freidlin condition on the front boundary") {
  const MinimizeOptions opt{128, 0, 0, std::nullopt};
  const double cn = c_nlp_from_c1(kC1, 0.6).value;
  const FreidlinReport r = freidlin_check(l1(), {{1.0, cn}, {2.0, 2.0 * cn}}, opt);
  CHECK(r.points.size() == 2);
  CHECK(r.max_discrepancy <= 2e-3);

  const double cn3 = c_nlp_from_c1(kC1, 0.3).value;
  const FreidlinReport v = freidlin_check(l1(0.3), {{1.0, cn3}}, opt);
  CHECK(v.max_discrepancy <= 2e-3);

  CHECK_THROWS_AS(freidlin_check(l1(), {{1.0, 2.0}}, opt), Error);
}

TEST_CASE("delta_star is strictly positive for the reference parameters") {
  const MinimizeOptions opt{128, 0, 0, std::nullopt};
  const DeltaStarEstimate d = delta_star_estimate(l2(), opt, 4);
  CHECK(!d.warning);
  CHECK(d.delta >= 0.05);
  CHECK(d.discrepancy <= d.tolerance);
  CHECK(d.probes >= 2);
}
