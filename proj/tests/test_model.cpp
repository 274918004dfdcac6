#include <cmath>
#include <random>

#include "doctest.h"
#include "lvspread/error.hpp"
#include "lvspread/model.hpp"

using namespace lvs;

TEST_CASE("parameters are validated at construction") {
  CHECK_NOTHROW(ModelParams(1.5, 1.0, 0.6, 0.5));
  CHECK_THROWS_AS(ModelParams(0.0, 1.0, 0.6, 0.5), Error);
  CHECK_THROWS_AS(ModelParams(1.0, -1.0, 0.6, 0.5), Error);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, 1.2, 0.5), Error);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, 0.6, 0.0), Error);
  CHECK_THROWS_AS(ModelParams(NAN, 1.0, 0.6, 0.5), Error);
  try {
    ModelParams(1.0, 1.0, 1.2, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParams);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
}

TEST_CASE("coexistence equilibrium") {
  const Density k = coexistence_equilibrium({1.5, 1.0, 0.6, 0.5});
  CHECK(k.u == doctest::Approx(0.4 / 0.7).epsilon(1e-12));
  CHECK(k.v == doctest::Approx(0.5 / 0.7).epsilon(1e-12));

  const Density half = coexistence_equilibrium({1.0, 1.0, 0.5, 0.5});
  CHECK(half.u == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(half.v == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  const Density weak = coexistence_equilibrium({1.0, 1.0, 1e-9, 1e-9});
  CHECK(weak.u == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(weak.v == doctest::Approx(1.0).epsilon(1e-8));

  const Equilibria e = equilibria({1.5, 1.0, 0.6, 0.5});
  CHECK(e.semi_u == Density{1.0, 0.0});
  CHECK(e.semi_v == Density{0.0, 1.0});
  CHECK(e.trivial == Density{0.0, 0.0});
}

TEST_CASE("coexistence satisfies both equilibrium equations") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(0.01, 0.99);
  for (int i = 0; i < 500; ++i) {
    const double a = coef(rng), b = coef(rng);
    const Density k = coexistence_equilibrium({1.0, 1.0, a, b});
    CHECK(std::abs(1.0 - k.u - a * k.v) <= 1e-14);
    CHECK(std::abs(1.0 - b * k.u - k.v) <= 1e-14);
  }
}

TEST_CASE("regime classification") {
  CHECK(classify_regime({1.5, 1.0, 0.6, 0.5}).tag == RegimeTag::FastV);
  CHECK(classify_regime({1.0, 1.0, 0.6, 0.5}).tag == RegimeTag::Balanced);
  CHECK(classify_regime({0.5, 1.0, 0.6, 0.5}).tag == RegimeTag::FastU);
  CHECK(classify_regime({0.5, 2.0, 0.6, 0.5}).tag == RegimeTag::Balanced);
  CHECK(to_string(RegimeTag::FastU) == "fast_u");
}

TEST_CASE("swap_roles example") {
  const SwappedParams s = swap_roles({0.5, 1.0, 0.6, 0.5});
  CHECK(s.params.d() == doctest::Approx(2.0));
  CHECK(s.params.r() == doctest::Approx(1.0));
  CHECK(s.params.a() == 0.5);
  CHECK(s.params.b() == 0.6);
  CHECK(s.speed_scale == doctest::Approx(std::sqrt(0.5)));
  // The slow species' KPP speed in the swapped frame maps back to 2.
  CHECK(2.0 * std::sqrt(s.params.dr()) * s.speed_scale == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("swap_roles is an involution and exchanges regimes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(0.01, 0.99), logd(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p(std::exp(logd(rng)), std::exp(logd(rng)), coef(rng), coef(rng));
    const ModelParams back = swap_roles(swap_roles(p).params).params;
    CHECK(std::abs(back.d() - p.d()) <= 1e-14 * p.d());
    CHECK(std::abs(back.r() - p.r()) <= 1e-14 * p.r());
    CHECK(back.a() == p.a());
    CHECK(back.b() == p.b());
    const RegimeTag t = classify_regime(p).tag, s = classify_regime(swap_roles(p).params).tag;
    if (t == RegimeTag::FastV) CHECK(s == RegimeTag::FastU);
    if (t == RegimeTag::FastU) CHECK(s == RegimeTag::FastV);
  }
  const ModelParams balanced(1.0, 1.0, 0.3, 0.7);
  CHECK(classify_regime(swap_roles(balanced).params).tag == RegimeTag::Balanced);
}
