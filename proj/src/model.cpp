#include "lvspread/model.hpp"

#include <cmath>
#include <sstream>

#include "lvspread/error.hpp"

namespace lvs {

namespace {

void check(bool ok, const char* invariant, double got) {
  if (ok) return;
  std::ostringstream os;
  os.precision(17);
  os << "invalid parameters: " << invariant << " (got " << got << ")";
  fail(ErrorCode::InvalidParams, os.str());
}

}  // namespace

ModelParams::ModelParams(double d, double r, double a, double b)
    : d_(d), r_(r), a_(a), b_(b) {
  check(std::isfinite(d) && d > 0.0, "d must satisfy d > 0", d);
  check(std::isfinite(r) && r > 0.0, "r must satisfy r > 0", r);
  check(std::isfinite(a) && a > 0.0 && a < 1.0, "a must satisfy 0 < a < 1", a);
  check(std::isfinite(b) && b > 0.0 && b < 1.0, "b must satisfy 0 < b < 1", b);
}

std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::FastV: return "fast_v";
    case RegimeTag::Balanced: return "balanced";
    case RegimeTag::FastU: return "fast_u";
  }
  return "unknown";
}

Density coexistence_equilibrium(const ModelParams& p) {
  const double denom = 1.0 - p.a() * p.b();
  if (!(denom > 0.0)) fail(ErrorCode::InvalidParams, "invalid parameters: ab must be < 1");
  return {(1.0 - p.a()) / denom, (1.0 - p.b()) / denom};
}

Equilibria equilibria(const ModelParams& p) {
  Equilibria e;
  e.coexistence = coexistence_equilibrium(p);
  return e;
}

Regime classify_regime(const ModelParams& p) {
  const double dr = p.dr();
  if (dr > 1.0) return {RegimeTag::FastV, dr};
  if (dr < 1.0) return {RegimeTag::FastU, dr};
  return {RegimeTag::Balanced, dr};
}

SwappedParams swap_roles(const ModelParams& p) {
  return {ModelParams(1.0 / p.d(), 1.0 / p.r(), p.b(), p.a()), std::sqrt(p.dr())};
}

}  // namespace lvs
