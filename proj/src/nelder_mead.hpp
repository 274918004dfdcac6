#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace lvs::detail {

struct NelderMeadOptions {
  double initial_step = 0.1;
  double ftol = 1e-15;  // absolute spread of simplex values
  double xtol = 1e-11;  // max vertex distance from the best vertex
  int max_evals = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};

// Standard coefficients (1, 2, 1/2, 1/2). Ties in the ordering are broken by
// vertex index so the iteration is reproducible.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& opt) {
  const std::size_t n = x0.size();
  NelderMeadResult res;
  if (n == 0) {
    res.x = std::move(x0);
    res.f = f(res.x);
    res.evals = 1;
    res.converged = true;
    return res;
  }

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(pts[i]);
    ++evals;
  }

  std::vector<std::size_t> idx(n + 1);
  std::vector<double> xc(n), xr(n), xe(n), xk(n);
  bool converged = false;

  while (evals < opt.max_evals) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = idx[0], worst = idx[n], second = idx[n - 1];

    double spread = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        spread = std::max(spread, std::abs(pts[idx[i]][j] - pts[best][j]));
      }
    }
    if (fv[worst] - fv[best] <= opt.ftol && spread <= opt.xtol * 1e3) {
      converged = true;
      break;
    }
    if (spread <= opt.xtol) {
      converged = true;
      break;
    }

    std::fill(xc.begin(), xc.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) xc[j] += pts[idx[i]][j];
    }
    for (double& c : xc) c /= static_cast<double>(n);

    const std::vector<double>& xw = pts[worst];
    for (std::size_t j = 0; j < n; ++j) xr[j] = 2.0 * xc[j] - xw[j];
    const double fr = f(xr);
    ++evals;

    if (fr < fv[best]) {
      for (std::size_t j = 0; j < n; ++j) xe[j] = xc[j] + 2.0 * (xr[j] - xc[j]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = xr;
      fv[worst] = fr;
      continue;
    }

    const bool outside = fr < fv[worst];
    for (std::size_t j = 0; j < n; ++j) {
      xk[j] = outside ? xc[j] + 0.5 * (xr[j] - xc[j]) : xc[j] + 0.5 * (xw[j] - xc[j]);
    }
    const double fk = f(xk);
    ++evals;
    if (fk < (outside ? fr : fv[worst])) {
      pts[worst] = xk;
      fv[worst] = fk;
      continue;
    }

    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<double>& p = pts[idx[i]];
      for (std::size_t j = 0; j < n; ++j) p[j] = pts[best][j] + 0.5 * (p[j] - pts[best][j]);
      fv[idx[i]] = f(p);
      ++evals;
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (fv[i] < fv[best]) best = i;
  }
  res.x = pts[best];
  res.f = fv[best];
  res.evals = evals;
  res.converged = converged;
  return res;
}

}  // namespace lvs::detail
