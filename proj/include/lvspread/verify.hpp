#pragma once

#include <string>
#include <vector>

#include "lvspread/action.hpp"
#include "lvspread/model.hpp"
#include "lvspread/solver.hpp"

namespace lvs {

struct VerifyConfig {
  ModelParams params{1.5, 1.0, 0.6, 0.5};
  MinimizeOptions action{128, 2, 0, std::nullopt};
  int grid_n = 15;
  bool run_simulation = true;
  int threads = 1;

  // Simulation used by the WKB and decay-rate checks.
  Grid1D grid{-1200.0, 700.0, 0.1};
  InitialCondition ic{{-1000.0, 0.0, 1.0, 0.0}, {-20.0, 0.0, 1.0, 0.0}, true};
  SchemeConfig scheme;
  double t_end = 200.0;
  double c_hat = 2.0;
};

struct CheckResult {
  std::string name;
  bool mandatory = true;
  bool passed = false;
  bool skipped = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_mandatory_passed() const;
};

/// Action-oracle property suite, optionally followed by simulation checks.
/// Rightward quantities use the faster species' frame: for dr < 1 the
/// parameters are swapped first.
VerifyReport verify_run(const VerifyConfig& cfg);

/// (c1, a) of the L1 problem for the slower species of p.
LagrangianSpec slow_species_lagrangian(const ModelParams& p);

}  // namespace lvs
