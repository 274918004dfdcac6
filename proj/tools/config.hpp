#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvspread/lvspread.h"

namespace lvs::cli {

enum class SnapshotPolicy { All, Final, None };

struct LevelOption {
  int field = LVS_FIELD_V;
  int direction = LVS_RIGHTMOST_ABOVE;
  double threshold = 0.6;
  bool operator==(const LevelOption&) const = default;
};

struct RunConfig {
  // [model]
  lvs_params params{1.5, 1.0, 0.6, 0.5};
  bool determinacy = true;
  // [grid]
  lvs_grid grid{-1200.0, 700.0, 0.1};
  // [scheme]
  lvs_scheme scheme{LVS_SCHEME_EXPLICIT, 0.4, 0.01, 1.0};
  double t_end = 200.0;
  // [initial]
  lvs_initial_condition ic{{-1000.0, 0.0, 1.0, 0.0}, {-20.0, 0.0, 1.0, 0.0}, 1};
  // [analysis]
  std::vector<LevelOption> levels{{LVS_FIELD_V, LVS_RIGHTMOST_ABOVE, 0.6},
                                  {LVS_FIELD_U, LVS_RIGHTMOST_ABOVE, 0.4},
                                  {LVS_FIELD_U, LVS_LEFTMOST_BELOW, 0.7}};
  double window_fraction = 0.5;
  double eta = 0.2;
  double c_hat = 2.0;
  // [action]
  double action_t = 1.0;
  double action_x = 2.0;
  int action_kind = LVS_L1;
  int knots = 128;
  int restarts = 2;
  int verify_grid = 15;
  // [run]
  std::uint64_t seed = 0;
  int threads = 1;
  // [output]
  std::string out_dir = "out";
  SnapshotPolicy snapshots = SnapshotPolicy::Final;

  bool operator==(const RunConfig& o) const;
};

/// Flat "key = value" text with [section] headers; '#' starts a comment.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

/// Presets: "fig2" (the default configuration) and "fig1:<d>" for the three
/// panels of the first figure.
RunConfig preset(const std::string& name);

std::string format_level(const LevelOption& l);
LevelOption parse_level(const std::string& s);

}  // namespace lvs::cli
