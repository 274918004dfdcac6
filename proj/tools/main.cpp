#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "json.hpp"
#include "lvspread/lvspread.h"

namespace fs = std::filesystem;
using nlohmann::json;
using lvs::cli::RunConfig;

namespace {

// Carries an lvs_status out of nested helpers.
struct Failure {
  int code;
  std::string message;
};

void check(int status) {
  if (status != LVS_OK) throw Failure{status, lvs_last_error()};
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json interval(lvs_interval i) {
  if (i.lo == i.hi) return i.lo;
  return json::array({i.lo, i.hi});
}

const char* regime_name(int r) {
  switch (r) {
    case LVS_REGIME_FAST_V: return "fast_v";
    case LVS_REGIME_BALANCED: return "balanced";
    default: return "fast_u";
  }
}

json speeds_json(const RunConfig& cfg) {
  lvs_speed_report s;
  check(lvs_speed_report_compute(&cfg.params, cfg.determinacy ? 1 : 0, &s));
  double k1 = 0.0, k2 = 0.0;
  check(lvs_coexistence(&cfg.params, &k1, &k2));
  json j;
  j["regime"] = regime_name(s.regime);
  j["determinacy_assumed"] = s.determinacy_assumed != 0;
  j["c1"] = s.c1;
  j["c2"] = interval(s.c2);
  j["c2_lo"] = s.c2.lo;
  j["c2_hi"] = s.c2.hi;
  j["c3"] = interval(s.c3);
  j["c3_lo"] = s.c3.lo;
  j["c3_hi"] = s.c3.hi;
  j["c_nlp"] = s.c_nlp;
  j["branch"] = s.nlp_branch == LVS_BRANCH_NONLOCAL ? "nonlocal" : "local";
  j["bar_c_nlp"] = s.bar_c_nlp;
  j["c_llw_lo"] = s.c_llw.lo;
  j["c_llw_hi"] = s.c_llw.hi;
  j["tilde_c_llw_lo"] = s.tilde_c_llw.lo;
  j["tilde_c_llw_hi"] = s.tilde_c_llw.hi;
  j["lambda_llw"] = interval(s.lambda_llw);
  j["tilde_lambda_llw"] = interval(s.tilde_lambda_llw);
  j["k1"] = k1;
  j["k2"] = k2;
  json diagram = json::array();
  for (int i = 0; i < s.diagram_len; ++i) {
    const lvs_diagram_entry& e = s.diagram[i];
    diagram.push_back({{"state", lvs_state_name(e.state)},
                       {"speed", e.has_boundary ? interval(e.boundary) : json(nullptr)}});
  }
  j["diagram"] = diagram;
  return j;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Failure{LVS_ERR_ARGUMENT, "cannot write " + p.string()};
  f << text;
}

void write_json(const fs::path& p, const json& j) { write_text(p, j.dump(2) + "\n"); }

void check_params(const RunConfig& cfg) { check(lvs_params_validate(&cfg.params)); }

struct Sim {
  lvs_trajectory* tr = nullptr;
  ~Sim() { lvs_trajectory_free(tr); }
};

lvs_level to_level(const lvs::cli::LevelOption& l) { return {l.field, l.threshold, l.direction}; }

json estimate_json(lvs_trajectory* tr, const lvs::cli::LevelOption& level, double window) {
  const lvs_level spec = to_level(level);
  lvs_front_trace* ft = nullptr;
  check(lvs_track(tr, &spec, &ft));
  json j;
  j["level"] = lvs::cli::format_level(level);
  j["samples_total"] = lvs_front_trace_length(ft);
  j["gaps"] = lvs_front_trace_gap_count(ft);
  lvs_speed_estimate e;
  if (lvs_estimate_speed(ft, window, &e) == LVS_OK) {
    j["ratio_at_end"] = e.ratio_at_end;
    j["slope"] = e.slope;
    j["t_lo"] = e.t_lo;
    j["t_end"] = e.t_end;
    j["residual"] = e.residual;
    j["samples"] = e.samples;
  } else {
    j["error"] = lvs_last_error();
  }
  lvs_front_trace_free(ft);
  return j;
}

// Runs the configured simulation and writes front data; shared by simulate,
// fronts and reproduce.
json simulate_pipeline(const RunConfig& cfg, const fs::path& out, bool snapshots_allowed) {
  check_params(cfg);
  fs::create_directories(out);
  Sim sim;
  check(lvs_simulate(&cfg.params, &cfg.grid, &cfg.ic, &cfg.scheme, cfg.t_end, 1, &sim.tr));
  lvs_trajectory* tr = sim.tr;
  const size_t n_snap = lvs_trajectory_snapshot_count(tr);
  const size_t n_node = lvs_trajectory_node_count(tr);

  if (snapshots_allowed && cfg.snapshots != lvs::cli::SnapshotPolicy::None) {
    fs::create_directories(out / "snapshots");
    const size_t first = cfg.snapshots == lvs::cli::SnapshotPolicy::All ? 0 : n_snap - 1;
    for (size_t k = first; k < n_snap; ++k) {
      char name[48];
      std::snprintf(name, sizeof name, "snapshot_%05zu.csv", k);
      check(lvs_trajectory_write_csv(tr, k, (out / "snapshots" / name).string().c_str()));
    }
  }

  // Front positions per snapshot.
  const size_t nl = cfg.levels.size();
  std::string csv = "t";
  for (size_t i = 0; i < nl; ++i) csv += ",x" + std::to_string(i + 1);
  for (size_t i = 0; i < nl; ++i) csv += ",x" + std::to_string(i + 1) + "_over_t";
  csv += "\n";
  std::vector<std::string> ratio_dat(nl);
  for (size_t k = 0; k < n_snap; ++k) {
    double t = 0.0;
    check(lvs_trajectory_snapshot(tr, k, &t, nullptr, nullptr));
    std::vector<double> xs(nl, NAN);
    for (size_t i = 0; i < nl; ++i) {
      const lvs_level spec = to_level(cfg.levels[i]);
      int found = 0;
      check(lvs_front_position(tr, k, &spec, &found, &xs[i]));
      if (found && t > 0.0) ratio_dat[i] += num(t) + " " + num(xs[i] / t) + "\n";
    }
    csv += num(t);
    for (size_t i = 0; i < nl; ++i) csv += "," + num(xs[i]);
    for (size_t i = 0; i < nl; ++i) csv += "," + num(t > 0.0 ? xs[i] / t : NAN);
    csv += "\n";
  }
  write_text(out / "fronts.csv", csv);

  // gnuplot inputs: x_i(t)/t curves and the final profiles.
  std::string gp = "set datafile separator whitespace\nset xlabel 't'\nset ylabel 'x_i(t)/t'\nplot ";
  for (size_t i = 0; i < nl; ++i) {
    const std::string file = "x" + std::to_string(i + 1) + "_over_t.dat";
    write_text(out / file, ratio_dat[i]);
    gp += std::string(i ? ", " : "") + "'" + file + "' using 1:2 with lines title '" +
          lvs::cli::format_level(cfg.levels[i]) + "'";
  }
  gp += "\npause -1\nset xlabel 'x'\nset ylabel 'density'\n"
        "plot 'profile_u.dat' using 1:2 with lines title 'u', "
        "'profile_v.dat' using 1:2 with lines title 'v'\npause -1\n";
  {
    double t = 0.0;
    const double *u = nullptr, *v = nullptr;
    check(lvs_trajectory_snapshot(tr, n_snap - 1, &t, &u, &v));
    std::string pu, pv;
    for (size_t i = 0; i < n_node; ++i) {
      const std::string x = num(lvs_trajectory_node_x(tr, i));
      pu += x + " " + num(u[i]) + "\n";
      pv += x + " " + num(v[i]) + "\n";
    }
    write_text(out / "profile_u.dat", pu);
    write_text(out / "profile_v.dat", pv);
  }
  write_text(out / "plot.gp", gp);

  json report;
  report["theory"] = speeds_json(cfg);
  json fronts = json::array();
  for (const auto& l : cfg.levels) fronts.push_back(estimate_json(tr, l, cfg.window_fraction));
  report["fronts"] = fronts;
  int regime = 0;
  check(lvs_classify_regime(&cfg.params, &regime));
  if (regime == LVS_REGIME_FAST_V) {
    lvs_rate r;
    json rate;
    rate["c_hat"] = cfg.c_hat;
    if (lvs_decay_rate(tr, cfg.c_hat, NAN, NAN, &r) == LVS_OK) {
      rate["mu"] = r.mu;
      rate["t_lo"] = r.t_lo;
      rate["t_hi"] = r.t_hi;
      rate["residual"] = r.residual;
      double mu = 0.0;
      lvs_speed_report s;
      check(lvs_speed_report_compute(&cfg.params, 1, &s));
      if (lvs_mu_hat(cfg.c_hat, s.c1, cfg.params.a, &mu) == LVS_OK) rate["mu_theory"] = mu;
    } else {
      rate["error"] = lvs_last_error();
    }
    report["decay_rate"] = rate;
  }
  report["run"] = {{"t_end", cfg.t_end},
                   {"snapshots", n_snap},
                   {"nodes", n_node},
                   {"dt_used", lvs_trajectory_dt_used(tr)},
                   {"steps", lvs_trajectory_steps(tr)},
                   {"max_excursion", lvs_trajectory_max_excursion(tr)}};
  return report;
}

int cmd_speeds(const RunConfig& cfg, bool write_out) {
  check_params(cfg);
  const json j = speeds_json(cfg);
  std::cout << j.dump(2) << "\n";
  if (write_out) {
    fs::create_directories(cfg.out_dir);
    write_json(fs::path(cfg.out_dir) / "speeds.json", j);
  }
  return 0;
}

int cmd_simulate(const RunConfig& cfg) {
  const json report = simulate_pipeline(cfg, cfg.out_dir, true);
  write_json(fs::path(cfg.out_dir) / "speeds.json", report);
  std::cout << report["fronts"].dump(2) << "\n";
  return 0;
}

int cmd_fronts(const RunConfig& cfg) {
  const json report = simulate_pipeline(cfg, cfg.out_dir, false);
  write_json(fs::path(cfg.out_dir) / "fronts.json", report);
  std::cout << report.dump(2) << "\n";
  return 0;
}

lvs_lagrangian slow_frame(const RunConfig& cfg, int kind) {
  int regime = 0;
  check(lvs_classify_regime(&cfg.params, &regime));
  lvs_params q = cfg.params;
  if (regime == LVS_REGIME_FAST_U) {
    double scale = 0.0;
    check(lvs_swap_roles(&cfg.params, &q, &scale));
  }
  double c1 = 0.0;
  check(lvs_c1(&q, &c1));
  return {kind, c1, 2.0, q.a};
}

int cmd_action(const RunConfig& cfg) {
  check_params(cfg);
  const lvs_lagrangian spec = slow_frame(cfg, cfg.action_kind);
  lvs_minimize_options opt;
  lvs_minimize_options_default(&opt);
  opt.n_knots = cfg.knots;
  opt.n_restarts = cfg.restarts;
  opt.seed = cfg.seed;
  lvs_action_result* r = nullptr;
  check(lvs_minimize_action(cfg.action_t, cfg.action_x, &spec, &opt, &r));
  const double t = cfg.action_t, x = cfg.action_x;
  json j;
  j["kind"] = spec.kind == LVS_L1 ? "L1" : "L2";
  j["t"] = t;
  j["x"] = x;
  j["c1"] = spec.c1;
  j["tilde_c1"] = spec.tilde_c1;
  j["a"] = spec.a;
  j["value"] = lvs_action_value(r);
  j["converged"] = lvs_action_converged(r) != 0;
  double closed = 0.0;
  const bool has_closed = (spec.kind == LVS_L1 || x >= spec.c1 * t) &&
                          lvs_j1_closed(t, x, spec.c1, spec.a, &closed) == LVS_OK;
  j["closed_form"] = has_closed ? json(closed) : json(nullptr);
  j["discrepancy"] = has_closed ? json(lvs_action_value(r) - closed) : json(nullptr);
  if (spec.kind == LVS_L1 && x >= 0.0 && x < spec.c1 * t) {
    lvs_action_result* two = nullptr;
    check(lvs_minimize_two_segment(t, x, &spec, &two));
    j["two_segment"] = lvs_action_value(two);
    lvs_action_result_free(two);
  }
  const size_t n = lvs_action_knot_count(r);
  std::vector<double> ts(n), xs(n);
  check(lvs_action_knots(r, ts.data(), xs.data(), n));
  json knots = json::array();
  for (size_t i = 0; i < n; ++i) knots.push_back({ts[i], xs[i]});
  j["minimizer_knots"] = knots;
  lvs_action_result_free(r);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, bool skip_simulation, bool write_out) {
  check_params(cfg);
  lvs_verify_config v;
  lvs_verify_config_default(&v);
  v.params = cfg.params;
  v.action.n_knots = cfg.knots;
  v.action.n_restarts = cfg.restarts;
  v.action.seed = cfg.seed;
  v.grid_n = cfg.verify_grid;
  v.run_simulation = skip_simulation ? 0 : 1;
  v.threads = cfg.threads;
  v.grid = cfg.grid;
  v.ic = cfg.ic;
  v.scheme = cfg.scheme;
  v.t_end = cfg.t_end;
  v.c_hat = cfg.c_hat;
  lvs_verify_report* rep = nullptr;
  check(lvs_verify_run(&v, &rep));
  json checks = json::array();
  std::printf("%-28s %-5s %-24s %-24s %s\n", "check", "state", "measured", "tolerance", "detail");
  for (size_t i = 0; i < lvs_verify_check_count(rep); ++i) {
    const char *name = nullptr, *detail = nullptr;
    int mandatory = 0, passed = 0, skipped = 0;
    double measured = 0.0, tol = 0.0;
    check(lvs_verify_check(rep, i, &name, &mandatory, &passed, &skipped, &measured, &tol, &detail));
    const char* state = skipped ? "SKIP" : passed ? "PASS" : "FAIL";
    std::printf("%-28s %-5s %-24s %-24s %s\n", name, state, skipped ? "-" : num(measured).c_str(),
                skipped ? "-" : num(tol).c_str(), detail);
    checks.push_back({{"name", name},
                      {"state", state},
                      {"mandatory", mandatory != 0},
                      {"measured", skipped ? json(nullptr) : json(measured)},
                      {"tolerance", skipped ? json(nullptr) : json(tol)},
                      {"detail", detail}});
  }
  const bool ok = lvs_verify_all_passed(rep) != 0;
  lvs_verify_report_free(rep);
  if (write_out) {
    fs::create_directories(cfg.out_dir);
    write_json(fs::path(cfg.out_dir) / "verify.json", {{"passed", ok}, {"checks", checks}});
  }
  if (!ok) {
    std::fflush(stdout);
    std::fprintf(stderr, "verification failed\n");
    return LVS_ERR_VERIFY;
  }
  return 0;
}

int cmd_reproduce(const std::string& which, const RunConfig& base) {
  const fs::path root = base.out_dir;
  if (which == "fig2") {
    RunConfig cfg = lvs::cli::preset("fig2");
    cfg.threads = base.threads;
    const json report = simulate_pipeline(cfg, root / "fig2", true);
    write_json(root / "fig2" / "speeds.json", report);
    const double paper[] = {2.4452, 1.3695, -1.7214};
    for (size_t i = 0; i < 3; ++i) {
      const json& f = report["fronts"][i];
      std::printf("x%zu(t)/t at t=%s: %s (reported in the literature: %.4f)\n", i + 1,
                  num(cfg.t_end).c_str(),
                  f.contains("ratio_at_end") ? num(f["ratio_at_end"].get<double>()).c_str() : "n/a",
                  paper[i]);
    }
    return 0;
  }
  if (which == "fig1") {
    const std::vector<std::string> panels = {"fig1:1.5", "fig1:1", "fig1:0.5"};
    const std::vector<std::string> dirs = {"d_1.5", "d_1", "d_0.5"};
    std::vector<std::optional<Failure>> errors(panels.size());
    std::vector<json> reports(panels.size());
    auto work = [&](size_t i) {
      try {
        const RunConfig cfg = lvs::cli::preset(panels[i]);
        reports[i] = simulate_pipeline(cfg, root / "fig1" / dirs[i], true);
        write_json(root / "fig1" / dirs[i] / "speeds.json", reports[i]);
      } catch (const Failure& f) {
        errors[i] = f;
      } catch (const std::exception& e) {
        errors[i] = Failure{LVS_ERR_INTERNAL, e.what()};
      }
    };
    const size_t workers = static_cast<size_t>(std::max(1, base.threads));
    for (size_t start = 0; start < panels.size(); start += workers) {
      std::vector<std::thread> pool;
      for (size_t i = start; i < std::min(panels.size(), start + workers); ++i) {
        pool.emplace_back(work, i);
      }
      for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < panels.size(); ++i) {
      if (errors[i]) throw *errors[i];
    }
    for (size_t i = 0; i < panels.size(); ++i) {
      std::printf("%s:", dirs[i].c_str());
      for (const auto& f : reports[i]["fronts"]) {
        std::printf("  %s slope %s", f["level"].get<std::string>().c_str(),
                    f.contains("slope") ? num(f["slope"].get<double>()).c_str() : "n/a");
      }
      std::printf("\n");
    }
    return 0;
  }
  throw Failure{LVS_ERR_ARGUMENT, "reproduce expects fig1 or fig2"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spreading speeds of a two-species competition-diffusion system"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  app.add_option("--config", config_path, "Configuration file");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* speeds = app.add_subcommand("speeds", "Closed-form speeds as JSON");
  auto* simulate = app.add_subcommand("simulate", "Run the PDE and write snapshots and fronts");
  auto* action = app.add_subcommand("action", "Minimize the action at one point");
  std::optional<double> at, ax;
  std::optional<std::string> kind;
  std::optional<int> knots, restarts;
  action->add_option("--t", at, "Time");
  action->add_option("--x", ax, "Position");
  action->add_option("--kind", kind, "L1 or L2")->check(CLI::IsMember({"L1", "L2"}));
  action->add_option("--knots", knots, "Knots including endpoints");
  action->add_option("--restarts", restarts, "Seeded restarts");
  auto* fronts = app.add_subcommand("fronts", "Run the PDE and report front speeds");
  auto* verify = app.add_subcommand("verify", "Property suite for the action oracle");
  bool skip_simulation = false;
  verify->add_flag("--skip-simulation", skip_simulation, "Skip the WKB and decay-rate checks");
  verify->add_option("--knots", knots, "Knots including endpoints");
  verify->add_option("--restarts", restarts, "Seeded restarts");
  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a figure preset");
  std::string which;
  reproduce->add_option("figure", which, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : LVS_ERR_ARGUMENT;
  }

  try {
    RunConfig cfg = config_path.empty() ? lvs::cli::preset("fig2") : lvs::cli::load_config(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (seed) cfg.seed = *seed;
    if (threads) cfg.threads = *threads;
    if (at) cfg.action_t = *at;
    if (ax) cfg.action_x = *ax;
    if (kind) cfg.action_kind = *kind == "L1" ? LVS_L1 : LVS_L2;
    if (knots) cfg.knots = *knots;
    if (restarts) cfg.restarts = *restarts;

    if (*speeds) return cmd_speeds(cfg, !out_dir.empty());
    if (*simulate) return cmd_simulate(cfg);
    if (*action) return cmd_action(cfg);
    if (*fronts) return cmd_fronts(cfg);
    if (*verify) return cmd_verify(cfg, skip_simulation, !out_dir.empty());
    if (*reproduce) return cmd_reproduce(which, cfg);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return LVS_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return LVS_ERR_INTERNAL;
  }
  return LVS_ERR_ARGUMENT;
}
