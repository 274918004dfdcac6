#include "config.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lvs::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool same(const lvs_step_profile& x, const lvs_step_profile& y) {
  return x.lo == y.lo && x.hi == y.hi && x.inside == y.inside && x.outside == y.outside;
}

struct Reader {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }

  double real(const std::string& key, double fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    const char* s = it->second.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || errno == ERANGE) {
      throw std::invalid_argument("config: " + key + " is not a number: '" + it->second + "'");
    }
    return v;
  }

  long long integer(const std::string& key, long long fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    const char* s = it->second.c_str();
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || errno == ERANGE) {
      throw std::invalid_argument("config: " + key + " is not an integer: '" + it->second + "'");
    }
    return v;
  }

  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    const char* s = it->second.c_str();
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || errno == ERANGE || it->second.find('-') != std::string::npos) {
      throw std::invalid_argument("config: " + key + " must be a non-negative integer: '" +
                                  it->second + "'");
    }
    return v;
  }

  bool boolean(const std::string& key, bool fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw std::invalid_argument("config: " + key + " must be true or false");
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
};

const char* const kKnownKeys[] = {
    "model.d", "model.r", "model.a", "model.b", "model.determinacy",
    "grid.x_left", "grid.x_right", "grid.dx",
    "scheme.scheme", "scheme.cfl", "scheme.dt", "scheme.snapshot_every", "scheme.t_end",
    "initial.u0_lo", "initial.u0_hi", "initial.u0_inside", "initial.u0_outside",
    "initial.v0_lo", "initial.v0_hi", "initial.v0_inside", "initial.v0_outside",
    "initial.require_hinf",
    "analysis.levels", "analysis.window_fraction", "analysis.eta", "analysis.c_hat",
    "action.t", "action.x", "action.kind", "action.knots", "action.restarts", "action.verify_grid",
    "run.seed", "run.threads",
    "output.dir", "output.write_snapshots",
};

}  // namespace

bool RunConfig::operator==(const RunConfig& o) const {
  return params.d == o.params.d && params.r == o.params.r && params.a == o.params.a &&
         params.b == o.params.b && determinacy == o.determinacy && grid.x_left == o.grid.x_left &&
         grid.x_right == o.grid.x_right && grid.dx == o.grid.dx && scheme.scheme == o.scheme.scheme &&
         scheme.cfl == o.scheme.cfl && scheme.dt == o.scheme.dt &&
         scheme.snapshot_every == o.scheme.snapshot_every && t_end == o.t_end &&
         same(ic.u0, o.ic.u0) && same(ic.v0, o.ic.v0) && ic.require_hinf == o.ic.require_hinf &&
         levels == o.levels && window_fraction == o.window_fraction && eta == o.eta &&
         c_hat == o.c_hat && action_t == o.action_t && action_x == o.action_x &&
         action_kind == o.action_kind && knots == o.knots && restarts == o.restarts &&
         verify_grid == o.verify_grid && seed == o.seed && threads == o.threads &&
         out_dir == o.out_dir && snapshots == o.snapshots;
}

std::string format_level(const LevelOption& l) {
  std::string s = l.field == LVS_FIELD_U ? "u" : "v";
  s += l.direction == LVS_RIGHTMOST_ABOVE ? ">" : "<";
  // Shortest round-trip form, so labels read "v>0.6".
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, l.threshold);
  return s + std::string(buf, r.ptr);
}

LevelOption parse_level(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.size() < 3 || (s[0] != 'u' && s[0] != 'v') || (s[1] != '>' && s[1] != '<')) {
    throw std::invalid_argument("config: level must look like v>0.6 or u<0.7, got '" + s + "'");
  }
  LevelOption l;
  l.field = s[0] == 'u' ? LVS_FIELD_U : LVS_FIELD_V;
  l.direction = s[1] == '>' ? LVS_RIGHTMOST_ABOVE : LVS_LEFTMOST_BELOW;
  char* end = nullptr;
  l.threshold = std::strtod(s.c_str() + 2, &end);
  if (end == s.c_str() + 2 || *end != '\0') {
    throw std::invalid_argument("config: bad level threshold in '" + s + "'");
  }
  return l;
}

RunConfig parse_config(const std::string& text) {
  Reader in;
  std::istringstream lines(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad section");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known) throw std::invalid_argument("config: unknown key '" + key + "'");
    in.values[key] = trim(line.substr(eq + 1));
  }

  RunConfig c;
  c.params.d = in.real("model.d", c.params.d);
  c.params.r = in.real("model.r", c.params.r);
  c.params.a = in.real("model.a", c.params.a);
  c.params.b = in.real("model.b", c.params.b);
  c.determinacy = in.boolean("model.determinacy", c.determinacy);

  c.grid.x_left = in.real("grid.x_left", c.grid.x_left);
  c.grid.x_right = in.real("grid.x_right", c.grid.x_right);
  c.grid.dx = in.real("grid.dx", c.grid.dx);

  const std::string scheme = in.text("scheme.scheme", "explicit_euler");
  if (scheme == "explicit_euler") {
    c.scheme.scheme = LVS_SCHEME_EXPLICIT;
  } else if (scheme == "imex_cn") {
    c.scheme.scheme = LVS_SCHEME_IMEX_CN;
  } else {
    throw std::invalid_argument("config: scheme must be explicit_euler or imex_cn");
  }
  c.scheme.cfl = in.real("scheme.cfl", c.scheme.cfl);
  c.scheme.dt = in.real("scheme.dt", c.scheme.dt);
  c.scheme.snapshot_every = in.real("scheme.snapshot_every", c.scheme.snapshot_every);
  c.t_end = in.real("scheme.t_end", c.t_end);

  c.ic.u0.lo = in.real("initial.u0_lo", c.ic.u0.lo);
  c.ic.u0.hi = in.real("initial.u0_hi", c.ic.u0.hi);
  c.ic.u0.inside = in.real("initial.u0_inside", c.ic.u0.inside);
  c.ic.u0.outside = in.real("initial.u0_outside", c.ic.u0.outside);
  c.ic.v0.lo = in.real("initial.v0_lo", c.ic.v0.lo);
  c.ic.v0.hi = in.real("initial.v0_hi", c.ic.v0.hi);
  c.ic.v0.inside = in.real("initial.v0_inside", c.ic.v0.inside);
  c.ic.v0.outside = in.real("initial.v0_outside", c.ic.v0.outside);
  c.ic.require_hinf = in.boolean("initial.require_hinf", c.ic.require_hinf != 0) ? 1 : 0;

  if (in.has("analysis.levels")) {
    c.levels.clear();
    std::istringstream parts(in.text("analysis.levels", ""));
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (!trim(part).empty()) c.levels.push_back(parse_level(part));
    }
  }
  c.window_fraction = in.real("analysis.window_fraction", c.window_fraction);
  c.eta = in.real("analysis.eta", c.eta);
  c.c_hat = in.real("analysis.c_hat", c.c_hat);

  c.action_t = in.real("action.t", c.action_t);
  c.action_x = in.real("action.x", c.action_x);
  const std::string kind = in.text("action.kind", "L1");
  if (kind != "L1" && kind != "L2") throw std::invalid_argument("config: action.kind must be L1 or L2");
  c.action_kind = kind == "L1" ? LVS_L1 : LVS_L2;
  c.knots = static_cast<int>(in.integer("action.knots", c.knots));
  c.restarts = static_cast<int>(in.integer("action.restarts", c.restarts));
  c.verify_grid = static_cast<int>(in.integer("action.verify_grid", c.verify_grid));

  c.seed = in.unsigned_integer("run.seed", c.seed);
  c.threads = static_cast<int>(in.integer("run.threads", c.threads));

  c.out_dir = in.text("output.dir", c.out_dir);
  const std::string snaps = in.text("output.write_snapshots", "final");
  if (snaps == "all") {
    c.snapshots = SnapshotPolicy::All;
  } else if (snaps == "final") {
    c.snapshots = SnapshotPolicy::Final;
  } else if (snaps == "none") {
    c.snapshots = SnapshotPolicy::None;
  } else {
    throw std::invalid_argument("config: output.write_snapshots must be all, final or none");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream o;
  o << "[model]\n"
    << "d = " << num(c.params.d) << "\n"
    << "r = " << num(c.params.r) << "\n"
    << "a = " << num(c.params.a) << "\n"
    << "b = " << num(c.params.b) << "\n"
    << "determinacy = " << (c.determinacy ? "true" : "false") << "\n\n"
    << "[grid]\n"
    << "x_left = " << num(c.grid.x_left) << "\n"
    << "x_right = " << num(c.grid.x_right) << "\n"
    << "dx = " << num(c.grid.dx) << "\n\n"
    << "[scheme]\n"
    << "scheme = " << (c.scheme.scheme == LVS_SCHEME_EXPLICIT ? "explicit_euler" : "imex_cn") << "\n"
    << "cfl = " << num(c.scheme.cfl) << "\n"
    << "dt = " << num(c.scheme.dt) << "\n"
    << "snapshot_every = " << num(c.scheme.snapshot_every) << "\n"
    << "t_end = " << num(c.t_end) << "\n\n"
    << "[initial]\n"
    << "u0_lo = " << num(c.ic.u0.lo) << "\n"
    << "u0_hi = " << num(c.ic.u0.hi) << "\n"
    << "u0_inside = " << num(c.ic.u0.inside) << "\n"
    << "u0_outside = " << num(c.ic.u0.outside) << "\n"
    << "v0_lo = " << num(c.ic.v0.lo) << "\n"
    << "v0_hi = " << num(c.ic.v0.hi) << "\n"
    << "v0_inside = " << num(c.ic.v0.inside) << "\n"
    << "v0_outside = " << num(c.ic.v0.outside) << "\n"
    << "require_hinf = " << (c.ic.require_hinf ? "true" : "false") << "\n\n"
    << "[analysis]\n"
    << "levels = ";
  for (std::size_t i = 0; i < c.levels.size(); ++i) o << (i ? ", " : "") << format_level(c.levels[i]);
  o << "\n"
    << "window_fraction = " << num(c.window_fraction) << "\n"
    << "eta = " << num(c.eta) << "\n"
    << "c_hat = " << num(c.c_hat) << "\n\n"
    << "[action]\n"
    << "t = " << num(c.action_t) << "\n"
    << "x = " << num(c.action_x) << "\n"
    << "kind = " << (c.action_kind == LVS_L1 ? "L1" : "L2") << "\n"
    << "knots = " << c.knots << "\n"
    << "restarts = " << c.restarts << "\n"
    << "verify_grid = " << c.verify_grid << "\n\n"
    << "[run]\n"
    << "seed = " << c.seed << "\n"
    << "threads = " << c.threads << "\n\n"
    << "[output]\n"
    << "dir = " << c.out_dir << "\n"
    << "write_snapshots = "
    << (c.snapshots == SnapshotPolicy::All ? "all" : c.snapshots == SnapshotPolicy::Final ? "final" : "none")
    << "\n";
  return o.str();
}

RunConfig preset(const std::string& name) {
  RunConfig c;
  if (name == "fig2") return c;
  if (name.rfind("fig1:", 0) == 0) {
    const double d = std::strtod(name.c_str() + 5, nullptr);
    if (d != 1.5 && d != 1.0 && d != 0.5) throw std::invalid_argument("fig1 panels use d in {1.5, 1, 0.5}");
    c.params.d = d;
    if (d == 0.5) {
      c.levels = {{LVS_FIELD_U, LVS_RIGHTMOST_ABOVE, 0.6},
                  {LVS_FIELD_V, LVS_RIGHTMOST_ABOVE, 0.4},
                  {LVS_FIELD_U, LVS_LEFTMOST_BELOW, 0.7}};
    }
    return c;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace lvs::cli
