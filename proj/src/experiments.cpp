#include "hermite/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace hermite {

namespace {

std::string where(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : ""; }

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value, int line) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError(where(line) + "invalid value '" + value + "' for " + key);
  return out;
}

template <class E>
E parse_enum(const std::string& key, const std::string& value, int line,
             std::initializer_list<std::pair<const char*, E>> options) {
  for (const auto& [name, e] : options)
    if (value == name) return e;
  std::string allowed;
  for (const auto& [name, e] : options) allowed += (allowed.empty() ? "" : "|") + std::string(name);
  throw ConfigError(where(line) + "invalid value '" + value + "' for " + key + " (expected " + allowed + ")");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

BoundarySpec boundary_spec(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic: return BoundarySpec::periodic();
    case BoundaryKind::dirichlet: return BoundarySpec::dirichlet0();
    case BoundaryKind::neumann: return BoundarySpec::neumann0();
  }
  return {};
}

// h^l/l! d^l/dz^l exp(-a (z - x0)^2) for l < out.size().
void gaussian_taylor(double a, double x0, double z, double h, std::span<double> out) {
  const double s = z - x0;
  const std::size_t n = out.size();
  if (n == 0) return;
  out[0] = std::exp(-a * s * s);
  if (n > 1) out[1] = -2.0 * a * h * s * out[0];
  for (std::size_t k = 1; k + 1 < n; ++k)
    out[k + 1] = -2.0 * a * h * (s * out[k] + h * out[k - 1]) / static_cast<double>(k + 1);
}

bool all_finite(const std::vector<double>& data) {
  return std::all_of(data.begin(), data.end(), [](double x) { return std::isfinite(x); });
}

void check_finite(bool ok, const std::string& what) {
  if (!ok) throw NumericalError("non-finite values detected in " + what);
}

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", x);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  require(m >= 0 && m <= kMaxInterpOrder, "m must lie in [0, " + std::to_string(kMaxInterpOrder) + "]");
  require(scheme != SchemeKind::dissipative || m >= 1, "m must be at least 1 for the dissipative scheme");
  require(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0, 1]");
  require(c > 0.0, "c must be positive");
  require(domain_hi > domain_lo, "domain_hi must exceed domain_lo");
  require(n0 >= 4, "n0 must be at least 4");
  require(refine > 1.0, "refine must exceed 1");
  require(levels >= 1, "levels must be at least 1");
  require(final_time >= 0.0, "final_time must be nonnegative");
  require(dimension == 1 || dimension == 2, "dimension must be 1 or 2");
  require(steps >= 0, "steps must be nonnegative");
  require(sample_every >= 1, "sample_every must be at least 1");
  require(threads >= 1, "threads must be at least 1");
  require(wavenumber >= 0, "wavenumber must be nonnegative");
  if (experiment == Experiment::conserve1d) {
    require(scheme == SchemeKind::conservative, "scheme must be conservative for conserve1d");
    require(boundary == BoundaryKind::periodic, "boundary must be periodic for conserve1d");
    require(dimension == 1, "dimension must be 1 for conserve1d");
  }
  if (experiment == Experiment::planewave2d || dimension == 2) {
    require(boundary == BoundaryKind::periodic, "boundary must be periodic for the plane wave");
  }
  if (experiment == Experiment::planewave2d) require(dimension == 2, "dimension must be 2 for planewave2d");
  if (experiment == Experiment::gaussian1d) require(dimension == 1, "dimension must be 1 for gaussian1d");
  if (dimension == 2) require(profile == Profile::planewave, "profile must be planewave in 2D");
  if (dimension == 1) require(profile != Profile::planewave, "profile planewave needs dimension 2");
}

RunConfig defaults_for(Experiment experiment) {
  RunConfig cfg;
  cfg.experiment = experiment;
  switch (experiment) {
    case Experiment::gaussian1d:
    case Experiment::custom:
      break;
    case Experiment::conserve1d:
      cfg.scheme = SchemeKind::conservative;
      cfg.lambda = 0.5;
      cfg.domain_lo = -std::numbers::pi;
      cfg.domain_hi = std::numbers::pi;
      cfg.n0 = 30;
      cfg.levels = 1;
      cfg.boundary = BoundaryKind::periodic;
      cfg.profile = Profile::sine;
      break;
    case Experiment::planewave2d:
      cfg.dimension = 2;
      cfg.domain_lo = 0.0;
      cfg.domain_hi = 1.0;
      cfg.n0 = 20;
      cfg.levels = 5;
      cfg.final_time = 4.18;
      cfg.boundary = BoundaryKind::periodic;
      cfg.profile = Profile::planewave;
      break;
  }
  return cfg;
}

Experiment parse_experiment(const std::string& name) {
  return parse_enum<Experiment>("experiment", name, 0,
                                {{"gaussian1d", Experiment::gaussian1d},
                                 {"conserve1d", Experiment::conserve1d},
                                 {"planewave2d", Experiment::planewave2d},
                                 {"custom", Experiment::custom}});
}

std::string to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::gaussian1d: return "gaussian1d";
    case Experiment::conserve1d: return "conserve1d";
    case Experiment::planewave2d: return "planewave2d";
    case Experiment::custom: return "custom";
  }
  return {};
}

std::string to_string(SchemeKind scheme) {
  return scheme == SchemeKind::dissipative ? "dissipative" : "conservative";
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
  auto range = [&](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(where(line) + key + " out of range: " + what);
  };
  if (key == "scheme") {
    cfg.scheme = parse_enum<SchemeKind>(key, value, line,
                                        {{"dissipative", SchemeKind::dissipative},
                                         {"conservative", SchemeKind::conservative}});
  } else if (key == "experiment") {
    cfg.experiment = parse_enum<Experiment>(key, value, line,
                                            {{"gaussian1d", Experiment::gaussian1d},
                                             {"conserve1d", Experiment::conserve1d},
                                             {"planewave2d", Experiment::planewave2d},
                                             {"custom", Experiment::custom}});
  } else if (key == "dimension") {
    cfg.dimension = parse_number<int>(key, value, line);
    range(cfg.dimension == 1 || cfg.dimension == 2, "expected 1 or 2");
  } else if (key == "m") {
    cfg.m = parse_number<int>(key, value, line);
    range(cfg.m >= 0 && cfg.m <= kMaxInterpOrder, "expected 0.." + std::to_string(kMaxInterpOrder));
  } else if (key == "lambda") {
    cfg.lambda = parse_number<double>(key, value, line);
    range(cfg.lambda > 0.0 && cfg.lambda <= 1.0, "lambda must lie in (0, 1]");
  } else if (key == "c") {
    cfg.c = parse_number<double>(key, value, line);
    range(cfg.c > 0.0, "expected a positive speed");
  } else if (key == "domain_lo") {
    cfg.domain_lo = parse_number<double>(key, value, line);
  } else if (key == "domain_hi") {
    cfg.domain_hi = parse_number<double>(key, value, line);
  } else if (key == "n0") {
    cfg.n0 = parse_number<int>(key, value, line);
    range(cfg.n0 >= 4, "expected at least 4");
  } else if (key == "refine") {
    cfg.refine = parse_number<double>(key, value, line);
    range(cfg.refine > 1.0, "expected a factor above 1");
  } else if (key == "levels") {
    cfg.levels = parse_number<int>(key, value, line);
    range(cfg.levels >= 1, "expected at least 1");
  } else if (key == "final_time") {
    cfg.final_time = parse_number<double>(key, value, line);
    range(cfg.final_time >= 0.0, "expected a nonnegative time");
  } else if (key == "boundary") {
    cfg.boundary = parse_enum<BoundaryKind>(key, value, line,
                                            {{"periodic", BoundaryKind::periodic},
                                             {"dirichlet", BoundaryKind::dirichlet},
                                             {"neumann", BoundaryKind::neumann}});
  } else if (key == "profile") {
    cfg.profile = parse_enum<Profile>(key, value, line,
                                      {{"gaussian", Profile::gaussian},
                                       {"sine", Profile::sine},
                                       {"planewave", Profile::planewave}});
  } else if (key == "wavenumber") {
    cfg.wavenumber = parse_number<int>(key, value, line);
    range(cfg.wavenumber >= 0, "expected a nonnegative integer");
  } else if (key == "mode") {
    cfg.mode = parse_enum<InitialMode>(key, value, line,
                                       {{"smooth", InitialMode::smooth}, {"random", InitialMode::random}, {"zero", InitialMode::zero}});
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value, line);
  } else if (key == "steps") {
    cfg.steps = parse_number<long>(key, value, line);
    range(cfg.steps >= 0, "expected a nonnegative count");
  } else if (key == "sample_every") {
    cfg.sample_every = parse_number<int>(key, value, line);
    range(cfg.sample_every >= 1, "expected at least 1");
  } else if (key == "threads") {
    cfg.threads = parse_number<int>(key, value, line);
    range(cfg.threads >= 1, "expected at least 1");
  } else if (key == "out") {
    cfg.out = value;
  } else {
    throw ConfigError(where(line) + "unknown key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text, const RunConfig& base) {
  RunConfig cfg = base;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError(where(line) + "expected key=value");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key.empty()) throw ConfigError(where(line) + "empty key");
    apply_setting(cfg, key, value, line);
    seen.insert(key);
  }
  for (const char* key : {"scheme", "m", "lambda"})
    if (!seen.contains(key))
      throw ConfigError("line " + std::to_string(line + 1) + ": missing mandatory key '" + key + "'");
  return cfg;
}

RunConfig parse_config(const std::string& text) { return parse_config(text, RunConfig{}); }

std::vector<int> level_sizes(int n0, double refine, int levels) {
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(levels));
  int n = n0;
  for (int i = 0; i < levels; ++i) {
    sizes.push_back(n);
    n = static_cast<int>(std::ceil(refine * n - 1e-9));
  }
  return sizes;
}

long half_step_count(double target, double dt) { return std::lround(2.0 * target / dt); }

SchemeConfig scheme_config(const RunConfig& run, int cells) {
  SchemeConfig sc;
  sc.m = run.m;
  sc.c = run.c;
  sc.lambda = run.lambda;
  sc.dimension = run.dimension;
  sc.threads = run.threads;
  sc.bx = boundary_spec(run.boundary);
  sc.by = sc.bx;
  sc.x = make_axis(run.domain_lo, run.domain_hi, cells, sc.bx);
  sc.y = sc.x;
  return sc;
}

double Exact1D::u(double x, double t) const {
  double out[1];
  scaled(x, t, 1.0, false, out);
  return out[0];
}

double Exact1D::ux(double x, double t) const {
  double out[2];
  scaled(x, t, 1.0, false, out);
  return out[1];
}

double Exact1D::v(double x, double t) const {
  double out[1];
  scaled(x, t, 1.0, true, out);
  return out[0];
}

Exact1D gaussian_solution(double a, double x0, double lo, double hi, BoundaryKind boundary, double c) {
  const double len = hi - lo;
  const double period = boundary == BoundaryKind::periodic ? len : 2.0 * len;
  const double mirror = boundary == BoundaryKind::dirichlet ? -1.0 : 1.0;

  // Scaled derivatives of the extended profile G at y.
  auto extended = [=](double y, double h, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    double yw = std::fmod(y - lo, period);
    if (yw < 0.0) yw += period;
    yw += lo;
    std::vector<double> t(out.size());
    for (int k = -2; k <= 2; ++k) {
      if (boundary == BoundaryKind::periodic) {
        gaussian_taylor(a, x0, yw - k * len, h, t);
        for (std::size_t l = 0; l < out.size(); ++l) out[l] += t[l];
      } else {
        gaussian_taylor(a, x0, yw - 2.0 * k * len, h, t);
        for (std::size_t l = 0; l < out.size(); ++l) out[l] += t[l];
        // g(2 lo - y - 2kL): each y-derivative flips the sign once.
        gaussian_taylor(a, x0, 2.0 * lo - yw - 2.0 * k * len, h, t);
        for (std::size_t l = 0; l < out.size(); ++l) out[l] += mirror * ((l % 2) ? -t[l] : t[l]);
      }
    }
  };

  Exact1D exact;
  exact.scaled = [=](double x, double t, double h, bool velocity, std::span<double> out) {
    const std::size_t n = out.size() + (velocity ? 1 : 0);
    std::vector<double> right(n), left(n);
    extended(x - c * t, h, right);
    extended(x + c * t, h, left);
    for (std::size_t l = 0; l < out.size(); ++l) {
      if (!velocity) {
        out[l] = 0.5 * (right[l] + left[l]);
      } else {
        // h^l/l! G^(l+1) = (l + 1) / h * T_(l+1)
        const double factor = static_cast<double>(l + 1) / h;
        out[l] = 0.5 * c * factor * (left[l + 1] - right[l + 1]);
      }
    }
  };
  return exact;
}

Exact1D standing_wave(double w, double lo, double phase, double c) {
  Exact1D exact;
  exact.scaled = [=](double x, double t, double h, bool velocity, std::span<double> out) {
    const double arg = w * (x - lo) + phase;
    const double time_factor = velocity ? -c * w * std::sin(c * w * t) : std::cos(c * w * t);
    double scale = 1.0;  // (w h)^l / l!
    for (std::size_t l = 0; l < out.size(); ++l) {
      if (l > 0) scale *= w * h / static_cast<double>(l);
      out[l] = scale * std::sin(arg + 0.5 * std::numbers::pi * static_cast<double>(l)) * time_factor;
    }
  };
  return exact;
}

void Exact2D::scaled(double x, double y, double t, double hx, double hy, bool velocity, int order,
                     std::span<double> out) const {
  const double speed = std::numbers::sqrt2 * c * w;
  const double arg = w * (x + y - 2.0 * lo) + speed * t + (velocity ? 0.5 * std::numbers::pi : 0.0);
  const double amplitude = velocity ? speed : 1.0;
  double sx = 1.0;  // (w hx)^k / k!
  for (int k = 0; k <= order; ++k) {
    if (k > 0) sx *= w * hx / k;
    double sy = 1.0;
    for (int l = 0; l <= order; ++l) {
      if (l > 0) sy *= w * hy / l;
      out[static_cast<std::size_t>(l * (order + 1) + k)] =
          amplitude * sx * sy * std::sin(arg + 0.5 * std::numbers::pi * (k + l));
    }
  }
}

double Exact2D::u(double x, double y, double t) const {
  return std::sin(w * (x + y - 2.0 * lo) + std::numbers::sqrt2 * c * w * t);
}

void fill(GridState1D& state, const Exact1D& exact, bool velocity) {
  const double h = state.axis.h();
  for (int i = 0; i < state.nodes(); ++i) exact.scaled(state.position(i), state.time, h, velocity, state.node(i));
}

void fill(GridState2D& state, const Exact2D& exact, bool velocity) {
  if (state.order_x != state.order_y) throw std::invalid_argument("fill: expected equal orders");
  for (int j = 0; j < state.nodes_y(); ++j)
    for (int i = 0; i < state.nodes_x(); ++i) {
      const auto [x, y] = state.position(i, j);
      exact.scaled(x, y, state.time, state.ax.h(), state.ay.h(), velocity, state.order_x, state.node(i, j));
    }
}

double EnergyTrace::max_absolute_drift() const {
  double worst = 0.0;
  for (double d : energy_delta) worst = std::max(worst, std::abs(d));
  return worst;
}

double EnergyTrace::max_relative_drift() const {
  const double worst = max_absolute_drift();
  return initial_energy != 0.0 ? worst / std::abs(initial_energy) : worst;
}

ConvergenceRun run_convergence_1d(const RunConfig& cfg, const Exact1D& exact) {
  cfg.validate();
  ConvergenceRun run;
  const bool dissipative = cfg.scheme == SchemeKind::dissipative;
  for (int n : level_sizes(cfg.n0, cfg.refine, cfg.levels)) {
    const SchemeConfig sc = scheme_config(cfg, n);
    const double dt = sc.dt();
    const long half_steps = half_step_count(cfg.final_time, dt);
    const double t_end = 0.5 * dt * static_cast<double>(half_steps);

    ErrorReport& rep = run.report;
    rep.n.push_back(n);
    rep.h.push_back(sc.x.h());
    rep.dt.push_back(dt);
    run.half_steps.push_back(half_steps);
    run.final_time.push_back(t_end);

    if (dissipative) {
      FieldPair state = make_field_pair(sc.x, Parity::primal, cfg.m, 0.0);
      fill(state.u, exact, false);
      fill(state.v, exact, true);
      for (long s = 0; s < half_steps; ++s) state = half_step_1d(state, sc);
      check_finite(all_finite(state.u.data) && all_finite(state.v.data), "the dissipative state");
      const PiecewisePolynomial pu = to_piecewise(state.u, sc.bx, FieldRole::displacement);
      const PiecewisePolynomial pv = to_piecewise(state.v, sc.bx, FieldRole::velocity);
      rep.error_u.push_back(l2_error(pu, [&](double x) { return exact.u(x, t_end); }));
      rep.error_dux.push_back(l2_error(differentiate(pu), [&](double x) { return exact.ux(x, t_end); }));
      rep.error_v.push_back(l2_error(pv, [&](double x) { return exact.v(x, t_end); }));
    } else {
      GridState1D g0(sc.x, Parity::primal, cfg.m, 0.0);
      GridState1D g1(sc.x, Parity::primal, cfg.m, 0.0);
      fill(g0, exact, false);
      fill(g1, exact, true);
      GridState1D result = g0;
      if (half_steps > 0) {
        TwoLevelState state = bootstrap_first_half(g0, g1, sc);
        for (long s = 1; s < half_steps; ++s) state = full_step_conservative(state, sc);
        result = std::move(state.current);
      }
      check_finite(all_finite(result.data), "the conservative state");
      const PiecewisePolynomial pu = to_piecewise(result, sc.bx, FieldRole::displacement);
      rep.error_u.push_back(l2_error(pu, [&](double x) { return exact.u(x, t_end); }));
    }
  }
  return run;
}

ConvergenceRun run_gaussian_1d(const RunConfig& cfg) {
  return run_convergence_1d(cfg, gaussian_solution(20.0, 0.0, cfg.domain_lo, cfg.domain_hi, cfg.boundary, cfg.c));
}

EnergyTrace run_conservation_1d(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.scheme != SchemeKind::conservative || cfg.boundary != BoundaryKind::periodic)
    throw ConfigError("conservation runs need the conservative scheme on a periodic domain");
  const SchemeConfig sc = scheme_config(cfg, cfg.n0);
  GridState1D g0(sc.x, Parity::primal, cfg.m, 0.0);
  GridState1D g1(sc.x, Parity::primal, cfg.m, 0.0);
  if (cfg.mode == InitialMode::smooth) {
    const double w = cfg.wavenumber > 0 ? cfg.wavenumber : 1.0;
    const Exact1D exact = standing_wave(w, 0.0, 0.0, cfg.c);
    fill(g0, exact, false);
    fill(g1, exact, true);
  } else if (cfg.mode == InitialMode::random) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (double& x : g0.data) x = uniform(rng);
    for (double& x : g1.data) x = uniform(rng);
  }

  const int r = cfg.m + 1;
  EnergyTrace trace;
  TwoLevelState state = bootstrap_first_half(g0, g1, sc);
  trace.initial_energy = seminorm_energy(conserved_pair(state, sc), r);
  trace.step.push_back(0);
  trace.time.push_back(state.time());
  trace.energy_delta.push_back(0.0);
  for (long step = 1; step <= cfg.steps; ++step) {
    state = full_step_conservative(full_step_conservative(state, sc), sc);
    if (step % cfg.sample_every == 0 || step == cfg.steps) {
      check_finite(all_finite(state.current.data), "the conservative state");
      const double energy = seminorm_energy(conserved_pair(state, sc), r);
      trace.step.push_back(step);
      trace.time.push_back(state.time());
      trace.energy_delta.push_back(energy - trace.initial_energy);
    }
  }
  return trace;
}

namespace {

ConvergenceRun run_planewave(const RunConfig& cfg, double w) {
  cfg.validate();
  const Exact2D exact{w, cfg.domain_lo, cfg.c};
  ConvergenceRun run;
  for (int n : level_sizes(cfg.n0, cfg.refine, cfg.levels)) {
    const SchemeConfig sc = scheme_config(cfg, n);
    const double dt = sc.dt();
    const long half_steps = half_step_count(cfg.final_time, dt);
    const double t_end = 0.5 * dt * static_cast<double>(half_steps);
    ErrorReport& rep = run.report;
    rep.n.push_back(n);
    rep.h.push_back(sc.x.h());
    rep.dt.push_back(dt);
    run.half_steps.push_back(half_steps);
    run.final_time.push_back(t_end);

    GridState2D result;
    if (cfg.scheme == SchemeKind::dissipative) {
      FieldPair2D state = make_field_pair_2d(sc.x, sc.y, Parity::primal, cfg.m, 0.0);
      fill(state.u, exact, false);
      fill(state.v, exact, true);
      for (long s = 0; s < half_steps; ++s) state = half_step_2d(state, sc);
      result = std::move(state.u);
    } else {
      GridState2D g0(sc.x, sc.y, Parity::primal, cfg.m, cfg.m, 0.0);
      GridState2D g1(sc.x, sc.y, Parity::primal, cfg.m, cfg.m, 0.0);
      fill(g0, exact, false);
      fill(g1, exact, true);
      result = g0;
      if (half_steps > 0) {
        TwoLevelState2D state = bootstrap_first_half_2d(g0, g1, sc);
        for (long s = 1; s < half_steps; ++s) state = full_step_conservative_2d(state, sc);
        result = std::move(state.current);
      }
    }
    check_finite(all_finite(result.data), "the 2D state");
    rep.error_u.push_back(
        l2_error(result, sc.bx, sc.by, [&](double x, double y) { return exact.u(x, y, t_end); }));
  }
  return run;
}

}  // namespace

ConvergenceRun run_planewave_2d(const RunConfig& cfg) {
  const int kappa = cfg.wavenumber > 0 ? cfg.wavenumber : cfg.m + 1;
  return run_planewave(cfg, 2.0 * std::numbers::pi * kappa / (cfg.domain_hi - cfg.domain_lo));
}

ConvergenceRun run_custom(const RunConfig& cfg) {
  cfg.validate();
  const double len = cfg.domain_hi - cfg.domain_lo;
  if (cfg.dimension == 2) return run_planewave_2d(cfg);
  if (cfg.profile == Profile::gaussian) {
    const double mid = 0.5 * (cfg.domain_lo + cfg.domain_hi);
    return run_convergence_1d(cfg, gaussian_solution(20.0, mid, cfg.domain_lo, cfg.domain_hi, cfg.boundary, cfg.c));
  }
  const int kappa = cfg.wavenumber > 0 ? cfg.wavenumber : 1;
  const double pi = std::numbers::pi;
  switch (cfg.boundary) {
    case BoundaryKind::periodic:
      return run_convergence_1d(cfg, standing_wave(2.0 * pi * kappa / len, cfg.domain_lo, 0.0, cfg.c));
    case BoundaryKind::dirichlet:
      return run_convergence_1d(cfg, standing_wave(pi * kappa / len, cfg.domain_lo, 0.0, cfg.c));
    case BoundaryKind::neumann:
      return run_convergence_1d(cfg, standing_wave(pi * kappa / len, cfg.domain_lo, 0.5 * pi, cfg.c));
  }
  return {};
}

void write_csv(std::ostream& os, const ConvergenceRun& run) {
  const ErrorReport& rep = run.report;
  const bool full = !rep.error_dux.empty();
  os << "level,n,h,dt,error_u" << (full ? ",error_dux,error_v" : "") << ",rate\n";
  const std::vector<double> rates = pairwise_rates(rep.h, rep.error_u);
  for (std::size_t i = 0; i < rep.levels(); ++i) {
    os << i << ',' << rep.n[i] << ',' << fmt(rep.h[i]) << ',' << fmt(rep.dt[i]) << ',' << fmt(rep.error_u[i]);
    if (full) os << ',' << fmt(rep.error_dux[i]) << ',' << fmt(rep.error_v[i]);
    os << ',' << fmt(rates[i]) << '\n';
  }
}

void write_csv(std::ostream& os, const EnergyTrace& trace) {
  os << "step,time,energy_delta\n";
  for (std::size_t i = 0; i < trace.step.size(); ++i)
    os << trace.step[i] << ',' << fmt(trace.time[i]) << ',' << fmt(trace.energy_delta[i]) << '\n';
}

void write_summary(std::ostream& os, const RunConfig& cfg, const ConvergenceRun& run) {
  const ErrorReport& rep = run.report;
  os << to_string(cfg.experiment) << ": scheme=" << to_string(cfg.scheme) << " m=" << cfg.m
     << " lambda=" << cfg.lambda << " levels=" << rep.levels() << '\n';
  for (std::size_t i = 0; i < rep.levels(); ++i)
    os << "  n=" << rep.n[i] << " t=" << run.final_time[i] << " error_u=" << fmt(rep.error_u[i]) << '\n';
  if (rep.levels() >= 3) {
    os << "  fitted rate u: " << fit_rate(rep.h, rep.error_u) << '\n';
    if (!rep.error_dux.empty()) {
      os << "  fitted rate ux: " << fit_rate(rep.h, rep.error_dux) << '\n';
      os << "  fitted rate v: " << fit_rate(rep.h, rep.error_v) << '\n';
    }
  } else {
    os << "  fitted rate: needs at least 3 levels\n";
  }
}

namespace {

const char* mode_name(InitialMode mode) {
  switch (mode) {
    case InitialMode::smooth: return "smooth";
    case InitialMode::random: return "random";
    case InitialMode::zero: return "zero";
  }
  return "";
}

}  // namespace

void write_summary(std::ostream& os, const RunConfig& cfg, const EnergyTrace& trace) {
  os << "conserve1d: m=" << cfg.m << " lambda=" << cfg.lambda << " steps=" << cfg.steps
     << " mode=" << mode_name(cfg.mode) << '\n';
  os << "  initial energy: " << fmt(trace.initial_energy) << '\n';
  os << "  max absolute drift: " << fmt(trace.max_absolute_drift()) << '\n';
  os << "  max relative drift: " << fmt(trace.max_relative_drift()) << '\n';
}

}  // namespace hermite
