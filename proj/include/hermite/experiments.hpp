#pragma once

/// @file experiments.hpp
/// @brief Run configuration, exact solutions and the built-in experiments.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hermite/conservative.hpp"
#include "hermite/diagnostics.hpp"
#include "hermite/dissipative.hpp"

namespace hermite {

enum class SchemeKind { dissipative, conservative };
enum class Experiment { gaussian1d, conserve1d, planewave2d, custom };
enum class InitialMode { smooth, random, zero };
enum class Profile { gaussian, sine, planewave };

/// Raised when a run produces non-finite values.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Experiment experiment = Experiment::gaussian1d;
  SchemeKind scheme = SchemeKind::dissipative;
  int dimension = 1;
  int m = 1;
  double lambda = 0.8;
  double c = 1.0;
  double domain_lo = -1.5;
  double domain_hi = 1.5;
  int n0 = 10;
  double refine = 1.2;
  int levels = 6;
  double final_time = 12.25;
  BoundaryKind boundary = BoundaryKind::dirichlet;
  Profile profile = Profile::gaussian;
  int wavenumber = 0;  ///< 0 selects m + 1 for the plane wave and 1 for the sine
  InitialMode mode = InitialMode::smooth;
  std::uint64_t seed = 1;
  long steps = 10000;
  int sample_every = 100;
  int threads = 1;
  std::string out;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Defaults of one experiment (domain, boundary, resolution, final time).
RunConfig defaults_for(Experiment experiment);

Experiment parse_experiment(const std::string& name);
std::string to_string(Experiment experiment);
std::string to_string(SchemeKind scheme);

/// Applies one key=value setting. `line` is only used in error messages
/// (0 for command-line flags).
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, int line = 0);

/// Parses key=value lines ('#' starts a comment) on top of `base`. Unknown
/// keys, malformed lines and out-of-range values raise ConfigError with the
/// line number; scheme, m and lambda are mandatory.
RunConfig parse_config(const std::string& text, const RunConfig& base);
RunConfig parse_config(const std::string& text);

/// Cell counts n0, ceil(r n0), ceil(r ceil(r n0)), ...
std::vector<int> level_sizes(int n0, double refine, int levels);

/// Number of half steps of size dt/2 closest to reaching `target`.
long half_step_count(double target, double dt);

SchemeConfig scheme_config(const RunConfig& run, int cells);

/// Exact solution of a 1D problem in scaled-derivative form.
struct Exact1D {
  /// Writes h^l/l! d^l/dx^l of u (velocity = false) or u_t (velocity = true)
  /// at (x, t) for l < out.size().
  std::function<void(double x, double t, double h, bool velocity, std::span<double> out)> scaled;

  [[nodiscard]] double u(double x, double t) const;
  [[nodiscard]] double ux(double x, double t) const;
  [[nodiscard]] double v(double x, double t) const;
};

/// d'Alembert solution for u(x, 0) = exp(-a (x - x0)^2), u_t(x, 0) = 0,
/// extended by images so that the walls of `boundary` on [lo, hi] hold.
Exact1D gaussian_solution(double a, double x0, double lo, double hi, BoundaryKind boundary, double c);

/// Standing wave sin(w (x - lo) + phase) cos(c w t).
Exact1D standing_wave(double w, double lo, double phase, double c);

/// Plane wave sin(w (x + y - 2 lo) + sqrt(2) c w t) and its velocity, as
/// scaled mixed derivatives (entry (k, l) at l * (order + 1) + k).
struct Exact2D {
  double w = 1.0;
  double lo = 0.0;
  double c = 1.0;

  void scaled(double x, double y, double t, double hx, double hy, bool velocity, int order,
              std::span<double> out) const;
  [[nodiscard]] double u(double x, double y, double t) const;
};

/// Fills nodal data from an exact solution.
void fill(GridState1D& state, const Exact1D& exact, bool velocity);
void fill(GridState2D& state, const Exact2D& exact, bool velocity);

struct ConvergenceRun {
  ErrorReport report;
  std::vector<long> half_steps;
  std::vector<double> final_time;

  [[nodiscard]] double rate_u() const { return fit_rate(report.h, report.error_u); }
};

struct EnergyTrace {
  std::vector<long> step;
  std::vector<double> time;
  std::vector<double> energy_delta;
  double initial_energy = 0.0;

  /// Largest |E_n - E_0| over the trace.
  [[nodiscard]] double max_absolute_drift() const;
  [[nodiscard]] double max_relative_drift() const;
};

ConvergenceRun run_gaussian_1d(const RunConfig& cfg);
EnergyTrace run_conservation_1d(const RunConfig& cfg);
ConvergenceRun run_planewave_2d(const RunConfig& cfg);
/// Convergence study on the configured domain, boundary and profile.
ConvergenceRun run_custom(const RunConfig& cfg);

/// One 1D convergence study against `exact`.
ConvergenceRun run_convergence_1d(const RunConfig& cfg, const Exact1D& exact);

void write_csv(std::ostream& os, const ConvergenceRun& run);
void write_csv(std::ostream& os, const EnergyTrace& trace);

/// Plain-text summary with the fitted rates.
void write_summary(std::ostream& os, const RunConfig& cfg, const ConvergenceRun& run);
void write_summary(std::ostream& os, const RunConfig& cfg, const EnergyTrace& trace);

}  // namespace hermite
