#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "hermite/boundary.hpp"
#include "hermite/grid.hpp"

namespace hermite {

/// Discretization parameters shared by both steppers.
struct SchemeConfig {
  int m = 1;             ///< nodal order of the displacement
  double c = 1.0;        ///< wave speed
  double lambda = 0.8;   ///< CFL number c dt / min(h)
  /// Highest time-derivative index kept in the cell-local Taylor series.
  /// Unset means the full truncation depth, which evolves polynomial data
  /// exactly.
  std::optional<int> stage_cap;
  int dimension = 1;
  Axis x;
  Axis y;
  BoundarySpec bx;
  BoundarySpec by;
  int threads = 1;

  [[nodiscard]] double min_h() const;
  [[nodiscard]] double dt() const { return lambda * min_h() / c; }
  [[nodiscard]] double half_dt() const { return 0.5 * dt(); }

  /// Throws ConfigError for out-of-range values or axis/boundary mismatches.
  void validate() const;
};

/// Configuration errors (bad CFL, unsupported boundary, inconsistent sizes).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Axis over [lo, hi] whose periodic flag follows `spec`.
Axis make_axis(double lo, double hi, int cells, const BoundarySpec& spec);

/// Source term provider: returns d^(x_order + t_order) f / dx^x_order dt^t_order
/// at (x, t).
using Forcing = std::function<double(int x_order, int t_order, double x, double t)>;

}  // namespace hermite
