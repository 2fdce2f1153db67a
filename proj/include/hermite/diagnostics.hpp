#pragma once

/// @file diagnostics.hpp
/// @brief Error norms, rate fits and energies of Hermite states.

#include <functional>
#include <vector>

#include "hermite/boundary.hpp"
#include "hermite/conservative.hpp"
#include "hermite/dissipative.hpp"
#include "hermite/grid.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

/// Global interpolant of nodal data: one degree 2m+1 piece per cell centered
/// at each node of the opposite grid.
///
/// On a bounded axis the two end pieces are clipped to the domain. On a
/// periodic axis the cells tile one period starting at the left edge of the
/// first cell, so every piece has width h.
PiecewisePolynomial to_piecewise(const GridState1D& state, const BoundarySpec& spec,
                                 FieldRole role = FieldRole::displacement);

/// Piecewise x-derivative.
PiecewisePolynomial differentiate(const PiecewisePolynomial& f, int order = 1);

/// sqrt of the integral of (f - exact)^2 with a `points`-point Gauss rule per
/// piece; points <= 0 picks degree + 5.
double l2_error(const PiecewisePolynomial& f, const std::function<double(double)>& exact, int points = 0);

/// 2D analogue over the global tensor interpolant of `state`. Cells of
/// bounded axes are clipped to the domain.
double l2_error(const GridState2D& state, const BoundarySpec& bx, const BoundarySpec& by,
                const std::function<double(double, double)>& exact, int points = 0);

/// P_plus = p^n - S_+ p^(n-1/2), P_minus = p^n - S_- p^(n-1/2), with
/// S_+- w(x) = w(x +- delta), on the union of all breakpoints.
struct ConservedPair {
  PiecewisePolynomial plus;
  PiecewisePolynomial minus;
};

/// Throws UnsupportedOperation unless both fields are periodic.
ConservedPair conserved_pair(const PiecewisePolynomial& current, const PiecewisePolynomial& previous, double delta);

/// Pair for a two-level conservative state with delta = c dt / 2.
ConservedPair conserved_pair(const TwoLevelState& state, const SchemeConfig& cfg);

/// Squared seminorm |f|_r^2 = integral of (d^r f / dx^r)^2, exact piecewise.
double seminorm(const PiecewisePolynomial& f, int r);

/// |P_plus|_r^2 + |P_minus|_r^2.
double seminorm_energy(const ConservedPair& pair, int r);

/// c^2 |d/dx I_m u|_m^2 + |I_(m-1) v|_m^2 of the current interpolants.
double dissipative_energy(const FieldPair& state, const SchemeConfig& cfg);

/// Errors of one convergence study, coarsest level first.
struct ErrorReport {
  std::vector<int> n;
  std::vector<double> h;
  std::vector<double> dt;
  std::vector<double> error_u;
  std::vector<double> error_dux;  ///< empty unless the scheme carries v
  std::vector<double> error_v;

  [[nodiscard]] std::size_t levels() const { return h.size(); }
};

/// Least-squares slope of log(error) against log(h) over the finest half of
/// the levels (at least two). Needs three or more levels.
double fit_rate(std::span<const double> h, std::span<const double> error);

/// Rate between each level and the previous one; entry 0 is NaN.
std::vector<double> pairwise_rates(std::span<const double> h, std::span<const double> error);

}  // namespace hermite
