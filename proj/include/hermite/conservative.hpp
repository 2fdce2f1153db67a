#pragma once

/// @file conservative.hpp
/// @brief Two-level conservative Hermite scheme for u_tt = c^2 Lap u.
///
/// Adding the time Taylor series of u about t_n at t_n +- dt/2 and replacing
/// time derivatives by powers of the Laplacian gives
///
///   u(t + dt/2) + u(t - dt/2) = 2 sum_r (c dt / 2)^(2r) / (2r)! Lap^r u(t).
///
/// Applied to the degree 2m+1 interpolant centered at each target node this
/// yields an update for the scaled coefficients that only needs the current
/// level and the previous level on the target grid. The sum is complete for
/// the interpolant, so polynomial data is evolved exactly.

#include "hermite/dissipative.hpp"
#include "hermite/grid.hpp"
#include "hermite/interpolation.hpp"
#include "hermite/scheme.hpp"

namespace hermite {

/// Scaled Pascal coefficients
///   S(i, j) = P(i, j) rx^(2i) ry^(2j) / (2i + 2j)!,  i + j <= 2m,
/// with P(i, j) = C(i + j, i). The stepper builds it with the half-step
/// ratios rx = c dt / (2 hx), ry = c dt / (2 hy).
class PascalTable {
public:
  PascalTable() = default;
  PascalTable(int m, double ratio_x, double ratio_y);

  [[nodiscard]] int m() const { return m_; }
  /// Unscaled Pascal entry P(i, j).
  [[nodiscard]] double base(int i, int j) const { return base_[index(i, j)]; }
  [[nodiscard]] double operator()(int i, int j) const { return scaled_[index(i, j)]; }

private:
  [[nodiscard]] std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (2 * m_ + 1) + j); }

  int m_ = 0;
  std::vector<double> base_;
  std::vector<double> scaled_;
};

/// Current level u(t_n) plus the level u(t_n - dt/2) on the opposite grid.
struct TwoLevelState {
  GridState1D current;
  GridState1D previous;
  int direction = 1;  ///< +1 forward in time, -1 after reversal

  [[nodiscard]] double time() const { return current.time; }
};

struct TwoLevelState2D {
  GridState2D current;
  GridState2D previous;
  int direction = 1;

  [[nodiscard]] double time() const { return current.time; }
};

/// New target-node data from the interpolant centered at the target node and
/// the previous data there. `half_ratio` is c dt / (2 h).
void conservative_update_1d(std::span<const double> interp, std::span<const double> prev, double half_ratio,
                            std::span<double> out);

NodeData conservative_update_1d(const CellPolynomial& interp, const NodeData& prev, const SchemeConfig& cfg);

/// 2D update; `interp` holds (2m+2)^2 coefficients, prev/out (m+1)^2.
void conservative_update_2d(std::span<const double> interp, std::span<const double> prev, int m,
                            const PascalTable& table, std::span<double> out);

NodeData2D conservative_update_2d(const CellPolynomial2D& interp, const NodeData2D& prev, const PascalTable& table);

/// Table matching the configured time step.
PascalTable pascal_table_for(const SchemeConfig& cfg);

/// Builds the two starting levels from nodal data of g0 = u(., 0) and
/// g1 = u_t(., 0), both of order m on the primal grid. The half-step level
/// comes from the cell-local Taylor recursion applied to I_m g0 and I_m g1.
TwoLevelState bootstrap_first_half(const GridState1D& g0, const GridState1D& g1, const SchemeConfig& cfg);

TwoLevelState2D bootstrap_first_half_2d(const GridState2D& g0, const GridState2D& g1, const SchemeConfig& cfg);

/// Advances by dt/2: interpolates `current` onto the target grid and applies
/// the two-level update against `previous`.
TwoLevelState full_step_conservative(const TwoLevelState& state, const SchemeConfig& cfg);

TwoLevelState2D full_step_conservative_2d(const TwoLevelState2D& state, const SchemeConfig& cfg);

/// Swaps the roles of the two levels; stepping afterwards runs backward in
/// time because the update only depends on dt^2.
TwoLevelState reversed(TwoLevelState state);

}  // namespace hermite
