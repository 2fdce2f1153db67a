#pragma once

/// @file dissipative.hpp
/// @brief Dissipative Hermite scheme for u_t = v, v_t = c^2 Lap u + f.
///
/// Each half step interpolates u (order m) and v (order m-1) onto the cells
/// centered at the nodes of the opposite grid, expands the cell polynomials
/// in time with the Cauchy-Kovalevskaya recursion
///
///   c_{l,s} = dt/s d_{l,s-1}
///   d_{l,s} = c^2 (l+2)(l+1)/s dt/h^2 c_{l+2,s-1} + forcing
///
/// and sums the series at the cell center at t + dt/2. For f = 0 the series
/// terminate, so piecewise polynomial data is evolved exactly whenever
/// c dt <= h.
///
/// In 2D the first time derivative of v is taken from the mixed-order
/// interpolants I_{m,m-1} u (x part) and I_{m-1,m} u (y part); this keeps the
/// scheme stable up to c dt = min(h_x, h_y).

#include <utility>

#include "hermite/grid.hpp"
#include "hermite/interpolation.hpp"
#include "hermite/polynomial.hpp"
#include "hermite/scheme.hpp"

namespace hermite {

/// Truncation depth of the v series for spatial index l.
constexpr int kappa_v(int l, int m) { return 2 * m - 1 - 2 * (l / 2); }
/// Truncation depth of the u series for spatial index l.
constexpr int kappa_u(int l, int m) { return kappa_v(l, m) + 1; }

/// Cell-local space-time Taylor coefficients.
///
/// u(x, t0 + tau) = sum_{l,s} c(l, s) xi^l (tau/dt)^s with xi = (x - center)/h,
/// and the same for v with d.
struct SpaceTimeTensor {
  int degree_u = 0;
  int degree_v = 0;
  int stages = 0;  ///< highest time index s
  double center = 0.0;
  double dt = 0.0;
  double h = 1.0;
  double speed = 1.0;
  std::vector<double> c;  ///< (stages + 1) x (degree_u + 1), s-major
  std::vector<double> d;  ///< (stages + 1) x (degree_v + 1), s-major

  double& cu(int l, int s) { return c[static_cast<std::size_t>(s * (degree_u + 1) + l)]; }
  double& dv(int l, int s) { return d[static_cast<std::size_t>(s * (degree_v + 1) + l)]; }
  [[nodiscard]] double cu(int l, int s) const {
    return l <= degree_u ? c[static_cast<std::size_t>(s * (degree_u + 1) + l)] : 0.0;
  }
  [[nodiscard]] double dv(int l, int s) const {
    return l <= degree_v ? d[static_cast<std::size_t>(s * (degree_v + 1) + l)] : 0.0;
  }
};

/// Stage count that makes the recursion terminate for f = 0.
constexpr int full_stage_count(int degree_u, int degree_v) { return degree_u > degree_v + 1 ? degree_u : degree_v + 1; }

/// Runs the recursion from the cell interpolants p (of u) and q (of v), both
/// centered at the same point with the same width. `t0` is the time of the
/// data and only matters for the forcing.
SpaceTimeTensor time_expand_1d(const CellPolynomial& p, const CellPolynomial& q, const SchemeConfig& cfg,
                               double t0 = 0.0, const Forcing& forcing = {});

/// Same, reusing `out`'s storage.
void time_expand_1d(std::span<const double> p, std::span<const double> q, double center, double h, double t0,
                    const SchemeConfig& cfg, const Forcing& forcing, SpaceTimeTensor& out);

/// Scaled x-derivatives at the cell center at time offset tau: orders
/// 0..u_order of u and 0..v_order of v.
std::pair<NodeData, NodeData> eval_center(const SpaceTimeTensor& st, double tau, int u_order, int v_order);

/// Raw form writing into spans of length u_order + 1 and v_order + 1.
void eval_center(const SpaceTimeTensor& st, double tau, std::span<double> u_out, std::span<double> v_out);

/// Displacement (order m) and velocity (order m - 1) at one time level.
struct FieldPair {
  GridState1D u;
  GridState1D v;

  [[nodiscard]] Parity parity() const { return u.parity; }
  [[nodiscard]] double time() const { return u.time; }
};

FieldPair make_field_pair(const Axis& axis, Parity parity, int m, double time = 0.0);

/// One half step onto the opposite grid.
FieldPair half_step_1d(const FieldPair& state, const SchemeConfig& cfg, const Forcing& forcing = {});

struct FieldPair2D {
  GridState2D u;  ///< orders (m, m)
  GridState2D v;  ///< orders (m-1, m-1)

  [[nodiscard]] Parity parity() const { return u.parity; }
  [[nodiscard]] double time() const { return u.time; }
};

FieldPair2D make_field_pair_2d(const Axis& ax, const Axis& ay, Parity parity, int m, double time = 0.0);

/// 2D space-time coefficients on a padded (n x n) spatial footprint per stage.
struct SpaceTimeTensor2D {
  int n = 0;       ///< coefficients per axis (2m + 2)
  int stages = 0;
  std::vector<double> c;  ///< (stages + 1) x n x n, index (s * n + l) * n + k
  std::vector<double> d;

  [[nodiscard]] double cu(int k, int l, int s) const {
    return (k < n && l < n) ? c[static_cast<std::size_t>((s * n + l) * n + k)] : 0.0;
  }
  [[nodiscard]] double dv(int k, int l, int s) const {
    return (k < n && l < n) ? d[static_cast<std::size_t>((s * n + l) * n + k)] : 0.0;
  }
};

/// Inputs to the 2D recursion, all on the (2m+2)^2 padded footprint.
struct CellData2D {
  std::span<const double> u;       ///< I_{m,m} u
  std::span<const double> v;       ///< interpolant of v
  std::span<const double> u_xpart; ///< I_{m,m-1} u, empty for the plain recursion
  std::span<const double> u_ypart; ///< I_{m-1,m} u, empty for the plain recursion
};

/// 2D recursion. With u_xpart/u_ypart given, the s = 1 velocity coefficients
/// come from them (stabilized startup); otherwise the plain tensor recursion
/// is used throughout, which evolves tensor polynomial data exactly.
void time_expand_2d(const CellData2D& cell, int m, double dt, double hx, double hy, double speed, int stages,
                    SpaceTimeTensor2D& out);

/// Default stage count for the 2D recursion.
constexpr int full_stage_count_2d(int m) { return 4 * m + 3; }

/// One half step of the stabilized 2D scheme.
FieldPair2D half_step_2d(const FieldPair2D& state, const SchemeConfig& cfg);

}  // namespace hermite
