#pragma once

/// @file boundary.hpp
/// @brief Ghost polynomials for periodic, Dirichlet and Neumann walls.
///
/// Walls are enforced by extending the interior data across the boundary:
/// an odd extension for Dirichlet (c_l -> (-1)^(l+1) c_l) and an even one for
/// Neumann (c_l -> (-1)^l c_l). A nonzero constant Dirichlet value g is
/// honored by extending u - g oddly, which only changes the constant term.

#include <span>
#include <vector>

#include "hermite/grid.hpp"
#include "hermite/interpolation.hpp"

namespace hermite {

enum class BoundaryKind { periodic, dirichlet, neumann };

enum class Side { lower, upper };

/// The velocity of a constant Dirichlet wall is zero, so the wall value only
/// applies to the displacement.
enum class FieldRole { displacement, velocity };

struct SideCondition {
  BoundaryKind kind = BoundaryKind::periodic;
  double value = 0.0;  ///< constant Dirichlet value
};

/// Conditions on the two opposing sides of one axis.
struct BoundarySpec {
  SideCondition lower;
  SideCondition upper;

  static BoundarySpec periodic() { return {}; }
  static BoundarySpec dirichlet0() { return {{BoundaryKind::dirichlet, 0.0}, {BoundaryKind::dirichlet, 0.0}}; }
  static BoundarySpec neumann0() { return {{BoundaryKind::neumann, 0.0}, {BoundaryKind::neumann, 0.0}}; }

  [[nodiscard]] bool is_periodic() const { return lower.kind == BoundaryKind::periodic; }
  [[nodiscard]] const SideCondition& at(Side s) const { return s == Side::lower ? lower : upper; }

  /// Throws std::invalid_argument when only one side is periodic.
  void validate() const;
};

/// Sign applied to scaled derivative l by the reflection of `kind`.
double reflection_sign(BoundaryKind kind, int l);

/// Reflects 1D node data across a wall into `ghost`.
void reflect(std::span<const double> interior, std::span<double> ghost, const SideCondition& cond, FieldRole role);

/// Ghost node data at the mirror image of `interior`.
///
/// For a periodic side the ghost is a plain copy, so callers pass the node at
/// the opposite end of the domain.
NodeData ghost_data(const NodeData& interior, const BoundarySpec& spec, Side side,
                    FieldRole role = FieldRole::displacement);

/// Reflects 2D node data across a wall normal to `axis` (0 = x, 1 = y).
/// Only the normal-direction derivative index picks up the sign.
void reflect_2d(std::span<const double> interior, std::span<double> ghost, int order_x, int order_y, int axis,
                const SideCondition& cond, FieldRole role);

NodeData2D ghost_data_2d(const NodeData2D& interior, const BoundarySpec& spec, int axis, Side side,
                         FieldRole role = FieldRole::displacement);

/// A 1D state with one ghost node on each side (index -1 and nodes()).
///
/// Every target node of a half step reads its two flanking source nodes from
/// here, whether they are interior, wrapped or reflected.
class PaddedState1D {
public:
  PaddedState1D(const GridState1D& state, const BoundarySpec& spec, FieldRole role);

  [[nodiscard]] std::span<const double> node(int i) const {
    return {data_.data() + static_cast<std::ptrdiff_t>(i + 1) * block_, static_cast<std::size_t>(block_)};
  }
  /// Left and right source nodes of target `t` on the opposite parity.
  [[nodiscard]] std::span<const double> left_of(int t) const { return node(source_parity_ == Parity::primal ? t : t - 1); }
  [[nodiscard]] std::span<const double> right_of(int t) const { return node(source_parity_ == Parity::primal ? t + 1 : t); }

private:
  Parity source_parity_;
  int block_;
  std::vector<double> data_;
};

/// 2D analogue with a one-node ghost frame, corners included.
class PaddedState2D {
public:
  PaddedState2D(const GridState2D& state, const BoundarySpec& bx, const BoundarySpec& by, FieldRole role);

  [[nodiscard]] std::span<const double> node(int i, int j) const {
    return {data_.data() + static_cast<std::ptrdiff_t>((j + 1) * stride_ + (i + 1)) * block_,
            static_cast<std::size_t>(block_)};
  }
  /// Four source corners of target (ti, tj), in Corners order.
  [[nodiscard]] Corners corners_of(int ti, int tj) const {
    const int i0 = source_parity_ == Parity::primal ? ti : ti - 1;
    const int j0 = source_parity_ == Parity::primal ? tj : tj - 1;
    return {node(i0, j0), node(i0 + 1, j0), node(i0, j0 + 1), node(i0 + 1, j0 + 1)};
  }

private:
  Parity source_parity_;
  int block_;
  int stride_;
  std::vector<double> data_;
};

}  // namespace hermite
