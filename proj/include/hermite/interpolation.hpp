#pragma once

/// @file interpolation.hpp
/// @brief Two-point Hermite interpolation in the scaled basis.
///
/// Nodal data of order mu at the two ends of a cell (scaled derivatives
/// c_l = h^l / l! * u^(l), l = 0..mu) determine a unique polynomial of degree
/// 2mu+1 on the cell. In the scaled variable xi = (x - center) / h the nodes
/// sit at xi = -1/2 and xi = +1/2, so the map from nodal data to cell
/// coefficients is a fixed matrix per order, independent of h.
///
/// Two-dimensional interpolants are tensor products, applied x first and then
/// y. The per-axis orders may differ (mixed-order interpolants).

#include <array>
#include <span>
#include <vector>

#include "hermite/polynomial.hpp"

namespace hermite {

/// Largest supported nodal order.
inline constexpr int kMaxInterpOrder = 12;

/// Scaled derivative data at one node.
struct NodeData {
  int order = 0;
  std::vector<double> values;  ///< order + 1 entries

  NodeData() = default;
  NodeData(int order_, std::vector<double> values_);
  explicit NodeData(int order_) : order(order_), values(static_cast<std::size_t>(order_ + 1), 0.0) {}
};

/// Scaled mixed derivatives h_x^k h_y^l / (k! l!) d^(k+l)u at one node,
/// stored at l * (order_x + 1) + k.
struct NodeData2D {
  int order_x = 0;
  int order_y = 0;
  std::vector<double> values;

  NodeData2D() = default;
  NodeData2D(int order_x_, int order_y_, std::vector<double> values_);
  NodeData2D(int order_x_, int order_y_)
      : order_x(order_x_), order_y(order_y_),
        values(static_cast<std::size_t>((order_x_ + 1) * (order_y_ + 1)), 0.0) {}

  double& at(int k, int l) { return values[static_cast<std::size_t>(l * (order_x + 1) + k)]; }
  [[nodiscard]] double at(int k, int l) const { return values[static_cast<std::size_t>(l * (order_x + 1) + k)]; }
};

/// Dense map from stacked [left(0..mu), right(0..mu)] nodal data to the
/// 2mu+2 cell coefficients.
class InterpMatrix {
public:
  InterpMatrix() = default;
  InterpMatrix(int order, std::vector<double> entries);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int size() const { return 2 * order_ + 2; }
  [[nodiscard]] double operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row * size() + col)]; }

  /// out[i] = sum_j M(i, j) [left; right]_j. Strides allow gathering from and
  /// scattering into interleaved 2D storage.
  void apply(std::span<const double> left, std::span<const double> right, std::span<double> out,
             std::ptrdiff_t in_stride = 1, std::ptrdiff_t out_stride = 1) const;

private:
  int order_ = 0;
  std::vector<double> entries_;
};

/// Solves the Hermite interpolation conditions for order mu. Throws
/// std::invalid_argument outside [0, kMaxInterpOrder].
InterpMatrix build_interp_matrix(int mu);

/// Shared read-only matrix for order mu; all orders up to the cap are built
/// together on first use.
const InterpMatrix& interp_matrix(int mu);

/// Interpolant on the cell between `left` and `right`.
CellPolynomial interpolate_1d(const NodeData& left, const NodeData& right, double center, double h);

/// Raw form: writes the 2mu+2 cell coefficients into `out`.
void interpolate_1d(std::span<const double> left, std::span<const double> right, int mu, std::span<double> out);

/// Corner order for 2D interpolation: lower-left, lower-right, upper-left,
/// upper-right.
using Corners = std::array<std::span<const double>, 4>;

/// Raw 2D interpolation of orders (mu_x, mu_y).
///
/// Corner spans hold node data laid out with `src_nx` entries per row
/// (source order_x + 1); the source orders may exceed (mu_x, mu_y), in which
/// case the higher entries are ignored. Output has (2mu_x+2) x (2mu_y+2)
/// coefficients, x fastest.
void interpolate_2d(const Corners& corners, int src_nx, int mu_x, int mu_y, std::span<double> out);

CellPolynomial2D interpolate_2d(const std::array<NodeData2D, 4>& corners, int mu_x, int mu_y,
                                std::array<double, 2> center, std::array<double, 2> widths);

}  // namespace hermite
