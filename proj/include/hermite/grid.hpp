#pragma once

/// @file grid.hpp
/// @brief Staggered primal/dual node sets and nodal field storage.
///
/// Primal nodes sit at lo + i h, dual nodes at lo + (i + 1/2) h. A periodic
/// axis with n cells has n primal nodes (node n coincides with node 0) and n
/// dual nodes; a bounded axis has n + 1 primal and n dual nodes.

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace hermite {

enum class Parity { primal, dual };

constexpr Parity flip(Parity p) { return p == Parity::primal ? Parity::dual : Parity::primal; }

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int cells = 1;
  bool periodic = false;

  [[nodiscard]] double h() const { return (hi - lo) / cells; }
  [[nodiscard]] double length() const { return hi - lo; }
  [[nodiscard]] int node_count(Parity p) const {
    return p == Parity::dual ? cells : (periodic ? cells : cells + 1);
  }
  [[nodiscard]] double node(Parity p, int i) const {
    return lo + (p == Parity::dual ? i + 0.5 : static_cast<double>(i)) * h();
  }
  void validate() const {
    if (!(hi > lo)) throw std::invalid_argument("Axis: upper bound must exceed lower bound");
    if (cells < 1) throw std::invalid_argument("Axis: need at least one cell");
  }
};

/// Order-`order` nodal data on one parity of a 1D grid.
struct GridState1D {
  Axis axis;
  Parity parity = Parity::primal;
  int order = 0;
  double time = 0.0;
  std::vector<double> data;

  GridState1D() = default;
  GridState1D(Axis axis_, Parity parity_, int order_, double time_ = 0.0)
      : axis(axis_), parity(parity_), order(order_), time(time_),
        data(static_cast<std::size_t>(axis_.node_count(parity_) * (order_ + 1)), 0.0) {}

  [[nodiscard]] int nodes() const { return axis.node_count(parity); }
  [[nodiscard]] int block() const { return order + 1; }
  std::span<double> node(int i) {
    return {data.data() + static_cast<std::ptrdiff_t>(i) * block(), static_cast<std::size_t>(block())};
  }
  [[nodiscard]] std::span<const double> node(int i) const {
    return {data.data() + static_cast<std::ptrdiff_t>(i) * block(), static_cast<std::size_t>(block())};
  }
  [[nodiscard]] double position(int i) const { return axis.node(parity, i); }
};

/// Nodal data of orders (order_x, order_y) on one parity of a 2D grid.
/// Node (i, j) is stored at j * nodes_x + i; within a node, entry (k, l) at
/// l * (order_x + 1) + k.
struct GridState2D {
  Axis ax;
  Axis ay;
  Parity parity = Parity::primal;
  int order_x = 0;
  int order_y = 0;
  double time = 0.0;
  std::vector<double> data;

  GridState2D() = default;
  GridState2D(Axis ax_, Axis ay_, Parity parity_, int order_x_, int order_y_, double time_ = 0.0)
      : ax(ax_), ay(ay_), parity(parity_), order_x(order_x_), order_y(order_y_), time(time_),
        data(static_cast<std::size_t>(ax_.node_count(parity_) * ay_.node_count(parity_) * (order_x_ + 1) *
                                      (order_y_ + 1)),
             0.0) {}

  [[nodiscard]] int nodes_x() const { return ax.node_count(parity); }
  [[nodiscard]] int nodes_y() const { return ay.node_count(parity); }
  [[nodiscard]] int block() const { return (order_x + 1) * (order_y + 1); }
  std::span<double> node(int i, int j) {
    return {data.data() + static_cast<std::ptrdiff_t>(j * nodes_x() + i) * block(),
            static_cast<std::size_t>(block())};
  }
  [[nodiscard]] std::span<const double> node(int i, int j) const {
    return {data.data() + static_cast<std::ptrdiff_t>(j * nodes_x() + i) * block(),
            static_cast<std::size_t>(block())};
  }
  [[nodiscard]] std::array<double, 2> position(int i, int j) const {
    return {ax.node(parity, i), ay.node(parity, j)};
  }
};

}  // namespace hermite
