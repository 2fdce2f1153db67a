#include "hermite/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermite {

void BoundarySpec::validate() const {
  if ((lower.kind == BoundaryKind::periodic) != (upper.kind == BoundaryKind::periodic))
    throw std::invalid_argument("BoundarySpec: periodic must be set on both opposing sides");
}

double reflection_sign(BoundaryKind kind, int l) {
  switch (kind) {
    case BoundaryKind::dirichlet: return (l % 2 == 0) ? -1.0 : 1.0;
    case BoundaryKind::neumann: return (l % 2 == 0) ? 1.0 : -1.0;
    case BoundaryKind::periodic: return 1.0;
  }
  return 1.0;
}

void reflect(std::span<const double> interior, std::span<double> ghost, const SideCondition& cond, FieldRole role) {
  for (std::size_t l = 0; l < interior.size(); ++l)
    ghost[l] = reflection_sign(cond.kind, static_cast<int>(l)) * interior[l];
  if (cond.kind == BoundaryKind::dirichlet && role == FieldRole::displacement && !interior.empty())
    ghost[0] += 2.0 * cond.value;
}

NodeData ghost_data(const NodeData& interior, const BoundarySpec& spec, Side side, FieldRole role) {
  NodeData out(interior.order);
  reflect(interior.values, out.values, spec.at(side), role);
  return out;
}

void reflect_2d(std::span<const double> interior, std::span<double> ghost, int order_x, int order_y, int axis,
                const SideCondition& cond, FieldRole role) {
  const int nx = order_x + 1;
  for (int l = 0; l <= order_y; ++l)
    for (int k = 0; k <= order_x; ++k) {
      const std::size_t idx = static_cast<std::size_t>(l * nx + k);
      ghost[idx] = reflection_sign(cond.kind, axis == 0 ? k : l) * interior[idx];
    }
  if (cond.kind == BoundaryKind::dirichlet && role == FieldRole::displacement && !interior.empty())
    ghost[0] += 2.0 * cond.value;
}

NodeData2D ghost_data_2d(const NodeData2D& interior, const BoundarySpec& spec, int axis, Side side, FieldRole role) {
  NodeData2D out(interior.order_x, interior.order_y);
  reflect_2d(interior.values, out.values, interior.order_x, interior.order_y, axis, spec.at(side), role);
  return out;
}

PaddedState1D::PaddedState1D(const GridState1D& state, const BoundarySpec& spec, FieldRole role)
    : source_parity_(state.parity), block_(state.block()) {
  const int n = state.nodes();
  data_.assign(static_cast<std::size_t>((n + 2) * block_), 0.0);
  std::copy(state.data.begin(), state.data.end(), data_.begin() + block_);
  auto slot = [&](int i) {
    return std::span<double>(data_.data() + static_cast<std::ptrdiff_t>(i + 1) * block_,
                             static_cast<std::size_t>(block_));
  };
  if (spec.is_periodic()) {
    std::ranges::copy(state.node(n - 1), slot(-1).begin());
    std::ranges::copy(state.node(0), slot(n).begin());
  } else {
    // Mirror image of node k is -1-k on the dual grid and -k on the primal grid.
    const int offset = state.parity == Parity::dual ? 0 : 1;
    reflect(state.node(offset), slot(-1), spec.lower, role);
    reflect(state.node(n - 1 - offset), slot(n), spec.upper, role);
  }
}

PaddedState2D::PaddedState2D(const GridState2D& state, const BoundarySpec& bx, const BoundarySpec& by,
                             FieldRole role)
    : source_parity_(state.parity), block_(state.block()), stride_(state.nodes_x() + 2) {
  const int nx = state.nodes_x();
  const int ny = state.nodes_y();
  data_.assign(static_cast<std::size_t>(stride_ * (ny + 2) * block_), 0.0);
  auto slot = [&](int i, int j) {
    return std::span<double>(data_.data() + static_cast<std::ptrdiff_t>((j + 1) * stride_ + (i + 1)) * block_,
                             static_cast<std::size_t>(block_));
  };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) std::ranges::copy(state.node(i, j), slot(i, j).begin());

  const int offset = state.parity == Parity::dual ? 0 : 1;
  for (int j = 0; j < ny; ++j) {
    if (bx.is_periodic()) {
      std::ranges::copy(node(nx - 1, j), slot(-1, j).begin());
      std::ranges::copy(node(0, j), slot(nx, j).begin());
    } else {
      reflect_2d(node(offset, j), slot(-1, j), state.order_x, state.order_y, 0, bx.lower, role);
      reflect_2d(node(nx - 1 - offset, j), slot(nx, j), state.order_x, state.order_y, 0, bx.upper, role);
    }
  }
  for (int i = -1; i <= nx; ++i) {
    if (by.is_periodic()) {
      std::ranges::copy(node(i, ny - 1), slot(i, -1).begin());
      std::ranges::copy(node(i, 0), slot(i, ny).begin());
    } else {
      reflect_2d(node(i, offset), slot(i, -1), state.order_x, state.order_y, 1, by.lower, role);
      reflect_2d(node(i, ny - 1 - offset), slot(i, ny), state.order_x, state.order_y, 1, by.upper, role);
    }
  }
}

}  // namespace hermite
