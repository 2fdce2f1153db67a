#include "hermite/interpolation.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermite {

NodeData::NodeData(int order_, std::vector<double> values_) : order(order_), values(std::move(values_)) {
  if (order < 0 || values.size() != static_cast<std::size_t>(order + 1))
    throw std::invalid_argument("NodeData: expected order + 1 values");
}

NodeData2D::NodeData2D(int order_x_, int order_y_, std::vector<double> values_)
    : order_x(order_x_), order_y(order_y_), values(std::move(values_)) {
  if (order_x < 0 || order_y < 0 || values.size() != static_cast<std::size_t>((order_x + 1) * (order_y + 1)))
    throw std::invalid_argument("NodeData2D: expected (order_x + 1) * (order_y + 1) values");
}

InterpMatrix::InterpMatrix(int order, std::vector<double> entries) : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(size() * size()))
    throw std::invalid_argument("InterpMatrix: wrong entry count");
}

void InterpMatrix::apply(std::span<const double> left, std::span<const double> right, std::span<double> out,
                         std::ptrdiff_t in_stride, std::ptrdiff_t out_stride) const {
  const int n = size();
  const int half = order_ + 1;
  for (int i = 0; i < n; ++i) {
    const double* row = entries_.data() + static_cast<std::ptrdiff_t>(i) * n;
    double acc = 0.0;
    // Paired terms cancel exactly for mirror-symmetric data.
    for (int j = 0; j < half; ++j) acc += row[j] * left[j * in_stride] + row[half + j] * right[j * in_stride];
    out[i * out_stride] = acc;
  }
}

InterpMatrix build_interp_matrix(int mu) {
  if (mu < 0 || mu > kMaxInterpOrder)
    throw std::invalid_argument("build_interp_matrix: order " + std::to_string(mu) + " outside [0, " +
                                std::to_string(kMaxInterpOrder) + "]");
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = 2 * mu + 2;
  Mat a = Mat::Zero(n, n);
  // Row (side, l): (1/l!) d^l/dxi^l sum_j a_j xi^j at xi = -+1/2.
  for (int side = 0; side < 2; ++side) {
    const long double xi = side == 0 ? -0.5L : 0.5L;
    for (int l = 0; l <= mu; ++l) {
      for (int j = l; j < n; ++j) {
        long double binom = 1.0L;
        for (int t = 1; t <= l; ++t) binom = binom * static_cast<long double>(j - l + t) / t;
        a(side * (mu + 1) + l, j) = binom * std::pow(xi, static_cast<long double>(j - l));
      }
    }
  }
  const Mat inv = a.fullPivLu().inverse();
  std::vector<double> entries(static_cast<std::size_t>(n * n));
  // Mirror symmetry xi -> -xi: M(i, mu+1+j) = (-1)^(i+j) M(i, j). Imposed
  // exactly so that reflected data gives exactly odd or even interpolants.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= mu; ++j) {
      const double v = static_cast<double>(inv(i, j));
      entries[static_cast<std::size_t>(i * n + j)] = v;
      entries[static_cast<std::size_t>(i * n + mu + 1 + j)] = (i + j) % 2 == 0 ? v : -v;
    }
  return {mu, std::move(entries)};
}

const InterpMatrix& interp_matrix(int mu) {
  static const std::vector<InterpMatrix> cache = [] {
    std::vector<InterpMatrix> c;
    for (int k = 0; k <= kMaxInterpOrder; ++k) c.push_back(build_interp_matrix(k));
    return c;
  }();
  if (mu < 0 || mu > kMaxInterpOrder)
    throw std::invalid_argument("interp_matrix: order " + std::to_string(mu) + " outside supported range");
  return cache[static_cast<std::size_t>(mu)];
}

void interpolate_1d(std::span<const double> left, std::span<const double> right, int mu, std::span<double> out) {
  interp_matrix(mu).apply(left, right, out);
}

CellPolynomial interpolate_1d(const NodeData& left, const NodeData& right, double center, double h) {
  if (left.order != right.order) throw std::invalid_argument("interpolate_1d: mismatched node orders");
  std::vector<double> coeffs(static_cast<std::size_t>(2 * left.order + 2));
  interpolate_1d(left.values, right.values, left.order, coeffs);
  return {center, h, std::move(coeffs)};
}

void interpolate_2d(const Corners& corners, int src_nx, int mu_x, int mu_y, std::span<double> out) {
  const InterpMatrix& mx = interp_matrix(mu_x);
  const InterpMatrix& my = interp_matrix(mu_y);
  const int nxo = 2 * mu_x + 2;
  // rows[b][l * nxo + k]: x-interpolated data along the bottom (b=0) and top (b=1) edges.
  std::vector<double> rows(static_cast<std::size_t>(2 * (mu_y + 1) * nxo));
  for (int b = 0; b < 2; ++b) {
    const auto& left = corners[static_cast<std::size_t>(2 * b)];
    const auto& right = corners[static_cast<std::size_t>(2 * b + 1)];
    for (int l = 0; l <= mu_y; ++l) {
      const std::size_t off = static_cast<std::size_t>(l * src_nx);
      std::span<double> dst(rows.data() + (b * (mu_y + 1) + l) * nxo, static_cast<std::size_t>(nxo));
      mx.apply(left.subspan(off), right.subspan(off), dst);
    }
  }
  const std::span<const double> bottom(rows.data(), static_cast<std::size_t>((mu_y + 1) * nxo));
  const std::span<const double> top(rows.data() + (mu_y + 1) * nxo, static_cast<std::size_t>((mu_y + 1) * nxo));
  for (int k = 0; k < nxo; ++k)
    my.apply(bottom.subspan(static_cast<std::size_t>(k)), top.subspan(static_cast<std::size_t>(k)),
             out.subspan(static_cast<std::size_t>(k)), nxo, nxo);
}

CellPolynomial2D interpolate_2d(const std::array<NodeData2D, 4>& corners, int mu_x, int mu_y,
                                std::array<double, 2> center, std::array<double, 2> widths) {
  const int ox = corners[0].order_x;
  const int oy = corners[0].order_y;
  for (const auto& c : corners)
    if (c.order_x != ox || c.order_y != oy)
      throw std::invalid_argument("interpolate_2d: inconsistent corner orders");
  if (mu_x > ox || mu_y > oy) throw std::invalid_argument("interpolate_2d: requested order exceeds corner data");
  CellPolynomial2D out(center, widths, 2 * mu_x + 2, 2 * mu_y + 2);
  interpolate_2d({corners[0].values, corners[1].values, corners[2].values, corners[3].values}, ox + 1, mu_x, mu_y,
                 out.coeffs);
  return out;
}

}  // namespace hermite
