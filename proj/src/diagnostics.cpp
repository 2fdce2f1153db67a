#include "hermite/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hermite/quadrature.hpp"

namespace hermite {

namespace {

double wrap_into(double x, double lo, double len) {
  double y = std::fmod(x - lo, len);
  if (y < 0.0) y += len;
  return lo + y;
}

// Piece of a periodic field valid at x, translated by a whole number of
// periods so that it is valid at x itself.
CellPolynomial piece_near(const PiecewisePolynomial& f, double x) {
  const double w = wrap_into(x, f.lower(), f.length());
  CellPolynomial p = f.pieces[f.locate(w)];
  p.center += x - w;
  return p;
}

double integrate_square(const CellPolynomial& p, double a, double b, int points) {
  const QuadratureRule& rule = gauss_legendre(points);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double value = eval(p, mid + half * rule.nodes[q]);
    sum += rule.weights[q] * value * value;
  }
  return half * sum;
}

// Interval of the cell centered at `center`, clipped on bounded axes.
std::pair<double, double> cell_extent(const Axis& axis, double center) {
  const double half = 0.5 * axis.h();
  if (axis.periodic) return {center - half, center + half};
  return {std::max(center - half, axis.lo), std::min(center + half, axis.hi)};
}

}  // namespace

PiecewisePolynomial to_piecewise(const GridState1D& state, const BoundarySpec& spec, FieldRole role) {
  const Axis& axis = state.axis;
  const Parity target = flip(state.parity);
  const PaddedState1D padded(state, spec, role);
  const double h = axis.h();
  const int count = axis.node_count(target);

  PiecewisePolynomial out;
  out.periodic = axis.periodic;
  out.pieces.reserve(static_cast<std::size_t>(count));
  std::vector<double> coeffs(static_cast<std::size_t>(2 * state.order + 2));
  for (int t = 0; t < count; ++t) {
    const double center = axis.node(target, t);
    const auto [a, b] = cell_extent(axis, center);
    if (t == 0) out.breakpoints.push_back(a);
    interpolate_1d(padded.left_of(t), padded.right_of(t), state.order, coeffs);
    out.pieces.emplace_back(center, h, coeffs);
    out.breakpoints.push_back(b);
  }
  return out;
}

PiecewisePolynomial differentiate(const PiecewisePolynomial& f, int order) {
  PiecewisePolynomial out;
  out.periodic = f.periodic;
  out.breakpoints = f.breakpoints;
  out.pieces.reserve(f.pieces.size());
  for (const auto& p : f.pieces) out.pieces.push_back(derivative(p, order));
  return out;
}

double l2_error(const PiecewisePolynomial& f, const std::function<double(double)>& exact, int points) {
  double total = 0.0;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const CellPolynomial& p = f.pieces[i];
    const int n = points > 0 ? points : p.degree() + 5;
    const QuadratureRule& rule = gauss_legendre(n);
    const double a = f.breakpoints[i];
    const double b = f.breakpoints[i + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = mid + half * rule.nodes[q];
      const double diff = eval(p, x) - exact(x);
      sum += rule.weights[q] * diff * diff;
    }
    total += half * sum;
  }
  return std::sqrt(total);
}

double l2_error(const GridState2D& state, const BoundarySpec& bx, const BoundarySpec& by,
                const std::function<double(double, double)>& exact, int points) {
  const Parity target = flip(state.parity);
  const PaddedState2D padded(state, bx, by, FieldRole::displacement);
  const int nx = state.ax.node_count(target);
  const int ny = state.ay.node_count(target);
  const int cx = 2 * state.order_x + 2;
  const int cy = 2 * state.order_y + 2;
  const int n = points > 0 ? points : std::max(cx, cy) + 4;
  const QuadratureRule& rule = gauss_legendre(n);
  const double hx = state.ax.h();
  const double hy = state.ay.h();

  std::vector<double> coeffs(static_cast<std::size_t>(cx * cy));
  std::vector<double> row(static_cast<std::size_t>(cx));
  double total = 0.0;
  for (int tj = 0; tj < ny; ++tj)
    for (int ti = 0; ti < nx; ++ti) {
      const double xc = state.ax.node(target, ti);
      const double yc = state.ay.node(target, tj);
      const auto [xa, xb] = cell_extent(state.ax, xc);
      const auto [ya, yb] = cell_extent(state.ay, yc);
      interpolate_2d(padded.corners_of(ti, tj), state.order_x + 1, state.order_x, state.order_y, coeffs);
      const double xm = 0.5 * (xa + xb), xh = 0.5 * (xb - xa);
      const double ym = 0.5 * (ya + yb), yh = 0.5 * (yb - ya);
      double cell = 0.0;
      for (std::size_t qj = 0; qj < rule.nodes.size(); ++qj) {
        const double y = ym + yh * rule.nodes[qj];
        const double eta = (y - yc) / hy;
        // Collapse the y direction first: row[k] = sum_l a_{k,l} eta^l.
        for (int k = 0; k < cx; ++k) {
          double acc = 0.0;
          for (int l = cy - 1; l >= 0; --l) acc = acc * eta + coeffs[static_cast<std::size_t>(l * cx + k)];
          row[static_cast<std::size_t>(k)] = acc;
        }
        for (std::size_t qi = 0; qi < rule.nodes.size(); ++qi) {
          const double x = xm + xh * rule.nodes[qi];
          const double diff = horner(row, (x - xc) / hx) - exact(x, y);
          cell += rule.weights[qi] * rule.weights[qj] * diff * diff;
        }
      }
      total += xh * yh * cell;
    }
  return std::sqrt(total);
}

ConservedPair conserved_pair(const PiecewisePolynomial& current, const PiecewisePolynomial& previous, double delta) {
  if (!current.periodic || !previous.periodic)
    throw UnsupportedOperation("conserved_pair: fields must be periodic");
  const double lo = current.lower();
  const double len = current.length();
  const double eps = 1e-12 * len;

  // Both members share one partition: current edges, previous edges and
  // previous edges moved by +-delta. At dt = h/2 this cuts every cell into
  // four h/4 pieces.
  const std::vector<double> partition = [&] {
    std::vector<double> bps(current.breakpoints.begin(), current.breakpoints.end() - 1);
    for (double x : previous.breakpoints)
      for (double s : {-delta, 0.0, delta}) bps.push_back(wrap_into(x - s, lo, len));
    std::sort(bps.begin(), bps.end());
    std::vector<double> merged;
    for (double x : bps)
      if (merged.empty() || x - merged.back() > eps) merged.push_back(x);
    if (lo + len - merged.back() <= eps) merged.pop_back();
    merged.push_back(lo + len);
    return merged;
  }();

  auto assemble = [&](double shift) {
    PiecewisePolynomial out;
    out.periodic = true;
    out.breakpoints = partition;
    out.pieces.reserve(out.breakpoints.size() - 1);
    for (std::size_t i = 0; i + 1 < out.breakpoints.size(); ++i) {
      const double a = out.breakpoints[i];
      const double b = out.breakpoints[i + 1];
      const double mid = 0.5 * (a + b);
      CellPolynomial cur = recenter(piece_near(current, mid), mid, b - a);
      CellPolynomial prev = piece_near(previous, mid + shift);
      prev.center -= shift;
      out.pieces.push_back(cur - prev);
    }
    return out;
  };

  return {assemble(delta), assemble(-delta)};
}

ConservedPair conserved_pair(const TwoLevelState& state, const SchemeConfig& cfg) {
  const PiecewisePolynomial current = to_piecewise(state.current, cfg.bx);
  const PiecewisePolynomial previous = to_piecewise(state.previous, cfg.bx);
  return conserved_pair(current, previous, 0.5 * cfg.c * cfg.dt());
}

double seminorm(const PiecewisePolynomial& f, int r) {
  double total = 0.0;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const CellPolynomial d = derivative(f.pieces[i], r);
    total += integrate_square(d, f.breakpoints[i], f.breakpoints[i + 1], std::max(1, d.degree() + 1));
  }
  return total;
}

double seminorm_energy(const ConservedPair& pair, int r) { return seminorm(pair.plus, r) + seminorm(pair.minus, r); }

double dissipative_energy(const FieldPair& state, const SchemeConfig& cfg) {
  const PiecewisePolynomial u = to_piecewise(state.u, cfg.bx, FieldRole::displacement);
  const PiecewisePolynomial v = to_piecewise(state.v, cfg.bx, FieldRole::velocity);
  return cfg.c * cfg.c * seminorm(u, cfg.m + 1) + seminorm(v, cfg.m);
}

double fit_rate(std::span<const double> h, std::span<const double> error) {
  if (h.size() != error.size()) throw std::invalid_argument("fit_rate: size mismatch");
  const std::size_t levels = h.size();
  if (levels < 3) throw std::invalid_argument("fit_rate: need at least three refinement levels");
  const std::size_t count = std::max<std::size_t>(2, (levels + 1) / 2);
  const std::size_t first = levels - count;
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = first; i < levels; ++i) {
    sx += std::log(h[i]);
    sy += std::log(error[i]);
  }
  const double mx = sx / static_cast<double>(count);
  const double my = sy / static_cast<double>(count);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = first; i < levels; ++i) {
    const double dx = std::log(h[i]) - mx;
    sxy += dx * (std::log(error[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<double> pairwise_rates(std::span<const double> h, std::span<const double> error) {
  std::vector<double> rates(h.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i < h.size(); ++i)
    rates[i] = std::log(error[i] / error[i - 1]) / std::log(h[i] / h[i - 1]);
  return rates;
}

}  // namespace hermite
