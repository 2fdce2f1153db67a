#include "hermite/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace hermite {

namespace {

// Binomial coefficients C(n, k) for n < size, built once.
const std::vector<std::vector<double>>& binomials() {
  static const std::vector<std::vector<double>> table = [] {
    constexpr int size = 64;
    std::vector<std::vector<double>> t(size);
    for (int n = 0; n < size; ++n) {
      t[n].assign(static_cast<std::size_t>(n + 1), 1.0);
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

double binom(int n, int k) { return binomials()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }

// Coefficients of p(xi0 + s) in powers of s, times ratio^j.
std::vector<double> taylor_shift(std::span<const double> a, double xi0, double ratio, int count) {
  std::vector<double> out(static_cast<std::size_t>(count), 0.0);
  const int n = static_cast<int>(a.size());
  double scale = 1.0;
  for (int j = 0; j < count && j < n; ++j) {
    double sum = 0.0;
    double power = 1.0;
    for (int i = j; i < n; ++i) {
      sum += binom(i, j) * a[i] * power;
      power *= xi0;
    }
    out[j] = scale * sum;
    scale *= ratio;
  }
  return out;
}

double wrap(double x, double lo, double len) {
  double r = std::fmod(x - lo, len);
  if (r < 0.0) r += len;
  return lo + r;
}

}  // namespace

double horner(std::span<const double> coeffs, double xi) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

double eval(const CellPolynomial& p, double x) {
  return horner(p.coeffs, (x - p.center) / p.width);
}

double eval(const CellPolynomial2D& p, double x, double y) {
  const double xi = (x - p.center[0]) / p.width[0];
  const double eta = (y - p.center[1]) / p.width[1];
  double acc = 0.0;
  for (int l = p.ny - 1; l >= 0; --l) {
    std::span<const double> row(p.coeffs.data() + static_cast<std::ptrdiff_t>(l) * p.nx,
                                static_cast<std::size_t>(p.nx));
    acc = acc * eta + horner(row, xi);
  }
  return acc;
}

CellPolynomial derivative(const CellPolynomial& p, int order) {
  if (order < 0) throw std::invalid_argument("derivative: negative order");
  const int n = static_cast<int>(p.coeffs.size());
  if (order >= n) return {p.center, p.width, {0.0}};
  std::vector<double> out(static_cast<std::size_t>(n - order));
  const double scale = std::pow(p.width, -order);
  for (int j = 0; j < n - order; ++j) {
    double falling = 1.0;
    for (int i = j + 1; i <= j + order; ++i) falling *= i;
    out[j] = p.coeffs[j + order] * falling * scale;
  }
  return {p.center, p.width, std::move(out)};
}

CellPolynomial2D derivative(const CellPolynomial2D& p, int order_x, int order_y) {
  if (order_x < 0 || order_y < 0) throw std::invalid_argument("derivative: negative order");
  const int nx = std::max(1, p.nx - order_x);
  const int ny = std::max(1, p.ny - order_y);
  CellPolynomial2D out(p.center, p.width, nx, ny);
  if (order_x >= p.nx || order_y >= p.ny) return out;
  const double scale = std::pow(p.width[0], -order_x) * std::pow(p.width[1], -order_y);
  for (int l = 0; l < ny; ++l) {
    double fl = 1.0;
    for (int i = l + 1; i <= l + order_y; ++i) fl *= i;
    for (int k = 0; k < nx; ++k) {
      double fk = 1.0;
      for (int i = k + 1; i <= k + order_x; ++i) fk *= i;
      out.at(k, l) = p.at(k + order_x, l + order_y) * fk * fl * scale;
    }
  }
  return out;
}

CellPolynomial recenter(const CellPolynomial& p, double new_center, double new_width) {
  const double xi0 = (new_center - p.center) / p.width;
  auto coeffs = taylor_shift(p.coeffs, xi0, new_width / p.width, static_cast<int>(p.coeffs.size()));
  return {new_center, new_width, std::move(coeffs)};
}

std::vector<double> scaled_derivatives(const CellPolynomial& p, double x, int count, double h) {
  return taylor_shift(p.coeffs, (x - p.center) / p.width, h / p.width, count);
}

CellPolynomial operator-(const CellPolynomial& a, const CellPolynomial& b) {
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  CellPolynomial bb = recenter(b, a.center, a.width);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (std::size_t i = 0; i < bb.coeffs.size(); ++i) out[i] -= bb.coeffs[i];
  return {a.center, a.width, std::move(out)};
}

std::size_t PiecewisePolynomial::locate(double x) const {
  if (periodic) x = wrap(x, lower(), length());
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  std::ptrdiff_t idx = (it - breakpoints.begin()) - 1;
  idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(pieces.size()) - 1);
  return static_cast<std::size_t>(idx);
}

void PiecewisePolynomial::validate() const {
  if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
    throw std::invalid_argument("PiecewisePolynomial: piece count does not match breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("PiecewisePolynomial: breakpoints not strictly increasing");
}

double eval(const PiecewisePolynomial& f, double x) {
  if (f.periodic) x = wrap(x, f.lower(), f.length());
  return eval(f.pieces[f.locate(x)], x);
}

PiecewisePolynomial shift(const PiecewisePolynomial& f, double delta) {
  if (!f.periodic) throw UnsupportedOperation("shift: field is not periodic");
  const double lo = f.lower();
  const double hi = f.upper();
  const double len = hi - lo;
  const double eps = 1e-13 * len;

  struct Span {
    double a, b;
    CellPolynomial p;
  };
  if (std::abs(delta) >= len) throw std::invalid_argument("shift: |delta| must be below the period");
  std::vector<Span> spans;
  spans.reserve(f.pieces.size() + 2);
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    // The translated piece may straddle either end; clip each periodic copy.
    for (int k = -1; k <= 1; ++k) {
      const double a = std::max(f.breakpoints[i] - delta + k * len, lo);
      const double b = std::min(f.breakpoints[i + 1] - delta + k * len, hi);
      if (b - a <= eps) continue;
      CellPolynomial p = f.pieces[i];
      p.center += k * len - delta;
      spans.push_back({a, b, std::move(p)});
    }
  }
  std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return x.a < y.a; });

  PiecewisePolynomial out;
  out.periodic = true;
  out.breakpoints.reserve(spans.size() + 1);
  out.breakpoints.push_back(lo);
  for (auto& s : spans) {
    out.pieces.push_back(std::move(s.p));
    out.breakpoints.push_back(s.b);
  }
  out.breakpoints.back() = hi;
  return out;
}

PiecewisePolynomial refine(const PiecewisePolynomial& f, std::span<const double> points) {
  const double eps = 1e-12 * f.length();
  std::vector<double> bps(f.breakpoints);
  for (double x : points)
    if (x > f.lower() + eps && x < f.upper() - eps) bps.push_back(x);
  std::sort(bps.begin(), bps.end());
  std::vector<double> merged;
  merged.reserve(bps.size());
  for (double x : bps)
    if (merged.empty() || x - merged.back() > eps) merged.push_back(x);
  merged.back() = f.upper();

  PiecewisePolynomial out;
  out.periodic = f.periodic;
  out.breakpoints = merged;
  out.pieces.reserve(merged.size() - 1);
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double mid = 0.5 * (merged[i] + merged[i + 1]);
    out.pieces.push_back(recenter(f.pieces[f.locate(mid)], mid, merged[i + 1] - merged[i]));
  }
  return out;
}

}  // namespace hermite
