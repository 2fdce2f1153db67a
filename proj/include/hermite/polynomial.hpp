#pragma once

/// @file polynomial.hpp
/// @brief Polynomials in the scaled monomial basis.
///
/// A cell polynomial is stored as p(x) = sum_l a_l ((x - center) / h)^l. The
/// coefficient a_l is therefore the scaled derivative h^l / l! * p^(l)(center),
/// which is also the form of the nodal degrees of freedom. Keeping the h
/// scaling inside the basis keeps coefficients O(1) for resolved data.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hermite {

/// Thrown by operations that are only defined on periodic domains.
class UnsupportedOperation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// One-dimensional polynomial expanded about a cell midpoint.
struct CellPolynomial {
  double center = 0.0;
  double width = 1.0;
  std::vector<double> coeffs;

  CellPolynomial() = default;
  CellPolynomial(double center_, double width_, std::vector<double> coeffs_)
      : center(center_), width(width_), coeffs(std::move(coeffs_)) {}

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Tensor-product polynomial in two variables.
///
/// Coefficient a_{k,l} multiplies xi^k eta^l and is stored at l * nx + k
/// (x-degree fastest).
struct CellPolynomial2D {
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> width{1.0, 1.0};
  int nx = 0;  ///< number of coefficients along x (degree + 1)
  int ny = 0;  ///< number of coefficients along y (degree + 1)
  std::vector<double> coeffs;

  CellPolynomial2D() = default;
  CellPolynomial2D(std::array<double, 2> center_, std::array<double, 2> width_, int nx_, int ny_)
      : center(center_), width(width_), nx(nx_), ny(ny_),
        coeffs(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), 0.0) {}

  double& at(int k, int l) { return coeffs[static_cast<std::size_t>(l * nx + k)]; }
  [[nodiscard]] double at(int k, int l) const {
    return (k < nx && l < ny) ? coeffs[static_cast<std::size_t>(l * nx + k)] : 0.0;
  }
};

// Horner evaluation of sum_l a_l xi^l.
double horner(std::span<const double> coeffs, double xi);

double eval(const CellPolynomial& p, double x);
double eval(const CellPolynomial2D& p, double x, double y);

/// Differentiates `order` times with respect to x. Orders past the degree give
/// the zero polynomial (a single zero coefficient).
CellPolynomial derivative(const CellPolynomial& p, int order);

/// Mixed derivative d^(ox+oy) / dx^ox dy^oy.
CellPolynomial2D derivative(const CellPolynomial2D& p, int order_x, int order_y);

/// Re-expands p about a new center in the scaled basis of width `new_width`.
/// The represented function is unchanged.
CellPolynomial recenter(const CellPolynomial& p, double new_center, double new_width);

/// Scaled derivative h^l / l! * p^(l)(x) for l = 0..count-1, using the
/// polynomial's own width as h unless `h` is given.
std::vector<double> scaled_derivatives(const CellPolynomial& p, double x, int count, double h);

CellPolynomial operator-(const CellPolynomial& a, const CellPolynomial& b);

/// Piecewise polynomial on [breakpoints.front(), breakpoints.back()].
///
/// Piece i is valid on [breakpoints[i], breakpoints[i+1]]. Pieces need not be
/// centered on their interval.
struct PiecewisePolynomial {
  std::vector<double> breakpoints;
  std::vector<CellPolynomial> pieces;
  bool periodic = false;

  [[nodiscard]] double lower() const { return breakpoints.front(); }
  [[nodiscard]] double upper() const { return breakpoints.back(); }
  [[nodiscard]] double length() const { return upper() - lower(); }

  /// Index of the piece containing x. Periodic fields wrap x first; others
  /// clamp to the end pieces.
  [[nodiscard]] std::size_t locate(double x) const;
  [[nodiscard]] const CellPolynomial& piece_at(double x) const { return pieces[locate(x)]; }

  /// Throws std::invalid_argument if the breakpoints are not strictly
  /// increasing or the piece count does not match.
  void validate() const;
};

double eval(const PiecewisePolynomial& f, double x);

/// Translated copy g with g(x) = f(x + delta) on the same periodic domain.
/// Requires |delta| below the period.
PiecewisePolynomial shift(const PiecewisePolynomial& f, double delta);

/// Same function, subdivided at the given extra points (which must lie inside
/// the domain). Each new piece is recentered on its own interval.
PiecewisePolynomial refine(const PiecewisePolynomial& f, std::span<const double> points);

}  // namespace hermite
