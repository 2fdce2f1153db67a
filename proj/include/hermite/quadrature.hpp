#pragma once

#include <functional>
#include <vector>

namespace hermite {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point rule; exact for polynomials of degree 2n - 1.
const QuadratureRule& gauss_legendre(int points);

/// Integral of f over [a, b] with the n-point rule.
double integrate(const std::function<double(double)>& f, double a, double b, int points);

}  // namespace hermite
