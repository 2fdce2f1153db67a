#include "hermite/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hermite {

const QuadratureRule& gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[points];
  if (!slot) {
    auto rule = std::make_unique<QuadratureRule>();
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(static_cast<size_t>(points));
    if (table == nullptr) throw std::runtime_error("gauss_legendre: GSL table allocation failed");
    rule->nodes.resize(static_cast<std::size_t>(points));
    rule->weights.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
      gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule->nodes[i], &rule->weights[i], table);
    gsl_integration_glfixed_table_free(table);
    slot = std::move(rule);
  }
  return *slot;
}

double integrate(const std::function<double(double)>& f, double a, double b, int points) {
  const auto& rule = gauss_legendre(points);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

}  // namespace hermite
