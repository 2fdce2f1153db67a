#include "hermite/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hermite/interpolation.hpp"

namespace hermite {

double SchemeConfig::min_h() const { return dimension == 2 ? std::min(x.h(), y.h()) : x.h(); }

void SchemeConfig::validate() const {
  if (m < 0 || m > kMaxInterpOrder) throw ConfigError("m = " + std::to_string(m) + " outside supported range");
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("wave speed c must be positive");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ConfigError("lambda must lie in (0, 1]");
  if (stage_cap && *stage_cap < 1) throw ConfigError("stage cap must be at least 1");
  if (dimension != 1 && dimension != 2) throw ConfigError("dimension must be 1 or 2");
  if (threads < 1) throw ConfigError("threads must be at least 1");
  auto check = [](const Axis& a, const BoundarySpec& b, const char* name) {
    try {
      a.validate();
      b.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string(name) + ": " + e.what());
    }
    if (a.periodic != b.is_periodic()) throw ConfigError(std::string(name) + ": axis periodicity does not match boundary");
  };
  check(x, bx, "x axis");
  if (dimension == 2) check(y, by, "y axis");
}

Axis make_axis(double lo, double hi, int cells, const BoundarySpec& spec) {
  return Axis{lo, hi, cells, spec.is_periodic()};
}

}  // namespace hermite
