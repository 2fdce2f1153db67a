#pragma once

// Test harnesses shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <random>

#include "hermite/conservative.hpp"
#include "hermite/diagnostics.hpp"
#include "hermite/dissipative.hpp"
#include "oracles.hpp"

namespace checks {

using namespace hermite;

inline SchemeConfig periodic_config(int m, double lambda, int cells, double lo = 0.0, double hi = 1.0) {
  SchemeConfig cfg;
  cfg.m = m;
  cfg.lambda = lambda;
  cfg.c = 1.0;
  cfg.bx = BoundarySpec::periodic();
  cfg.by = cfg.bx;
  cfg.x = make_axis(lo, hi, cells, cfg.bx);
  cfg.y = cfg.x;
  return cfg;
}

inline void fill_random(GridState1D& state, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& x : state.data) x = dist(rng);
}

// One dissipative half step from random piecewise polynomial data, compared
// with d'Alembert applied to each target cell's interpolants. Returns the
// largest error relative to the largest exact value.
inline double dissipative_exactness(int m, double lambda, std::uint64_t seed, int cells = 9) {
  const SchemeConfig cfg = periodic_config(m, lambda, cells);
  std::mt19937_64 rng(seed);
  FieldPair state = make_field_pair(cfg.x, Parity::primal, m);
  fill_random(state.u, rng);
  fill_random(state.v, rng);
  const FieldPair next = half_step_1d(state, cfg);

  const PaddedState1D pu(state.u, cfg.bx, FieldRole::displacement);
  const PaddedState1D pv(state.v, cfg.bx, FieldRole::velocity);
  const double h = cfg.x.h();
  double worst = 0.0, scale = 0.0;
  std::vector<double> p(static_cast<std::size_t>(2 * m + 2)), q(static_cast<std::size_t>(2 * m));
  for (int t = 0; t < next.u.nodes(); ++t) {
    interpolate_1d(pu.left_of(t), pu.right_of(t), m, p);
    interpolate_1d(pv.left_of(t), pv.right_of(t), m - 1, q);
    const double x = next.u.position(t);
    const oracle::Evolved e = oracle::dalembert(p, q, x, h, cfg.c, x, cfg.half_dt(), m, m - 1);
    worst = std::max({worst, oracle::max_abs_diff(next.u.node(t), e.u), oracle::max_abs_diff(next.v.node(t), e.v)});
    scale = std::max({scale, oracle::max_abs(e.u), oracle::max_abs(e.v)});
  }
  return worst / scale;
}

// One conservative update from random data, compared with the exact
// two-level identity u(t + dt/2) + u(t - dt/2) = u(x + c dt/2) + u(x - c dt/2)
// applied to each target cell's interpolant.
inline double conservative_exactness(int m, double lambda, std::uint64_t seed, int cells = 9) {
  const SchemeConfig cfg = periodic_config(m, lambda, cells);
  std::mt19937_64 rng(seed);
  TwoLevelState state{GridState1D(cfg.x, Parity::primal, m), GridState1D(cfg.x, Parity::dual, m), 1};
  fill_random(state.current, rng);
  fill_random(state.previous, rng);
  const TwoLevelState next = full_step_conservative(state, cfg);

  const PaddedState1D pu(state.current, cfg.bx, FieldRole::displacement);
  const double h = cfg.x.h();
  const double delta = 0.5 * cfg.c * cfg.dt();
  double worst = 0.0, scale = 0.0;
  std::vector<double> p(static_cast<std::size_t>(2 * m + 2));
  for (int t = 0; t < next.current.nodes(); ++t) {
    interpolate_1d(pu.left_of(t), pu.right_of(t), m, p);
    const double x = next.current.position(t);
    std::vector<double> expected;
    for (int k = 0; k <= m; ++k) {
      const double sum = oracle::poly_derivative(p, x, h, k, x + delta) + oracle::poly_derivative(p, x, h, k, x - delta);
      expected.push_back(sum * std::pow(h, k) / oracle::factorial(k) - state.previous.node(t)[static_cast<std::size_t>(k)]);
    }
    worst = std::max(worst, oracle::max_abs_diff(next.current.node(t), expected));
    scale = std::max(scale, oracle::max_abs(expected));
  }
  return worst / scale;
}

// Largest coefficient error of order-mu interpolation of random polynomials
// of degree 2 mu + 1, relative to the largest coefficient.
inline double interpolation_exactness(int mu, std::uint64_t seed, int trials = 5) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto a = oracle::random_vector(rng, static_cast<std::size_t>(2 * mu + 2));
    std::vector<double> left, right;
    for (int l = 0; l <= mu; ++l) {
      left.push_back(oracle::poly_derivative(a, 0.0, 1.0, l, -0.5) / oracle::factorial(l));
      right.push_back(oracle::poly_derivative(a, 0.0, 1.0, l, 0.5) / oracle::factorial(l));
    }
    std::vector<double> out(a.size());
    interpolate_1d(left, right, mu, out);
    worst = std::max(worst, oracle::max_abs_diff(out, a) / oracle::max_abs(a));
  }
  return worst;
}

// |u|^2 - |I u|^2 - |u - I u|^2 for the (m+1)-seminorm of
// u = sin x + 0.3 cos 2x on a periodic grid, relative to |u|^2.
inline double pythagorean_residual(int m, int cells = 12) {
  const double h = 2.0 * M_PI / cells;
  const Axis axis{0.0, 2.0 * M_PI, cells, true};
  GridState1D state(axis, Parity::primal, m);
  for (int i = 0; i < cells; ++i) {
    const auto a = oracle::sine_scaled(1.0, 0.0, state.position(i), h, m);
    const auto b = oracle::sine_scaled(2.0, M_PI / 2, state.position(i), h, m);
    for (int l = 0; l <= m; ++l)
      state.node(i)[static_cast<std::size_t>(l)] = a[static_cast<std::size_t>(l)] + 0.3 * b[static_cast<std::size_t>(l)];
  }
  const PiecewisePolynomial p = to_piecewise(state, BoundarySpec::periodic());
  const int r = m + 1;
  auto exact_r = [r](double x) {
    return std::sin(x + r * M_PI / 2) + 0.3 * std::pow(2.0, r) * std::cos(2 * x + r * M_PI / 2);
  };
  const double full = M_PI * (1.0 + 0.09 * std::pow(4.0, r));
  const double deficit = std::pow(l2_error(differentiate(p, r), exact_r, 24), 2);
  return std::abs(full - seminorm(p, r) - deficit) / full;
}

// Fitted L2 slope of order-m interpolation of sin x.
inline double interpolation_rate(int m) {
  std::vector<double> hs, errs;
  for (int n : {16, 24, 32, 48}) {
    const Axis axis{0.0, 2.0 * M_PI, n, true};
    GridState1D state(axis, Parity::primal, m);
    for (int i = 0; i < n; ++i) {
      const auto a = oracle::sine_scaled(1.0, 0.0, state.position(i), axis.h(), m);
      std::copy(a.begin(), a.end(), state.node(i).begin());
    }
    hs.push_back(axis.h());
    errs.push_back(l2_error(to_piecewise(state, BoundarySpec::periodic()), [](double x) { return std::sin(x); }));
  }
  return fit_rate(hs, errs);
}

struct StabilityResult {
  bool finite = true;
  double growth = 0.0;  ///< max sup-norm over initial sup-norm (dissipative)
  double drift = 0.0;   ///< max relative energy change (conservative)
};

// sin x on a periodic grid at full CFL for `steps` time steps of size dt.
inline StabilityResult dissipative_stability(int m, long steps, int cells = 16) {
  const SchemeConfig cfg = periodic_config(m, 1.0, cells, 0.0, 2.0 * M_PI);
  FieldPair state = make_field_pair(cfg.x, Parity::primal, m);
  for (int i = 0; i < state.u.nodes(); ++i) {
    const auto s = oracle::sine_scaled(1.0, 0.0, state.u.position(i), cfg.x.h(), m);
    std::copy(s.begin(), s.end(), state.u.node(i).begin());
  }
  auto sup = [](const GridState1D& g) {
    double s = 0.0;
    for (int i = 0; i < g.nodes(); ++i) s = std::max(s, std::abs(g.node(i)[0]));
    return s;
  };
  const double initial = sup(state.u);
  StabilityResult r;
  for (long k = 0; k < 2 * steps; ++k) {
    state = half_step_1d(state, cfg);
    const double s = sup(state.u);
    if (!std::isfinite(s)) {
      r.finite = false;
      return r;
    }
    r.growth = std::max(r.growth, s / initial);
  }
  return r;
}

// Standing wave sin x cos t at full CFL; energy sampled every 100 steps.
inline StabilityResult conservative_stability(int m, long steps, int cells = 16) {
  const SchemeConfig cfg = periodic_config(m, 1.0, cells, 0.0, 2.0 * M_PI);
  GridState1D g0(cfg.x, Parity::primal, m);
  GridState1D g1(cfg.x, Parity::primal, m);
  for (int i = 0; i < g0.nodes(); ++i) {
    const auto s = oracle::sine_scaled(1.0, 0.0, g0.position(i), cfg.x.h(), m);
    std::copy(s.begin(), s.end(), g0.node(i).begin());
  }
  TwoLevelState state = bootstrap_first_half(g0, g1, cfg);
  const double e0 = seminorm_energy(conserved_pair(state, cfg), m + 1);
  StabilityResult r;
  for (long k = 1; k <= steps; ++k) {
    state = full_step_conservative(full_step_conservative(state, cfg), cfg);
    if (k % 100 == 0) {
      const double e = seminorm_energy(conserved_pair(state, cfg), m + 1);
      if (!std::isfinite(e)) {
        r.finite = false;
        return r;
      }
      r.drift = std::max(r.drift, std::abs(e - e0) / e0);
    }
  }
  return r;
}

}  // namespace checks
