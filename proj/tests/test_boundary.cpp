#include <doctest.h>

#include <cmath>
#include <random>

#include "hermite/boundary.hpp"
#include "oracles.hpp"

using namespace hermite;

TEST_CASE("Dirichlet ghost of a velocity field is the odd extension") {
  const NodeData g = ghost_data(NodeData(1, {0.4, -1.5}), BoundarySpec::dirichlet0(), Side::lower, FieldRole::velocity);
  CHECK(g.values == std::vector<double>{-0.4, -1.5});
  const NodeData u = ghost_data(NodeData(1, {0.4, -1.5}), BoundarySpec::dirichlet0(), Side::upper);
  CHECK(u.values == std::vector<double>{-0.4, -1.5});
}

TEST_CASE("Neumann ghost is the even extension") {
  const NodeData g = ghost_data(NodeData(1, {0.4, -1.5}), BoundarySpec::neumann0(), Side::upper);
  CHECK(g.values == std::vector<double>{0.4, 1.5});
}

TEST_CASE("periodic ghost is a plain copy") {
  const NodeData g = ghost_data(NodeData(2, {1, 2, 3}), BoundarySpec::periodic(), Side::lower);
  CHECK(g.values == std::vector<double>{1, 2, 3});
}

TEST_CASE("reflection twice is the identity") {
  std::mt19937_64 rng(1);
  for (auto spec : {BoundarySpec::dirichlet0(), BoundarySpec::neumann0()}) {
    for (int m = 0; m <= 6; ++m) {
      const NodeData d(m, oracle::random_vector(rng, static_cast<std::size_t>(m + 1)));
      for (Side side : {Side::lower, Side::upper}) {
        const NodeData twice = ghost_data(ghost_data(d, spec, side), spec, side);
        CHECK(twice.values == d.values);
      }
    }
  }
  // A wall value enters once on the way out and cancels on the way back.
  BoundarySpec lifted = BoundarySpec::dirichlet0();
  lifted.lower.value = 0.75;
  const NodeData d(2, {1.0, 0.5, -0.25});
  CHECK(ghost_data(ghost_data(d, lifted, Side::lower), lifted, Side::lower).values == d.values);
}

TEST_CASE("boundary-centered interpolant parity") {
  std::mt19937_64 rng(4);
  for (int m = 0; m <= 6; ++m) {
    const NodeData interior(m, oracle::random_vector(rng, static_cast<std::size_t>(m + 1)));
    const double scale = oracle::max_abs(interior.values);
    std::vector<double> p(static_cast<std::size_t>(2 * m + 2));

    // Lower wall: the ghost sits to the left of the wall, the interior node to the right.
    const NodeData odd = ghost_data(interior, BoundarySpec::dirichlet0(), Side::lower);
    interpolate_1d(odd.values, interior.values, m, p);
    for (int l = 0; l <= 2 * m + 1; l += 2) CHECK(std::abs(p[static_cast<std::size_t>(l)]) <= 1e-13 * scale);

    // Upper wall: interior to the left, ghost to the right.
    const NodeData odd_up = ghost_data(interior, BoundarySpec::dirichlet0(), Side::upper);
    interpolate_1d(interior.values, odd_up.values, m, p);
    for (int l = 0; l <= 2 * m + 1; l += 2) CHECK(std::abs(p[static_cast<std::size_t>(l)]) <= 1e-13 * scale);

    const NodeData even = ghost_data(interior, BoundarySpec::neumann0(), Side::lower);
    interpolate_1d(even.values, interior.values, m, p);
    for (int l = 1; l <= 2 * m + 1; l += 2) CHECK(std::abs(p[static_cast<std::size_t>(l)]) <= 1e-13 * scale);
  }
}

TEST_CASE("constant Dirichlet value sets the wall value") {
  BoundarySpec spec = BoundarySpec::dirichlet0();
  spec.upper.value = 2.0;
  const NodeData interior(2, {1.3, -0.4, 0.2});
  const NodeData ghost = ghost_data(interior, spec, Side::upper);
  std::vector<double> p(6);
  interpolate_1d(interior.values, ghost.values, 2, p);
  CHECK(p[0] == doctest::Approx(2.0));
  CHECK(std::abs(p[2]) <= 1e-14);

  // The velocity of a constant wall value is zero.
  const NodeData v = ghost_data(NodeData(1, {0.5, 0.1}), spec, Side::upper, FieldRole::velocity);
  CHECK(v.values == std::vector<double>{-0.5, 0.1});
}

TEST_CASE("one-sided periodic boundary is rejected") {
  BoundarySpec spec = BoundarySpec::dirichlet0();
  spec.lower.kind = BoundaryKind::periodic;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK_NOTHROW(BoundarySpec::periodic().validate());
}

TEST_CASE("2D ghost of zero data is zero") {
  const NodeData2D zero(2, 1);
  const NodeData2D g = ghost_data_2d(zero, BoundarySpec::dirichlet0(), 1, Side::lower);
  CHECK(oracle::max_abs(g.values) == 0.0);
}

TEST_CASE("2D reflection of separable data acts on the normal index only") {
  const std::vector<double> f = {0.3, -0.7, 0.2};  // x data
  const std::vector<double> g = {1.1, 0.4};        // y data
  NodeData2D d(2, 1);
  for (int l = 0; l <= 1; ++l)
    for (int k = 0; k <= 2; ++k) d.at(k, l) = f[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(l)];

  for (auto spec : {BoundarySpec::dirichlet0(), BoundarySpec::neumann0()}) {
    const NodeData fx = ghost_data(NodeData(2, f), spec, Side::lower, FieldRole::velocity);
    const NodeData2D gx = ghost_data_2d(d, spec, 0, Side::lower, FieldRole::velocity);
    for (int l = 0; l <= 1; ++l)
      for (int k = 0; k <= 2; ++k)
        CHECK(gx.at(k, l) == doctest::Approx(fx.values[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(l)]));

    const NodeData gy1 = ghost_data(NodeData(1, g), spec, Side::upper, FieldRole::velocity);
    const NodeData2D gy = ghost_data_2d(d, spec, 1, Side::upper, FieldRole::velocity);
    for (int l = 0; l <= 1; ++l)
      for (int k = 0; k <= 2; ++k)
        CHECK(gy.at(k, l) == doctest::Approx(f[static_cast<std::size_t>(k)] * gy1.values[static_cast<std::size_t>(l)]));
  }
}

TEST_CASE("periodic 2D ghosts are wrap-around copies") {
  const int n = 6;
  const Axis axis{0.0, 1.0, n, true};
  for (Parity parity : {Parity::primal, Parity::dual}) {
    GridState2D state(axis, axis, parity, 1, 1);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const auto [x, y] = state.position(i, j);
        const double phase = 2.0 * M_PI * (x + y);
        auto node = state.node(i, j);
        for (std::size_t q = 0; q < node.size(); ++q) node[q] = std::sin(phase + static_cast<double>(q));
      }
    const PaddedState2D padded(state, BoundarySpec::periodic(), BoundarySpec::periodic(), FieldRole::displacement);
    auto wrap = [n](int i) { return (i + n) % n; };
    for (int j = -1; j <= n; ++j)
      for (int i = -1; i <= n; ++i) {
        const auto got = padded.node(i, j);
        const auto expected = state.node(wrap(i), wrap(j));
        for (std::size_t q = 0; q < got.size(); ++q) CHECK(got[q] == expected[q]);
      }
  }
}

TEST_CASE("bounded 1D ghosts mirror the right node") {
  const Axis axis{0.0, 1.0, 4, false};
  GridState1D dual(axis, Parity::dual, 1);
  GridState1D primal(axis, Parity::primal, 1);
  for (int i = 0; i < dual.nodes(); ++i) dual.node(i)[0] = i + 1.0;
  for (int i = 0; i < primal.nodes(); ++i) primal.node(i)[0] = i + 1.0;

  const PaddedState1D pd(dual, BoundarySpec::dirichlet0(), FieldRole::displacement);
  CHECK(pd.node(-1)[0] == -1.0);  // mirror of dual node 0
  CHECK(pd.node(4)[0] == -4.0);   // mirror of dual node 3
  const PaddedState1D pp(primal, BoundarySpec::neumann0(), FieldRole::displacement);
  CHECK(pp.node(-1)[0] == 2.0);   // mirror of primal node 1
  CHECK(pp.node(5)[0] == 4.0);    // mirror of primal node 3
}
