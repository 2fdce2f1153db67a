#include "hermite/conservative.hpp"

#include <cmath>

#include "hermite/boundary.hpp"
#include "hermite/parallel.hpp"

namespace hermite {

namespace {

// Neumaier compensated sum.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// (k + 2i)! / k!
double rising_ratio(int k, int i) {
  double r = 1.0;
  for (int t = k + 1; t <= k + 2 * i; ++t) r *= t;
  return r;
}

void check_scheme(const SchemeConfig& cfg, int dimension) {
  cfg.validate();
  if (cfg.dimension != dimension) throw ConfigError("scheme dimension does not match the state");
}

}  // namespace

PascalTable::PascalTable(int m, double ratio_x, double ratio_y) : m_(m) {
  if (m < 0) throw std::invalid_argument("PascalTable: negative order");
  const int n = 2 * m + 1;
  base_.assign(static_cast<std::size_t>(n * n), 0.0);
  scaled_.assign(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      base_[index(i, j)] = (i == 0 || j == 0) ? 1.0 : base_[index(i - 1, j)] + base_[index(i, j - 1)];
  const double rx2 = ratio_x * ratio_x;
  const double ry2 = ratio_y * ratio_y;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j <= 2 * m && j < n; ++j) {
      // Interleave the ratio powers with the factorial divisions.
      double v = base_[index(i, j)];
      int t = 1;
      for (int a = 0; a < i; ++a) {
        v *= rx2 / (static_cast<double>(t) * (t + 1));
        t += 2;
      }
      for (int b = 0; b < j; ++b) {
        v *= ry2 / (static_cast<double>(t) * (t + 1));
        t += 2;
      }
      scaled_[index(i, j)] = v;
    }
}

PascalTable pascal_table_for(const SchemeConfig& cfg) {
  const double dt = cfg.dt();
  const double ry = cfg.dimension == 2 ? cfg.c * dt / (2.0 * cfg.y.h()) : 0.0;
  return PascalTable(cfg.m, cfg.c * dt / (2.0 * cfg.x.h()), ry);
}

void conservative_update_1d(std::span<const double> interp, std::span<const double> prev, double half_ratio,
                            std::span<double> out) {
  const int m = static_cast<int>(prev.size()) - 1;
  const double r2 = half_ratio * half_ratio;
  for (int k = 0; k <= m; ++k) {
    CompensatedSum sum;
    double power = 1.0;       // half_ratio^(2l)
    double factorial = 1.0;   // (2l + k)! / ((2l)! k!)
    for (int l = 0; l <= m - k / 2; ++l) {
      if (l > 0) {
        power *= r2;
        factorial *= static_cast<double>(2 * l + k - 1) * (2 * l + k) / ((2.0 * l - 1.0) * (2.0 * l));
      }
      sum.add(power * factorial * interp[static_cast<std::size_t>(2 * l + k)]);
    }
    out[static_cast<std::size_t>(k)] = 2.0 * sum.value() - prev[static_cast<std::size_t>(k)];
  }
}

NodeData conservative_update_1d(const CellPolynomial& interp, const NodeData& prev, const SchemeConfig& cfg) {
  if (interp.degree() != 2 * prev.order + 1)
    throw std::invalid_argument("conservative_update_1d: interpolant degree must be 2m + 1");
  NodeData out(prev.order);
  conservative_update_1d(interp.coeffs, prev.values, cfg.c * cfg.dt() / (2.0 * interp.width), out.values);
  return out;
}

void conservative_update_2d(std::span<const double> interp, std::span<const double> prev, int m,
                            const PascalTable& table, std::span<double> out) {
  const int n = 2 * m + 2;
  const int top = 2 * m + 1;
  for (int l = 0; l <= m; ++l)
    for (int k = 0; k <= m; ++k) {
      CompensatedSum sum;
      for (int r = 0; r <= 2 * m; ++r)
        for (int ix = 0; ix <= r; ++ix) {
          const int iy = r - ix;
          if (k + 2 * ix > top || l + 2 * iy > top) continue;
          sum.add(rising_ratio(k, ix) * rising_ratio(l, iy) * table(ix, iy) *
                  interp[static_cast<std::size_t>((l + 2 * iy) * n + k + 2 * ix)]);
        }
      const std::size_t idx = static_cast<std::size_t>(l * (m + 1) + k);
      out[idx] = 2.0 * sum.value() - prev[idx];
    }
}

NodeData2D conservative_update_2d(const CellPolynomial2D& interp, const NodeData2D& prev, const PascalTable& table) {
  const int m = prev.order_x;
  if (prev.order_y != m || interp.nx != 2 * m + 2 || interp.ny != 2 * m + 2)
    throw std::invalid_argument("conservative_update_2d: expected (2m+2)^2 interpolant and order (m, m) data");
  NodeData2D out(m, m);
  conservative_update_2d(interp.coeffs, prev.values, m, table, out.values);
  return out;
}

TwoLevelState bootstrap_first_half(const GridState1D& g0, const GridState1D& g1, const SchemeConfig& cfg) {
  check_scheme(cfg, 1);
  const int m = cfg.m;
  if (g0.order != m || g1.order != m || g0.parity != g1.parity)
    throw std::invalid_argument("bootstrap_first_half: expected order-m data on one grid");
  const Parity target = flip(g0.parity);
  const PaddedState1D p0(g0, cfg.bx, FieldRole::displacement);
  const PaddedState1D p1(g1, cfg.bx, FieldRole::velocity);
  GridState1D half(g0.axis, target, m, g0.time + cfg.half_dt());
  const double h = g0.axis.h();
  // The polynomial data here has equal degrees, so the default stage cap is
  // the full truncation for that pair rather than for (2m+1, 2m-1).
  SchemeConfig local = cfg;
  local.stage_cap.reset();

  parallel_for(half.nodes(), cfg.threads, [&](int begin, int end) {
    std::vector<double> p(static_cast<std::size_t>(2 * m + 2));
    std::vector<double> q(static_cast<std::size_t>(2 * m + 2));
    SpaceTimeTensor st;
    for (int t = begin; t < end; ++t) {
      interpolate_1d(p0.left_of(t), p0.right_of(t), m, p);
      interpolate_1d(p1.left_of(t), p1.right_of(t), m, q);
      time_expand_1d(p, q, g0.axis.node(target, t), h, g0.time, local, {}, st);
      eval_center(st, cfg.half_dt(), half.node(t), {});
    }
  });
  return {std::move(half), g0, 1};
}

TwoLevelState2D bootstrap_first_half_2d(const GridState2D& g0, const GridState2D& g1, const SchemeConfig& cfg) {
  check_scheme(cfg, 2);
  const int m = cfg.m;
  if (g0.order_x != m || g0.order_y != m || g1.order_x != m || g1.order_y != m || g0.parity != g1.parity)
    throw std::invalid_argument("bootstrap_first_half_2d: expected order-(m, m) data on one grid");
  const Parity target = flip(g0.parity);
  const PaddedState2D p0(g0, cfg.bx, cfg.by, FieldRole::displacement);
  const PaddedState2D p1(g1, cfg.bx, cfg.by, FieldRole::velocity);
  GridState2D half(g0.ax, g0.ay, target, m, m, g0.time + cfg.half_dt());
  const int nx = half.nodes_x();
  const int n = 2 * m + 2;
  const int stages = full_stage_count_2d(m);
  const double dt = cfg.dt();

  parallel_for(nx * half.nodes_y(), cfg.threads, [&](int begin, int end) {
    std::vector<double> u(static_cast<std::size_t>(n * n));
    std::vector<double> v(static_cast<std::size_t>(n * n));
    SpaceTimeTensor2D st;
    for (int idx = begin; idx < end; ++idx) {
      const int ti = idx % nx;
      const int tj = idx / nx;
      interpolate_2d(p0.corners_of(ti, tj), m + 1, m, m, u);
      interpolate_2d(p1.corners_of(ti, tj), m + 1, m, m, v);
      time_expand_2d({u, v, {}, {}}, m, dt, g0.ax.h(), g0.ay.h(), cfg.c, stages, st);
      auto node = half.node(ti, tj);
      for (int l = 0; l <= m; ++l)
        for (int k = 0; k <= m; ++k) {
          double acc = 0.0;
          for (int s = stages; s >= 0; --s) acc = 0.5 * acc + st.cu(k, l, s);
          node[static_cast<std::size_t>(l * (m + 1) + k)] = acc;
        }
    }
  });
  return {std::move(half), g0, 1};
}

TwoLevelState full_step_conservative(const TwoLevelState& state, const SchemeConfig& cfg) {
  check_scheme(cfg, 1);
  const int m = cfg.m;
  const GridState1D& cur = state.current;
  if (cur.order != m || state.previous.order != m || state.previous.parity == cur.parity)
    throw std::invalid_argument("full_step_conservative: levels must be order m on opposite grids");
  const Parity target = flip(cur.parity);
  const PaddedState1D padded(cur, cfg.bx, FieldRole::displacement);
  GridState1D next(cur.axis, target, m, cur.time + state.direction * cfg.half_dt());
  const double half_ratio = cfg.c * cfg.dt() / (2.0 * cur.axis.h());

  parallel_for(next.nodes(), cfg.threads, [&](int begin, int end) {
    std::vector<double> p(static_cast<std::size_t>(2 * m + 2));
    for (int t = begin; t < end; ++t) {
      interpolate_1d(padded.left_of(t), padded.right_of(t), m, p);
      conservative_update_1d(p, state.previous.node(t), half_ratio, next.node(t));
    }
  });
  return {std::move(next), cur, state.direction};
}

TwoLevelState2D full_step_conservative_2d(const TwoLevelState2D& state, const SchemeConfig& cfg) {
  check_scheme(cfg, 2);
  const int m = cfg.m;
  const GridState2D& cur = state.current;
  if (cur.order_x != m || cur.order_y != m || state.previous.parity == cur.parity)
    throw std::invalid_argument("full_step_conservative_2d: levels must be order (m, m) on opposite grids");
  const Parity target = flip(cur.parity);
  const PaddedState2D padded(cur, cfg.bx, cfg.by, FieldRole::displacement);
  GridState2D next(cur.ax, cur.ay, target, m, m, cur.time + state.direction * cfg.half_dt());
  const PascalTable table = pascal_table_for(cfg);
  const int nx = next.nodes_x();
  const int n = 2 * m + 2;

  parallel_for(nx * next.nodes_y(), cfg.threads, [&](int begin, int end) {
    std::vector<double> p(static_cast<std::size_t>(n * n));
    for (int idx = begin; idx < end; ++idx) {
      const int ti = idx % nx;
      const int tj = idx / nx;
      interpolate_2d(padded.corners_of(ti, tj), m + 1, m, m, p);
      conservative_update_2d(p, state.previous.node(ti, tj), m, table, next.node(ti, tj));
    }
  });
  return {std::move(next), cur, state.direction};
}

TwoLevelState reversed(TwoLevelState state) {
  std::swap(state.current, state.previous);
  state.direction = -state.direction;
  return state;
}

}  // namespace hermite
