#include "hermite/dissipative.hpp"

#include <algorithm>
#include <cmath>

#include "hermite/boundary.hpp"
#include "hermite/parallel.hpp"

namespace hermite {

namespace {

void check_scheme(const SchemeConfig& cfg, int dimension) {
  cfg.validate();
  if (cfg.dimension != dimension) throw ConfigError("scheme dimension does not match the state");
  if (cfg.m < 1) throw ConfigError("the dissipative scheme needs m >= 1");
}

// Copies an nx-by-ny block (x fastest) into a zero-padded n-by-n block.
void embed(std::span<const double> src, int nx, int ny, std::span<double> dst, int n) {
  std::fill(dst.begin(), dst.end(), 0.0);
  for (int l = 0; l < ny; ++l)
    for (int k = 0; k < nx; ++k) dst[static_cast<std::size_t>(l * n + k)] = src[static_cast<std::size_t>(l * nx + k)];
}

}  // namespace

void time_expand_1d(std::span<const double> p, std::span<const double> q, double center, double h, double t0,
                    const SchemeConfig& cfg, const Forcing& forcing, SpaceTimeTensor& out) {
  const int du = static_cast<int>(p.size()) - 1;
  const int dv = static_cast<int>(q.size()) - 1;
  const int stages = cfg.stage_cap.value_or(full_stage_count(du, dv));
  const double dt = cfg.dt();
  const double c2 = cfg.c * cfg.c;

  out.degree_u = du;
  out.degree_v = dv;
  out.stages = stages;
  out.center = center;
  out.dt = dt;
  out.h = h;
  out.speed = cfg.c;
  out.c.assign(static_cast<std::size_t>((stages + 1) * (du + 1)), 0.0);
  out.d.assign(static_cast<std::size_t>((stages + 1) * (dv + 1)), 0.0);
  std::copy(p.begin(), p.end(), out.c.begin());
  std::copy(q.begin(), q.end(), out.d.begin());

  const double ratio = dt / (h * h);
  double dt_pow_over_fact = 1.0;  // dt^s / s!
  for (int s = 1; s <= stages; ++s) {
    dt_pow_over_fact *= dt / s;
    for (int l = 0; l <= std::min(du, dv); ++l) out.cu(l, s) = dt / s * out.dv(l, s - 1);
    for (int l = 0; l <= dv; ++l) {
      double value = l + 2 <= du ? c2 * (l + 2) * (l + 1) / s * ratio * out.cu(l + 2, s - 1) : 0.0;
      if (forcing) {
        double h_pow_over_fact = 1.0;  // h^l / l!
        for (int j = 1; j <= l; ++j) h_pow_over_fact *= h / j;
        value += h_pow_over_fact * dt_pow_over_fact * forcing(l, s - 1, center, t0);
      }
      out.dv(l, s) = value;
    }
  }
}

SpaceTimeTensor time_expand_1d(const CellPolynomial& p, const CellPolynomial& q, const SchemeConfig& cfg, double t0,
                               const Forcing& forcing) {
  SpaceTimeTensor out;
  time_expand_1d(p.coeffs, q.coeffs, p.center, p.width, t0, cfg, forcing, out);
  return out;
}

void eval_center(const SpaceTimeTensor& st, double tau, std::span<double> u_out, std::span<double> v_out) {
  const double theta = st.dt != 0.0 ? tau / st.dt : 0.0;
  for (std::size_t l = 0; l < u_out.size(); ++l) {
    double acc = 0.0;
    for (int s = st.stages; s >= 0; --s) acc = acc * theta + st.cu(static_cast<int>(l), s);
    u_out[l] = acc;
  }
  for (std::size_t l = 0; l < v_out.size(); ++l) {
    double acc = 0.0;
    for (int s = st.stages; s >= 0; --s) acc = acc * theta + st.dv(static_cast<int>(l), s);
    v_out[l] = acc;
  }
}

std::pair<NodeData, NodeData> eval_center(const SpaceTimeTensor& st, double tau, int u_order, int v_order) {
  NodeData u(u_order);
  NodeData v(v_order);
  eval_center(st, tau, u.values, v.values);
  return {std::move(u), std::move(v)};
}

FieldPair make_field_pair(const Axis& axis, Parity parity, int m, double time) {
  return {GridState1D(axis, parity, m, time), GridState1D(axis, parity, m - 1, time)};
}

FieldPair half_step_1d(const FieldPair& state, const SchemeConfig& cfg, const Forcing& forcing) {
  check_scheme(cfg, 1);
  const int m = cfg.m;
  if (state.u.order != m || state.v.order != m - 1)
    throw std::invalid_argument("half_step_1d: expected u of order m and v of order m - 1");

  const Parity target = flip(state.parity());
  const Axis& axis = state.u.axis;
  const PaddedState1D pu(state.u, cfg.bx, FieldRole::displacement);
  const PaddedState1D pv(state.v, cfg.bx, FieldRole::velocity);
  FieldPair out = make_field_pair(axis, target, m, state.time() + cfg.half_dt());
  const double h = axis.h();
  const double t0 = state.time();

  parallel_for(out.u.nodes(), cfg.threads, [&](int begin, int end) {
    std::vector<double> p(static_cast<std::size_t>(2 * m + 2));
    std::vector<double> q(static_cast<std::size_t>(2 * m));
    SpaceTimeTensor st;
    for (int t = begin; t < end; ++t) {
      interpolate_1d(pu.left_of(t), pu.right_of(t), m, p);
      interpolate_1d(pv.left_of(t), pv.right_of(t), m - 1, q);
      time_expand_1d(p, q, axis.node(target, t), h, t0, cfg, forcing, st);
      eval_center(st, cfg.half_dt(), out.u.node(t), out.v.node(t));
    }
  });
  return out;
}

FieldPair2D make_field_pair_2d(const Axis& ax, const Axis& ay, Parity parity, int m, double time) {
  return {GridState2D(ax, ay, parity, m, m, time), GridState2D(ax, ay, parity, m - 1, m - 1, time)};
}

void time_expand_2d(const CellData2D& cell, int m, double dt, double hx, double hy, double speed, int stages,
                    SpaceTimeTensor2D& out) {
  const int n = 2 * m + 2;
  const std::size_t layer = static_cast<std::size_t>(n * n);
  out.n = n;
  out.stages = stages;
  out.c.assign(layer * static_cast<std::size_t>(stages + 1), 0.0);
  out.d.assign(layer * static_cast<std::size_t>(stages + 1), 0.0);
  std::copy(cell.u.begin(), cell.u.end(), out.c.begin());
  std::copy(cell.v.begin(), cell.v.end(), out.d.begin());

  const double c2 = speed * speed;
  const double rx = c2 * dt / (hx * hx);
  const double ry = c2 * dt / (hy * hy);
  const bool stabilized = !cell.u_xpart.empty();
  auto at = [n](std::span<const double> a, int k, int l) {
    return (k < n && l < n) ? a[static_cast<std::size_t>(l * n + k)] : 0.0;
  };

  for (int s = 1; s <= stages; ++s) {
    std::span<const double> c_prev(out.c.data() + (s - 1) * layer, layer);
    std::span<const double> d_prev(out.d.data() + (s - 1) * layer, layer);
    std::span<double> c_cur(out.c.data() + s * layer, layer);
    std::span<double> d_cur(out.d.data() + s * layer, layer);
    for (std::size_t i = 0; i < layer; ++i) c_cur[i] = dt / s * d_prev[i];
    const bool startup = stabilized && s == 1;
    const std::span<const double> src_x = startup ? cell.u_xpart : c_prev;
    const std::span<const double> src_y = startup ? cell.u_ypart : c_prev;
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k)
        d_cur[static_cast<std::size_t>(l * n + k)] =
            (rx * (k + 2) * (k + 1) * at(src_x, k + 2, l) + ry * (l + 2) * (l + 1) * at(src_y, k, l + 2)) / s;
  }
}

FieldPair2D half_step_2d(const FieldPair2D& state, const SchemeConfig& cfg) {
  check_scheme(cfg, 2);
  const int m = cfg.m;
  if (state.u.order_x != m || state.u.order_y != m || state.v.order_x != m - 1 || state.v.order_y != m - 1)
    throw std::invalid_argument("half_step_2d: expected u of order (m, m) and v of order (m-1, m-1)");

  const Parity target = flip(state.parity());
  const PaddedState2D pu(state.u, cfg.bx, cfg.by, FieldRole::displacement);
  const PaddedState2D pv(state.v, cfg.bx, cfg.by, FieldRole::velocity);
  FieldPair2D out = make_field_pair_2d(state.u.ax, state.u.ay, target, m, state.time() + cfg.half_dt());
  const int nx = out.u.nodes_x();
  const int ny = out.u.nodes_y();
  const int n = 2 * m + 2;
  const int stages = cfg.stage_cap.value_or(full_stage_count_2d(m));
  const double dt = cfg.dt();
  const double hx = state.u.ax.h();
  const double hy = state.u.ay.h();

  parallel_for(nx * ny, cfg.threads, [&](int begin, int end) {
    const std::size_t layer = static_cast<std::size_t>(n * n);
    std::vector<double> u_mm(layer), u_x(layer), u_y(layer), v_pad(layer);
    std::vector<double> scratch(layer);
    SpaceTimeTensor2D st;
    for (int idx = begin; idx < end; ++idx) {
      const int ti = idx % nx;
      const int tj = idx / nx;
      const Corners uc = pu.corners_of(ti, tj);
      const Corners vc = pv.corners_of(ti, tj);
      interpolate_2d(uc, m + 1, m, m, u_mm);
      std::fill(u_x.begin(), u_x.end(), 0.0);
      interpolate_2d(uc, m + 1, m, m - 1, std::span<double>(u_x.data(), static_cast<std::size_t>(n * (2 * m))));
      interpolate_2d(uc, m + 1, m - 1, m, std::span<double>(scratch.data(), static_cast<std::size_t>(2 * m * n)));
      embed(scratch, 2 * m, n, u_y, n);
      interpolate_2d(vc, m, m - 1, m - 1, std::span<double>(scratch.data(), static_cast<std::size_t>(4 * m * m)));
      embed(scratch, 2 * m, 2 * m, v_pad, n);

      time_expand_2d({u_mm, v_pad, u_x, u_y}, m, dt, hx, hy, cfg.c, stages, st);

      auto u_node = out.u.node(ti, tj);
      auto v_node = out.v.node(ti, tj);
      for (int l = 0; l <= m; ++l)
        for (int k = 0; k <= m; ++k) {
          double acc = 0.0;
          for (int s = stages; s >= 0; --s) acc = 0.5 * acc + st.cu(k, l, s);
          u_node[static_cast<std::size_t>(l * (m + 1) + k)] = acc;
        }
      for (int l = 0; l < m; ++l)
        for (int k = 0; k < m; ++k) {
          double acc = 0.0;
          for (int s = stages; s >= 0; --s) acc = 0.5 * acc + st.dv(k, l, s);
          v_node[static_cast<std::size_t>(l * m + k)] = acc;
        }
    }
  });
  return out;
}

}  // namespace hermite
