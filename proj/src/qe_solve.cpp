#include "smms/qe_solve.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace smms {

namespace {

struct State {
  double psi, dpsi, f, df;
};

struct Rhs {
  int n;
  double m, mu;
  // returns (psi'', f'')
  std::array<double, 2> second(const State& s) const {
    double ddpsi = -mu * s.psi + (n - 2) * (1.0 - s.dpsi * s.dpsi) / s.psi +
                   s.dpsi * s.df;
    double ddf = mu + (n - 1) * ddpsi / s.psi - s.df * s.df / (m + n - 2);
    return {ddpsi, ddf};
  }
  std::array<double, 4> operator()(const State& s) const {
    auto dd = second(s);
    return {s.dpsi, dd[0], s.df, dd[1]};
  }
};

State series_state(int n, double m, double mu, double f2, double r) {
  double c3 = (2.0 * f2 - mu) / (6.0 * (n - 1));
  State s;
  s.psi = r + c3 * r * r * r;
  s.dpsi = 1.0 + 3.0 * c3 * r * r;
  s.f = f2 * r * r;
  s.df = 2.0 * f2 * r;
  (void)m;
  return s;
}

State add_scaled(const State& s, const std::array<double, 4>& k, double h) {
  return {s.psi + h * k[0], s.dpsi + h * k[1], s.f + h * k[2], s.df + h * k[3]};
}

// Dormand-Prince 5(4) step; returns error estimate in err.
State dp54_step(const Rhs& rhs, const State& s, double h, double& err) {
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  auto k1 = rhs(s);
  auto k2 = rhs(add_scaled(s, k1, a21 * h));
  auto k3 = rhs(add_scaled(add_scaled(s, k1, a31 * h), k2, a32 * h));
  auto k4 = rhs(add_scaled(add_scaled(add_scaled(s, k1, a41 * h), k2, a42 * h), k3, a43 * h));
  auto k5 = rhs(add_scaled(add_scaled(add_scaled(add_scaled(s, k1, a51 * h), k2, a52 * h), k3, a53 * h), k4, a54 * h));
  auto k6 = rhs(add_scaled(add_scaled(add_scaled(add_scaled(add_scaled(s, k1, a61 * h), k2, a62 * h), k3, a63 * h), k4, a64 * h), k5, a65 * h));

  State out = s;
  std::array<double, 4> sum{};
  for (int i = 0; i < 4; ++i)
    sum[i] = b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i];
  out = add_scaled(s, sum, h);
  auto k7 = rhs(out);
  err = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                    e6 * k6[i] + e7 * k7[i]);
    err = std::max(err, std::abs(e));
  }
  return out;
}

struct Trace {
  std::vector<double> r, psi, dpsi, ddpsi, f, df, ddf;
  void push(const Rhs& rhs, double rr, const State& s) {
    auto dd = rhs.second(s);
    r.push_back(rr);
    psi.push_back(s.psi);
    dpsi.push_back(s.dpsi);
    ddpsi.push_back(dd[0]);
    f.push_back(s.f);
    df.push_back(s.df);
    ddf.push_back(dd[1]);
  }
};

struct IntegrationResult {
  Trace trace;
  bool hit_zero = false;   // psi crossed zero (candidate closing pole)
  double r_zero = 0.0;
  double dpsi_zero = 0.0;
  double df_zero = 0.0;
};

// Integrates from the series start, sampling at the requested radii
// (sorted, > eps). Stops early if psi crosses zero.
IntegrationResult integrate(int n, double m, double mu, double f2,
                            const std::vector<double>& samples, double r_stop,
                            double tol) {
  Rhs rhs{n, m, mu};
  IntegrationResult out;
  double eps = std::min(1e-4, samples.empty() ? 1e-4 : 0.2 * samples.front());
  double r = eps;
  State s = series_state(n, m, mu, f2, eps);
  std::size_t next = 0;
  double h = 1e-3;
  const double hmin = 1e-13;
  int guard = 0;
  while (r < r_stop - 1e-14) {
    if (++guard > 2000000) throw std::runtime_error("solve_qe_ode: step limit");
    bool sample_here = false;
    double target = r_stop;
    if (next < samples.size() && samples[next] < target) {
      target = samples[next];
      sample_here = true;
    }
    double hh = std::min(h, target - r);
    double err;
    State sn = dp54_step(rhs, s, hh, err);
    double scale = tol * (1.0 + std::abs(s.psi) + std::abs(s.df));
    if (err > scale && hh > hmin) {
      h = std::max(hmin, 0.9 * hh * std::pow(scale / err, 0.2));
      continue;
    }
    // accepted
    if (sn.psi <= 0.0) {
      // bisect the crossing radius on the last step
      double lo = 0.0, hi = hh;
      State slo = s;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + r); ++it) {
        double mid = 0.5 * (lo + hi);
        double e2;
        State sm = dp54_step(rhs, s, mid, e2);
        if (sm.psi <= 0.0)
          hi = mid;
        else {
          lo = mid;
          slo = sm;
        }
      }
      out.hit_zero = true;
      out.r_zero = r + lo;
      out.dpsi_zero = slo.dpsi;
      out.df_zero = slo.df;
      return out;
    }
    if (std::abs(sn.df) > 1e8 || sn.psi > 1e8)
      throw std::runtime_error("solve_qe_ode: blow-up before reaching the target radius");
    r += hh;
    s = sn;
    if (sample_here && std::abs(r - samples[next]) < 1e-12 * (1.0 + r)) {
      out.trace.push(rhs, r, s);
      ++next;
    }
    if (err > 0.0)
      h = std::min(0.25, 0.9 * hh * std::pow(scale / std::max(err, 1e-300), 0.2));
    else
      h = std::min(0.25, 2.0 * hh);
  }
  return out;
}

} // namespace

double qe_lambda_from_origin(int n, double m, double mu, double f2) {
  return mu + 2.0 * n * f2 / (m + n - 2.0);
}

QeSolution solve_qe_ode(int n, const DimParam& m, double mu, const QeSolveOptions& opts) {
  m.require_finite("solve_qe_ode");
  if (!(m.value() > 1.0)) throw std::domain_error("solve_qe_ode: requires m > 1");
  if (n < 3) throw std::invalid_argument("solve_qe_ode: n >= 3");
  const double mv = m.value();

  double f2 = opts.f2;
  double r_end = opts.r_max;
  bool closed = false;

  if (opts.want_closed) {
    if (!(mu > 0.0))
      throw std::domain_error("solve_qe_ode: closed solution needs mu > 0 "
                              "(no compact solution otherwise)");
    // shoot on f''(0)/2 for psi'(r_zero) = -1 at the first warp zero
    auto closing_gap = [&](double p) -> double {
      auto res = integrate(n, mv, mu, p, {}, 40.0, opts.abs_tol);
      if (!res.hit_zero) return 1e9; // never closes: treat as far from target
      return res.dpsi_zero + 1.0;
    };
    double lo = opts.shoot_lo, hi = opts.shoot_hi;
    double glo = closing_gap(lo), ghi = closing_gap(hi);
    // walk the bracket inward until the gap changes sign
    int tries = 0;
    while (glo * ghi > 0.0 && tries++ < 60) {
      if (std::abs(glo) < std::abs(ghi)) {
        hi = 0.5 * (lo + hi);
        ghi = closing_gap(hi);
      } else {
        lo = 0.5 * (lo + hi);
        glo = closing_gap(lo);
      }
      if (hi - lo < 1e-12) break;
    }
    if (glo * ghi > 0.0 && std::min(std::abs(glo), std::abs(ghi)) > 1e-6)
      throw std::runtime_error("solve_qe_ode: shooting failed to bracket a closing solution");
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      double mid = 0.5 * (lo + hi);
      double g = closing_gap(mid);
      if (glo * g <= 0.0) {
        hi = mid;
        ghi = g;
      } else {
        lo = mid;
        glo = g;
      }
    }
    f2 = 0.5 * (lo + hi);
    auto res = integrate(n, mv, mu, f2, {}, 40.0, opts.abs_tol);
    if (!res.hit_zero || std::abs(res.dpsi_zero + 1.0) > 1e-6)
      throw std::runtime_error("solve_qe_ode: no smooth closing solution found");
    r_end = res.r_zero;
    closed = true;
  } else {
    auto probe = integrate(n, mv, mu, f2, {}, opts.r_max, opts.abs_tol);
    if (probe.hit_zero) {
      r_end = probe.r_zero;
      closed = std::abs(probe.dpsi_zero + 1.0) < 1e-6;
    }
  }

  OpenGrid g(0.0, r_end, opts.grid_n);
  auto res = integrate(n, mv, mu, f2, g.nodes(), r_end, opts.abs_tol);
  if (res.trace.r.size() != g.n)
    throw std::runtime_error("solve_qe_ode: sampling failed (blow-up inside domain?)");

  auto psi = RadialProfile::grid(g, res.trace.psi, res.trace.dpsi, res.trace.ddpsi);
  auto f = RadialProfile::grid(g, res.trace.f, res.trace.df, res.trace.ddf);
  const double c = mv + n - 2.0;
  std::vector<double> uv(g.n), ud1(g.n), ud2(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    uv[i] = std::exp(res.trace.f[i] / c);
    ud1[i] = uv[i] * res.trace.df[i] / c;
    ud2[i] = uv[i] * (res.trace.ddf[i] / c + res.trace.df[i] * res.trace.df[i] / (c * c));
  }
  auto u = RadialProfile::grid(g, std::move(uv), std::move(ud1), std::move(ud2));

  WarpedSmms model(n, m, 0.0, r_end, psi, RadialProfile::constant(1.0), false,
                   BoundaryKind::Pole, closed ? BoundaryKind::Pole : BoundaryKind::Open,
                   mu, "qe-solved");
  QeSolution sol{std::move(model), std::move(f), std::move(u),
                 qe_lambda_from_origin(n, mv, mu, f2), f2, closed, r_end};
  return sol;
}

} // namespace smms
