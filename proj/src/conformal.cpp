#include "smms/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace smms {

RadialProfile ConformalChange::transport(const RadialProfile& w) const {
  OpenGrid g = model.grid(r_of_rhat_nodes.size());
  std::vector<double> vals(g.n);
  for (std::size_t i = 0; i < g.n; ++i) vals[i] = w.value(r_of_rhat_nodes[i]);
  return RadialProfile::grid(g, std::move(vals));
}

ConformalChange conformal_change(const WarpedSmms& s, const RadialProfile& u,
                                 std::size_t grid_n) {
  s.m().require_finite("conformal_change");
  OpenGrid g = s.grid(grid_n);
  for (double r : g.nodes())
    if (!(u.value(r) > 0.0))
      throw std::invalid_argument("conformal_change: u must be strictly positive");

  // arclength of the new metric: drhat = dr / u, measured from r0
  auto integrand = [&](double r) { return 1.0 / u.value(r); };
  std::vector<double> rhat = integrate_cumulative(integrand, g);
  // extend by the end half-cells, capped in case u degenerates at an
  // endpoint (infinite arclength: the image is truncated at the last node)
  double d_first = rhat[1] - rhat[0];
  double d_last = rhat[g.n - 1] - rhat[g.n - 2];
  double head = std::min(integrate(integrand, g.a, g.node(0), 8), 10.0 * d_first);
  double tail = std::min(integrate(integrand, g.node(g.n - 1), g.b, 8), 10.0 * d_last);
  double shift = rhat.front() - head;
  for (double& x : rhat) x -= shift;
  double rhat1 = rhat.back() + tail;

  // invert the monotone map on the new uniform grid
  OpenGrid gh(0.0, rhat1, grid_n);
  std::vector<double> r_of(gh.n);
  std::size_t j = 0;
  for (std::size_t i = 0; i < gh.n; ++i) {
    double target = gh.node(i);
    while (j + 1 < rhat.size() && rhat[j + 1] < target) ++j;
    // local inverse interpolation through 4 points around j
    std::size_t lo = (j >= 1) ? j - 1 : 0;
    if (lo + 4 > rhat.size()) lo = rhat.size() - 4;
    // Newton on the cubic through (rhat, r) is overkill: use Lagrange in
    // the rhat variable (monotone, smooth)
    double x = 0.0;
    for (std::size_t a = 0; a < 4; ++a) {
      double term = g.node(lo + a);
      for (std::size_t b = 0; b < 4; ++b) {
        if (a == b) continue;
        term *= (target - rhat[lo + b]) / (rhat[lo + a] - rhat[lo + b]);
      }
      x += term;
    }
    r_of[i] = x;
  }

  std::vector<double> psiv(gh.n), denv(gh.n);
  for (std::size_t i = 0; i < gh.n; ++i) {
    double r = r_of[i];
    psiv[i] = s.psi().value(r) / u.value(r);
    denv[i] = s.v().value(r) / u.value(r);
  }
  auto psin = RadialProfile::grid(gh, std::move(psiv));
  auto denn = RadialProfile::grid(gh, std::move(denv));

  BoundaryKind right = s.right_boundary();
  WarpedSmms out(s.n(), s.m(), 0.0, rhat1, psin, denn, false, s.left_boundary(),
                 right, s.mu(), s.name() + "-conf");

  ConformalChange cc{std::move(out),
                     RadialProfile::grid(g, std::move(rhat)), g, std::move(r_of)};
  return cc;
}

WarpedSmms conformal_change_inf(const WarpedSmms& s, const RadialProfile& f) {
  if (!s.m().is_infinite())
    throw std::domain_error("conformal_change_inf: requires m = inf");
  const RadialProfile& ph = s.phi();
  auto sum = RadialProfile::closed_form(
      [ph, f](double r) { return ph.value(r) + f.value(r); },
      [ph, f](double r) { return ph.d1(r) + f.d1(r); },
      [ph, f](double r) { return ph.d2(r) + f.d2(r); });
  return WarpedSmms(s.n(), s.m(), s.r0(), s.r1(), s.psi(), sum, true,
                    s.left_boundary(), s.right_boundary(), s.mu(),
                    s.name() + "-measure");
}

TransformedCurvature transformed_curvature(const WarpedSmms& s,
                                           const RadialProfile& u, double r) {
  s.m().require_finite("transformed_curvature");
  const double m = s.m().value();
  const int n = s.n();
  auto c = s.curvature_at(r);
  const double uu = u.value(r), u1 = u.d1(r), u2 = u.d2(r);
  const double ps1 = s.psi().d1(r), ps = s.psi().value(r);
  const double lap_phi_u = s.laplacian_phi(u, r);
  const double hess_rad = u2, hess_sph = (ps1 / ps) * u1;
  const double scal = lap_phi_u / uu - (m + n - 1) * u1 * u1 / (uu * uu);

  TransformedCurvature t;
  t.ricphi_rad_form = c.Ricphi_rad + (m + n - 2) * hess_rad / uu + scal;
  t.ricphi_sph_form = c.Ricphi_sph + (m + n - 2) * hess_sph / uu + scal;
  t.ricphi_rad = uu * uu * t.ricphi_rad_form;
  t.ricphi_sph = uu * uu * t.ricphi_sph_form;
  t.rphi = uu * uu *
           (c.Rphi + 2.0 * (m + n - 1) * lap_phi_u / uu -
            (m + n) * (m + n - 1) * u1 * u1 / (uu * uu));
  return t;
}

double weighted_conformal_laplacian(const WarpedSmms& s, const RadialProfile& w,
                                    double r) {
  s.m().require_finite("weighted_conformal_laplacian");
  const double m = s.m().value();
  const int n = s.n();
  const double cl = 4.0 * (m + n - 1) / (m + n - 2);
  auto c = s.curvature_at(r);
  return -cl * s.laplacian_phi(w, r) + c.Rphi * w.value(r);
}

double covariance_residual(const WarpedSmms& s, const RadialProfile& u,
                           const RadialProfile& w, std::size_t grid_n) {
  const double m = s.m().value();
  const int n = s.n();
  const double a_out = 0.5 * (m + n + 2), a_in = -0.5 * (m + n - 2);

  auto cc = conformal_change(s, u, grid_n);
  auto what = cc.transport(w);

  // RHS in the old coordinate: u^a_out L(u^a_in w)
  auto uin = RadialProfile::closed_form(
      [u, w, a_in](double r) { return std::pow(u.value(r), a_in) * w.value(r); },
      [u, w, a_in](double r) {
        double uv = u.value(r), p = std::pow(uv, a_in);
        return p * (w.d1(r) + a_in * w.value(r) * u.d1(r) / uv);
      },
      [u, w, a_in](double r) {
        double uv = u.value(r), u1 = u.d1(r), u2 = u.d2(r);
        double p = std::pow(uv, a_in);
        double lw = w.value(r), l1 = w.d1(r), l2 = w.d2(r);
        return p * (l2 + 2.0 * a_in * l1 * u1 / uv +
                    lw * (a_in * u2 / uv + a_in * (a_in - 1.0) * u1 * u1 / (uv * uv)));
      });

  OpenGrid gh = cc.model.grid(grid_n);
  double res = 0.0;
  // skip a few cells at each end: one-sided stencils there are lower order
  std::size_t skip = 4;
  for (std::size_t i = skip; i + skip < gh.n; ++i) {
    double rh = gh.node(i);
    double r = cc.r_of_rhat_nodes[i];
    double lhs = weighted_conformal_laplacian(cc.model, what, rh);
    double rhs = std::pow(u.value(r), a_out) * weighted_conformal_laplacian(s, uin, r);
    res = std::max(res, std::abs(lhs - rhs));
  }
  return res;
}

} // namespace smms
