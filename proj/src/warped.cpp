#include "smms/warped.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smms {

WarpedSmms::WarpedSmms(int n, DimParam m, double r0, double r1, RadialProfile psi,
                       RadialProfile density, bool density_is_phi,
                       BoundaryKind left, BoundaryKind right,
                       std::optional<double> mu, std::string name)
    : n_(n), m_(m), r0_(r0), r1_(r1), psi_(std::move(psi)),
      density_(std::move(density)), density_is_phi_(density_is_phi),
      left_(left), right_(right), mu_(mu), name_(std::move(name)) {
  if (n_ < 3) throw std::invalid_argument("WarpedSmms: n >= 3 required");
  if (!(r1_ > r0_)) throw std::invalid_argument("WarpedSmms: empty interval");
  if (m_.is_infinite() && !density_is_phi_)
    throw std::invalid_argument("WarpedSmms: m = inf requires the density as phi");
  // spot-check positivity invariants on a coarse interior sample
  OpenGrid g(r0_, r1_, 65);
  for (double r : g.nodes()) {
    if (!(psi_.value(r) > 0.0))
      throw std::invalid_argument("WarpedSmms: psi must be positive on the open interval");
    if (!density_is_phi_ && !(density_.value(r) > 0.0))
      throw std::invalid_argument("WarpedSmms: v must be positive on the open interval");
  }
}

const RadialProfile& WarpedSmms::v() const {
  if (density_is_phi_)
    throw std::domain_error("WarpedSmms: density stored as phi (m = inf)");
  return density_;
}

const RadialProfile& WarpedSmms::phi() const {
  if (density_is_phi_) return density_;
  if (!phi_cache_) {
    double mv = m_.value();
    phi_cache_ = density_.map(
        [mv](double y) { return -mv * std::log(y); },
        [mv](double y, double dy) { return -mv * dy / y; },
        [mv](double y, double dy, double ddy) {
          return -mv * (ddy / y - dy * dy / (y * y));
        });
  }
  return *phi_cache_;
}

CurvaturePoint WarpedSmms::curvature_at(double r) const {
  if (!(r > r0_ && r < r1_))
    throw std::domain_error("curvature_at: r outside the open interval");
  const double ps = psi_.value(r);
  if (!(ps > 1e-12))
    throw std::domain_error("curvature_at: singular point (psi = 0)");
  const double ps1 = psi_.d1(r), ps2 = psi_.d2(r);
  CurvaturePoint c;
  c.r = r;
  c.K_rad = -ps2 / ps;
  c.K_sph = (1.0 - ps1 * ps1) / (ps * ps);
  c.Ric_rad = (n_ - 1) * c.K_rad;
  c.Ric_sph = c.K_rad + (n_ - 2) * c.K_sph;
  c.R = (n_ - 1) * (2.0 * c.K_rad + (n_ - 2) * c.K_sph);
  if (m_.is_infinite()) {
    const RadialProfile& ph = phi();
    double p1 = ph.d1(r), p2 = ph.d2(r);
    c.Ricphi_rad = c.Ric_rad + p2;
    c.Ricphi_sph = c.Ric_sph + (ps1 / ps) * p1;
    double lap = p2 + (n_ - 1) * (ps1 / ps) * p1;
    c.Rphi = c.R + 2.0 * lap - p1 * p1;
  } else {
    const double mv = m_.value();
    if (mv == 0.0) {
      c.Ricphi_rad = c.Ric_rad;
      c.Ricphi_sph = c.Ric_sph;
      c.Rphi = c.R;
    } else {
      const double vv = density_.value(r), v1 = density_.d1(r), v2 = density_.d2(r);
      c.Ricphi_rad = c.Ric_rad - mv * v2 / vv;
      c.Ricphi_sph = c.Ric_sph - mv * (ps1 / ps) * (v1 / vv);
      double lap = v2 + (n_ - 1) * (ps1 / ps) * v1;
      c.Rphi = c.R - 2.0 * mv * lap / vv - mv * (mv - 1.0) * v1 * v1 / (vv * vv);
    }
  }
  return c;
}

double WarpedSmms::laplacian(const RadialProfile& w, double r) const {
  return w.d2(r) + (n_ - 1) * (psi_.d1(r) / psi_.value(r)) * w.d1(r);
}

double WarpedSmms::laplacian_phi(const RadialProfile& w, double r) const {
  double drift;
  if (density_is_phi_) {
    drift = -density_.d1(r);
  } else if (m_.value() == 0.0) {
    drift = 0.0;
  } else {
    drift = m_.value() * density_.d1(r) / density_.value(r);
  }
  return laplacian(w, r) + drift * w.d1(r);
}

std::pair<double, double> WarpedSmms::qe_residual(double lambda,
                                                  const OpenGrid& g) const {
  double mr = 0.0, ms = 0.0;
  for (double r : g.nodes()) {
    auto c = curvature_at(r);
    mr = std::max(mr, std::abs(c.Ricphi_rad - lambda));
    ms = std::max(ms, std::abs(c.Ricphi_sph - lambda));
  }
  return {mr, ms};
}

double WarpedSmms::char_constant_at(double lambda, double r) const {
  m_.require_finite("char_constant_at");
  if (!(m_.value() > 0.0))
    throw std::domain_error("char_constant_at: requires m > 0");
  auto c = curvature_at(r);
  double vv = v().value(r);
  return ((m_.value() + n_) * lambda - c.Rphi) * vv * vv / m_.value();
}

double WarpedSmms::char_constant_inf_at(double lambda, double r) const {
  if (!m_.is_infinite())
    throw std::domain_error("char_constant_inf_at: requires m = inf");
  auto c = curvature_at(r);
  return -(c.Rphi + 2.0 * lambda * (phi().value(r) - n_));
}

double WarpedSmms::weighted_volume(double offset, std::size_t ncells) const {
  if (offset != 0.0) m_.require_finite("weighted_volume with offset");
  const double area = unit_sphere_area(n_ - 1);
  auto f = [&](double r) {
    double w;
    if (density_is_phi_) {
      w = std::exp(-density_.value(r)); // v^m = e^-phi; offset = 0 only
    } else {
      double e = (m_.value() + offset);
      w = (e == 0.0) ? 1.0 : std::pow(density_.value(r), e);
    }
    return w * std::pow(psi_.value(r), n_ - 1);
  };
  return area * integrate(f, r0_, r1_, ncells);
}

WarpedSmms WarpedSmms::rescaled(double c, double k) const {
  if (!(c > 0.0) || !(k > 0.0))
    throw std::invalid_argument("rescaled: factors must be positive");
  // pull profiles back through r = rhat / c
  RadialProfile ps = psi_;
  RadialProfile psn = RadialProfile::closed_form(
      [ps, c](double rh) { return c * ps.value(rh / c); },
      [ps, c](double rh) { return ps.d1(rh / c); },
      [ps, c](double rh) { return ps.d2(rh / c) / c; });
  RadialProfile de = density_;
  bool isphi = density_is_phi_;
  if (isphi && k != 1.0)
    throw std::invalid_argument("rescaled: density factor needs finite m");
  const double kk = isphi ? 1.0 : k;
  RadialProfile den = RadialProfile::closed_form(
      [de, c, kk](double rh) { return kk * de.value(rh / c); },
      [de, c, kk](double rh) { return kk * de.d1(rh / c) / c; },
      [de, c, kk](double rh) { return kk * de.d2(rh / c) / (c * c); });
  std::optional<double> mu2 = mu_;
  if (mu2) *mu2 = (k * k / (c * c)) * (*mu2); // mu scales as squared density per unit metric
  return WarpedSmms(n_, m_, c * r0_, c * r1_, psn, den, isphi, left_, right_, mu2,
                    name_ + "-rescaled");
}

WarpedSmms WarpedSmms::restricted(double new_r0, double new_r1) const {
  if (!(new_r0 >= r0_ && new_r1 <= r1_ && new_r1 > new_r0))
    throw std::invalid_argument("restricted: bad subinterval");
  BoundaryKind l = (new_r0 == r0_) ? left_ : BoundaryKind::Open;
  BoundaryKind r = (new_r1 == r1_) ? right_ : BoundaryKind::Open;
  return WarpedSmms(n_, m_, new_r0, new_r1, psi_, density_, density_is_phi_, l, r,
                    mu_, name_ + "-restricted");
}

double QeScaleResiduals::max() const {
  return std::max(tracefree, std::max(lambda_eqn, mu_eqn));
}

QeScaleResiduals qe_scale_residual(const WarpedSmms& s, const RadialProfile& u,
                                   double lambda, const OpenGrid& g) {
  s.m().require_finite("qe_scale_residual");
  if (!s.mu()) throw std::invalid_argument("qe_scale_residual: model has no mu");
  const double m = s.m().value(), mu = *s.mu();
  const int n = s.n();
  QeScaleResiduals res;
  for (double r : g.nodes()) {
    auto c = s.curvature_at(r);
    const double ps = s.psi().value(r), ps1 = s.psi().d1(r);
    const double uv = u.value(r), u1 = u.d1(r), u2 = u.d2(r);
    const double vv = s.v().value(r), v1 = s.v().d1(r), v2 = s.v().d2(r);
    const double hess_u_rad = u2, hess_u_sph = (ps1 / ps) * u1;
    const double hess_v_rad = v2, hess_v_sph = (ps1 / ps) * v1;
    const double lap_u = u2 + (n - 1) * (ps1 / ps) * u1;
    const double lap_v = v2 + (n - 1) * (ps1 / ps) * v1;
    // tracefree channel: all eigenvalues of uv Ric + (m+n-2) v hess u - m u hess v equal
    double t_rad = uv * vv * c.Ric_rad + (m + n - 2) * vv * hess_u_rad - m * uv * hess_v_rad;
    double t_sph = uv * vv * c.Ric_sph + (m + n - 2) * vv * hess_u_sph - m * uv * hess_v_sph;
    res.tracefree = std::max(res.tracefree, std::abs(t_rad - t_sph));
    // lambda channel
    double lam_rhs = uv * uv * vv * vv * c.R + (m + 2 * n - 2) * uv * vv * vv * lap_u -
                     m * uv * uv * vv * lap_v - (m + n - 1) * n * vv * vv * u1 * u1 +
                     m * n * uv * vv * u1 * v1;
    res.lambda_eqn = std::max(res.lambda_eqn, std::abs(n * lambda * vv * vv - lam_rhs));
    // mu channel
    double mu_rhs = uv * uv * vv * vv * c.R + (m + n - 2) * uv * vv * vv * lap_u -
                    (m - n) * uv * uv * vv * lap_v - (m + n - 2) * n * uv * vv * u1 * v1 +
                    (m - 1) * n * uv * uv * v1 * v1;
    res.mu_eqn = std::max(res.mu_eqn, std::abs(n * mu * uv * uv - mu_rhs));
  }
  return res;
}

double unit_sphere_area(int k) {
  // area of the unit k-sphere: 2 pi^{(k+1)/2} / Gamma((k+1)/2)
  double half = 0.5 * (k + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

} // namespace smms
