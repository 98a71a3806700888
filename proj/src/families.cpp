#include "smms/warped.hpp"

#include <cmath>
#include <numbers>

namespace smms {

WarpedSmms make_gaussian(int n, const DimParam& m, double r_max_inf) {
  if (m.is_infinite()) {
    auto psi = RadialProfile::closed_form([](double r) { return r; },
                                          [](double) { return 1.0; },
                                          [](double) { return 0.0; });
    auto phi = RadialProfile::closed_form([](double r) { return 0.5 * r * r; },
                                          [](double r) { return r; },
                                          [](double) { return 1.0; });
    return WarpedSmms(n, m, 0.0, r_max_inf, psi, phi, true, BoundaryKind::Pole,
                      BoundaryKind::Open, 1.0, "gaussian-inf");
  }
  const double mv = m.value();
  const double k = std::sqrt(mv + n - 1);
  auto psi = RadialProfile::closed_form(
      [k](double r) { return k * std::sin(r / k); },
      [k](double r) { return std::cos(r / k); },
      [k](double r) { return -std::sin(r / k) / k; });
  auto v = RadialProfile::closed_form(
      [k](double r) { return std::cos(r / k); },
      [k](double r) { return -std::sin(r / k) / k; },
      [k](double r) { return -std::cos(r / k) / (k * k); });
  double mu = (mv - 1.0) / (mv + n - 1);
  return WarpedSmms(n, m, 0.0, 0.5 * std::numbers::pi * k, psi, v, false,
                    BoundaryKind::Pole, BoundaryKind::Open, mu, "gaussian");
}

WarpedSmms make_sphere(int n, const DimParam& m, double rho) {
  auto psi = RadialProfile::closed_form(
      [rho](double r) { return rho * std::sin(r / rho); },
      [rho](double r) { return std::cos(r / rho); },
      [rho](double r) { return -std::sin(r / rho) / rho; });
  RadialProfile dens =
      m.is_infinite() ? RadialProfile::constant(0.0) : RadialProfile::constant(1.0);
  double mu = (n - 1) / (rho * rho);
  return WarpedSmms(n, m, 0.0, std::numbers::pi * rho, psi, dens, m.is_infinite(),
                    BoundaryKind::Pole, BoundaryKind::Pole, mu, "sphere");
}

WarpedSmms make_unit_volume_sphere(int n, const DimParam& m) {
  // Vol(S^n_rho) = rho^n * area(S^n)
  double vol1 = unit_sphere_area(n);
  double rho = std::pow(vol1, -1.0 / n);
  return make_sphere(n, m, rho);
}

WarpedSmms make_hyperbolic_gaussian(int n, const DimParam& m, double r_max) {
  m.require_finite("make_hyperbolic_gaussian");
  const double mv = m.value();
  const double k = std::sqrt(mv + n - 1);
  auto psi = RadialProfile::closed_form(
      [k](double r) { return k * std::sinh(r / k); },
      [k](double r) { return std::cosh(r / k); },
      [k](double r) { return std::sinh(r / k) / k; });
  double mu = (mv - 1.0) / (mv + n - 1);
  return WarpedSmms(n, m, 0.0, r_max, psi, RadialProfile::constant(1.0), false,
                    BoundaryKind::Pole, BoundaryKind::Open, mu,
                    "hyperbolic-gaussian");
}

RadialProfile hyperbolic_gaussian_scale(int n, const DimParam& m) {
  const double k = std::sqrt(m.value() + n - 1);
  return RadialProfile::closed_form(
      [k](double r) { return std::cosh(r / k); },
      [k](double r) { return std::sinh(r / k) / k; },
      [k](double r) { return std::cosh(r / k) / (k * k); });
}

WarpedSmms make_euclidean(int n, const DimParam& m, double r_max) {
  auto psi = RadialProfile::closed_form([](double r) { return r; },
                                        [](double) { return 1.0; },
                                        [](double) { return 0.0; });
  RadialProfile dens =
      m.is_infinite() ? RadialProfile::constant(0.0) : RadialProfile::constant(1.0);
  return WarpedSmms(n, m, 0.0, r_max, psi, dens, m.is_infinite(),
                    BoundaryKind::Pole, BoundaryKind::Open, std::nullopt,
                    "euclidean");
}

} // namespace smms
