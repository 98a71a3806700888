#pragma once

#include "smms/dim_param.hpp"
#include "smms/radial_profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smms {

/// Weighted curvature data of a rotationally symmetric model at one radius.
/// Channels: radial (the plane spanned by d/dr and a sphere direction /
/// the d/dr eigenvector) and spherical.
struct CurvaturePoint {
  double r = 0.0;
  double K_rad = 0.0;    // sectional curvature of radial planes: -psi''/psi
  double K_sph = 0.0;    // sectional curvature of spherical planes: (1-psi'^2)/psi^2
  double Ric_rad = 0.0;  // (n-1) K_rad
  double Ric_sph = 0.0;  // K_rad + (n-2) K_sph
  double R = 0.0;        // (n-1)(2 K_rad + (n-2) K_sph)
  double Ricphi_rad = 0.0; // Bakry-Emery eigenvalues
  double Ricphi_sph = 0.0;
  double Rphi = 0.0;       // weighted scalar curvature
};

enum class BoundaryKind { Pole, Open };

/// Rotationally symmetric smooth metric measure space
///   ( (r0,r1) x S^{n-1},  dr^2 + psi(r)^2 dtheta^2,  v^m dvol,  m )
/// with radial density v > 0 (phi = -m log v); for m = inf the density is
/// stored as phi directly. Immutable after construction.
class WarpedSmms {
public:
  WarpedSmms(int n, DimParam m, double r0, double r1, RadialProfile psi,
             RadialProfile density, bool density_is_phi,
             BoundaryKind left, BoundaryKind right,
             std::optional<double> mu = std::nullopt,
             std::string name = "custom");

  int n() const { return n_; }
  const DimParam& m() const { return m_; }
  double r0() const { return r0_; }
  double r1() const { return r1_; }
  BoundaryKind left_boundary() const { return left_; }
  BoundaryKind right_boundary() const { return right_; }
  bool compact() const { return left_ == BoundaryKind::Pole && right_ == BoundaryKind::Pole; }
  const std::optional<double>& mu() const { return mu_; }
  const std::string& name() const { return name_; }

  const RadialProfile& psi() const { return psi_; }
  /// Density v (finite m only).
  const RadialProfile& v() const;
  /// Density exponent phi = -m log v (any m; stored directly when m = inf).
  const RadialProfile& phi() const;
  bool stores_phi() const { return density_is_phi_; }

  OpenGrid grid(std::size_t N) const { return OpenGrid(r0_, r1_, N); }

  CurvaturePoint curvature_at(double r) const;

  /// Weighted Laplacian of a radial function:
  /// Delta_phi w = w'' + ((n-1) psi'/psi + m v'/v) w'  (analyst sign).
  double laplacian_phi(const RadialProfile& w, double r) const;
  double laplacian(const RadialProfile& w, double r) const; // unweighted

  /// max |Ricphi_channel - lambda| per channel over the grid.
  std::pair<double, double> qe_residual(double lambda, const OpenGrid& g) const;

  /// Characteristic constant read off pointwise from the contracted Bianchi
  /// identity: mu(r) = ((m+n) lambda - Rphi(r)) v(r)^2 / m; r-independent
  /// exactly on quasi-Einstein input. Requires 0 < m < inf.
  double char_constant_at(double lambda, double r) const;
  /// m = inf variant: returns mu'(r) with Rphi + 2 lambda (phi - n) = -mu'.
  double char_constant_inf_at(double lambda, double r) const;

  /// Integral of v^(m+offset) over the model: quadrature of
  /// v^(m+offset) psi^(n-1) omega_{n-1} dr. offset = 0 is the weighted
  /// volume, offset = -m the Riemannian volume (m finite for nonzero offset).
  double weighted_volume(double offset = 0.0, std::size_t ncells = 2048) const;

  /// Model with metric rescaled by c^2 (r-range and psi scale by c) and
  /// density by k: curvatures scale by c^-2, measure by c^n k^m.
  WarpedSmms rescaled(double c, double k = 1.0) const;

  /// Same profiles on a subinterval; ends of the cut become open boundaries
  /// unless they coincide with the original pole ends.
  WarpedSmms restricted(double new_r0, double new_r1) const;

private:
  int n_;
  DimParam m_;
  double r0_, r1_;
  RadialProfile psi_, density_;
  bool density_is_phi_;
  mutable std::optional<RadialProfile> phi_cache_;
  BoundaryKind left_, right_;
  std::optional<double> mu_;
  std::string name_;
};

/// Residuals of the three coupled quasi-Einstein scale equations for the
/// pair (u, v) with constants (lambda, mu): tracefree, lambda and mu
/// channels, max-abs over the grid.
struct QeScaleResiduals {
  double tracefree = 0.0;
  double lambda_eqn = 0.0;
  double mu_eqn = 0.0;
  double max() const;
};

QeScaleResiduals qe_scale_residual(const WarpedSmms& s, const RadialProfile& u,
                                   double lambda, const OpenGrid& g);

/// Area of the unit (n-1)-sphere.
double unit_sphere_area(int n_minus_1);

// ---- built-in families ---------------------------------------------------

/// Positive elliptic m-Gaussian: hemisphere r in (0, k pi/2), psi = k sin(r/k),
/// v = cos(r/k), k = sqrt(m+n-1); quasi-Einstein with lambda = 1,
/// mu = (m-1)/(m+n-1). For m = inf: psi = r, phi = r^2/2 on (0, r_max).
WarpedSmms make_gaussian(int n, const DimParam& m, double r_max_inf = 6.0);

/// Round sphere of radius rho with trivial density, any m: quasi-Einstein
/// with lambda = mu = (n-1)/rho^2.
WarpedSmms make_sphere(int n, const DimParam& m, double rho = 1.0);

/// Unit-volume round sphere with trivial density.
WarpedSmms make_unit_volume_sphere(int n, const DimParam& m);

/// Hyperbolic representation of the m-Gaussian: psi = k sinh(r/k), v = 1,
/// characteristic constant mu = (m-1)/(m+n-1); u = cosh(r/k) is a
/// quasi-Einstein scale with lambda = 1.
WarpedSmms make_hyperbolic_gaussian(int n, const DimParam& m, double r_max = 3.0);
RadialProfile hyperbolic_gaussian_scale(int n, const DimParam& m);

WarpedSmms make_euclidean(int n, const DimParam& m, double r_max = 3.0);

} // namespace smms
