#pragma once

#include "smms/warped.hpp"

namespace smms {

/// Result of a conformal change: the transformed model in its own arclength
/// radial coordinate, plus the coordinate maps between the two descriptions.
struct ConformalChange {
  WarpedSmms model;
  RadialProfile rhat_of_r; // new radial coordinate as a function of the old
  OpenGrid old_grid;       // sample grid in the old coordinate
  std::vector<double> r_of_rhat_nodes; // old radius at each new grid node

  /// Transport a radial function to the new coordinate (values only; the
  /// result is a grid profile on the new model's grid).
  RadialProfile transport(const RadialProfile& w) const;
};

/// Conformal change by a positive radial factor u: metric u^-2 g, density
/// v/u, measure u^-(m+n) v^m dvol; reparametrized to arclength
/// (drhat = dr/u, psihat = psi/u). Finite m only.
ConformalChange conformal_change(const WarpedSmms& s, const RadialProfile& u,
                                 std::size_t grid_n = 513);

/// m = inf variant: a conformal change degenerates to a change of measure,
/// phi -> phi + f.
WarpedSmms conformal_change_inf(const WarpedSmms& s, const RadialProfile& f);

/// Transformed Bakry-Emery curvature evaluated directly from the unhatted
/// data (no rebuild): the (0,2)-tensor channels of the transformed tensor in
/// the unhatted orthonormal frame, and the transformed weighted scalar
/// curvature (including its u^2 scale).
struct TransformedCurvature {
  double ricphi_rad_form = 0.0; // transformed Ric channels as a bilinear form
  double ricphi_sph_form = 0.0; // on unhatted unit vectors
  double ricphi_rad = 0.0;      // eigenvalues wrt the transformed metric
  double ricphi_sph = 0.0;      //   (= u^2 x form channels)
  double rphi = 0.0;            // transformed weighted scalar curvature
};

TransformedCurvature transformed_curvature(const WarpedSmms& s,
                                           const RadialProfile& u, double r);

/// Weighted conformal Laplacian L w = -(4(m+n-1)/(m+n-2)) Delta_phi w + Rphi w
/// applied pointwise to a radial function. Finite m.
double weighted_conformal_laplacian(const WarpedSmms& s, const RadialProfile& w,
                                    double r);

/// Conformal covariance defect: max-abs over interior nodes of
///   Lhat(what) - u^((m+n+2)/2) L(u^(-(m+n-2)/2) w)
/// where hats are computed on the rebuilt model. Converges at order >= 2.
double covariance_residual(const WarpedSmms& s, const RadialProfile& u,
                           const RadialProfile& w, std::size_t grid_n = 513);

} // namespace smms
