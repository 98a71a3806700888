#pragma once

#include "smms/warped.hpp"

namespace smms {

/// Rotationally symmetric solution of Ric + hess f + df (x) df / (m+n-2) = mu g
/// with a smooth origin (psi(0) = 0, psi'(0) = 1, f'(0) = 0, f(0) = 0 gauge).
/// The quasi-Einstein scale is u = exp(f / (m+n-2)) with constant lambda.
struct QeSolution {
  WarpedSmms model;      // trivial density, carries mu
  RadialProfile f;       // scale exponent
  RadialProfile u;       // exp(f/(m+n-2))
  double lambda = 0.0;   // quasi-Einstein constant of the scale
  double f2 = 0.0;       // f''(0)/2, the free origin parameter
  bool closed = false;   // psi returned to 0 with psi' = -1
  double r_end = 0.0;
};

struct QeSolveOptions {
  double r_max = 3.0;        // integration horizon for open solutions
  std::size_t grid_n = 513;  // output sample count
  double abs_tol = 1e-10;    // integrator tolerance
  bool want_closed = false;  // shoot on f''(0) for a closing warp
  double f2 = 0.0;           // origin parameter (seed when shooting)
  double shoot_lo = -2.0, shoot_hi = 2.0;
};

/// Integrates the two-channel radial reduction (radial and spherical
/// eigenvalue equations):
///   psi'' = -mu psi + (n-2)(1 - psi'^2)/psi + psi' f'
///   f''   =  mu + (n-1) psi''/psi - f'^2/(m+n-2)
/// by adaptive embedded Runge-Kutta (order 5(4)) with a series start at the
/// origin. Requires finite m > 1. Throws on blow-up before closing.
QeSolution solve_qe_ode(int n, const DimParam& m, double mu,
                        const QeSolveOptions& opts = {});

/// lambda of the scale from the origin data: mu + 2 n f2 / (m+n-2).
double qe_lambda_from_origin(int n, double m, double mu, double f2);

} // namespace smms
