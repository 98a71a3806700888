#pragma once

#include "smms/warped.hpp"

#include <cstdint>
#include <vector>

namespace smms {

/// Discretization of the conformal-variational problem on a model: nodal
/// values of a radial test function w > 0, measure weights of v^m dvol,
/// 4th-order first-derivative operator, and the energy pieces
///   a(w) = (L w, w),  b(w) = |w v^-1|_2^2,  P(w) = |w|_p^p
/// with all norms over v^m dvol. Gradients are exact for the discrete
/// functionals (so directional derivatives match finite differences of the
/// implemented objective to round-off).
class VariationalGrid {
public:
  VariationalGrid(const WarpedSmms& s, std::size_t grid_n = 513);

  const WarpedSmms& model() const { return *s_; }
  const OpenGrid& grid() const { return g_; }
  std::size_t size() const { return g_.n; }
  double p_exp() const { return p_; }
  const std::vector<double>& measure_weights() const { return w_meas_; }
  const std::vector<double>& rphi() const { return rphi_; }
  const std::vector<double>& vinv2() const { return vinv2_; }

  double volume_phi() const; // integral of v^m dvol on this quadrature

  std::vector<double> deriv(const std::vector<double>& w) const;      // G w
  std::vector<double> deriv_t(const std::vector<double>& w) const;    // G^T w

  double a_form(const std::vector<double>& w) const;
  double b_form(const std::vector<double>& w) const;
  double p_norm_pow(const std::vector<double>& w) const; // |w|_p^p
  double norm_p(const std::vector<double>& w) const;
  double norm_2_sq(const std::vector<double>& w) const;
  double grad_norm_2_sq(const std::vector<double>& w) const;

  std::vector<double> grad_a(const std::vector<double>& w) const;
  std::vector<double> grad_b(const std::vector<double>& w) const;
  std::vector<double> grad_p_pow(const std::vector<double>& w) const;

  /// Strong-form weighted conformal Laplacian applied nodally.
  std::vector<double> apply_L(const std::vector<double>& w) const;

  /// H^1-type preconditioner solve (SPD tridiagonal).
  std::vector<double> precondition(const std::vector<double>& rhs) const;

  RadialProfile to_profile(const std::vector<double>& w) const;
  std::vector<double> sample(const RadialProfile& w) const;

private:
  const WarpedSmms* s_;
  OpenGrid g_;
  double p_, cl_;
  std::vector<double> w_meas_, rphi_, vinv2_, drift_;
  // banded derivative operator
  std::vector<int> row_lo_;
  std::vector<std::vector<double>> row_w_;
  // preconditioner factors
  std::vector<double> pre_diag_, pre_off_;
};

struct EnergyReport {
  double sigma = 0.0;       // weighted Yamabe constant estimate
  double lambda_mmu = 0.0;  // (m,mu)-energy
  double lambda_m = 0.0;    // m-energy
  double lambda_bar = 0.0;  // renormalized
  double tau_star = 0.0;
  double el_residual = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
  std::vector<double> minimizer; // nodal w, |w|_p = 1
  OpenGrid grid;
};

struct MinimizeOptions {
  std::size_t grid_n = 513;
  double el_tol = 1e-6;
  std::int64_t max_iter = 5000;
  std::vector<double> w0; // optional start (nodal); default constant
  bool flag_m0 = false;   // set on return when m = 0 (no compactness guarantee)
};

/// Energy functional of the model itself: integral of
/// (Rphi + m mu v^-2) v^m dvol, or its phi-form at m = inf.
double energy_functional(const WarpedSmms& s, double mu, std::size_t ncells = 2048);

/// Renormalization defect |W_mu^m - mu (m+2n) Vol_phi - W_mu^inf| for each
/// finite m in m_list, the density exponent phi held fixed; decays like 1/m.
/// (The mu = 1 case is the printed normalization (m+2n) Vol_phi.)
std::vector<double> renormalization_gap(const WarpedSmms& s_inf, double mu,
                                        const std::vector<double>& m_list);

/// Weighted Yamabe quotient (L w, w) |w v^-1|_2^(2m/n) / |w|_p^q at w.
double yamabe_quotient(const VariationalGrid& vg, const std::vector<double>& w);

/// tau-dependent m-energy objective and its closed-form minimizer in tau.
double m_energy_objective(const VariationalGrid& vg, const std::vector<double>& w,
                          double tau);
double tau_star(double a, double b, double m, int n); // n b / a, needs a > 0

struct ElResidual {
  double max_norm = 0.0;
  double lambda = 0.0;
};
/// Euler-Lagrange residual L w + m mu v^-2 w - lambda w^(p-1) in max norm,
/// lambda taken as the current objective value, |w|_p = 1 enforced.
ElResidual el_residual_mmu(const VariationalGrid& vg, std::vector<double> w, double mu);

/// Minimize the (m,mu)-energy over radial w > 0 with |w|_p = 1 by
/// preconditioned projected gradient descent. m > 0 finite (m = 0 allowed,
/// flagged: the compact embedding argument needs m > 0).
EnergyReport minimize_mmu_energy(const WarpedSmms& s, double mu,
                                 MinimizeOptions opts = {});

/// Minimize the m-energy: alternate closed-form tau updates with w-descent;
/// sigma is additionally computed by an independent direct minimization of
/// the weighted Yamabe quotient.
EnergyReport minimize_m_energy(const WarpedSmms& s, MinimizeOptions opts = {});

/// Direct minimization of the weighted Yamabe quotient (gradient descent on
/// the quotient itself).
double minimize_yamabe_quotient(const WarpedSmms& s, MinimizeOptions opts = {});

/// Renormalized m-energy from the m-energy value; 0 when the weighted Yamabe
/// constant is nonpositive (lambda <= 0 finite m; lambda = -inf at m = inf).
double renormalized_energy(double lambda, const DimParam& m, int n);
double nu_from_lambda_inf(double lambda_inf, int n);
double sigma_from_lambda(double lambda, double m, int n);
double lambda_from_sigma(double sigma, double m, int n);

struct Eigenpair {
  double lambda0 = 0.0;
  std::vector<double> eigfn;
  OpenGrid grid;
};
/// First eigenvalue of the weighted conformal Laplacian by Rayleigh-quotient
/// minimization over radial w.
Eigenpair first_eigenvalue(const WarpedSmms& s, std::size_t grid_n = 513);

/// Evaluate the m = inf energy functional at (f, tau) after projecting f by
/// an additive constant onto the constraint
/// integral of tau^(-n/2) e^(-f-phi) dvol = 1. No minimization.
double infinity_energy_evaluate(const WarpedSmms& s_inf, const RadialProfile& f,
                                double tau, std::size_t ncells = 2048);

} // namespace smms
