#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace smms {

/// Uniform cell-centered grid on [a, b]: nodes r_i = a + (i + 1/2) h with
/// h = (b - a)/n. Endpoints are never nodes, so coordinate poles (psi = 0)
/// and degenerate densities stay off the stencil.
struct OpenGrid {
  double a = 0.0, b = 1.0;
  std::size_t n = 0;

  OpenGrid() = default;
  OpenGrid(double a_, double b_, std::size_t n_);

  double h() const { return (b - a) / static_cast<double>(n); }
  double node(std::size_t i) const { return a + (static_cast<double>(i) + 0.5) * h(); }
  std::vector<double> nodes() const;
};

/// Finite-difference weights for the m-th derivative at point x0 from
/// arbitrary nodes (Fornberg's recurrence).
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int order);

/// Derivative of sampled values on a uniform grid: 5-point centered interior
/// stencils (4th order), one-sided closures at the edges.
std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order);

/// Value of the Lagrange interpolant through 4 nearby uniform nodes.
double interp4(const std::vector<double>& f, double a_first_node, double h, double x);

/// Composite 2-point Gauss-Legendre quadrature over ncells equal cells of
/// [a, b]; open (never evaluates the endpoints), 4th order on smooth data.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t ncells);

/// Cumulative integral of f from a to each grid node, same rule per cell.
std::vector<double> integrate_cumulative(const std::function<double(double)>& f,
                                         const OpenGrid& g);

/// Solve the symmetric positive definite tridiagonal system given by
/// diagonal d and off-diagonal e (Thomas algorithm).
std::vector<double> solve_tridiag_spd(std::vector<double> d, std::vector<double> e,
                                      std::vector<double> rhs);

/// Least-squares slope of log(err) against log(h): measured convergence order.
double measured_order(const std::vector<double>& hs, const std::vector<double>& errs);

} // namespace smms
