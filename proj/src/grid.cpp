#include "smms/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smms {

OpenGrid::OpenGrid(double a_, double b_, std::size_t n_) : a(a_), b(b_), n(n_) {
  if (!(b > a)) throw std::invalid_argument("OpenGrid: empty interval");
  if (n < 65) throw std::invalid_argument("OpenGrid: need at least 65 nodes");
}

std::vector<double> OpenGrid::nodes() const {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = node(i);
  return r;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int order) {
  // Fornberg, Math. Comp. 51 (1988)
  const int nn = static_cast<int>(nodes.size());
  const int m = order;
  std::vector<double> c((nn) * (m + 1), 0.0);
  auto C = [&](int i, int j) -> double& { return c[i * (m + 1) + j]; };
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  C(0, 0) = 1.0;
  for (int i = 1; i < nn; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0;
    double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
        C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k)
        C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
      C(j, 0) = c4 * C(j, 0) / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nn);
  for (int i = 0; i < nn; ++i) w[i] = C(i, m);
  return w;
}

std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order) {
  const std::size_t n = f.size();
  const int W = 6; // stencil width at the edges, keeps 4th order for f' and f''
  if (n < static_cast<std::size_t>(W))
    throw std::invalid_argument("fd_derivative: too few samples");
  std::vector<double> out(n, 0.0);

  // one-sided closures, cached per offset
  std::vector<double> xs(W);
  for (std::size_t i = 0; i < n; ++i) {
    std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(i) - 2;
    std::ptrdiff_t width = 5;
    if (lo < 0 || lo + 5 > static_cast<std::ptrdiff_t>(n)) {
      width = W;
      lo = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i) - W / 2, 0,
                                      static_cast<std::ptrdiff_t>(n) - W);
    }
    xs.resize(width);
    for (std::ptrdiff_t k = 0; k < width; ++k)
      xs[k] = static_cast<double>(lo + k - static_cast<std::ptrdiff_t>(i)) * h;
    auto w = fd_weights(0.0, xs, order);
    double acc = 0.0;
    for (std::ptrdiff_t k = 0; k < width; ++k) acc += w[k] * f[lo + k];
    out[i] = acc;
  }
  return out;
}

double interp4(const std::vector<double>& f, double a_first_node, double h, double x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  if (n < 4) throw std::invalid_argument("interp4: too few samples");
  double t = (x - a_first_node) / h;
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(std::floor(t)) - 1;
  j = std::clamp<std::ptrdiff_t>(j, 0, n - 4);
  double s = t - static_cast<double>(j); // in [1,2] for interior x
  const double s0 = s, s1 = s - 1.0, s2 = s - 2.0, s3 = s - 3.0;
  return f[j] * (-s1 * s2 * s3 / 6.0) + f[j + 1] * (s0 * s2 * s3 / 2.0) +
         f[j + 2] * (-s0 * s1 * s3 / 2.0) + f[j + 3] * (s0 * s1 * s2 / 6.0);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::size_t ncells) {
  if (ncells == 0) throw std::invalid_argument("integrate: ncells = 0");
  const double h = (b - a) / static_cast<double>(ncells);
  const double d = 0.5 * h / std::sqrt(3.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < ncells; ++i) {
    double c = a + (static_cast<double>(i) + 0.5) * h;
    acc += f(c - d) + f(c + d);
  }
  return 0.5 * h * acc;
}

std::vector<double> integrate_cumulative(const std::function<double(double)>& f,
                                         const OpenGrid& g) {
  // cumulative from g.a to each node; first node is half a cell in
  std::vector<double> out(g.n);
  double acc = integrate(f, g.a, g.node(0), 1);
  out[0] = acc;
  for (std::size_t i = 1; i < g.n; ++i) {
    acc += integrate(f, g.node(i - 1), g.node(i), 1);
    out[i] = acc;
  }
  return out;
}

std::vector<double> solve_tridiag_spd(std::vector<double> d, std::vector<double> e,
                                      std::vector<double> rhs) {
  const std::size_t n = d.size();
  if (e.size() != n - 1 || rhs.size() != n)
    throw std::invalid_argument("solve_tridiag_spd: size mismatch");
  for (std::size_t i = 1; i < n; ++i) {
    double m = e[i - 1] / d[i - 1];
    d[i] -= m * e[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    rhs[i] = (rhs[i] - e[i] * rhs[i + 1]) / d[i];
  return rhs;
}

double measured_order(const std::vector<double>& hs, const std::vector<double>& errs) {
  // slope of log err vs log h
  const std::size_t n = hs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::log(hs[i]);
    double y = std::log(std::max(errs[i], 1e-300));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

} // namespace smms
