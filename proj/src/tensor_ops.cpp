#include "smms/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace smms::curv {

namespace {
void require_same_n(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
void require_n3(int n) {
  if (n < 3) throw std::invalid_argument("curvature algebra requires n >= 3");
}
} // namespace

// ---- SymForm -------------------------------------------------------------

SymForm SymForm::from_components(int n, std::vector<double> comps) {
  require_n3(n);
  if (comps.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("SymForm: component count");
  SymForm s(n);
  double scale = 0.0, resid = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double a = comps[static_cast<std::size_t>(i) * n + j];
      double b = comps[static_cast<std::size_t>(j) * n + i];
      s(i, j) = 0.5 * (a + b);
      scale = std::max(scale, std::abs(a));
      resid = std::max(resid, std::abs(a - b));
    }
  if (resid > 1e-13 * std::max(1.0, scale))
    throw std::invalid_argument("SymForm: input not symmetric");
  return s;
}

SymForm SymForm::identity(int n) {
  require_n3(n);
  SymForm s(n);
  for (int i = 0; i < n; ++i) s(i, i) = 1.0;
  return s;
}

double SymForm::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymForm::frobenius_sq() const {
  double t = 0.0;
  for (double v : c_) t += v * v;
  return t;
}

double SymForm::max_abs() const {
  double t = 0.0;
  for (double v : c_) t = std::max(t, std::abs(v));
  return t;
}

SymForm& SymForm::operator+=(const SymForm& o) {
  require_same_n(n_, o.n_, "SymForm+");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
SymForm& SymForm::operator-=(const SymForm& o) {
  require_same_n(n_, o.n_, "SymForm-");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
SymForm& SymForm::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

std::string SymForm::to_json() const {
  std::string out = "[";
  char buf[32];
  for (int i = 0; i < n_; ++i) {
    out += (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
      out += (j ? "," : "");
      out += buf;
    }
    out += "]";
  }
  out += "]";
  return out;
}

// ---- AlgCurv -------------------------------------------------------------

AlgCurv AlgCurv::from_components(int n, std::vector<double> comps) {
  require_n3(n);
  if (comps.size() != static_cast<std::size_t>(n) * n * n * n)
    throw std::invalid_argument("AlgCurv: component count");
  AlgCurv raw(n);
  raw.c_ = std::move(comps);
  AlgCurv s(n);
  double scale = raw.max_abs(), resid = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          // project onto antisymmetric pairs + pair exchange symmetry
          double t = raw(x, y, u, v) - raw(y, x, u, v) - raw(x, y, v, u) +
                     raw(y, x, v, u) + raw(u, v, x, y) - raw(v, u, x, y) -
                     raw(u, v, y, x) + raw(v, u, y, x);
          t *= 0.125;
          s(x, y, u, v) = t;
          resid = std::max(resid, std::abs(t - raw(x, y, u, v)));
        }
  if (resid > 1e-13 * std::max(1.0, scale))
    throw std::invalid_argument("AlgCurv: input lacks curvature symmetries");
  return s;
}

double AlgCurv::max_abs() const {
  double t = 0.0;
  for (double v : c_) t = std::max(t, std::abs(v));
  return t;
}

double AlgCurv::norm_sq() const {
  double t = 0.0;
  for (double v : c_) t += v * v;
  return 0.25 * t;
}

double AlgCurv::symmetry_residual() const {
  double r = 0.0;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
          double a = (*this)(x, y, u, v);
          r = std::max(r, std::abs(a + (*this)(y, x, u, v)));
          r = std::max(r, std::abs(a + (*this)(x, y, v, u)));
          r = std::max(r, std::abs(a - (*this)(u, v, x, y)));
        }
  return r;
}

double AlgCurv::bianchi_residual() const {
  double r = 0.0;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
          r = std::max(r, std::abs((*this)(x, y, u, v) + (*this)(y, u, x, v) +
                                   (*this)(u, x, y, v)));
  return r;
}

AlgCurv& AlgCurv::operator+=(const AlgCurv& o) {
  require_same_n(n_, o.n_, "AlgCurv+");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
AlgCurv& AlgCurv::operator-=(const AlgCurv& o) {
  require_same_n(n_, o.n_, "AlgCurv-");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
AlgCurv& AlgCurv::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

std::string AlgCurv::to_json() const {
  std::string out = "[";
  char buf[32];
  bool first = true;
  for (double v : c_) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!first) out += ",";
    out += buf;
    first = false;
  }
  out += "]";
  return out;
}

// ---- ThreeForm2 ----------------------------------------------------------

double ThreeForm2::max_abs() const {
  double t = 0.0;
  for (double v : c_) t = std::max(t, std::abs(v));
  return t;
}

double ThreeForm2::antisym_residual() const {
  double r = 0.0;
  for (int x = 0; x < n_; ++x)
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        r = std::max(r, std::abs((*this)(x, u, v) + (*this)(x, v, u)));
  return r;
}

ThreeForm2& ThreeForm2::operator-=(const ThreeForm2& o) {
  require_same_n(n_, o.n_, "ThreeForm2-");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

// ---- products ------------------------------------------------------------

AlgCurv kn_wedge(const SymForm& h, const SymForm& k) {
  require_same_n(h.n(), k.n(), "kn_wedge");
  const int n = h.n();
  AlgCurv out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          out(x, y, u, v) = h(x, u) * k(y, v) + h(y, v) * k(x, u) -
                            h(x, v) * k(y, u) - h(y, u) * k(x, v);
  return out;
}

AlgCurv compose(const AlgCurv& B, const AlgCurv& A) {
  require_same_n(A.n(), B.n(), "compose");
  const int n = A.n();
  AlgCurv out(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          double acc = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += A(x, y, i, j) * B(i, j, u, v);
          out(x, y, u, v) = acc;
          out(y, x, u, v) = -acc;
          out(x, y, v, u) = -acc;
          out(y, x, v, u) = acc;
        }
  return out;
}

AlgCurv sym_dot(const AlgCurv& A, const AlgCurv& B) {
  AlgCurv out = compose(A, B);
  out += compose(B, A);
  out *= 0.5;
  return out;
}

AlgCurv sharp(const AlgCurv& A, const AlgCurv& B) {
  require_same_n(A.n(), B.n(), "sharp");
  const int n = A.n();
  AlgCurv out(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          double acc = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              acc += A(x, i, u, j) * B(y, i, v, j) + A(y, i, v, j) * B(x, i, u, j) -
                     A(x, i, v, j) * B(y, i, u, j) - A(y, i, u, j) * B(x, i, v, j);
          out(x, y, u, v) = acc;
          out(y, x, u, v) = -acc;
          out(x, y, v, u) = -acc;
          out(y, x, v, u) = acc;
        }
  return out;
}

AlgCurv hash_action(const SymForm& T, const AlgCurv& A) {
  require_same_n(T.n(), A.n(), "hash_action");
  const int n = A.n();
  AlgCurv out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          double acc = 0.0;
          for (int i = 0; i < n; ++i)
            acc += T(x, i) * A(i, y, u, v) + T(y, i) * A(x, i, u, v) +
                   T(u, i) * A(x, y, i, v) + T(v, i) * A(x, y, u, i);
          out(x, y, u, v) = -acc;
        }
  return out;
}

SymForm contract(const AlgCurv& A, const SymForm& T) {
  require_same_n(A.n(), T.n(), "contract");
  const int n = A.n();
  SymForm out(n);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += A(i, x, j, u) * T(i, j);
      out(x, u) = acc;
    }
  return out;
}

ThreeForm2 interior(const std::vector<double>& X, const AlgCurv& A) {
  const int n = A.n();
  if (X.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("interior: dimension mismatch");
  ThreeForm2 out(n);
  for (int y = 0; y < n; ++y)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += X[i] * A(i, y, u, v);
        out(y, u, v) = acc;
      }
  return out;
}

// ---- decomposition -------------------------------------------------------

RicciDecomposition ricci_decompose(const AlgCurv& Rm, const SymForm& g) {
  require_same_n(Rm.n(), g.n(), "ricci_decompose");
  const int n = Rm.n();
  double scale = std::max(1.0, Rm.max_abs());
  if (Rm.bianchi_residual() > 1e-11 * scale)
    throw std::invalid_argument("ricci_decompose: input violates first Bianchi identity");
  RicciDecomposition d;
  d.ric = contract(Rm, g);
  d.scalar = d.ric.trace();
  d.ric0 = d.ric - (d.scalar / n) * g;
  AlgCurv w = Rm;
  w -= (1.0 / (n - 2)) * kn_wedge(d.ric0, g);
  w -= (d.scalar / (2.0 * n * (n - 1))) * kn_wedge(g, g);
  d.weyl = std::move(w);
  return d;
}

SymForm weighted_schouten(const SymForm& Ric, double R, const SymForm& g,
                          const DimParam& m, double mu) {
  m.require_finite("weighted_schouten");
  const int n = g.n();
  double mv = m.value();
  if (!(mv + n - 2 > 0)) throw std::domain_error("weighted_schouten: m + n - 2 <= 0");
  SymForm P = Ric - ((R + mv * mu) / (2.0 * (mv + n - 1))) * g;
  P *= 1.0 / (mv + n - 2);
  return P;
}

AlgCurv weighted_weyl(const AlgCurv& Rm, const SymForm& g, const DimParam& m,
                      double mu) {
  if (m.is_infinite()) return Rm; // the weighted Weyl tensor degenerates to Rm
  auto d = ricci_decompose(Rm, g);
  SymForm P = weighted_schouten(d.ric, d.scalar, g, m, mu);
  AlgCurv A = Rm;
  A -= kn_wedge(P, g);
  return A;
}

AlgCurv weighted_weyl_decomposed(const AlgCurv& Rm, const SymForm& g,
                                 const DimParam& m, double mu) {
  if (m.is_infinite()) return Rm;
  const int n = g.n();
  const double mv = m.value();
  auto d = ricci_decompose(Rm, g);
  AlgCurv A = d.weyl;
  A += (mv / ((mv + n - 2) * (n - 2))) * kn_wedge(d.ric0, g);
  double sc = mv / (2.0 * (mv + n - 1) * (mv + n - 2)) *
              ((mv - 1) * d.scalar / (static_cast<double>(n) * (n - 1)) + mu);
  A += sc * kn_wedge(g, g);
  return A;
}

NormComparison norm_comparison(const AlgCurv& Rm, const SymForm& g, double m,
                               double mu) {
  if (!(m > 1.0)) throw std::domain_error("norm_comparison: requires m > 1");
  const int n = g.n();
  AlgCurv A = weighted_weyl(Rm, g, DimParam::finite(m), mu);
  AlgCurv M = Rm;
  M += (1.0 / (2.0 * (m - 1))) * kn_wedge(g, g);
  double C = (m + n - 1) * (m + n - 2) / (m * (m - 1));
  NormComparison nc;
  nc.lhs = A.norm_sq();
  nc.mid = M.norm_sq();
  nc.rhs = C * C * A.norm_sq();
  return nc;
}

double weighted_weyl_norm_sq_channels(const AlgCurv& Rm, const SymForm& g,
                                      double m, double mu) {
  const int n = g.n();
  auto d = ricci_decompose(Rm, g);
  double w2 = d.weyl.norm_sq();
  double ric02 = d.ric0.frobenius_sq();
  double rn = m / ((m + n - 1) * (m + n - 2));
  double s = (m - 1) * d.scalar / (static_cast<double>(n) * (n - 1)) + mu;
  double a = m / (m + n - 2);
  return w2 + a * a * ric02 / (n - 2) +
         0.5 * n * (n - 1) * rn * rn * s * s;
}

double algebra_lemma_residual(const AlgCurv& Rm, const SymForm& g,
                              const DimParam& m, double mu) {
  auto d = ricci_decompose(Rm, g);
  SymForm P = weighted_schouten(d.ric, d.scalar, g, m, mu);
  AlgCurv A = Rm;
  A -= kn_wedge(P, g);
  AlgCurv lhs = sym_dot(A, A);
  lhs += sharp(A, A);
  AlgCurv rhs = sym_dot(Rm, A);
  rhs += sharp(Rm, A);
  SymForm trA = contract(A, g);
  rhs -= kn_wedge(trA, P);
  rhs -= kn_wedge(contract(A, P), g);
  lhs -= rhs;
  return lhs.max_abs();
}

double trace_identity_residual(const AlgCurv& Rm, const SymForm& g,
                               const DimParam& m, double mu) {
  const int n = g.n();
  const double mv = m.value();
  auto d = ricci_decompose(Rm, g);
  SymForm P = weighted_schouten(d.ric, d.scalar, g, m, mu);
  AlgCurv A = Rm;
  A -= kn_wedge(P, g);
  SymForm trA = contract(A, g);
  SymForm rhs = P - ((d.scalar - (mv + 2.0 * n - 2.0) * mu) /
                     (2.0 * (mv + n - 1) * (mv + n - 2))) *
                        g;
  rhs *= mv;
  return (trA - rhs).max_abs();
}

} // namespace smms::curv
