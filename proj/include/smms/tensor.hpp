#pragma once

#include "smms/dim_param.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace smms::curv {

/// Symmetric bilinear form on an n-dimensional inner-product space,
/// components in an orthonormal frame (the metric is always the identity
/// form here; curved metrics enter only through the frame).
class SymForm {
public:
  SymForm() = default;
  explicit SymForm(int n) : n_(n), c_(static_cast<std::size_t>(n) * n, 0.0) {}

  /// Checked constructor: symmetrizes and requires the asymmetry to be
  /// below 1e-13 relative.
  static SymForm from_components(int n, std::vector<double> comps);
  static SymForm identity(int n);

  int n() const { return n_; }
  double& operator()(int i, int j) { return c_[idx(i, j)]; }
  double operator()(int i, int j) const { return c_[idx(i, j)]; }
  const std::vector<double>& data() const { return c_; }

  double trace() const;
  double frobenius_sq() const;
  double max_abs() const;

  SymForm& operator+=(const SymForm& o);
  SymForm& operator-=(const SymForm& o);
  SymForm& operator*=(double s);
  friend SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
  friend SymForm operator-(SymForm a, const SymForm& b) { return a -= b; }
  friend SymForm operator*(double s, SymForm a) { return a *= s; }

  std::string to_json() const; // row-major [i][j]

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<double> c_;
};

/// Algebraic curvature operator: 4-tensor antisymmetric in each pair and
/// symmetric under pair exchange. First Bianchi is NOT assumed (A = Rm - P^g
/// has pair symmetry but need not be cyclic).
class AlgCurv {
public:
  AlgCurv() = default;
  explicit AlgCurv(int n)
      : n_(n), c_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  /// Checked constructor: projects onto the pair/antisymmetry type and
  /// requires the residual of the projection to be below 1e-13 relative.
  static AlgCurv from_components(int n, std::vector<double> comps);

  int n() const { return n_; }
  double& operator()(int x, int y, int u, int v) { return c_[idx(x, y, u, v)]; }
  double operator()(int x, int y, int u, int v) const { return c_[idx(x, y, u, v)]; }
  const std::vector<double>& data() const { return c_; }

  double max_abs() const;
  /// Squared norm with |e_i ^ e_j| = 1 normalization (2-form basis), i.e.
  /// one quarter of the full component contraction; makes |g^g|^2 = 2n(n-1).
  double norm_sq() const;
  double symmetry_residual() const;
  double bianchi_residual() const; // first Bianchi (cyclic) residual

  AlgCurv& operator+=(const AlgCurv& o);
  AlgCurv& operator-=(const AlgCurv& o);
  AlgCurv& operator*=(double s);
  friend AlgCurv operator+(AlgCurv a, const AlgCurv& b) { return a += b; }
  friend AlgCurv operator-(AlgCurv a, const AlgCurv& b) { return a -= b; }
  friend AlgCurv operator*(double s, AlgCurv a) { return a *= s; }

  std::string to_json() const; // row-major, index order (x,y,u,v)

private:
  std::size_t idx(int x, int y, int u, int v) const {
    return ((static_cast<std::size_t>(x) * n_ + y) * n_ + u) * n_ + v;
  }
  int n_ = 0;
  std::vector<double> c_;
};

/// Lambda^1 (x) Lambda^2 valued object (n x n x n, antisymmetric in the last
/// pair); carries divergences and contractions of curvature tensors.
class ThreeForm2 {
public:
  ThreeForm2() = default;
  explicit ThreeForm2(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int n() const { return n_; }
  double& operator()(int x, int u, int v) { return c_[idx(x, u, v)]; }
  double operator()(int x, int u, int v) const { return c_[idx(x, u, v)]; }
  double max_abs() const;
  double antisym_residual() const;

  ThreeForm2& operator-=(const ThreeForm2& o);
  friend ThreeForm2 operator-(ThreeForm2 a, const ThreeForm2& b) { return a -= b; }

private:
  std::size_t idx(int x, int u, int v) const {
    return (static_cast<std::size_t>(x) * n_ + u) * n_ + v;
  }
  int n_ = 0;
  std::vector<double> c_;
};

// ---- products and contractions -----------------------------------------

/// Kulkarni-Nomizu / wedge product of symmetric forms:
/// (h^k)(x,y,u,v) = h(x,u)k(y,v) + h(y,v)k(x,u) - h(x,v)k(y,u) - h(y,u)k(x,v).
AlgCurv kn_wedge(const SymForm& h, const SymForm& k);

/// Composition over the middle pair: (B o A)(x,y,u,v) = A(x,y,i,j) B(i,j,u,v).
AlgCurv compose(const AlgCurv& B, const AlgCurv& A);

/// Symmetrized product A.B = ((A o B) + (B o A)) / 2.
AlgCurv sym_dot(const AlgCurv& A, const AlgCurv& B);

/// Lie-algebra square product: four-term contraction over one index of each
/// pair; sharp(A, A) is the classical A#.
AlgCurv sharp(const AlgCurv& A, const AlgCurv& B);

/// Derivation action of an endomorphism:
/// (T#A)(x,y,u,v) = -A(Tx,y,u,v) - A(x,Ty,u,v) - A(x,y,Tu,v) - A(x,y,u,Tv).
AlgCurv hash_action(const SymForm& T, const AlgCurv& A);

/// Contraction <A,T>(x,u) = A(e_i, x, T(e_i), u); <A,g> is the trace of A
/// (so <Rm,g> = Ric in this sign convention).
SymForm contract(const AlgCurv& A, const SymForm& T);

/// Interior product (i_X A)(y,u,v) = A(X,y,u,v) for X = coefficient vector.
ThreeForm2 interior(const std::vector<double>& X, const AlgCurv& A);

// ---- decomposition and weighted curvature -------------------------------

struct RicciDecomposition {
  AlgCurv weyl;     // totally trace-free part
  SymForm ric0;     // trace-free Ricci
  double scalar;    // scalar curvature
  SymForm ric;      // full Ricci, = contract(Rm, g)
};

/// Orthogonal decomposition Rm = W + ric0^g/(n-2) + R g^g/(2n(n-1)).
/// Requires first-Bianchi symmetry of Rm (checked).
RicciDecomposition ricci_decompose(const AlgCurv& Rm, const SymForm& g);

/// Weighted Schouten tensor P = (Ric - (R + m mu) g / (2(m+n-1))) / (m+n-2).
/// m must be finite (the tensor degenerates at m = inf).
SymForm weighted_schouten(const SymForm& Ric, double R, const SymForm& g,
                          const DimParam& m, double mu);

/// Weighted Weyl curvature A = Rm - P^g; returns Rm itself at m = inf.
AlgCurv weighted_weyl(const AlgCurv& Rm, const SymForm& g, const DimParam& m,
                      double mu);

/// Same tensor assembled from the orthogonal decomposition: W plus the
/// rescaled trace-free Ricci and scalar blocks. Dual computation path.
AlgCurv weighted_weyl_decomposed(const AlgCurv& Rm, const SymForm& g,
                                 const DimParam& m, double mu);

struct NormComparison {
  double lhs; // |A|^2
  double mid; // |Rm + g^g/(2(m-1))|^2
  double rhs; // C(n,m) |A|^2 with C = ((m+n-1)(m+n-2)/(m(m-1)))^2
};

/// Norm equivalence chain |A|^2 <= |Rm + g^g/(2(m-1))|^2 <= C |A|^2,
/// valid for m > 1, characteristic constant mu = 1 by default.
NormComparison norm_comparison(const AlgCurv& Rm, const SymForm& g, double m,
                               double mu = 1.0);

/// |A|^2 evaluated channelwise through the orthogonal decomposition:
/// |W|^2 + (m/(m+n-2))^2 |Ric0|^2/(n-2) + scalar block. Dual path to
/// AlgCurv::norm_sq of the assembled tensor.
double weighted_weyl_norm_sq_channels(const AlgCurv& Rm, const SymForm& g,
                                      double m, double mu);

/// Max-abs residual of the quadratic curvature identity
/// A.A + A# = Rm.A + Rm sharp A - trA^P - <A,P>^g  (A = Rm - P^g).
double algebra_lemma_residual(const AlgCurv& Rm, const SymForm& g,
                              const DimParam& m, double mu);

/// Max-abs residual of the trace identity
/// trA = m (P - (R - (m+2n-2) mu) g / (2(m+n-1)(m+n-2))).
double trace_identity_residual(const AlgCurv& Rm, const SymForm& g,
                               const DimParam& m, double mu);

} // namespace smms::curv
