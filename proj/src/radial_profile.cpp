#include "smms/radial_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace smms {

RadialProfile RadialProfile::closed_form(std::function<double(double)> f,
                                         std::function<double(double)> d1,
                                         std::function<double(double)> d2) {
  RadialProfile p;
  p.kind_ = Kind::ClosedForm;
  p.f_ = std::move(f);
  p.df_ = std::move(d1);
  p.ddf_ = std::move(d2);
  return p;
}

RadialProfile RadialProfile::grid(const OpenGrid& g, std::vector<double> values) {
  if (values.size() != g.n) throw std::invalid_argument("RadialProfile: sample count");
  auto d1 = fd_derivative(values, g.h(), 1);
  auto d2 = fd_derivative(values, g.h(), 2);
  return grid(g, std::move(values), std::move(d1), std::move(d2));
}

RadialProfile RadialProfile::grid(const OpenGrid& g, std::vector<double> values,
                                  std::vector<double> d1, std::vector<double> d2) {
  if (values.size() != g.n || d1.size() != g.n || d2.size() != g.n)
    throw std::invalid_argument("RadialProfile: sample count");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("RadialProfile: non-finite sample");
  RadialProfile p;
  p.kind_ = Kind::Grid;
  p.g_ = g;
  p.vals_ = std::move(values);
  p.d1_ = std::move(d1);
  p.d2_ = std::move(d2);
  return p;
}

RadialProfile RadialProfile::constant(double c) {
  return closed_form([c](double) { return c; }, [](double) { return 0.0; },
                     [](double) { return 0.0; });
}

const OpenGrid& RadialProfile::grid_domain() const {
  if (kind_ != Kind::Grid) throw std::domain_error("RadialProfile: not a grid profile");
  return g_;
}

double RadialProfile::value(double r) const {
  if (kind_ == Kind::ClosedForm) return f_(r);
  return interp4(vals_, g_.node(0), g_.h(), r);
}

double RadialProfile::d1(double r) const {
  if (kind_ == Kind::ClosedForm) return df_(r);
  return interp4(d1_, g_.node(0), g_.h(), r);
}

double RadialProfile::d2(double r) const {
  if (kind_ == Kind::ClosedForm) return ddf_(r);
  return interp4(d2_, g_.node(0), g_.h(), r);
}

RadialProfile RadialProfile::map(std::function<double(double)> fn,
                                 std::function<double(double, double)> dfn,
                                 std::function<double(double, double, double)> ddfn) const {
  if (kind_ == Kind::ClosedForm) {
    auto f = f_, df = df_, ddf = ddf_;
    return closed_form(
        [f, fn](double r) { return fn(f(r)); },
        [f, df, dfn](double r) { return dfn(f(r), df(r)); },
        [f, df, ddf, ddfn](double r) { return ddfn(f(r), df(r), ddf(r)); });
  }
  std::vector<double> v(g_.n), d1v(g_.n), d2v(g_.n);
  for (std::size_t i = 0; i < g_.n; ++i) {
    v[i] = fn(vals_[i]);
    d1v[i] = dfn(vals_[i], d1_[i]);
    d2v[i] = ddfn(vals_[i], d1_[i], d2_[i]);
  }
  return grid(g_, std::move(v), std::move(d1v), std::move(d2v));
}

RadialProfile log_profile(const RadialProfile& p, const OpenGrid&) {
  // exact chain rule from p's own derivative evaluators
  return p.map([](double y) { return std::log(y); },
               [](double y, double dy) { return dy / y; },
               [](double y, double dy, double ddy) { return ddy / y - dy * dy / (y * y); });
}

} // namespace smms
