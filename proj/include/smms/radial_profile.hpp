#pragma once

#include "smms/grid.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace smms {

/// Scalar function of the radial coordinate with first and second
/// derivatives, either closed-form or sampled on an OpenGrid.
class RadialProfile {
public:
  enum class Kind { ClosedForm, Grid };

  RadialProfile() = default;

  /// Closed-form profile from value and derivative callables.
  static RadialProfile closed_form(std::function<double(double)> f,
                                   std::function<double(double)> d1,
                                   std::function<double(double)> d2);

  /// Grid profile from samples on g; derivatives by finite differences
  /// unless explicit derivative samples are supplied (e.g. from an ODE
  /// right-hand side, which keeps them at integrator accuracy).
  static RadialProfile grid(const OpenGrid& g, std::vector<double> values);
  static RadialProfile grid(const OpenGrid& g, std::vector<double> values,
                            std::vector<double> d1, std::vector<double> d2);

  static RadialProfile constant(double c);

  Kind kind() const { return kind_; }
  bool is_grid() const { return kind_ == Kind::Grid; }
  const OpenGrid& grid_domain() const;
  const std::vector<double>& grid_values() const { return vals_; }

  double value(double r) const;
  double d1(double r) const;
  double d2(double r) const;

  /// Pointwise map keeping this profile's representation.
  RadialProfile map(std::function<double(double)> fn,          // of value
                    std::function<double(double, double)> dfn, // chain-rule d1
                    std::function<double(double, double, double)> ddfn) const;

private:
  Kind kind_ = Kind::ClosedForm;
  std::function<double(double)> f_, df_, ddf_;
  OpenGrid g_;
  std::vector<double> vals_, d1_, d2_;
};

/// Profile of log of a positive profile, with exact chain-rule derivatives.
RadialProfile log_profile(const RadialProfile& p, const OpenGrid& sample_grid);

} // namespace smms
