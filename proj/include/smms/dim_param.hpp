#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace smms {

/// Dimensional parameter m of a smooth metric measure space, a value in
/// [0, inf] with the infinite case representable exactly.
class DimParam {
public:
  static DimParam finite(double m) {
    if (!(m >= 0.0) || !std::isfinite(m))
      throw std::invalid_argument("DimParam: finite m must satisfy 0 <= m < inf");
    return DimParam(m, false);
  }
  static DimParam infinite() { return DimParam(0.0, true); }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; throws if m = inf.
  double value() const {
    if (inf_) throw std::domain_error("DimParam: operation requires finite m");
    return m_;
  }

  /// Value with inf mapped to +infinity (for limits that stay finite).
  double value_or_inf() const {
    return inf_ ? std::numeric_limits<double>::infinity() : m_;
  }

  void require_finite(const char* what) const {
    if (inf_) throw std::domain_error(std::string(what) + ": m = inf not supported");
  }
  void require_greater_than(double lo, const char* what) const {
    if (!inf_ && !(m_ > lo))
      throw std::domain_error(std::string(what) + ": requires m > " + std::to_string(lo));
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(m_); }

  friend bool operator==(const DimParam& a, const DimParam& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.m_ == b.m_);
  }

private:
  DimParam(double m, bool inf) : m_(m), inf_(inf) {}
  double m_;
  bool inf_;
};

} // namespace smms
