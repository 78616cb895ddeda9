#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qconcav {

/// A finite real or +infinity; the return type of divergences whose value
/// diverges on support violations. Never holds NaN or -infinity.
class ExtendedReal {
 public:
  ExtendedReal(double v) : v_(v) {
    if (std::isnan(v_) || v_ == -std::numeric_limits<double>::infinity())
      throw std::invalid_argument("ExtendedReal: value must be finite or +infinity");
  }

  static ExtendedReal infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return std::isfinite(v_); }

  /// The stored value; +infinity when not finite.
  double value() const { return v_; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return a.v_ <= b.v_;
  }

 private:
  double v_;
};

}  // namespace qconcav
