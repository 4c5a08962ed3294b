#pragma once

#include <stdexcept>

namespace cfopt {

/// Extended-real value in (-inf, +inf]. Used for the nonsmooth term h, which
/// takes the value +inf outside its domain. A dedicated type (instead of an
/// IEEE infinity sentinel) keeps NaNs out of the inequality checks.
class ExtValue {
 public:
  ExtValue() : value_(0.0), finite_(true) {}
  ExtValue(double v) : value_(v), finite_(true) {}  // NOLINT(google-explicit-constructor)

  static ExtValue infinity() {
    ExtValue e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }

  /// Finite value; throws if the value is +inf.
  double finite_value() const {
    if (!finite_) throw std::domain_error("ExtValue: value is +inf");
    return value_;
  }

  /// Scale by a nonnegative factor (0 * inf is taken as 0).
  ExtValue scaled(double c) const {
    if (c < 0) throw std::invalid_argument("ExtValue::scaled: negative factor");
    if (!finite_) return c == 0 ? ExtValue(0.0) : infinity();
    return ExtValue(c * value_);
  }

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtValue(a.value_ + b.value_);
  }
  friend ExtValue operator+(double a, const ExtValue& b) { return ExtValue(a) + b; }
  friend ExtValue operator+(const ExtValue& a, double b) { return a + ExtValue(b); }

  friend bool operator<=(const ExtValue& a, const ExtValue& b) {
    if (!b.finite_) return true;
    if (!a.finite_) return false;
    return a.value_ <= b.value_;
  }

 private:
  double value_;
  bool finite_;
};

}  // namespace cfopt
