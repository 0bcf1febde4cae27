#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace hlab {

// Nonnegative extended real: a finite value or the explicit +inf marker.
// Arithmetic is restricted to what covering sums need.
class Extended {
 public:
  constexpr Extended() = default;
  constexpr Extended(double v) : value_(v) {}  // NOLINT(implicit)

  static constexpr Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // Finite value; 0 for the infinite marker. Check is_infinite() first.
  constexpr double finite_value() const { return infinite_ ? 0.0 : value_; }

  // IEEE view for internal arithmetic and reporting.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  static Extended from_double(double v) {
    return std::isinf(v) ? infinity() : Extended(v);
  }

  friend Extended operator+(Extended a, Extended b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }

  friend bool operator==(Extended a, Extended b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend bool operator<(Extended a, Extended b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(Extended a, Extended b) { return !(b < a); }
  friend bool operator>(Extended a, Extended b) { return b < a; }
  friend bool operator>=(Extended a, Extended b) { return !(a < b); }

  std::string to_string() const;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

// (diam)^alpha with the conventions for empty sets and alpha = 0:
// an empty set costs 0, a nonempty bounded set costs 1 at alpha = 0,
// and 0^alpha = 0 for alpha > 0.
double diameter_power(double diam, double alpha, bool nonempty = true);

}  // namespace hlab
