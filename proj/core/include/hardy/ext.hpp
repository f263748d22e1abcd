#pragma once

// Nonnegative extended reals [0, +inf] with the conventions
//   0^{-a} = inf,  inf^{-a} = 0  (a > 0),   0 * inf = 0,   x^0 = 1.
// The free functions in hardy::ext work on raw doubles and are used on hot
// paths; ExtNonneg is the checked value type used at API boundaries.

#include <cmath>
#include <compare>
#include <iosfwd>
#include <limits>
#include <string>

namespace hardy {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

namespace ext {

inline bool is_inf(double x) { return x == kInf; }

/// Product with 0 * inf = 0.
inline double mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

/// x^alpha, total on [0, inf] x R.
inline double pow(double x, double alpha) {
  if (alpha == 0.0) return 1.0;
  if (alpha == 1.0) return x;
  if (x == 0.0) return alpha > 0.0 ? 0.0 : kInf;
  if (x == kInf) return alpha > 0.0 ? kInf : 0.0;
  return std::pow(x, alpha);
}

/// a / b computed as a * b^{-1}; hence 0/0 = 0 and inf/inf = 0.
inline double div(double a, double b) { return mul(a, pow(b, -1.0)); }

}  // namespace ext

class ExtNonneg {
 public:
  constexpr ExtNonneg() = default;
  /// Throws InvalidInput for negative or NaN values.
  ExtNonneg(double value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtNonneg infinity() { return ExtNonneg(kInf, Unchecked{}); }
  static constexpr ExtNonneg zero() { return ExtNonneg(); }

  constexpr double value() const { return value_; }
  constexpr bool is_inf() const { return value_ == kInf; }
  constexpr bool is_zero() const { return value_ == 0.0; }
  constexpr bool is_finite() const { return value_ != kInf; }

  friend ExtNonneg operator+(ExtNonneg a, ExtNonneg b) {
    return ExtNonneg(a.value_ + b.value_, Unchecked{});
  }
  friend ExtNonneg operator*(ExtNonneg a, ExtNonneg b) {
    return ExtNonneg(ext::mul(a.value_, b.value_), Unchecked{});
  }
  friend ExtNonneg operator/(ExtNonneg a, ExtNonneg b) {
    return ExtNonneg(ext::div(a.value_, b.value_), Unchecked{});
  }
  ExtNonneg& operator+=(ExtNonneg o) { return *this = *this + o; }
  ExtNonneg& operator*=(ExtNonneg o) { return *this = *this * o; }

  friend constexpr auto operator<=>(ExtNonneg a, ExtNonneg b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(ExtNonneg a, ExtNonneg b) { return a.value_ == b.value_; }

 private:
  struct Unchecked {};
  constexpr ExtNonneg(double v, Unchecked) : value_(v) {}

  double value_ = 0.0;
};

ExtNonneg ext_pow(ExtNonneg x, double alpha);
ExtNonneg max(ExtNonneg a, ExtNonneg b);

/// Relative distance |a-b| / max(|a|,|b|); 0 when both are equal (including both inf).
double relative_difference(double a, double b);

std::string to_string(ExtNonneg x);
std::ostream& operator<<(std::ostream& os, ExtNonneg x);

}  // namespace hardy
