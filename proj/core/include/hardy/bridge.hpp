#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hardy/window.hpp"

namespace hardy {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using RationalWindow = BasicWindow<Rational>;

/// Exact conversion of a finite double.
Rational to_rational(double x);
double to_double(const Rational& x);
RationalWindow to_rational(const Window& x);
Window to_double(const RationalWindow& x);

/// f = sum_n f_n chi_[n, n+1) over the window, zero elsewhere.
class StepFunction {
 public:
  explicit StepFunction(RationalWindow values) : values_(std::move(values)) {}

  Index start() const { return values_.start(); }
  Index end() const { return values_.last() + 1; }
  const RationalWindow& values() const { return values_; }
  /// Value at s; the interval [n, n+1) contains s.
  Rational operator()(const Rational& s) const;

 private:
  RationalWindow values_;
};

/// Continuous piecewise-linear function with integer breakpoints, described
/// by its values at start, ..., start + N and constant to either side.
class PiecewiseLinear {
 public:
  PiecewiseLinear(Index start, std::vector<Rational> nodes);

  Index start() const { return start_; }
  Index end() const { return start_ + static_cast<Index>(nodes_.size()) - 1; }
  const std::vector<Rational>& nodes() const { return nodes_; }

  Rational operator()(const Rational& s) const;
  /// Affine coefficients on [n, n+1): F(s) = slope * s + intercept.
  Rational slope(Index n) const;
  Rational intercept(Index n) const;

  bool nondecreasing() const;
  bool nonincreasing() const;

 private:
  Index start_;
  std::vector<Rational> nodes_;
};

StepFunction embed_sequence(const RationalWindow& a);

enum class CumulativeDirection {
  FromLeft,   ///< s -> int_{-inf}^s f
  FromRight,  ///< s -> int_s^{inf} f
};

PiecewiseLinear cumulative(const StepFunction& f, CumulativeDirection direction);

/// sup_{s>=t} u(s) F(s), exact.  On each unit interval u is constant and F is
/// monotone, so each interval supremum is an endpoint value or limit.
/// Throws InvalidInput if F is not monotone.
Rational sup_weighted_tail(const StepFunction& u, const PiecewiseLinear& F, const Rational& t);

enum class BridgeForm { Gop, Antigop };

struct BridgeResult {
  double discrete_lhs;
  double continuous_lhs;
  double discrete_rhs;
  double continuous_rhs;
  /// True when q and p are positive integers; the *_pow fields are then set
  /// and hold the q-th (resp. p-th) powers of the four quantities exactly.
  bool exact;
  std::optional<Rational> discrete_lhs_pow;
  std::optional<Rational> continuous_lhs_pow;
  std::optional<Rational> discrete_rhs_pow;
  std::optional<Rational> continuous_rhs_pow;
};

/// Discrete and continuous sides of the inequality for the step embedding of a.
/// gop uses int_{-inf}^s f, antigop int_s^inf f.  For gop the integrand
/// t -> sup_{s>=t} u(s) F(s) is constant on every [n, n+1) and both sides
/// coincide; for antigop it decreases within each interval and
/// continuous_lhs <= discrete_lhs.
BridgeResult bridge_check(const RationalWindow& u, const RationalWindow& v,
                          const RationalWindow& w, const RationalWindow& a, double p, double q,
                          BridgeForm form);

/// Step function on a grid of mesh 1/resolution, used to exercise the
/// projection a_n = int_n^{n+1} f of functions that are not constant on unit intervals.
struct FineStepFunction {
  Index start;           ///< left end of the first unit interval
  unsigned resolution;   ///< sub-intervals per unit interval
  std::vector<Rational> values;  ///< size = resolution * unit interval count
};

struct ProjectionCheck {
  Rational discrete;    ///< sum_n a_n^p v_n with a_n = int_n^{n+1} f
  Rational continuous;  ///< int f^p v
};

/// Both sides of (sum a_n^p v_n) <= int f^p v for integer p >= 1.
ProjectionCheck projection_check(const FineStepFunction& f, const RationalWindow& v, unsigned p);

/// The p <= 1 form: u -> u^p, q -> q/p, p -> 1 and a -> a^p.  Discrete
/// quantities come from the sequence side, continuous ones from the exact
/// step calculus applied to the (rounded) transformed data.
struct SubunitBridgeResult {
  double discrete_lhs;    ///< (sum_n (sup_{i>=n} u_i^p S_i)^{q/p} w_n)^{p/q}
  double continuous_lhs;
  double discrete_rhs;    ///< sum a_n^p v_n
  double continuous_rhs;  ///< int f v with f the embedding of a^p
};

SubunitBridgeResult subunit_bridge_check(const Window& u, const Window& v, const Window& w,
                                         const Window& a, double p, double q, BridgeForm form);

}  // namespace hardy
