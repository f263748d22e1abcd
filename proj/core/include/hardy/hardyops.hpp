#pragma once

#include <span>
#include <vector>

#include "hardy/ext.hpp"
#include "hardy/window.hpp"

namespace hardy {

/// Outer supremum of an iterated operator: n -> sup_{i in range(n)} u_i * inner_i.
enum class Outer {
  TailSup,  ///< i >= n
  HeadSup,  ///< i <= n
};

/// Inner aggregation of a at index i.
enum class Inner {
  HeadSum,     ///< sum_{k<=i} a_k
  TailSum,     ///< sum_{k>=i} a_k
  HeadMax,     ///< sup_{k<=i} a_k
  TailMax,     ///< sup_{k>=i} a_k
  HeadPowSum,  ///< (sum_{k<=i} a_k^p)^{1/p}
  TailPowSum,  ///< (sum_{k>=i} a_k^p)^{1/p}
};

struct OperatorForm {
  Outer outer;
  Inner inner;
  friend constexpr bool operator==(OperatorForm, OperatorForm) = default;
};

constexpr bool is_sup_inner(Inner in) { return in == Inner::HeadMax || in == Inner::TailMax; }
constexpr bool is_power_inner(Inner in) {
  return in == Inner::HeadPowSum || in == Inner::TailPowSum;
}

namespace forms {
// sup_{i>=n} u_i sum_{k<=i} a_k and its relatives.
inline constexpr OperatorForm gop{Outer::TailSup, Inner::HeadSum};
inline constexpr OperatorForm antigop{Outer::TailSup, Inner::TailSum};
inline constexpr OperatorForm dual_gop{Outer::HeadSup, Inner::TailSum};
inline constexpr OperatorForm dual_antigop{Outer::HeadSup, Inner::HeadSum};
// Three-level chains: sup inner <= sum inner <= p-power inner (p <= 1).
inline constexpr OperatorForm g1{Outer::TailSup, Inner::HeadMax};
inline constexpr OperatorForm g2 = gop;
inline constexpr OperatorForm g3{Outer::TailSup, Inner::HeadPowSum};
inline constexpr OperatorForm ag1{Outer::TailSup, Inner::TailMax};
inline constexpr OperatorForm ag2 = antigop;
inline constexpr OperatorForm ag3{Outer::TailSup, Inner::TailPowSum};
}  // namespace forms

std::string to_string(OperatorForm f);
/// Accepts the names used by to_string ("gop", "antigop", "ag1", ...).
OperatorForm parse_form(const std::string& name);

/// Weights, exponents and operator form of sup_a lhs(a) / rhs(a).
///
/// q may be +inf, in which case the outer norm is sup_n w_n * (op a)_n.
/// p is also the exponent used by the p-power inner forms.
struct RatioProblem {
  RatioProblem(Window u, Window v, Window w, double p, double q, OperatorForm form);

  Window u;
  Window v;
  Window w;
  double p;
  double q;
  OperatorForm form;

  std::size_t size() const { return u.size(); }
};

/// Entry n: sup over i in the outer range of u_i * inner(a, i).
Window apply_iterated(const Window& u, const Window& a, OperatorForm form, double p = 1.0);

/// (sum_n w_n [apply_iterated]_n^q)^{1/q}.
ExtNonneg lhs(const RatioProblem& problem, const Window& a);
/// (sum_n a_n^p v_n)^{1/p}.
ExtNonneg rhs(const Window& v, double p, const Window& a);
/// lhs / rhs; throws InvalidInput for a == 0.  x/0 = inf; 0/0 and x/inf give 0.
ExtNonneg ratio(const RatioProblem& problem, const Window& a);

struct ChainValues {
  double sup;        ///< sup_{i>=n} a_i
  double sum;        ///< sum_{i>=n} a_i
  double power_sum;  ///< (sum_{i>=n} a_i^p)^{1/p}
};

/// Evaluates the three tail aggregates at n; for p in (0,1] they come out
/// ordered sup <= sum <= power_sum in floating point, not just in exact
/// arithmetic.  Throws InvalidParameter for p outside (0,1].
ChainValues elementary_chain_check(const Window& a, double p, Index n);

namespace detail {

/// (sum_{i in [first,last)} x_i^p)^{1/p} evaluated as M (sum (x_i/M)^p)^{1/p}
/// with M the maximum, so the result is >= max and >= plain sum for p <= 1.
double power_norm(std::span<const double> x, double p);

/// Allocation-free evaluation of ratio() for repeated calls on one problem.
class RatioEvaluator {
 public:
  explicit RatioEvaluator(const RatioProblem& problem);

  /// ratio(problem, a) assuming a has the problem's length; all-zero a gives 0.
  double ratio(std::span<const double> a);
  double lhs(std::span<const double> a);
  double rhs(std::span<const double> a) const;

  const RatioProblem& problem() const { return *problem_; }

 private:
  const RatioProblem* problem_;
  std::vector<double> inner_;
  std::vector<double> op_;
};

void apply_iterated_into(std::span<const double> u, std::span<const double> a,
                         OperatorForm form, double p, std::span<double> inner_scratch,
                         std::span<double> out);

}  // namespace detail

}  // namespace hardy
