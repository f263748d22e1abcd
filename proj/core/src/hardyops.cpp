#include "hardy/hardyops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr std::array<std::pair<const char*, OperatorForm>, 8> kNamedForms{{
    {"gop", forms::gop},
    {"antigop", forms::antigop},
    {"dual_gop", forms::dual_gop},
    {"dual_antigop", forms::dual_antigop},
    {"g1", forms::g1},
    {"g3", forms::g3},
    {"ag1", forms::ag1},
    {"ag3", forms::ag3},
}};

constexpr std::array<std::pair<const char*, Inner>, 6> kInnerNames{{
    {"head_sum", Inner::HeadSum},
    {"tail_sum", Inner::TailSum},
    {"head_max", Inner::HeadMax},
    {"tail_max", Inner::TailMax},
    {"head_pow_sum", Inner::HeadPowSum},
    {"tail_pow_sum", Inner::TailPowSum},
}};

void require_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidParameter("exponent p must be positive");
}

}  // namespace

std::string to_string(OperatorForm f) {
  for (const auto& [name, form] : kNamedForms)
    if (form == f) return name;
  std::string s = f.outer == Outer::TailSup ? "tail_sup:" : "head_sup:";
  for (const auto& [name, in] : kInnerNames)
    if (in == f.inner) s += name;
  return s;
}

OperatorForm parse_form(const std::string& name) {
  for (const auto& [n, form] : kNamedForms)
    if (name == n) return form;
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string outer = name.substr(0, colon), inner = name.substr(colon + 1);
    Outer o;
    if (outer == "tail_sup")
      o = Outer::TailSup;
    else if (outer == "head_sup")
      o = Outer::HeadSup;
    else
      throw InvalidInput("unknown outer range '" + outer + "'");
    for (const auto& [n, in] : kInnerNames)
      if (inner == n) return {o, in};
  }
  throw InvalidInput("unknown operator form '" + name + "'");
}

RatioProblem::RatioProblem(Window u_, Window v_, Window w_, double p_, double q_,
                           OperatorForm form_)
    : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)), p(p_), q(q_), form(form_) {
  require_same_range(u, v, "ratio problem");
  require_same_range(u, w, "ratio problem");
  require_exponent(p);
  if (!(q > 0.0)) throw InvalidParameter("exponent q must be positive");
}

namespace detail {

double power_norm(std::span<const double> x, double p) {
  double m = 0.0;
  for (double v : x) m = std::max(m, v);
  if (m == 0.0 || m == kInf) return m;
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  double s = 0.0;
  for (double v : x) s += ext::pow(v / m, p);
  return m * ext::pow(s, 1.0 / p);
}

void apply_iterated_into(std::span<const double> u, std::span<const double> a,
                         OperatorForm form, double p, std::span<double> inner,
                         std::span<double> out) {
  const std::size_t n = a.size();
  Inner in = form.inner;
  if (p == 1.0 && in == Inner::HeadPowSum) in = Inner::HeadSum;
  if (p == 1.0 && in == Inner::TailPowSum) in = Inner::TailSum;

  switch (in) {
    case Inner::HeadSum: {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) inner[i] = acc += a[i];
      break;
    }
    case Inner::TailSum: {
      double acc = 0.0;
      for (std::size_t i = n; i-- > 0;) inner[i] = acc = a[i] + acc;
      break;
    }
    case Inner::HeadMax: {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) inner[i] = acc = std::max(acc, a[i]);
      break;
    }
    case Inner::TailMax: {
      double acc = 0.0;
      for (std::size_t i = n; i-- > 0;) inner[i] = acc = std::max(acc, a[i]);
      break;
    }
    case Inner::HeadPowSum:
      for (std::size_t i = 0; i < n; ++i) inner[i] = power_norm(a.subspan(0, i + 1), p);
      break;
    case Inner::TailPowSum:
      for (std::size_t i = 0; i < n; ++i) inner[i] = power_norm(a.subspan(i), p);
      break;
  }

  if (form.outer == Outer::TailSup) {
    double acc = 0.0;
    for (std::size_t i = n; i-- > 0;) out[i] = acc = std::max(acc, ext::mul(u[i], inner[i]));
  } else {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) out[i] = acc = std::max(acc, ext::mul(u[i], inner[i]));
  }
}

RatioEvaluator::RatioEvaluator(const RatioProblem& problem)
    : problem_(&problem), inner_(problem.size()), op_(problem.size()) {}

double RatioEvaluator::lhs(std::span<const double> a) {
  const RatioProblem& pr = *problem_;
  apply_iterated_into(pr.u.values(), a, pr.form, pr.p, inner_, op_);
  auto w = pr.w.values();
  if (pr.q == kInf) {
    double m = 0.0;
    for (std::size_t n = 0; n < op_.size(); ++n) m = std::max(m, ext::mul(w[n], op_[n]));
    return m;
  }
  double s = 0.0;
  for (std::size_t n = 0; n < op_.size(); ++n) s += ext::mul(w[n], ext::pow(op_[n], pr.q));
  return ext::pow(s, 1.0 / pr.q);
}

double RatioEvaluator::rhs(std::span<const double> a) const {
  const RatioProblem& pr = *problem_;
  auto v = pr.v.values();
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += ext::mul(ext::pow(a[n], pr.p), v[n]);
  return ext::pow(s, 1.0 / pr.p);
}

double RatioEvaluator::ratio(std::span<const double> a) { return ext::div(lhs(a), rhs(a)); }

}  // namespace detail

Window apply_iterated(const Window& u, const Window& a, OperatorForm form, double p) {
  require_same_range(u, a, "apply_iterated");
  require_exponent(p);
  std::vector<double> inner(a.size()), out(a.size());
  detail::apply_iterated_into(u.values(), a.values(), form, p, inner, out);
  return Window(a.start(), std::move(out));
}

ExtNonneg lhs(const RatioProblem& problem, const Window& a) {
  require_same_range(problem.u, a, "lhs");
  detail::RatioEvaluator ev(problem);
  return ExtNonneg(ev.lhs(a.values()));
}

ExtNonneg rhs(const Window& v, double p, const Window& a) {
  require_same_range(v, a, "rhs");
  require_exponent(p);
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += ext::mul(ext::pow(a[n], p), v[n]);
  return ExtNonneg(ext::pow(s, 1.0 / p));
}

ExtNonneg ratio(const RatioProblem& problem, const Window& a) {
  require_same_range(problem.u, a, "ratio");
  if (all_zero(a)) throw InvalidInput("ratio is undefined for the zero sequence");
  detail::RatioEvaluator ev(problem);
  return ExtNonneg(ev.ratio(a.values()));
}

ChainValues elementary_chain_check(const Window& a, double p, Index n) {
  if (!(p > 0.0) || p > 1.0) throw InvalidParameter("elementary chain requires p in (0, 1]");
  if (!a.contains(n)) throw RangeError("index " + std::to_string(n) + " outside window");
  auto tail = a.values().subspan(static_cast<std::size_t>(n - a.start()));
  ChainValues c{0.0, 0.0, 0.0};
  for (double x : tail) {
    c.sup = std::max(c.sup, x);
    c.sum += x;
  }
  c.power_sum = p == 1.0 ? c.sum : detail::power_norm(tail, p);
  return c;
}

}  // namespace hardy
