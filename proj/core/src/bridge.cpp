#include "hardy/bridge.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"
#include "hardy/ext.hpp"

namespace hardy {

namespace {

using cpp_int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

Index floor_index(const Rational& s) {
  const cpp_int num = boost::multiprecision::numerator(s);
  const cpp_int den = boost::multiprecision::denominator(s);
  cpp_int q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q.convert_to<Index>();
}

Rational ipow(const Rational& x, unsigned k) {
  Rational r(1);
  Rational b = x;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::optional<unsigned> as_positive_integer(double x) {
  if (x >= 1.0 && x <= 64.0 && std::floor(x) == x) return static_cast<unsigned>(x);
  return std::nullopt;
}

void require_same_range(const RationalWindow& a, const RationalWindow& b, const char* what) {
  if (!a.same_range(b))
    throw ShapeError(std::string(what) + ": windows do not share start and length");
}

/// int_0^1 max(E0 + x (E1 - E0), C)^q dx, exactly for integer q.
Rational integrate_max_linear(const Rational& E0, const Rational& E1, const Rational& C, unsigned q) {
  auto antideriv = [q](const Rational& L0, const Rational& L1, const Rational& len) {
    // integral of L^q over an interval of length len where L runs linearly from L0 to L1
    if (L0 == L1) return len * ipow(L0, q);
    return len * (ipow(L1, q + 1) - ipow(L0, q + 1)) / (Rational(q + 1) * (L1 - L0));
  };
  if (E0 == E1) return ipow(std::max(E0, C), q);
  Rational theta = (C - E0) / (E1 - E0);
  if (theta <= 0 || theta >= 1) {
    // L - C has one sign on the open interval
    const Rational mid = (E0 + E1) / 2;
    return mid >= C ? antideriv(E0, E1, Rational(1)) : ipow(C, q);
  }
  if (E1 > E0) return theta * ipow(C, q) + antideriv(C, E1, 1 - theta);
  return antideriv(E0, C, theta) + (1 - theta) * ipow(C, q);
}

double integrate_max_linear(double E0, double E1, double C, double q) {
  auto antideriv = [q](double L0, double L1, double len) {
    if (L0 == L1) return len * std::pow(L0, q);
    return len * (std::pow(L1, q + 1) - std::pow(L0, q + 1)) / ((q + 1) * (L1 - L0));
  };
  if (E0 == E1) return std::pow(std::max(E0, C), q);
  const double theta = (C - E0) / (E1 - E0);
  if (theta <= 0 || theta >= 1) {
    const double mid = 0.5 * (E0 + E1);
    return mid >= C ? antideriv(E0, E1, 1.0) : std::pow(C, q);
  }
  if (E1 > E0) return theta * std::pow(C, q) + antideriv(C, E1, 1 - theta);
  return antideriv(E0, C, theta) + (1 - theta) * std::pow(C, q);
}

double root(double x, double r) { return r == 1.0 ? x : std::pow(x, 1.0 / r); }

}  // namespace

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw InvalidInput("cannot convert a non-finite value to a rational");
  if (x == 0.0) return Rational(0);
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r{cpp_int(mant)};
  if (e > 0)
    r *= Rational(cpp_int(1) << e);
  else if (e < 0)
    r /= Rational(cpp_int(1) << -e);
  return r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

RationalWindow to_rational(const Window& x) {
  std::vector<Rational> vals;
  vals.reserve(x.size());
  for (double v : x.values()) vals.push_back(to_rational(v));
  return RationalWindow(x.start(), std::move(vals));
}

Window to_double(const RationalWindow& x) {
  std::vector<double> vals;
  vals.reserve(x.size());
  for (const auto& v : x.values()) vals.push_back(to_double(v));
  return Window(x.start(), std::move(vals));
}

Rational StepFunction::operator()(const Rational& s) const {
  const Index n = floor_index(s);
  return values_.contains(n) ? values_.at(n) : Rational(0);
}

PiecewiseLinear::PiecewiseLinear(Index start, std::vector<Rational> nodes)
    : start_(start), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InvalidInput("piecewise-linear function needs at least one node");
}

Rational PiecewiseLinear::operator()(const Rational& s) const {
  if (s <= start_) return nodes_.front();
  if (s >= end()) return nodes_.back();
  const Index n = floor_index(s);
  const auto k = static_cast<std::size_t>(n - start_);
  return nodes_[k] + (s - n) * (nodes_[k + 1] - nodes_[k]);
}

Rational PiecewiseLinear::slope(Index n) const {
  if (n < start_ || n >= end()) return Rational(0);
  const auto k = static_cast<std::size_t>(n - start_);
  return nodes_[k + 1] - nodes_[k];
}

Rational PiecewiseLinear::intercept(Index n) const {
  if (n < start_) return nodes_.front();
  if (n >= end()) return nodes_.back();
  return nodes_[static_cast<std::size_t>(n - start_)] - slope(n) * n;
}

bool PiecewiseLinear::nondecreasing() const {
  return std::is_sorted(nodes_.begin(), nodes_.end());
}

bool PiecewiseLinear::nonincreasing() const {
  return std::is_sorted(nodes_.rbegin(), nodes_.rend());
}

StepFunction embed_sequence(const RationalWindow& a) { return StepFunction(a); }

PiecewiseLinear cumulative(const StepFunction& f, CumulativeDirection direction) {
  const auto vals = f.values().values();
  const std::size_t N = vals.size();
  std::vector<Rational> nodes(N + 1, Rational(0));
  if (direction == CumulativeDirection::FromLeft) {
    for (std::size_t k = 0; k < N; ++k) nodes[k + 1] = nodes[k] + vals[k];
  } else {
    for (std::size_t k = N; k-- > 0;) nodes[k] = nodes[k + 1] + vals[k];
  }
  return PiecewiseLinear(f.start(), std::move(nodes));
}

Rational sup_weighted_tail(const StepFunction& u, const PiecewiseLinear& F, const Rational& t) {
  if (!F.nondecreasing() && !F.nonincreasing())
    throw InvalidInput("sup_weighted_tail needs a monotone cumulative function");
  Rational best(0);
  for (Index n = std::max(u.start(), floor_index(t)); n < u.end(); ++n) {
    const Rational lo = std::max(Rational(n), t);
    const Rational& un = u.values().at(n);
    best = std::max(best, un * std::max(F(lo), F(Rational(n + 1))));
  }
  return best;
}

BridgeResult bridge_check(const RationalWindow& u, const RationalWindow& v,
                          const RationalWindow& w, const RationalWindow& a, double p, double q,
                          BridgeForm form) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw InvalidParameter("bridge needs finite positive p and q");
  require_same_range(u, v, "bridge_check");
  require_same_range(u, w, "bridge_check");
  require_same_range(u, a, "bridge_check");
  const std::size_t N = u.size();
  const Index n0 = u.start();

  // Sequence side.
  std::vector<Rational> S(N);
  if (form == BridgeForm::Gop) {
    Rational acc(0);
    for (std::size_t k = 0; k < N; ++k) S[k] = acc += a[k];
  } else {
    Rational acc(0);
    for (std::size_t k = N; k-- > 0;) S[k] = acc += a[k];
  }
  std::vector<Rational> G(N);
  Rational run(0);
  for (std::size_t k = N; k-- > 0;) G[k] = run = std::max(run, u[k] * S[k]);

  // Step-function side: on [n, n+1) the integrand is max(L(t), C_n) with L linear.
  const StepFunction uf(u), f = embed_sequence(a);
  const PiecewiseLinear F = cumulative(
      f, form == BridgeForm::Gop ? CumulativeDirection::FromLeft : CumulativeDirection::FromRight);
  std::vector<Rational> E0(N), E1(N), C(N);
  for (std::size_t k = 0; k < N; ++k) {
    const Index n = n0 + static_cast<Index>(k);
    const Rational Fl = F(Rational(n)), Fr = F(Rational(n + 1));
    E0[k] = u[k] * std::max(Fl, Fr);
    E1[k] = u[k] * Fr;
    C[k] = sup_weighted_tail(uf, F, Rational(n + 1));
  }

  BridgeResult r{};
  const auto qi = as_positive_integer(q);
  const auto pi = as_positive_integer(p);
  r.exact = qi && pi;
  if (r.exact) {
    Rational dl(0), cl(0), dr(0), cr(0);
    for (std::size_t k = 0; k < N; ++k) {
      dl += ipow(G[k], *qi) * w[k];
      cl += integrate_max_linear(E0[k], E1[k], C[k], *qi) * w[k];
      dr += ipow(a[k], *pi) * v[k];
      cr += ipow(f.values()[k], *pi) * v[k];
    }
    r.discrete_lhs = root(to_double(dl), q);
    r.continuous_lhs = root(to_double(cl), q);
    r.discrete_rhs = root(to_double(dr), p);
    r.continuous_rhs = root(to_double(cr), p);
    r.discrete_lhs_pow = dl;
    r.continuous_lhs_pow = cl;
    r.discrete_rhs_pow = dr;
    r.continuous_rhs_pow = cr;
    return r;
  }
  double dl = 0, cl = 0, dr = 0, cr = 0;
  for (std::size_t k = 0; k < N; ++k) {
    const double wk = to_double(w[k]), vk = to_double(v[k]);
    dl += std::pow(to_double(G[k]), q) * wk;
    cl += integrate_max_linear(to_double(E0[k]), to_double(E1[k]), to_double(C[k]), q) * wk;
    dr += std::pow(to_double(a[k]), p) * vk;
    cr += std::pow(to_double(f.values()[k]), p) * vk;
  }
  r.discrete_lhs = root(dl, q);
  r.continuous_lhs = root(cl, q);
  r.discrete_rhs = root(dr, p);
  r.continuous_rhs = root(cr, p);
  return r;
}

ProjectionCheck projection_check(const FineStepFunction& f, const RationalWindow& v, unsigned p) {
  if (f.resolution == 0) throw InvalidParameter("resolution must be positive");
  if (p == 0) throw InvalidParameter("projection check needs p >= 1");
  if (f.values.size() % f.resolution != 0 || f.values.size() / f.resolution != v.size() ||
      f.start != v.start())
    throw ShapeError("projection_check: fine grid does not cover the weight window");
  for (const auto& x : f.values)
    if (x < 0) throw InvalidInput("step function values must be nonnegative");
  const Rational h(1, f.resolution);
  ProjectionCheck out{Rational(0), Rational(0)};
  for (std::size_t n = 0; n < v.size(); ++n) {
    Rational a(0), integral(0);
    for (std::size_t j = 0; j < f.resolution; ++j) {
      const Rational& x = f.values[n * f.resolution + j];
      a += x * h;
      integral += ipow(x, p) * h;
    }
    out.discrete += ipow(a, p) * v[n];
    out.continuous += integral * v[n];
  }
  return out;
}

SubunitBridgeResult subunit_bridge_check(const Window& u, const Window& v, const Window& w,
                                         const Window& a, double p, double q, BridgeForm form) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw InvalidParameter("bridge needs finite positive p and q");
  hardy::require_same_range(u, v, "subunit_bridge_check");
  hardy::require_same_range(u, w, "subunit_bridge_check");
  hardy::require_same_range(u, a, "subunit_bridge_check");
  const Window up = powered(u, p), ap = powered(a, p);
  const std::size_t N = u.size();

  std::vector<double> S(N);
  double acc = 0.0;
  if (form == BridgeForm::Gop)
    for (std::size_t k = 0; k < N; ++k) S[k] = acc += ap[k];
  else
    for (std::size_t k = N; k-- > 0;) S[k] = acc += ap[k];
  double run = 0.0, dl = 0.0, dr = 0.0;
  for (std::size_t k = N; k-- > 0;) {
    run = std::max(run, ext::mul(up[k], S[k]));
    dl += ext::mul(ext::pow(run, q / p), w[k]);
    dr += ext::mul(ap[k], v[k]);
  }
  const BridgeResult cont =
      bridge_check(to_rational(up), to_rational(v), to_rational(w), to_rational(ap), 1.0, q / p, form);
  return {ext::pow(dl, p / q), cont.continuous_lhs, dr, cont.continuous_rhs};
}

}  // namespace hardy
