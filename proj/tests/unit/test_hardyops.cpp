#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hardy/error.hpp"
#include "hardy/hardyops.hpp"
#include "sampling.hpp"

using namespace hardy;

namespace {

// Direct O(N^3) evaluation used as the reference.
double naive_op(const Window& u, const Window& a, OperatorForm f, double p, std::size_t n) {
  const std::size_t N = u.size();
  double best = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const bool outer_ok = f.outer == Outer::TailSup ? i >= n : i <= n;
    if (!outer_ok) continue;
    double inner = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      const bool head = f.inner == Inner::HeadSum || f.inner == Inner::HeadMax || f.inner == Inner::HeadPowSum;
      if (head ? k > i : k < i) continue;
      if (is_sup_inner(f.inner))
        inner = std::max(inner, a[k]);
      else if (is_power_inner(f.inner))
        inner += std::pow(a[k], p);
      else
        inner += a[k];
    }
    if (is_power_inner(f.inner)) inner = std::pow(inner, 1.0 / p);
    best = std::max(best, ext::mul(u[i], inner));
  }
  return best;
}

constexpr OperatorForm kAll[] = {forms::gop, forms::antigop, forms::dual_gop, forms::dual_antigop,
                                 forms::g1,  forms::g3,      forms::ag1,      forms::ag3};

}  // namespace

TEST_CASE("apply_iterated examples") {
  Window u(0, {1, 1}), a(0, {1, 1});
  CHECK(apply_iterated(u, a, forms::gop) == Window(0, {2, 2}));
  CHECK(apply_iterated(u, a, forms::antigop) == Window(0, {2, 1}));
  CHECK(apply_iterated(u, Window(0, {0, 0}), forms::gop) == Window(0, {0, 0}));
  CHECK_THROWS_AS(apply_iterated(u, Window(1, {1, 1}), forms::gop), ShapeError);
}

TEST_CASE("lhs, rhs and ratio examples") {
  Window one(0, {1, 1});
  RatioProblem pr(one, Window(0, {4, 1}), one, 1, 1, forms::gop);
  CHECK(lhs(pr, one) == ExtNonneg(4));
  CHECK(rhs(Window(0, {4, 1}), 1, one) == ExtNonneg(5));
  CHECK(ratio(pr, one).value() == doctest::Approx(0.8));
  CHECK_THROWS_AS(ratio(pr, Window(0, {0, 0})), InvalidInput);

  RatioProblem sup(one, one, one, 1, kInf, forms::gop);
  CHECK(lhs(sup, one) == ExtNonneg(2));
  CHECK_THROWS_AS(RatioProblem(one, one, one, 0, 1, forms::gop), InvalidParameter);
  CHECK_THROWS_AS(RatioProblem(one, one, one, 1, -1, forms::gop), InvalidParameter);
}

TEST_CASE("rhs uses the extended conventions") {
  CHECK(rhs(Window(0, {0, 1}), 1, Window(0, {kInf, 1})) == ExtNonneg(1));
  CHECK(rhs(Window(0, {kInf, 1}), 1, Window(0, {1, 1})).is_inf());
}

TEST_CASE("operator forms agree with direct evaluation") {
  testing::Sampler s(5);
  for (int it = 0; it < 400; ++it) {
    const std::size_t N = s.size(1, 9);
    Window u = s.weights(N, 0.15), a = s.weights(N, 0.3);
    const double p = s.uniform(0.2, 1.0);
    for (OperatorForm f : kAll) {
      Window got = apply_iterated(u, a, f, p);
      for (std::size_t n = 0; n < N; ++n)
        CHECK(testing::close_rel(got[n], naive_op(u, a, f, p, n), 1e-12));
    }
  }
}

TEST_CASE("form names round-trip") {
  for (OperatorForm f : kAll) CHECK(parse_form(to_string(f)) == f);
  CHECK(to_string(forms::gop) == "gop");
  CHECK(parse_form("tail_sup:head_max") == forms::g1);
  CHECK_THROWS_AS(parse_form("nonsense"), InvalidInput);
}

TEST_CASE("elementary chain") {
  auto c = elementary_chain_check(Window(0, {1, 1}), 0.5, 0);
  CHECK(c.sup == 1);
  CHECK(c.sum == 2);
  CHECK(c.power_sum == 4);
  auto d = elementary_chain_check(Window(0, {3, 0, 5}), 1.0, 1);
  CHECK(d.sum == d.power_sum);
  CHECK_THROWS_AS(elementary_chain_check(Window(0, {1}), 1.5, 0), InvalidParameter);
  CHECK_THROWS_AS(elementary_chain_check(Window(0, {1}), 0.5, 3), RangeError);
}

TEST_CASE("evaluator matches the window api") {
  testing::Sampler s(6);
  for (int it = 0; it < 100; ++it) {
    const std::size_t N = s.size(1, 8);
    RatioProblem pr(s.weights(N), s.weights(N), s.weights(N), s.uniform(0.3, 3), s.uniform(0.3, 3),
                    kAll[it % 8]);
    Window a = s.weights(N, 0.2);
    if (all_zero(a)) continue;
    detail::RatioEvaluator ev(pr);
    CHECK(ev.ratio(a.values()) == ratio(pr, a).value());
  }
}
