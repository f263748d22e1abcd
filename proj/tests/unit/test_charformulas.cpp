#include <doctest.h>

#include <cmath>

#include "hardy/charformulas.hpp"
#include "hardy/error.hpp"
#include "sampling.hpp"

using namespace hardy;

namespace {

struct Exponents {
  double p, q;
};

constexpr Exponents kRegimes[] = {{2, 3}, {3, 2}, {1, 1}, {0.5, 1}, {1, 0.5}, {0.5, 0.25}};

double formula(const Window& u, const Window& v, const Window& w, Exponents e, bool antigop,
               AntigopVariant variant) {
  return antigop ? char_antigop(u, v, w, e.p, e.q, variant).value.value()
                 : char_gop(u, v, w, e.p, e.q).value.value();
}

}  // namespace

TEST_CASE("closed-form examples") {
  Window one(0, {1, 1});
  auto g = char_gop(one, one, one, 1, 1);
  CHECK(g.value.value() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(g.regime.case_id == RegimeCase::III);
  CHECK(g.formula_id == FormulaId::GopIII);
  CHECK(g.terms.size() == 2);

  auto a = char_antigop(one, one, one, 2, 2);
  CHECK(a.value.value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(a.formula_id == FormulaId::AntigopI);

  CHECK(char_linft_exact(Window(0, {2, 1}), Window(0, {4, 1}), 1).value() == 2.0);
}

TEST_CASE("zero weight gives a zero estimate") {
  Window zero(0, {0, 0, 0}), one(0, {1, 2, 3});
  for (auto e : kRegimes) {
    CHECK(char_gop(zero, one, one, e.p, e.q).value.is_zero());
    CHECK(char_antigop(one, one, zero, e.p, e.q).value.is_zero());
  }
}

TEST_CASE("vanishing v makes the estimate infinite") {
  Window one(0, {1, 1}), v(0, {0, 1});
  CHECK(char_gop(one, v, one, 0.5, 1).value.is_inf());
  CHECK(char_linft_exact(one, v, 0.5).is_inf());
}

TEST_CASE("argument validation") {
  Window one(0, {1, 1});
  CHECK_THROWS_AS(char_gop(one, Window(0, {1}), one, 1, 1), ShapeError);
  CHECK_THROWS_AS(char_gop(one, one, one, -1, 1), InvalidParameter);
  CHECK_THROWS_AS(char_linft_exact(one, one, 2), InvalidParameter);
  CHECK(to_string(FormulaId::AntigopIV) == "antigop-iv");
  CHECK(to_string(AntigopVariant::RangeFlipped) == "range-flipped");
}

TEST_CASE("gop estimate scales like the optimal constant") {
  testing::Sampler s(3);
  for (int it = 0; it < 200; ++it) {
    const std::size_t N = s.size(1, 8);
    Window u = s.weights(N), v = s.weights(N), w = s.weights(N);
    const double t = s.log_uniform();
    for (Exponents e : kRegimes) {
      for (bool anti : {false, true}) {
        const auto var = AntigopVariant::RangeFlipped;
        const double base = formula(u, v, w, e, anti, var);
        CHECK(testing::close_rel(formula(scaled(u, t), v, w, e, anti, var), t * base, 1e-10));
        CHECK(testing::close_rel(formula(u, scaled(v, t), w, e, anti, var),
                                 std::pow(t, -1 / e.p) * base, 1e-10));
        CHECK(testing::close_rel(formula(u, v, scaled(w, t), e, anti, var),
                                 std::pow(t, 1 / e.q) * base, 1e-10));
      }
    }
  }
}

TEST_CASE("printed antigop regime II is not homogeneous in w") {
  Window u(0, {1, 2, 1}), v(0, {1, 3, 2}), w(0, {2, 1, 1});
  const double base = char_antigop(u, v, w, 3, 2).value.value();
  const double scaled_w = char_antigop(u, v, scaled(w, 4), 3, 2).value.value();
  CHECK_FALSE(testing::close_rel(scaled_w, std::pow(4, 0.5) * base, 1e-3));
}

TEST_CASE("antigop variants coincide where no flip applies") {
  Window u(0, {1, 2, 1}), v(0, {1, 3, 2}), w(0, {2, 1, 1});
  CHECK(char_antigop(u, v, w, 2, 3).value ==
        char_antigop(u, v, w, 2, 3, AntigopVariant::RangeFlipped).value);
}

TEST_CASE("subunit exponent shift identity") {
  // char(u, v, w, p, q) = char(u^p, v, w, 1, q/p)^{1/p} for the p <= 1 regimes.
  testing::Sampler s(4);
  for (int it = 0; it < 200; ++it) {
    const std::size_t N = s.size(1, 8);
    Window u = s.weights(N), v = s.weights(N), w = s.weights(N);
    for (Exponents e : {Exponents{0.5, 1}, Exponents{0.5, 0.25}, Exponents{0.25, 2}}) {
      const double lhs = char_gop(u, v, w, e.p, e.q).value.value();
      const double rhs = std::pow(char_gop(powered(u, e.p), v, w, 1, e.q / e.p).value.value(), 1 / e.p);
      CHECK(testing::close_rel(lhs, rhs, 1e-10));
      // antigop adds two separately normalized terms, so compare them one by one
      const auto flip = AntigopVariant::RangeFlipped;
      auto direct = char_antigop(u, v, w, e.p, e.q, flip);
      auto shifted = char_antigop(powered(u, e.p), v, w, 1, e.q / e.p, flip);
      if (direct.terms.empty()) {
        CHECK(testing::close_rel(direct.value.value(), std::pow(shifted.value.value(), 1 / e.p), 1e-10));
      } else {
        for (std::size_t t = 0; t < direct.terms.size(); ++t)
          CHECK(testing::close_rel(direct.terms[t].value.value(),
                                   std::pow(shifted.terms[t].value.value(), 1 / e.p), 1e-10));
      }
    }
  }
}
