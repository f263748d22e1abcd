#include <doctest.h>

#include "hardy/envelopes.hpp"
#include "hardy/error.hpp"
#include "hardy/oracle.hpp"
#include "sampling.hpp"

using namespace hardy;

namespace {

OracleConfig light() {
  OracleConfig cfg;
  cfg.restarts = 6;
  cfg.iterations = 120;
  cfg.random_candidates = 16;
  return cfg;
}

}  // namespace

TEST_CASE("spike oracle matches the exact sup formula") {
  testing::Sampler s(8);
  for (int it = 0; it < 200; ++it) {
    const std::size_t N = s.size(1, 10);
    Window u = s.weights(N, 0.1), v = s.weights(N);
    const double p = it % 2 ? 0.5 : 1.0;
    RatioProblem pr(u, v, constant_window(0, N, 1), p, kInf, forms::ag1);
    auto r = spike_oracle(pr);
    CHECK(testing::close_rel(r.constant.value(), char_linft_exact(u, v, p).value(), 1e-12));
    CHECK(r.certificate == Certificate::ExactSpike);
  }
}

TEST_CASE("spike oracle preconditions") {
  Window one(0, {1, 1});
  CHECK_THROWS_AS(spike_oracle(RatioProblem(one, one, one, 1, 1, forms::gop)), UnsupportedForm);
  CHECK_THROWS_AS(spike_oracle(RatioProblem(one, one, one, 2, 1, forms::g1)), InvalidParameter);
}

TEST_CASE("single index problem is evaluated directly") {
  RatioProblem pr(Window(0, {2}), Window(0, {4}), Window(0, {9}), 2, 2, forms::gop);
  auto r = brute_force_constant(pr, light());
  // lhs = (9 * (2a)^2)^{1/2} = 6a, rhs = (4 a^2)^{1/2} = 2a
  CHECK(r.constant.value() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r.evaluations == 1);
}

TEST_CASE("brute force recovers a Hoelder optimum") {
  // q = inf, w = 1: sup_a sup_n u_n sum_{k<=n} a_k / ||a||_{p,v} is attained by
  // a Hoelder block, with value sup_n u_n (sum_{k<=n} v_k^{1/(1-p)})^{(p-1)/p}
  // once u is nonincreasing.
  testing::Sampler s(9);
  for (int it = 0; it < 30; ++it) {
    const std::size_t N = s.size(2, 6);
    Window u = envelope(s.weights(N), kDecreasingUpper), v = s.weights(N);
    const double p = 2.0;
    double exact = 0.0, acc = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      acc += std::pow(v[n], 1 / (1 - p));
      exact = std::max(exact, u[n] * std::pow(acc, (p - 1) / p));
    }
    RatioProblem pr(u, v, constant_window(0, N, 1), p, kInf, forms::gop);
    auto r = brute_force_constant(pr, light());
    CHECK(r.constant.value() <= exact * (1 + 1e-12));
    CHECK(r.constant.value() >= exact * (1 - 1e-9));
  }
}

TEST_CASE("oracle is deterministic under seed and thread count") {
  testing::Sampler s(10);
  Window u = s.weights(6), v = s.weights(6), w = s.weights(6);
  RatioProblem pr(u, v, w, 2, 0.5, forms::antigop);
  auto cfg = light();
  cfg.seed = 77;
  auto a = brute_force_constant(pr, cfg);
  cfg.threads = 3;
  auto b = brute_force_constant(pr, cfg);
  CHECK(a.constant == b.constant);
  CHECK(a.argmax == b.argmax);
  CHECK(a.certificate == Certificate::Heuristic);
}

TEST_CASE("oracle config validation") {
  OracleConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
  cfg = OracleConfig{};
  cfg.step_decay = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
  cfg = OracleConfig{};
  cfg.families = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidParameter);
}

TEST_CASE("equivalence ratio sentinels") {
  auto z = make_equivalence_ratio(ExtNonneg::zero(), ExtNonneg::zero());
  CHECK(z.ratio == 1.0);
  CHECK(z.sentinel);
  auto i = make_equivalence_ratio(ExtNonneg::infinity(), ExtNonneg::infinity());
  CHECK(i.ratio == 1.0);
  CHECK(i.sentinel);
  auto f = make_equivalence_ratio(ExtNonneg(3), ExtNonneg(2));
  CHECK(f.ratio == 1.5);
  CHECK_FALSE(f.sentinel);
  CHECK(make_equivalence_ratio(ExtNonneg(1), ExtNonneg::zero()).ratio == kInf);
}

TEST_CASE("equivalence ratio over zero weight") {
  Window zero(0, {0, 0, 0}), one(0, {1, 1, 1});
  RatioProblem pr(one, one, zero, 2, 3, forms::gop);
  auto e = equivalence_ratio(pr, light());
  CHECK(e.sentinel);
  CHECK(e.ratio == 1.0);
  CHECK_THROWS_AS(equivalence_ratio(RatioProblem(one, one, one, 1, 1, forms::g1), light()),
                  UnsupportedForm);
}

TEST_CASE("chain sweep orders the three constants") {
  testing::Sampler s(12);
  for (auto fam : {ChainFamily::Simple, ChainFamily::Antigop, ChainFamily::Gop}) {
    for (int it = 0; it < 5; ++it) {
      const std::size_t N = s.size(1, 6);
      auto rep = chain_equivalence_sweep(s.weights(N), s.weights(N), s.weights(N), 0.5, 2, light(), fam);
      CHECK(rep.ordered);
      CHECK(rep.ratio31 >= 1.0);
      CHECK(rep.ratio31 < kInf);
    }
  }
  CHECK(parse_chain_family("gop") == ChainFamily::Gop);
  CHECK_THROWS_AS(parse_chain_family("x"), InvalidInput);
  CHECK_THROWS_AS(chain_equivalence_sweep(Window(0, {1}), Window(0, {1}), Window(0, {1}), 2, 1,
                                          light(), ChainFamily::Simple),
                  InvalidParameter);
}
