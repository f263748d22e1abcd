#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hardy/bridge.hpp"
#include "hardy/window.hpp"

namespace hardy::testing {

/// Random weights for property tests: log-uniform on [2^-e, 2^e] with an
/// optional share of exact zeros.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, double exponent = 4.0) : rng_(seed), exponent_(exponent) {}

  double log_uniform() {
    std::uniform_real_distribution<double> d(-exponent_, exponent_);
    return std::exp2(d(rng_));
  }

  Window weights(std::size_t n, double zero_rate = 0.0, Index start = 0) {
    std::bernoulli_distribution zero(zero_rate);
    std::vector<double> vals(n);
    for (double& x : vals) x = zero(rng_) ? 0.0 : log_uniform();
    return Window(start, std::move(vals));
  }

  /// Small rationals k/d with k in [0, kmax], d in [1, dmax].
  RationalWindow rationals(std::size_t n, int kmax = 9, int dmax = 6, Index start = 0) {
    std::uniform_int_distribution<int> num(0, kmax), den(1, dmax);
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < n; ++i) vals.emplace_back(num(rng_), den(rng_));
    return RationalWindow(start, std::move(vals));
  }

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Index integer(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  double exponent_;
};

inline bool close_rel(double a, double b, double tol) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace hardy::testing
