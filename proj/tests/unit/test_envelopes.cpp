#include <doctest.h>

#include <algorithm>

#include "hardy/envelopes.hpp"
#include "hardy/ext.hpp"
#include "sampling.hpp"

using namespace hardy;

namespace {

// Brute force: least nonincreasing majorant is U_n = max_{i>=n} u_i, and so on.
Window naive(const Window& u, EnvelopeKind kind) {
  std::vector<double> out(u.size());
  const auto vals = u.values();
  for (std::size_t n = 0; n < u.size(); ++n) {
    const bool right = (kind.direction == Direction::Decreasing) == (kind.bound == Bound::Upper);
    auto first = right ? vals.begin() + n : vals.begin();
    auto last = right ? vals.end() : vals.begin() + n + 1;
    out[n] = kind.bound == Bound::Upper ? *std::max_element(first, last) : *std::min_element(first, last);
  }
  return Window(u.start(), out);
}

}  // namespace

TEST_CASE("envelope examples") {
  Window u(0, {3, 1, 2});
  CHECK(envelope(u, kDecreasingUpper) == Window(0, {3, 2, 2}));
  CHECK(envelope(u, kIncreasingUpper) == Window(0, {3, 3, 3}));
  CHECK(envelope(u, kDecreasingLower) == Window(0, {3, 1, 1}));
  CHECK(envelope(u, kIncreasingLower) == Window(0, {1, 1, 2}));
  CHECK(envelope(Window(5, {kInf, 1}), kDecreasingUpper) == Window(5, {kInf, 1}));
}

TEST_CASE("envelopes agree with direct extrema and are monotone") {
  testing::Sampler s(11);
  for (int it = 0; it < 300; ++it) {
    Window u = s.weights(s.size(1, 12), 0.2, s.integer(-5, 5));
    for (EnvelopeKind kind : {kIncreasingUpper, kDecreasingUpper, kIncreasingLower, kDecreasingLower}) {
      Window e = envelope(u, kind);
      CHECK(e == naive(u, kind));
      const auto v = e.values();
      if (kind.direction == Direction::Increasing)
        CHECK(std::is_sorted(v.begin(), v.end()));
      else
        CHECK(std::is_sorted(v.rbegin(), v.rend()));
      CHECK(envelope(e, kind) == e);
    }
  }
}

TEST_CASE("monotone weight reduction") {
  Window v(0, {4, 1, 9});
  CHECK(reduce_weight_monotone(v, SumSide::RightSum) == Window(0, {1, 1, 9}));
  CHECK(reduce_weight_monotone(v, SumSide::LeftSum) == Window(0, {4, 1, 1}));
}
