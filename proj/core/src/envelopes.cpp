#include "hardy/envelopes.hpp"

#include <algorithm>

namespace hardy {

Window envelope(const Window& u, EnvelopeKind kind) {
  std::vector<double> out(u.values().begin(), u.values().end());
  auto pick = [&](double acc, double x) {
    return kind.bound == Bound::Upper ? std::max(acc, x) : std::min(acc, x);
  };
  // Upper-increasing and lower-decreasing scan from the left (k <= n),
  // the other two from the right (k >= n).
  const bool from_left = (kind.direction == Direction::Increasing) == (kind.bound == Bound::Upper);
  if (from_left) {
    for (std::size_t k = 1; k < out.size(); ++k) out[k] = pick(out[k - 1], out[k]);
  } else {
    for (std::size_t k = out.size() - 1; k-- > 0;) out[k] = pick(out[k + 1], out[k]);
  }
  return Window(u.start(), std::move(out));
}

Window reduce_weight_monotone(const Window& v, SumSide side) {
  return envelope(v, side == SumSide::RightSum ? kIncreasingLower : kDecreasingLower);
}

}  // namespace hardy
