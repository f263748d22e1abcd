#pragma once

#include "hardy/window.hpp"

namespace hardy {

enum class Direction { Increasing, Decreasing };
enum class Bound { Upper, Lower };

/// (Increasing, Upper):  sup_{k<=n} u_k     (Decreasing, Upper):  sup_{k>=n} u_k
/// (Increasing, Lower):  inf_{k>=n} u_k     (Decreasing, Lower):  inf_{k<=n} u_k
struct EnvelopeKind {
  Direction direction;
  Bound bound;
};

inline constexpr EnvelopeKind kIncreasingUpper{Direction::Increasing, Bound::Upper};
inline constexpr EnvelopeKind kDecreasingUpper{Direction::Decreasing, Bound::Upper};
inline constexpr EnvelopeKind kIncreasingLower{Direction::Increasing, Bound::Lower};
inline constexpr EnvelopeKind kDecreasingLower{Direction::Decreasing, Bound::Lower};

/// Window-restricted envelope; same start and length as u.
Window envelope(const Window& u, EnvelopeKind kind);

/// Which half-line the functional aggregates over.  LeftSum covers S/I
/// (sup or sum over j <= n), RightSum covers S*/I* (over j >= n).
enum class SumSide { LeftSum, RightSum };

/// Replaces the denominator weight by the lower envelope that leaves the
/// supremum of phi(a) / sum a_n v_n unchanged for functionals monotone under
/// the corresponding operator: RightSum -> inf_{k>=n} v_k, LeftSum -> inf_{k<=n} v_k.
Window reduce_weight_monotone(const Window& v, SumSide side);

}  // namespace hardy
