#pragma once

#include <string>

namespace hardy {

/// The four (p, q) cases of the characterization theorems.
///   I:   1 < p <= q        II: p > 1, q < p
///   III: p <= 1, p <= q    IV: q < p <= 1
enum class RegimeCase { I, II, III, IV };

struct Regime {
  double p;
  double q;
  RegimeCase case_id;
};

/// Throws InvalidParameter unless p > 0 and q > 0 (both finite).
Regime classify_regime(double p, double q);

std::string to_string(RegimeCase c);

}  // namespace hardy
