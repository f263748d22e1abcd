#include "hardy/regime.hpp"

#include <cmath>

#include "hardy/error.hpp"

namespace hardy {

Regime classify_regime(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw InvalidParameter("exponents p and q must be positive and finite");
  RegimeCase c;
  if (p > 1.0)
    c = p <= q ? RegimeCase::I : RegimeCase::II;
  else
    c = p <= q ? RegimeCase::III : RegimeCase::IV;
  return {p, q, c};
}

std::string to_string(RegimeCase c) {
  switch (c) {
    case RegimeCase::I: return "I";
    case RegimeCase::II: return "II";
    case RegimeCase::III: return "III";
    case RegimeCase::IV: return "IV";
  }
  return "?";
}

}  // namespace hardy
