#pragma once

// Doubling-lemma constants for alpha > 1: twice the largest lhs/rhs observed
// over the calibration ensemble (seed kCalibrationSeed, kCalibrationSamples
// draws).  Regenerate with `hardy_acceptance --calibrate`.

namespace hardy::acceptance {

inline constexpr unsigned long long kCalibrationSeed = 0xC0FFEE;
inline constexpr int kCalibrationSamples = 20000;

inline constexpr double kDoublingConstant15 = 5.7327761531649042;
inline constexpr double kDoublingConstant20 = 9.4658234487139019;

}  // namespace hardy::acceptance
