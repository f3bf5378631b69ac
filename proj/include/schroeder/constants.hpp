#pragma once

namespace schroeder::constants {

// 15+ significant digits; used by every asymptotic formula.
inline constexpr double kEulerGamma = 0.577215664901533;
inline constexpr double kPiSquaredOver6 = 1.644934066848226;
inline constexpr double kLn2 = 0.693147180559945;
inline constexpr double kE = 2.718281828459045;

}  // namespace schroeder::constants
