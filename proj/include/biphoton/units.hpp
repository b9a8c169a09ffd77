#pragma once

#include <complex>
#include <numbers>

namespace biphoton {

using Complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi = std::numbers::pi;

/// Vacuum speed of light [m/s].
inline constexpr double speed_of_light = 299792458.0;

inline constexpr Complex imag_unit{0.0, 1.0};

}  // namespace biphoton
