#pragma once

#include <numbers>

namespace ngsocx::constants {

inline constexpr double mu_km3_s2 = 398600.4418;
inline constexpr double earth_radius_km = 6371.0;
inline constexpr double sidereal_day_s = 86164.0905;
inline constexpr double earth_rotation_rad_s = 2.0 * std::numbers::pi / sidereal_day_s;
inline constexpr double speed_of_light_m_s = 2.99792458e8;
/// 10*log10 of Boltzmann's constant, dBW/(Hz K).
inline constexpr double boltzmann_dBW = -228.6;

inline constexpr double downlink_frequency_hz = 12.0e9;
inline constexpr double ngso_noise_temp_k = 140.0;
inline constexpr double aperture_efficiency = 0.8;

inline constexpr double deg = std::numbers::pi / 180.0;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace ngsocx::constants
