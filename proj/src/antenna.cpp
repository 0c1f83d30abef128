#include "ngsocx/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ngsocx/constants.hpp"
#include "ngsocx/errors.hpp"

namespace ngsocx {

void AntennaModel::validate() const
{
    if (!(peak_gain_dBi > 0.0)) throw InvariantError("antenna: peak_gain_dBi must be > 0");
    if (!(beamwidth_3dB_deg > 0.0)) throw InvariantError("antenna: beamwidth_3dB_deg must be > 0");
    if (!(efficiency > 0.0 && efficiency <= 1.0)) throw InvariantError("antenna: efficiency must be in (0, 1]");
}

double peak_gain_from_diameter(double diameter_m, double frequency_Hz, double efficiency)
{
    if (!(diameter_m > 0.0) || !(frequency_Hz > 0.0) || !(efficiency > 0.0) || efficiency > 1.0)
        throw ConfigError("peak_gain_from_diameter: diameter and frequency must be > 0, efficiency in (0, 1]");
    const double x = std::numbers::pi * diameter_m * frequency_Hz / constants::speed_of_light_m_s;
    return 10.0 * std::log10(efficiency * x * x);
}

double beamwidth_3db(double diameter_m, double frequency_Hz)
{
    if (!(diameter_m > 0.0) || !(frequency_Hz > 0.0))
        throw ConfigError("beamwidth_3db: diameter and frequency must be > 0");
    return 35.0 * (constants::speed_of_light_m_s / frequency_Hz) / diameter_m;
}

double off_axis_gain(const AntennaModel& m, double off_axis_deg)
{
    const double psi = std::clamp(off_axis_deg, 0.0, 180.0);
    const double psi_b = 0.5 * m.beamwidth_3dB_deg;
    const double r = psi / psi_b;
    const double main_lobe = m.peak_gain_dBi - 3.0 * r * r;
    if (psi == 0.0) return m.peak_gain_dBi;
    const double far = std::max(m.constants.far_a_dBi - m.constants.far_b * std::log10(psi),
                                m.constants.side_lobe_floor_dBi);
    return std::max(main_lobe, std::min(m.peak_gain_dBi - m.constants.near_in_floor_dB, far));
}

}  // namespace ngsocx
