#pragma once

#include <optional>

namespace ngsocx {

enum class AntennaPattern { ReferencePattern };

/// Envelope constants of the reference pattern.
struct PatternConstants {
    /// Near-in floor relative to peak gain, dB.
    double near_in_floor_dB = 25.0;
    double far_a_dBi = 32.0;
    double far_b = 25.0;
    /// Absolute side-lobe floor, dBi.
    double side_lobe_floor_dBi = -10.0;
};

struct AntennaModel {
    double peak_gain_dBi = 0.0;
    double beamwidth_3dB_deg = 0.0;
    AntennaPattern pattern = AntennaPattern::ReferencePattern;
    double efficiency = 0.8;
    std::optional<double> diameter_m;
    PatternConstants constants;

    void validate() const;
};

/// Aperture gain 10 log10(eff (pi d f / c)^2), dBi.
double peak_gain_from_diameter(double diameter_m, double frequency_Hz, double efficiency);
/// Half-power beamwidth approximation 35 lambda / d, degrees.
double beamwidth_3db(double diameter_m, double frequency_Hz);
/// Gain at `off_axis_deg` from boresight, dBi.
///
/// G(psi) = max(G - 3 (psi/psi_b)^2, min(G - 25, max(32 - 25 log10 psi, -10)))
/// with psi_b the half 3 dB beamwidth. Continuous and non-increasing in psi.
double off_axis_gain(const AntennaModel& model, double off_axis_deg);

}  // namespace ngsocx
