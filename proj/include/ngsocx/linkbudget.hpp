#pragma once

#include <span>
#include <vector>

#include "ngsocx/constants.hpp"

namespace ngsocx {

/// Inputs of one satellite-to-ground downlink, all per Hz.
struct LinkBudget {
    double eirpd_dBW_per_Hz = 0.0;
    double path_loss_dB = 0.0;
    double atmos_dB = 0.0;
    /// Receive gain at the off-axis angle relevant for this link.
    double rx_gain_dBi = 0.0;
    double noise_temp_K = constants::ngso_noise_temp_k;
    double frequency_Hz = constants::downlink_frequency_hz;

    /// Received power density, dBW/Hz.
    double received_dBW_per_Hz() const { return eirpd_dBW_per_Hz - path_loss_dB - atmos_dB + rx_gain_dBi; }
    /// Noise power density 10 log10(kT), dBW/Hz.
    double noise_dBW_per_Hz() const;
    void validate() const;
};

struct CinrBreakdown {
    double cn_dB = 0.0;
    std::vector<double> ci_dB;
    double cinr_dB = 0.0;

    void validate() const;
};

double carrier_to_noise_density_ratio(const LinkBudget& budget);
/// C/I with the victim received at boresight and the interferer through the
/// victim antenna at its off-axis angle (both already folded into rx_gain_dBi).
double carrier_to_interference_ratio(const LinkBudget& victim, const LinkBudget& interferer);
/// -10 log10(10^(-C/N/10) + sum 10^(-C/I_i/10)).
double combine_cinr(double cn_dB, std::span<const double> ci_dB);

CinrBreakdown make_breakdown(double cn_dB, std::vector<double> ci_dB);

}  // namespace ngsocx
