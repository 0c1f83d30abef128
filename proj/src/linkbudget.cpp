#include "ngsocx/linkbudget.hpp"

#include <algorithm>
#include <cmath>

#include "ngsocx/errors.hpp"

namespace ngsocx {

double LinkBudget::noise_dBW_per_Hz() const { return 10.0 * std::log10(noise_temp_K) + constants::boltzmann_dBW; }

void LinkBudget::validate() const
{
    for (double v : {eirpd_dBW_per_Hz, path_loss_dB, atmos_dB, rx_gain_dBi, frequency_Hz})
        if (!std::isfinite(v)) throw InvariantError("link budget: non-finite field");
    if (!(noise_temp_K > 0.0)) throw InvariantError("link budget: noise temperature must be > 0");
}

void CinrBreakdown::validate() const
{
    constexpr double tol = 1e-9;
    if (cinr_dB > cn_dB + tol) throw InvariantError("cinr exceeds C/N");
    for (double ci : ci_dB)
        if (cinr_dB > ci + tol) throw InvariantError("cinr exceeds a C/I term");
    if (std::abs(cinr_dB - combine_cinr(cn_dB, ci_dB)) > tol) throw InvariantError("cinr inconsistent with its terms");
}

double carrier_to_noise_density_ratio(const LinkBudget& b) { return b.received_dBW_per_Hz() - b.noise_dBW_per_Hz(); }

double carrier_to_interference_ratio(const LinkBudget& victim, const LinkBudget& interferer)
{
    return victim.received_dBW_per_Hz() - interferer.received_dBW_per_Hz();
}

double combine_cinr(double cn_dB, std::span<const double> ci_dB)
{
    if (ci_dB.empty()) return cn_dB;
    double sum = std::pow(10.0, -cn_dB / 10.0);
    for (double ci : ci_dB) sum += std::pow(10.0, -ci / 10.0);
    return -10.0 * std::log10(sum);
}

CinrBreakdown make_breakdown(double cn_dB, std::vector<double> ci_dB)
{
    CinrBreakdown b;
    b.cn_dB = cn_dB;
    b.cinr_dB = combine_cinr(cn_dB, ci_dB);
    b.ci_dB = std::move(ci_dB);
    return b;
}

}  // namespace ngsocx
