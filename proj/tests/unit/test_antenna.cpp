#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "ngsocx/antenna.hpp"
#include "ngsocx/constants.hpp"

using namespace ngsocx;

namespace {

constexpr double kF = 12e9;

double oracle_gain(double d)
{
    const double x = std::numbers::pi * d * kF / 299792458.0;
    return 10.0 * std::log10(0.8 * x * x);
}

double oracle_pattern(double G, double bw, double psi)
{
    const double half = bw / 2;
    const double main = G - 3.0 * (psi / half) * (psi / half);
    const double far = psi > 0 ? std::max(32.0 - 25.0 * std::log10(psi), -10.0) : G;
    return std::max(main, std::min(G - 25.0, far));
}

AntennaModel antenna(double gain, double beamwidth)
{
    AntennaModel m;
    m.peak_gain_dBi = gain;
    m.beamwidth_3dB_deg = beamwidth;
    return m;
}

}  // namespace

TEST_CASE("aperture gain matches tabulated dish sizes within 0.1 dB")
{
    const std::pair<double, double> table[] = {{0.3, 30.6}, {0.45, 34.0}, {0.6, 36.6},
                                               {0.75, 38.5}, {1.0, 41.0}, {3.7, 52.4}};
    for (auto [d, g] : table) {
        const double got = peak_gain_from_diameter(d, kF, 0.8);
        CHECK(std::abs(got - g) <= 0.1);
        CHECK(got == doctest::Approx(oracle_gain(d)).epsilon(1e-13));
    }
    CHECK_THROWS(peak_gain_from_diameter(0.0, kF, 0.8));
    CHECK_THROWS(peak_gain_from_diameter(1.0, kF, 1.5));
}

TEST_CASE("half-power beamwidth")
{
    const double lambda = 299792458.0 / kF;
    CHECK(beamwidth_3db(0.45, kF) == doctest::Approx(35.0 * lambda / 0.45));
    CHECK(std::abs(beamwidth_3db(0.45, kF) - 1.9) < 0.06);
    CHECK(std::abs(beamwidth_3db(0.75, kF) - 1.2) < 0.05);
    CHECK(std::abs(beamwidth_3db(3.7, kF) - 0.2) < 0.05);
    CHECK(beamwidth_3db(0.9, kF) == doctest::Approx(beamwidth_3db(0.45, kF) / 2));
}

TEST_CASE("off-axis pattern against the envelope formula")
{
    const AntennaModel m = antenna(34.0, 1.9);
    CHECK(off_axis_gain(m, 0.0) == 34.0);
    for (double psi = 0.01; psi <= 180.0; psi *= 1.07)
        CHECK(off_axis_gain(m, psi) == doctest::Approx(oracle_pattern(34.0, 1.9, psi)).epsilon(1e-12));
    CHECK(off_axis_gain(m, 0.95) == doctest::Approx(31.0));
    CHECK(off_axis_gain(m, 10.0) == doctest::Approx(7.0));
    CHECK(off_axis_gain(m, 90.0) == doctest::Approx(-10.0));
    CHECK(off_axis_gain(m, 48.0) == doctest::Approx(std::max(32.0 - 25.0 * std::log10(48.0), -10.0)));
    CHECK(off_axis_gain(m, 250.0) == off_axis_gain(m, 180.0));
}

TEST_CASE("pattern is non-increasing and continuous")
{
    for (double G : {30.6, 34.0, 38.5, 52.4}) {
        const AntennaModel m = antenna(G, beamwidth_3db(std::pow(10.0, (G - oracle_gain(1.0)) / 20.0), kF));
        double prev = off_axis_gain(m, 0.0);
        int increases = 0, jumps = 0;
        for (double psi = 0.001; psi <= 180.0; psi += 0.001) {
            const double g = off_axis_gain(m, psi);
            if (g > prev + 1e-12) ++increases;
            if (std::abs(off_axis_gain(m, psi + 1e-7) - g) > 1e-3) ++jumps;
            prev = g;
        }
        CHECK(increases == 0);
        CHECK(jumps == 0);
    }
}

TEST_CASE("antenna validation")
{
    CHECK_THROWS(antenna(0.0, 1.0).validate());
    CHECK_THROWS(antenna(30.0, -1.0).validate());
    CHECK_NOTHROW(antenna(30.0, 1.0).validate());
}
