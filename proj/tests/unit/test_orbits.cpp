#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ngsocx/catalog.hpp"
#include "ngsocx/constants.hpp"
#include "ngsocx/orbits.hpp"
#include "ngsocx/rng.hpp"

using namespace ngsocx;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain bisection on f(E) = E - e sin E - M over [0, 2pi].
double bisection_kepler(double M, double e)
{
    double lo = 0.0, hi = 2 * kPi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid - e * std::sin(mid) - M < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double angle_between_deg(const Vec3& a, const Vec3& b)
{
    return std::atan2((cross(a, b)).norm(), dot(a, b)) * 180.0 / kPi;
}

}  // namespace

TEST_CASE("Kepler solver residual and bisection agreement on random inputs")
{
    std::mt19937_64 gen(1234);
    std::uniform_real_distribution<double> um(0.0, 2 * kPi), ue(0.0, 0.95);
    double worst_res = 0.0, worst_diff = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double M = um(gen), e = ue(gen);
        const double E = solve_kepler(M, e);
        worst_res = std::max(worst_res, std::abs(E - e * std::sin(E) - M));
        worst_diff = std::max(worst_diff, std::abs(E - bisection_kepler(M, e)));
    }
    CHECK(worst_res < 1e-10);
    CHECK(worst_diff < 1e-9);
}

TEST_CASE("Kepler solver edge cases")
{
    CHECK(solve_kepler(0.0, 0.9) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(solve_kepler(kPi, 0.95) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(solve_kepler(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Negative and wrapped mean anomalies land in [0, 2pi).
    const double E = solve_kepler(-0.5, 0.3);
    CHECK(E >= 0.0);
    CHECK(E < 2 * kPi);
    CHECK(std::abs(E - 0.3 * std::sin(E) - (2 * kPi - 0.5)) < 1e-10);
}

TEST_CASE("circular propagation keeps radius and period")
{
    OrbitalElements el{7571.0, 0.0, 53.0, 10.0, 0.0, 25.0};
    const double T = el.period_s();
    CHECK(T == doctest::Approx(2 * kPi * std::sqrt(std::pow(7571.0, 3) / constants::mu_km3_s2)));
    const Vec3 r0 = propagate_state(el, 0.0);
    CHECK((r0).norm() == doctest::Approx(7571.0).epsilon(1e-12));
    CHECK((propagate_state(el, 1234.5)).norm() == doctest::Approx(7571.0).epsilon(1e-12));
    const Vec3 r1 = propagate_state(el, T);
    CHECK((r1 - r0).norm() < 1e-6);
    // Inclination: maximum |z| equals R sin(i).
    double zmax = 0.0;
    for (int k = 0; k < 720; ++k) zmax = std::max(zmax, std::abs(propagate_state(el, T * k / 720.0).z));
    CHECK(zmax == doctest::Approx(7571.0 * std::sin(53.0 * kPi / 180)).epsilon(1e-4));
}

TEST_CASE("elliptical propagation reaches apogee and perigee radii")
{
    const Catalog cat = builtin_catalog();
    const auto& sn = cat.constellation("Space-Norway");
    const auto els = build_constellation(sn);
    const double T = els[0].period_s();
    double rmin = 1e99, rmax = 0.0;
    for (int k = 0; k <= 4000; ++k) {
        const double r = (propagate_state(els[0], T * k / 4000.0)).norm();
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    CHECK(rmin == doctest::Approx(sn.perigee_radius_km()).epsilon(1e-5));
    CHECK(rmax == doctest::Approx(sn.apogee_radius_km()).epsilon(1e-5));
}

TEST_CASE("earth-fixed rotation and sub-satellite point")
{
    const Vec3 r{7000.0, 0.0, 0.0};
    const Vec3 f = inertial_to_earth_fixed(r, kPi / 2);
    CHECK(f.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(f.y == doctest::Approx(-7000.0));
    const auto ll = subsatellite_point({0.0, 1.0, 1.0});
    CHECK(ll.lat_deg == doctest::Approx(45.0));
    CHECK(ll.lon_deg == doctest::Approx(90.0));
    CHECK(wrap_longitude_deg(190.0) == doctest::Approx(-170.0));
    CHECK(wrap_longitude_deg(-180.0) == -180.0);
    CHECK(wrap_two_pi(-0.5) == doctest::Approx(2 * kPi - 0.5));
}

TEST_CASE("ConstellationModel state matches per-satellite propagation")
{
    const Catalog cat = builtin_catalog();
    for (const char* name : {"Kepler", "NSS", "SpaceX"}) {
        const ConstellationModel model(cat.constellation(name));
        const SystemState s = model.state_at(5000.0, 1.25);
        REQUIRE(s.size() == model.size());
        for (std::size_t i = 0; i < s.size(); i += 37) {
            const Vec3 ref = inertial_to_earth_fixed(propagate_state(model.elements()[i], 5000.0), 1.25);
            CHECK((s.position(i) - ref).norm() < 1e-6);
        }
    }
}

TEST_CASE("geostationary radius and GSO state")
{
    const double r = geostationary_radius_km();
    CHECK(r == doctest::Approx(std::cbrt(constants::mu_km3_s2 *
                                         std::pow(constants::sidereal_day_s / (2 * kPi), 2)))
                   .epsilon(1e-12));
    CHECK(r == doctest::Approx(42164.17).epsilon(1e-5));
    const Catalog cat = builtin_catalog();
    const SystemState s = gso_state(cat.gso);
    REQUIRE(s.size() == cat.gso.satellites.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto ll = subsatellite_point(s.position(i));
        CHECK(ll.lat_deg == doctest::Approx(0.0).epsilon(1e-12).scale(1));
        CHECK(ll.lon_deg == doctest::Approx(cat.gso.satellites[i].longitude_deg));
    }
}

TEST_CASE("Space Norway: three periods are two sidereal days and the track closes")
{
    const Catalog cat = builtin_catalog();
    const auto& sn = cat.constellation("Space-Norway");
    const double repeat = 3 * sn.period_s();
    CHECK(std::abs(repeat - 2 * constants::sidereal_day_s) / (2 * constants::sidereal_day_s) < 0.01);

    const auto track = ground_track(sn, 0, repeat, repeat);
    REQUIRE(track.size() >= 2);
    const auto& a = track.front();
    const auto& b = track.back();
    const double lat = a.lat_deg * kPi / 180;
    const double dlon = std::remainder(b.lon_deg - a.lon_deg, 360.0);
    const double gap = std::hypot(b.lat_deg - a.lat_deg, dlon * std::cos(lat));
    CHECK(gap < 0.5);

    int mismatches = 0, active = 0;
    for (const auto& p : ground_track(sn, 0, repeat, 60.0)) {
        if (p.active != (p.lat_deg >= 55.0)) ++mismatches;
        active += p.active;
    }
    CHECK(mismatches == 0);
    CHECK(active > 0);
}

TEST_CASE("elliptical epochs respect the ground-track repeat interval")
{
    const Catalog cat = builtin_catalog();
    const ConstellationModel model(cat.constellation("Karousel"));
    CHECK(model.sampling_interval_s() == doctest::Approx(model.elements()[0].period_s()));
    for (std::uint64_t k = 0; k < 50; ++k) {
        RngStream rng(7, k, 1, DrawPurpose::Epoch);
        const SystemState s = model.sample_epoch(rng);
        CHECK(s.epoch_s >= 0.0);
        CHECK(s.epoch_s < model.sampling_interval_s());
        // Earth rotation is tied to time for elliptical orbits.
        const double expected =
            wrap_two_pi(cat.constellation("Karousel").theta0_deg * kPi / 180 + constants::earth_rotation_rad_s * s.epoch_s);
        CHECK(std::abs(std::remainder(s.earth_rotation_rad - expected, 2 * kPi)) < 1e-9);
    }
}

TEST_CASE("elements validation")
{
    OrbitalElements bad{6000.0, 0.0, 0, 0, 0, 0};
    CHECK_THROWS(bad.validate());
    OrbitalElements ecc{30000.0, 0.97, 63.4, 0, 270, 0};
    CHECK_THROWS(ecc.validate());
    CHECK(angle_between_deg({1, 0, 0}, {0, 1, 0}) == doctest::Approx(90.0));
}
