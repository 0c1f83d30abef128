#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ngsocx/acm.hpp"
#include "ngsocx/catalog.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/montecarlo.hpp"
#include "ngsocx/reporting.hpp"
#include "ngsocx/rng.hpp"

using namespace ngsocx;

namespace {

Scenario scenario(std::string victim, std::vector<std::string> interferers, MitigationPolicy policy,
                  std::uint64_t iterations = 200, std::string site = "Miami")
{
    Scenario s;
    s.site = std::move(site);
    s.victim = std::move(victim);
    s.interferers = std::move(interferers);
    s.policy = policy;
    s.variant = Variant::Tuned;
    s.iterations = iterations;
    s.seed = 2024;
    return s;
}

LinkGeometry at_azimuth(std::size_t idx, double az_deg)
{
    LinkGeometry g;
    g.sat_index = idx;
    const double a = az_deg * std::numbers::pi / 180.0;
    g.direction = {std::cos(a), std::sin(a), 0.0};
    return g;
}

}  // namespace

TEST_CASE("active interferer is the closest of up to three random draws")
{
    const Vec3 victim{1.0, 0.0, 0.0};
    std::vector<LinkGeometry> few{at_azimuth(0, 50), at_azimuth(1, 10), at_azimuth(2, 30)};
    for (std::uint64_t k = 0; k < 50; ++k) {
        RngStream rng(1, k, 9, DrawPurpose::InterfererSelection);
        CHECK(select_active_interferer(few, victim, rng) == 1);
    }

    // With 10 candidates the closest wins with probability 3/10 and the
    // farthest can never win.
    std::vector<LinkGeometry> many;
    for (std::size_t i = 0; i < 10; ++i) many.push_back(at_azimuth(i, 5.0 * (i + 1)));
    int closest = 0, farthest = 0;
    const int n = 20000;
    for (int k = 0; k < n; ++k) {
        RngStream rng(2, static_cast<std::uint64_t>(k), 9, DrawPurpose::InterfererSelection);
        const auto i = select_active_interferer(many, victim, rng);
        closest += i == 0;
        farthest += i == 9;
    }
    CHECK(std::abs(closest / double(n) - 0.3) < 0.015);
    CHECK(farthest == 0);
    RngStream rng(1, 0, 9, DrawPurpose::InterfererSelection);
    CHECK_THROWS(select_active_interferer({}, victim, rng));
}

TEST_CASE("iterations are reproducible and independent of worker count")
{
    const Catalog cat = builtin_catalog();
    const Simulation sim(scenario("SpaceX", {"OneWeb-LEO", "Kepler", "GSO"}, MitigationPolicy::none(), 300), cat);
    const auto a = run_campaign(sim, {1});
    const auto b = run_campaign(sim, {7});
    REQUIRE(a.results.size() == 300);
    CHECK(iterations_csv(a) == iterations_csv(b));
    CHECK(ccdf_csv(a) == ccdf_csv(b));
    const auto again = sim.run_iteration(123);
    CHECK(again.delta_r == a.results[123].delta_r);
    CHECK(again.cinr.cinr_dB == a.results[123].cinr.cinr_dB);
}

TEST_CASE("no-interferer campaign: C/(I+N) equals C/N and delta R follows the MODCOD table")
{
    const Catalog cat = builtin_catalog();
    const Simulation sim(scenario("SpaceX", {}, MitigationPolicy::none(), 200), cat);
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto r = sim.run_iteration(k);
        REQUIRE_FALSE(r.outage);
        CHECK(r.interferers.empty());
        CHECK(r.cinr.cinr_dB == r.cinr.cn_dB);
        CHECK(r.victim_elevation_deg >= 25.0);
        const double se = ModcodTable::builtin().spectral_efficiency(r.cinr.cn_dB);
        CHECK(r.delta_r == quantize_sig6(1.0 - se / 5.90));
    }
}

TEST_CASE("adding an interferer never improves any iteration")
{
    const Catalog cat = builtin_catalog();
    const Simulation base(scenario("SpaceX", {}, MitigationPolicy::none(), 300), cat);
    const Simulation one(scenario("SpaceX", {"Kepler"}, MitigationPolicy::none(), 300), cat);
    const Simulation two(scenario("SpaceX", {"Kepler", "OneWeb-LEO"}, MitigationPolicy::none(), 300), cat);
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto a = base.run_iteration(k), b = one.run_iteration(k), c = two.run_iteration(k);
        CHECK(a.cinr.cn_dB == b.cinr.cn_dB);
        CHECK(b.cinr.cinr_dB <= a.cinr.cinr_dB);
        CHECK(c.cinr.cinr_dB <= b.cinr.cinr_dB);
        CHECK(b.delta_r >= a.delta_r);
        CHECK(c.delta_r >= b.delta_r);
    }
}

TEST_CASE("policy invariants hold on every iteration")
{
    const Catalog cat = builtin_catalog();
    const Simulation look(scenario("OneWeb-LEO", {"SpaceX", "Kepler", "GSO"}, MitigationPolicy::look_aside(), 300), cat);
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto r = look.run_iteration(k);
        if (r.selection == SelectionOutcome::Selected) {
            for (const auto& i : r.interferers) CHECK(i.separation_deg >= 5.0 - 1e-9);
        }
    }
    const Simulation prot(scenario("SpaceX", {"OneWeb-LEO"}, MitigationPolicy::gso_protection(), 300), cat);
    int outages = 0;
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto r = prot.run_iteration(k);
        if (r.outage) {
            ++outages;
            CHECK(r.delta_r == 1.0);
            CHECK(std::isnan(r.cinr.cinr_dB));
            CHECK(r.selection == SelectionOutcome::ProtectionOutage);
        } else {
            CHECK(r.victim_min_separation_deg >= 30.0);
        }
    }
    CHECK(outages < 300);
}

TEST_CASE("band splitting divides the band among triggered systems")
{
    const Catalog cat = builtin_catalog();
    const Simulation sim(scenario("SpaceX", {"OneWeb-LEO", "Kepler", "Karousel"}, MitigationPolicy::band_splitting(), 300),
                         cat);
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto r = sim.run_iteration(k);
        int triggered = 0;
        for (const auto& i : r.interferers) triggered += i.band_split_triggered;
        CHECK(r.bw_fraction == doctest::Approx(1.0 / (1 + triggered)));
        CHECK(r.delta_r == quantize_sig6(throughput_degradation(r.se_act, r.bw_fraction)));
    }
}

TEST_CASE("GSO victim sees the other GSO satellites")
{
    const Catalog cat = builtin_catalog();
    const Simulation sim(scenario("Intelsat-16", {}, MitigationPolicy::none(), 20), cat);
    const auto r = sim.run_iteration(0);
    std::size_t gso = 0;
    for (const auto& i : r.interferers) gso += !i.ngso;
    CHECK(gso == cat.gso.satellites.size() - 1);
    // Neighbours 6 deg away in longitude appear at a wider topocentric angle.
    for (const auto& i : r.interferers) CHECK(i.separation_deg > 6.0);
    CHECK(r.cinr.cinr_dB < r.cinr.cn_dB);
}

TEST_CASE("missing data file is an I/O error")
{
    const Catalog cat = builtin_catalog();
    Scenario s = scenario("SpaceX", {}, MitigationPolicy::none(), 10);
    s.modcod_table = "/nonexistent/modcod.csv";
    CHECK_THROWS_AS(Simulation(s, cat), IoError);
}
