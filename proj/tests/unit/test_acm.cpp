#include <doctest.h>

#include <cmath>

#include "ngsocx/acm.hpp"
#include "ngsocx/errors.hpp"

using namespace ngsocx;

TEST_CASE("built-in MODCOD table shape")
{
    const auto& t = ModcodTable::builtin();
    REQUIRE(t.rows().size() >= 20);
    CHECK(t.rows().back().spectral_efficiency == doctest::Approx(5.90));
    for (std::size_t i = 1; i < t.rows().size(); ++i) {
        CHECK(t.rows()[i].threshold_dB > t.rows()[i - 1].threshold_dB);
        CHECK(t.rows()[i].spectral_efficiency > t.rows()[i - 1].spectral_efficiency);
    }
}

TEST_CASE("spectral efficiency picks the highest row not above the CINR")
{
    const ModcodTable t({{"a", 0.0, 1.0}, {"b", 5.0, 2.0}, {"c", 10.0, 5.9}});
    CHECK(t.spectral_efficiency(-0.1) == 0.0);
    CHECK(t.spectral_efficiency(0.0) == 1.0);
    CHECK(t.spectral_efficiency(4.999) == 1.0);
    CHECK(t.spectral_efficiency(5.0) == 2.0);
    CHECK(t.spectral_efficiency(100.0) == 5.9);
    const auto m = t.with_margin(1.0);
    CHECK(m.spectral_efficiency(5.5) == 1.0);
    CHECK(m.spectral_efficiency(6.0) == 2.0);
    CHECK(t.spectral_efficiency(std::nan("")) == 0.0);
}

TEST_CASE("MODCOD table validation and parsing")
{
    CHECK_THROWS_AS(ModcodTable({{"a", 1.0, 1.0}, {"b", 0.5, 5.9}}), InvariantError);
    CHECK_THROWS_AS(ModcodTable({{"a", 1.0, 1.0}, {"b", 2.0, 5.0}}), InvariantError);
    const auto t = ModcodTable::parse("# c\nmodcod,threshold_dB,spectral_efficiency\nq,1.5,1.0\ntop,12,5.9\n", "t");
    REQUIRE(t.rows().size() == 2);
    CHECK(t.rows()[0] == Modcod{"q", 1.5, 1.0});
    CHECK_THROWS_AS(ModcodTable::parse("modcod,threshold_dB,spectral_efficiency\nq,x,1\n", "t"), ParseError);
    CHECK_THROWS_AS(ModcodTable::load_file("missing.csv"), IoError);
}

TEST_CASE("throughput degradation")
{
    CHECK(throughput_degradation(5.90, 1.0) == 0.0);
    CHECK(throughput_degradation(0.0, 1.0) == 1.0);
    CHECK(throughput_degradation(5.90, 0.5) == doctest::Approx(0.5));
    CHECK(throughput_degradation(2.95, 1.0 / 3.0) == doctest::Approx(1.0 - 1.0 / 6.0));
    CHECK_THROWS(throughput_degradation(6.5, 1.0));
    CHECK_THROWS(throughput_degradation(1.0, 0.0));
}
