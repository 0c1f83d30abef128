#include <doctest.h>

#include "ngsocx/catalog.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/scenario.hpp"

using namespace ngsocx;

namespace {

Scenario base()
{
    Scenario s;
    s.site = "Miami";
    s.victim = "SpaceX";
    s.interferers = {"OneWeb-LEO", "Kepler"};
    s.variant = Variant::Tuned;
    s.iterations = 1000;
    s.seed = 42;
    return s;
}

}  // namespace

TEST_CASE("parse with defaults")
{
    const auto s = parse_scenario("schema = ngsocx-scenario/1\nsite = Aachen\nvictim = Kepler\n", "t");
    CHECK(s.site == "Aachen");
    CHECK(s.interferers.empty());
    CHECK(s.policy == MitigationPolicy::none());
    CHECK(s.variant == Variant::Original);
    CHECK(s.iterations == 60000);
    CHECK(s.seed == 1);
    CHECK(s.gso_terminal == "user");
}

TEST_CASE("explicit fields, hex seed and separation override")
{
    const auto s = parse_scenario("schema = ngsocx-scenario/1\nsite = Tromso\nvictim = SpaceX\n"
                                  "interferers = GSO, Kepler\npolicy = lookaside\nmin_separation_deg = 8\n"
                                  "variant = tuned\niterations = 250\nseed = 0x1F\n",
                                  "t");
    CHECK(s.interferers == std::vector<std::string>{"GSO", "Kepler"});
    CHECK(s.policy == MitigationPolicy::look_aside(8.0));
    CHECK(s.iterations == 250);
    CHECK(s.seed == 31);
}

TEST_CASE("scenario parse errors")
{
    CHECK_THROWS_AS(parse_scenario("site = Miami\nvictim = SpaceX\n", "t"), ParseError);
    CHECK_THROWS_AS(parse_scenario("schema = ngsocx-scenario/1\nsite = Miami\nvictim = SpaceX\npolicy = magic\n", "t"),
                    ConfigError);
    CHECK_THROWS_AS(parse_scenario("schema = ngsocx-scenario/1\nsite = Miami\nvictim = SpaceX\nitrations = 5\n", "t"),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario("schema = ngsocx-scenario/1\nsite = Miami\nvictim = SpaceX\niterations = -5\n", "t"),
                    ParseError);
    CHECK_THROWS_AS(parse_scenario("schema = ngsocx-scenario/1\nsite = X\nsite_lat_deg = 4\nvictim = SpaceX\n", "t"),
                    ParseError);
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/s.scn"), IoError);
}

TEST_CASE("canonical serialization round-trips and hash tracks content")
{
    const Scenario s = base();
    const Scenario again = parse_scenario(serialize_scenario(s), "rt");
    CHECK(again == s);
    CHECK(scenario_hash(again) == scenario_hash(s));
    CHECK(scenario_hash_hex(s).size() == 16);

    Scenario t = s;
    t.seed = 43;
    CHECK(scenario_hash(t) != scenario_hash(s));
    t = s;
    t.policy = MitigationPolicy::band_splitting();
    CHECK(scenario_hash(t) != scenario_hash(s));
    t = s;
    t.interferers = {"Kepler", "OneWeb-LEO"};
    CHECK(scenario_hash(t) != scenario_hash(s));
}

TEST_CASE("resolve: names, coverage and invariants")
{
    const Catalog cat = builtin_catalog();
    Scenario s = base();
    s.interferers = {"oneweb leo", "Space Norway", "GSO"};
    const auto r = resolve_scenario(s, cat);
    CHECK(r.site.name == "Miami");
    CHECK_FALSE(r.victim_is_gso);
    CHECK(r.victim == "SpaceX");
    CHECK(r.ngso_interferers == std::vector<std::string>{"OneWeb-LEO"});
    CHECK(r.gso_interferes);
    CHECK(r.excluded == std::vector<std::string>{"Space-Norway"});
    CHECK_FALSE(r.warnings.empty());
    CHECK(r.attenuation_anchor_dB.value() == 4.8);

    Scenario dup = base();
    dup.interferers = {"Kepler", "kepler"};
    CHECK_THROWS_AS(resolve_scenario(dup, cat), InvariantError);
    Scenario self = base();
    self.interferers = {"SpaceX"};
    CHECK_THROWS_AS(resolve_scenario(self, cat), InvariantError);
    Scenario uncovered = base();
    uncovered.victim = "NSS";
    CHECK_THROWS_AS(resolve_scenario(uncovered, cat), InvariantError);
    Scenario unknown = base();
    unknown.interferers = {"Nope"};
    CHECK_THROWS_AS(resolve_scenario(unknown, cat), ConfigError);

    Scenario gso = base();
    gso.victim = "Intelsat-16";
    const auto rg = resolve_scenario(gso, cat);
    CHECK(rg.victim_is_gso);
    CHECK(rg.gso_interferes);
}

TEST_CASE("custom site coordinates")
{
    const Catalog cat = builtin_catalog();
    Scenario s = base();
    s.site = "Lab";
    s.site_lat_deg = 40.0;
    s.site_lon_deg = -3.7;
    s.site_attenuation_anchor_dB = 2.0;
    const auto r = resolve_scenario(s, cat);
    CHECK(r.site.lat_deg == 40.0);
    CHECK(r.attenuation_anchor_dB.value() == 2.0);
}
