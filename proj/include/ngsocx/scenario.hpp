#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngsocx/catalog.hpp"
#include "ngsocx/geometry.hpp"
#include "ngsocx/mitigation.hpp"

namespace ngsocx {

inline constexpr std::string_view kScenarioSchema = "ngsocx-scenario/1";
/// Interferer identifier for the whole GSO configuration.
inline constexpr std::string_view kGsoSystem = "GSO";

struct Scenario {
    std::string schema{kScenarioSchema};
    /// Catalog site name, or a custom site when lat/lon are given.
    std::string site;
    std::optional<double> site_lat_deg;
    std::optional<double> site_lon_deg;
    std::optional<double> site_attenuation_anchor_dB;
    /// NGSO constellation name or GSO satellite name.
    std::string victim;
    std::vector<std::string> interferers;
    MitigationPolicy policy = MitigationPolicy::none();
    Variant variant = Variant::Original;
    std::uint64_t iterations = 60000;
    std::uint64_t seed = 1;
    /// Unavailability sampling law; only "uniform" (on (0,1)) exists.
    std::string unavailability_sampling = "uniform";
    /// GSO ground-station class used for GSO links.
    std::string gso_terminal = "user";
    double modcod_margin_dB = 0.0;
    /// Optional data-file overrides; empty means built-in.
    std::string attenuation_table;
    std::string modcod_table;

    bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(std::string_view text, const std::string& source_name);
Scenario load_scenario_file(const std::string& path);
/// Canonical text form; every field is written, in a fixed order.
std::string serialize_scenario(const Scenario& scenario);
/// FNV-1a over the canonical serialization.
std::uint64_t scenario_hash(const Scenario& scenario);
std::string scenario_hash_hex(const Scenario& scenario);

/// A scenario checked against a catalog, with names canonicalized.
struct ResolvedScenario {
    Scenario scenario;
    GroundSite site;
    std::optional<double> attenuation_anchor_dB;
    bool victim_is_gso = false;
    /// Canonical victim name (constellation or GSO satellite).
    std::string victim;
    /// NGSO interferers that cover the site, canonical names.
    std::vector<std::string> ngso_interferers;
    /// GSO satellites interfere (always true for a GSO victim).
    bool gso_interferes = false;
    /// Interferers dropped because the site is outside their coverage mask.
    std::vector<std::string> excluded;
    std::vector<std::string> warnings;
};

/// Checks invariants: victim not among interferers, names known, victim
/// covers the site. Uncovered interferers are excluded with a warning.
ResolvedScenario resolve_scenario(const Scenario& scenario, const Catalog& catalog);

}  // namespace ngsocx
