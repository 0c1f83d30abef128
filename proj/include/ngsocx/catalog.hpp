#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ngsocx/geometry.hpp"

namespace ngsocx {

enum class OrbitClass { LEO, MEO, HEO, Geosync, GSO };

struct CircularOrbit {
    double altitude_km = 0.0;
    bool operator==(const CircularOrbit&) const = default;
};

struct EllipticalOrbit {
    double apogee_km = 0.0;
    double perigee_km = 0.0;
    bool operator==(const EllipticalOrbit&) const = default;
};

using OrbitShape = std::variant<CircularOrbit, EllipticalOrbit>;

/// Closed latitude interval [min_deg, max_deg].
struct LatitudeBand {
    double min_deg = -90.0;
    double max_deg = 90.0;
    bool operator==(const LatitudeBand&) const = default;
    bool contains(double lat_deg) const { return lat_deg >= min_deg && lat_deg <= max_deg; }
};

/// One Walker-style group of planes. A constellation has one or more shells
/// that share its orbit shape.
struct OrbitalShell {
    int planes = 1;
    int sats_per_plane = 1;
    double inclination_deg = 0.0;
    /// Mean-anomaly step between adjacent planes.
    double phasing_offset_deg = 0.0;
    /// Arc over which the planes' RAANs are spread: 360 (delta) or 180 (star).
    double raan_spread_deg = 360.0;
    double raan_offset_deg = 0.0;
    double argp_deg = 0.0;
    double mean_anomaly_offset_deg = 0.0;

    bool operator==(const OrbitalShell&) const = default;
    int size() const { return planes * sats_per_plane; }
};

struct ConstellationSpec {
    std::string name;
    OrbitClass orbit_class = OrbitClass::LEO;
    OrbitShape shape = CircularOrbit{};
    int total_satellites = 0;
    std::vector<OrbitalShell> shells;
    double min_elevation_deg = 0.0;
    double preferred_elevation_deg = 0.0;
    std::vector<LatitudeBand> coverage_mask;
    /// Orbital periods after which the ground track closes (elliptical only).
    int ground_track_repeat_periods = 1;
    /// Earth rotation angle at t = 0 for elliptical constellations, degrees.
    double theta0_deg = 0.0;

    bool operator==(const ConstellationSpec&) const = default;

    bool is_elliptical() const { return std::holds_alternative<EllipticalOrbit>(shape); }
    bool covers_latitude(double lat_deg) const;
    double semi_major_axis_km() const;
    double eccentricity() const;
    double period_s() const;
    double perigee_radius_km() const;
    double apogee_radius_km() const;

    int planes() const;
    int sats_per_plane() const;
    double inclination_deg() const;

    void validate() const;
};

enum class Variant { Original, Tuned };

struct TransceiverSet {
    Variant variant = Variant::Original;
    double sat_tx_peak_gain_dBi = 0.0;
    double sat_eirpd_dBW_per_Hz = 0.0;
    double gs_dish_diameter_m = 0.0;
    double gs_rx_peak_gain_dBi = 0.0;
    double gs_rx_beamwidth_3dB_deg = 0.0;
    double gs_noise_temp_K = 140.0;
    std::optional<double> gs_g_over_t_dB_per_K;
    /// Ground Tx EIRPD as tabulated for the operator (uplink, unused).
    std::string gs_tx_eirpd_note;

    bool operator==(const TransceiverSet&) const = default;
};

struct GsoSatellite {
    std::string name;
    double longitude_deg = 0.0;
    bool operator==(const GsoSatellite&) const = default;
};

/// A GSO ground-station class (user terminal or Earth station).
struct GsoTerminal {
    std::string name;
    double dish_diameter_m = 0.0;
    double rx_peak_gain_dBi = 0.0;
    double rx_beamwidth_3dB_deg = 0.0;
    double g_over_t_dB_per_K = 0.0;

    bool operator==(const GsoTerminal&) const = default;
    /// Receiver noise temperature implied by gain and G/T.
    double noise_temp_K() const;
};

struct GsoConfiguration {
    double separation_deg = 6.0;
    std::vector<GsoSatellite> satellites;
    double sat_tx_peak_gain_dBi = 0.0;
    double sat_eirpd_dBW_per_Hz = 0.0;
    std::vector<GsoTerminal> terminals;

    bool operator==(const GsoConfiguration&) const = default;
    const GsoSatellite* find_satellite(std::string_view name) const;
    const GsoTerminal& terminal(std::string_view name) const;
    void validate() const;
};

struct SiteEntry {
    GroundSite site;
    /// Atmospheric attenuation at 50 deg elevation and 0.1 % unavailability, dB.
    std::optional<double> attenuation_anchor_dB;
    bool operator==(const SiteEntry&) const = default;
};

struct Catalog {
    std::string schema;
    std::vector<ConstellationSpec> constellations;
    std::map<std::string, TransceiverSet> original;
    std::map<std::string, TransceiverSet> tuned;
    GsoConfiguration gso;
    std::vector<SiteEntry> sites;

    bool operator==(const Catalog&) const = default;

    const ConstellationSpec& constellation(std::string_view name) const;
    const ConstellationSpec* find_constellation(std::string_view name) const;
    /// Tuned falls back to Original for constellations without a tuned set.
    const TransceiverSet& transceiver(std::string_view name, Variant variant) const;
    const GroundSite& site(std::string_view name) const;
    const SiteEntry* find_site(std::string_view name) const;
    void validate() const;
};

inline constexpr std::string_view kCatalogSchema = "ngsocx-catalog/1";
/// Environment variable naming a catalog file that replaces the built-in one.
inline constexpr const char* kCatalogEnvVar = "NGSOCX_CATALOG";

Catalog load_catalog(std::string_view text, const std::string& source_name);
Catalog load_catalog_file(const std::string& path);
Catalog builtin_catalog();
/// Built-in catalog, or the file named by NGSOCX_CATALOG when set.
Catalog default_catalog();
std::string serialize_catalog(const Catalog& catalog);

/// Builds the per-satellite element sets for a constellation.
struct OrbitalElements;
std::vector<OrbitalElements> build_constellation(const ConstellationSpec& spec);

/// Lookup key for system and site names: case-insensitive, ignoring blanks,
/// '-' and '_'.
std::string normalize_name(std::string_view name);

std::string to_string(OrbitClass c);
std::string to_string(Variant v);
OrbitClass parse_orbit_class(std::string_view s);
Variant parse_variant(std::string_view s);

}  // namespace ngsocx
