#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ngsocx/vec3.hpp"

namespace ngsocx {

struct ConstellationSpec;
struct SystemState;
class ConstellationModel;
class RngStream;

/// Ground station location on the spherical Earth, at zero altitude.
struct GroundSite {
    std::string name;
    double lat_deg = 0.0;
    double lon_deg = 0.0;

    bool operator==(const GroundSite&) const = default;

    Vec3 position_km() const;
    /// Local vertical (outward unit normal).
    Vec3 up() const;
    void validate() const;
};

/// Line-of-sight from a site to one satellite.
struct LinkGeometry {
    std::size_t sat_index = 0;
    double slant_range_km = 0.0;
    double elevation_deg = 0.0;
    Vec3 sat_position_km;
    /// Unit vector from the site towards the satellite.
    Vec3 direction;
};

double slant_range(const GroundSite& site, const Vec3& sat_position_km);
double elevation_angle(const GroundSite& site, const Vec3& sat_position_km);
/// Angle at the site between the two lines of sight, degrees in [0, 180].
double angular_separation(const GroundSite& site, const Vec3& sat_a_km, const Vec3& sat_b_km);
/// Same quantity from precomputed unit directions.
double angular_separation(const Vec3& dir_a, const Vec3& dir_b);

LinkGeometry make_link(const GroundSite& site, std::size_t sat_index, const Vec3& sat_position_km);

/// Satellites at or above the preferred elevation if there are any, otherwise
/// those at or above the minimum elevation. Empty when the site lies outside
/// the constellation's coverage mask.
std::vector<LinkGeometry> visible_satellites(const GroundSite& site, const SystemState& state,
                                             const ConstellationSpec& spec);

/// Mean number of available satellites over independently sampled epochs.
double visibility_statistics(const ConstellationModel& model, const GroundSite& site, std::size_t n_samples,
                             std::uint64_t seed);

}  // namespace ngsocx
