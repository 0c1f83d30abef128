#include "ngsocx/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "ngsocx/catalog.hpp"
#include "ngsocx/constants.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/kernels.hpp"
#include "ngsocx/orbits.hpp"
#include "ngsocx/rng.hpp"

namespace ngsocx {

using constants::deg;

Vec3 GroundSite::up() const
{
    const double lat = lat_deg * deg, lon = lon_deg * deg;
    return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

Vec3 GroundSite::position_km() const { return up() * constants::earth_radius_km; }

void GroundSite::validate() const
{
    if (!(std::abs(lat_deg) <= 90.0)) throw InvariantError("site " + name + ": |lat_deg| must be <= 90");
    if (!(std::abs(lon_deg) <= 180.0)) throw InvariantError("site " + name + ": |lon_deg| must be <= 180");
}

double slant_range(const GroundSite& site, const Vec3& sat) { return (sat - site.position_km()).norm(); }

double elevation_angle(const GroundSite& site, const Vec3& sat)
{
    const Vec3 up = site.up();
    const Vec3 d = sat - site.position_km();
    const double r = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
    const double h = d.x * up.x + d.y * up.y + d.z * up.z;
    return std::asin(std::clamp(h / r, -1.0, 1.0)) / deg;
}

double angular_separation(const Vec3& a, const Vec3& b)
{
    return std::atan2(cross(a, b).norm(), dot(a, b)) / deg;
}

double angular_separation(const GroundSite& site, const Vec3& sat_a, const Vec3& sat_b)
{
    const Vec3 p = site.position_km();
    return angular_separation(sat_a - p, sat_b - p);
}

LinkGeometry make_link(const GroundSite& site, std::size_t sat_index, const Vec3& sat)
{
    LinkGeometry link;
    link.sat_index = sat_index;
    link.sat_position_km = sat;
    const Vec3 d = sat - site.position_km();
    link.slant_range_km = d.norm();
    link.direction = d * (1.0 / link.slant_range_km);
    link.elevation_deg = elevation_angle(site, sat);
    return link;
}

std::vector<LinkGeometry> visible_satellites(const GroundSite& site, const SystemState& state,
                                             const ConstellationSpec& spec)
{
    std::vector<LinkGeometry> out;
    if (!spec.covers_latitude(site.lat_deg)) return out;

    const std::size_t n = state.size();
    thread_local std::vector<double> sin_el, range;
    sin_el.resize(n);
    range.resize(n);
    const Vec3 p = site.position_km();
    const Vec3 up = site.up();
    kernels::active().look_angles({state.x_km.data(), state.y_km.data(), state.z_km.data(), n, p.x, p.y, p.z, up.x,
                                   up.y, up.z, sin_el.data(), range.data()});

    // Cheap prefilter on the sine, exact comparison in degrees afterwards.
    const double sin_floor = std::sin(spec.min_elevation_deg * deg) - 1e-12;
    std::vector<LinkGeometry> fallback;
    for (std::size_t i = 0; i < n; ++i) {
        if (sin_el[i] < sin_floor) continue;
        const double el = std::asin(std::clamp(sin_el[i], -1.0, 1.0)) / deg;
        if (el < spec.min_elevation_deg) continue;
        LinkGeometry link;
        link.sat_index = i;
        link.sat_position_km = state.position(i);
        link.slant_range_km = range[i];
        link.elevation_deg = el;
        link.direction = (link.sat_position_km - p) * (1.0 / range[i]);
        if (el >= spec.preferred_elevation_deg)
            out.push_back(link);
        else
            fallback.push_back(link);
    }
    return out.empty() ? fallback : out;
}

double visibility_statistics(const ConstellationModel& model, const GroundSite& site, std::size_t n_samples,
                             std::uint64_t seed)
{
    if (n_samples == 0) return 0.0;
    const auto id = stream_id_for(model.spec().name);
    double total = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        RngStream rng(seed, k, id, DrawPurpose::Visibility);
        total += static_cast<double>(visible_satellites(site, model.sample_epoch(rng), model.spec()).size());
    }
    return total / static_cast<double>(n_samples);
}

}  // namespace ngsocx
