#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ngsocx/catalog.hpp"
#include "ngsocx/vec3.hpp"

namespace ngsocx {

class RngStream;

struct OrbitalElements {
    double a_km = 0.0;
    double e = 0.0;
    double inc_deg = 0.0;
    double raan_deg = 0.0;
    double argp_deg = 0.0;
    double mean_anomaly_epoch_deg = 0.0;

    bool operator==(const OrbitalElements&) const = default;
    double mean_motion_rad_s() const;
    double period_s() const;
    void validate() const;
};

/// Earth-fixed positions of every satellite of one constellation at one
/// epoch, stored as structure-of-arrays.
struct SystemState {
    std::string constellation;
    double epoch_s = 0.0;
    double earth_rotation_rad = 0.0;
    std::vector<double> x_km;
    std::vector<double> y_km;
    std::vector<double> z_km;

    std::size_t size() const { return x_km.size(); }
    Vec3 position(std::size_t i) const { return {x_km[i], y_km[i], z_km[i]}; }
};

/// Eccentric anomaly for mean anomaly `mean_anomaly_rad` (wrapped to [0, 2pi))
/// and eccentricity `e` in [0, 0.95]. Newton iteration guarded by a bisection
/// bracket; residual below 1e-10 rad.
double solve_kepler(double mean_anomaly_rad, double e);

/// Inertial (ECI) position at `t_s` seconds after the element epoch.
Vec3 propagate_state(const OrbitalElements& elements, double t_s);

/// Rotate an inertial vector into the Earth-fixed frame.
Vec3 inertial_to_earth_fixed(const Vec3& r, double earth_rotation_rad);

/// Geocentric (spherical) latitude/longitude of a position, degrees.
struct LatLon {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};
LatLon subsatellite_point(const Vec3& earth_fixed_km);

/// A constellation prepared for repeated propagation: element sets plus the
/// per-satellite constants the circular-orbit kernel needs.
class ConstellationModel {
public:
    explicit ConstellationModel(ConstellationSpec spec);

    const ConstellationSpec& spec() const { return spec_; }
    const std::vector<OrbitalElements>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// Earth-fixed state at time `t_s` with Earth rotation angle `theta_rad`.
    SystemState state_at(double t_s, double theta_rad) const;

    /// Draws a random epoch per the constellation's sampling rule: circular
    /// orbits get independent time and Earth rotation; elliptical orbits get a
    /// time within the ground-track repeat interval with the matching rotation.
    SystemState sample_epoch(RngStream& rng) const;

    /// Length of the sampling interval in seconds.
    double sampling_interval_s() const;

private:
    struct Group {
        std::size_t first = 0;
        std::size_t count = 0;
        double radius_km = 0.0;
        double mean_motion = 0.0;
    };

    ConstellationSpec spec_;
    std::vector<OrbitalElements> elements_;
    // Circular orbits: r(t) = R (cos(u0+nt) P + sin(u0+nt) Q), SoA layout.
    std::vector<Group> groups_;
    std::vector<double> px_, py_, pz_, qx_, qy_, qz_, cos_u0_, sin_u0_;
};

SystemState sample_epoch(const ConstellationSpec& spec, RngStream& rng);

/// Radius of the geostationary orbit implied by mu and the sidereal day.
double geostationary_radius_km();

/// Fixed Earth-fixed positions of the GSO configuration; identical for every epoch.
SystemState gso_state(const GsoConfiguration& gso);

struct GroundTrackPoint {
    double t_s = 0.0;
    double lat_deg = 0.0;
    double lon_deg = 0.0;
    bool active = false;
};

/// Sub-satellite points of one satellite from t = 0 with the constellation's
/// epoch-zero Earth rotation. `active` is true where the payload is on.
std::vector<GroundTrackPoint> ground_track(const ConstellationSpec& spec, std::size_t sat_index, double duration_s,
                                           double step_s);

double wrap_two_pi(double angle_rad);
double wrap_longitude_deg(double lon_deg);

}  // namespace ngsocx
