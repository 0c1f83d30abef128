#include "ngsocx/orbits.hpp"

#include <cmath>
#include <stdexcept>

#include "ngsocx/constants.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/kernels.hpp"
#include "ngsocx/rng.hpp"

namespace ngsocx {

using constants::deg;
using constants::two_pi;

double wrap_two_pi(double angle_rad)
{
    double a = std::fmod(angle_rad, two_pi);
    if (a < 0.0) a += two_pi;
    // fmod of a tiny negative value can round up to exactly 2pi.
    return a >= two_pi ? 0.0 : a;
}

double wrap_longitude_deg(double lon_deg)
{
    double l = std::fmod(lon_deg + 180.0, 360.0);
    if (l < 0.0) l += 360.0;
    return l - 180.0;
}

double OrbitalElements::mean_motion_rad_s() const { return std::sqrt(constants::mu_km3_s2 / (a_km * a_km * a_km)); }

double OrbitalElements::period_s() const { return two_pi / mean_motion_rad_s(); }

void OrbitalElements::validate() const
{
    if (!(e >= 0.0 && e < 1.0)) throw InvariantError("orbital elements: eccentricity must be in [0, 1)");
    if (!(a_km * (1.0 - e) > constants::earth_radius_km))
        throw InvariantError("orbital elements: perigee below the Earth's surface");
}

double solve_kepler(double mean_anomaly_rad, double e)
{
    if (!(e >= 0.0 && e <= 0.95)) throw std::domain_error("solve_kepler: eccentricity outside [0, 0.95]");
    const double m = wrap_two_pi(mean_anomaly_rad);
    if (e == 0.0) return m;

    // f(E) = E - e sin E - M is strictly increasing with f(0) <= 0 <= f(2pi).
    auto f = [&](double ecc_anom) { return ecc_anom - e * std::sin(ecc_anom) - m; };
    double lo = 0.0;
    double hi = two_pi;
    double ecc_anom = e < 0.8 ? m + e * std::sin(m) : std::numbers::pi;
    constexpr int kMaxIterations = 200;
    for (int it = 0; it < kMaxIterations; ++it) {
        const double fe = f(ecc_anom);
        if (std::abs(fe) < 1e-13) return ecc_anom;
        if (fe > 0.0)
            hi = ecc_anom;
        else
            lo = ecc_anom;
        if (hi - lo < 1e-15) return ecc_anom;
        double next = ecc_anom - fe / (1.0 - e * std::cos(ecc_anom));
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        ecc_anom = next;
    }
    throw NumericalError("solve_kepler: no convergence");
}

namespace {

struct PerifocalBasis {
    Vec3 p;
    Vec3 q;
};

PerifocalBasis perifocal_basis(double raan_rad, double inc_rad, double argp_rad)
{
    const double co = std::cos(raan_rad), so = std::sin(raan_rad);
    const double ci = std::cos(inc_rad), si = std::sin(inc_rad);
    const double cw = std::cos(argp_rad), sw = std::sin(argp_rad);
    return {
        {co * cw - so * sw * ci, so * cw + co * sw * ci, sw * si},
        {-co * sw - so * cw * ci, -so * sw + co * cw * ci, cw * si},
    };
}

}  // namespace

Vec3 propagate_state(const OrbitalElements& el, double t_s)
{
    const double m = el.mean_anomaly_epoch_deg * deg + el.mean_motion_rad_s() * t_s;
    const double ecc_anom = solve_kepler(m, el.e);
    const auto basis = perifocal_basis(el.raan_deg * deg, el.inc_deg * deg, el.argp_deg * deg);
    const double along_p = el.a_km * (std::cos(ecc_anom) - el.e);
    const double along_q = el.a_km * std::sqrt(1.0 - el.e * el.e) * std::sin(ecc_anom);
    return basis.p * along_p + basis.q * along_q;
}

Vec3 inertial_to_earth_fixed(const Vec3& r, double earth_rotation_rad)
{
    const double c = std::cos(earth_rotation_rad), s = std::sin(earth_rotation_rad);
    return {c * r.x + s * r.y, c * r.y - s * r.x, r.z};
}

LatLon subsatellite_point(const Vec3& r)
{
    const double horiz = std::hypot(r.x, r.y);
    return {std::atan2(r.z, horiz) / deg, std::atan2(r.y, r.x) / deg};
}

ConstellationModel::ConstellationModel(ConstellationSpec spec)
    : spec_(std::move(spec)), elements_(build_constellation(spec_))
{
    if (spec_.is_elliptical()) return;

    const std::size_t n = elements_.size();
    for (auto* v : {&px_, &py_, &pz_, &qx_, &qy_, &qz_, &cos_u0_, &sin_u0_}) v->resize(n);
    std::size_t first = 0;
    for (const auto& shell : spec_.shells) {
        Group g;
        g.first = first;
        g.count = static_cast<std::size_t>(shell.size());
        g.radius_km = elements_[first].a_km;
        g.mean_motion = elements_[first].mean_motion_rad_s();
        for (std::size_t i = first; i < first + g.count; ++i) {
            const auto& el = elements_[i];
            // Argument of latitude measured from the ascending node.
            const auto basis = perifocal_basis(el.raan_deg * deg, el.inc_deg * deg, 0.0);
            const double u0 = wrap_two_pi((el.argp_deg + el.mean_anomaly_epoch_deg) * deg);
            px_[i] = basis.p.x, py_[i] = basis.p.y, pz_[i] = basis.p.z;
            qx_[i] = basis.q.x, qy_[i] = basis.q.y, qz_[i] = basis.q.z;
            cos_u0_[i] = std::cos(u0);
            sin_u0_[i] = std::sin(u0);
        }
        groups_.push_back(g);
        first += g.count;
    }
}

SystemState ConstellationModel::state_at(double t_s, double theta_rad) const
{
    SystemState state;
    state.constellation = spec_.name;
    state.epoch_s = t_s;
    state.earth_rotation_rad = theta_rad;
    const std::size_t n = elements_.size();
    state.x_km.resize(n);
    state.y_km.resize(n);
    state.z_km.resize(n);

    if (spec_.is_elliptical()) {
        const double c = std::cos(theta_rad), s = std::sin(theta_rad);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3 r = propagate_state(elements_[i], t_s);
            state.x_km[i] = c * r.x + s * r.y;
            state.y_km[i] = c * r.y - s * r.x;
            state.z_km[i] = r.z;
        }
        return state;
    }

    const auto& k = kernels::active();
    for (const auto& g : groups_) {
        const double nt = wrap_two_pi(g.mean_motion * t_s);
        kernels::CircularPropagation args{
            px_.data() + g.first, py_.data() + g.first, pz_.data() + g.first,
            qx_.data() + g.first, qy_.data() + g.first, qz_.data() + g.first,
            cos_u0_.data() + g.first, sin_u0_.data() + g.first, g.count,
            g.radius_km, std::cos(nt), std::sin(nt), std::cos(theta_rad), std::sin(theta_rad),
            state.x_km.data() + g.first, state.y_km.data() + g.first, state.z_km.data() + g.first,
        };
        k.propagate_circular(args);
    }
    return state;
}

double ConstellationModel::sampling_interval_s() const
{
    const double period = spec_.period_s();
    return spec_.is_elliptical() ? period * spec_.ground_track_repeat_periods : period;
}

SystemState ConstellationModel::sample_epoch(RngStream& rng) const
{
    const double t = rng.uniform() * sampling_interval_s();
    if (spec_.is_elliptical()) {
        const double theta = wrap_two_pi(spec_.theta0_deg * deg + constants::earth_rotation_rad_s * t);
        return state_at(t, theta);
    }
    const double theta = rng.uniform() * two_pi;
    return state_at(t, theta);
}

SystemState sample_epoch(const ConstellationSpec& spec, RngStream& rng)
{
    return ConstellationModel(spec).sample_epoch(rng);
}

double geostationary_radius_km()
{
    const double n = constants::earth_rotation_rad_s;
    return std::cbrt(constants::mu_km3_s2 / (n * n));
}

SystemState gso_state(const GsoConfiguration& gso)
{
    SystemState state;
    state.constellation = "GSO";
    const double r = geostationary_radius_km();
    for (const auto& sat : gso.satellites) {
        const double lon = sat.longitude_deg * deg;
        state.x_km.push_back(r * std::cos(lon));
        state.y_km.push_back(r * std::sin(lon));
        state.z_km.push_back(0.0);
    }
    return state;
}

std::vector<GroundTrackPoint> ground_track(const ConstellationSpec& spec, std::size_t sat_index, double duration_s,
                                           double step_s)
{
    if (!(step_s > 0.0)) throw std::invalid_argument("ground_track: step must be positive");
    const auto elements = build_constellation(spec);
    if (sat_index >= elements.size()) throw std::out_of_range("ground_track: satellite index out of range");
    const auto& el = elements[sat_index];

    std::vector<GroundTrackPoint> track;
    const auto steps = static_cast<std::size_t>(std::floor(duration_s / step_s + 1e-9));
    track.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * step_s;
        const double theta = spec.theta0_deg * deg + constants::earth_rotation_rad_s * t;
        const LatLon ll = subsatellite_point(inertial_to_earth_fixed(propagate_state(el, t), theta));
        track.push_back({t, ll.lat_deg, ll.lon_deg, spec.covers_latitude(ll.lat_deg)});
    }
    return track;
}

}  // namespace ngsocx
