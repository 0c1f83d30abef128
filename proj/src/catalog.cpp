#include "ngsocx/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ngsocx/antenna.hpp"
#include "ngsocx/constants.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/kv_format.hpp"
#include "ngsocx/orbits.hpp"

namespace ngsocx {

namespace embedded {
std::string_view catalog_text();
}

std::string normalize_name(std::string_view name)
{
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (c == ' ' || c == '-' || c == '_') continue;
        if (c == '\xC3' && i + 1 < name.size() && (name[i + 1] == '\xB8' || name[i + 1] == '\x98')) {
            out.push_back('o');  // UTF-8 o-slash
            ++i;
            continue;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

namespace {

bool same_name(std::string_view a, std::string_view b) { return normalize_name(a) == normalize_name(b); }

std::string section_name(const KvReader& r, const KvSection& s)
{
    if (s.args.size() != 1) r.fail_section("[" + s.kind + "] expects exactly one name");
    return s.args.front();
}

std::vector<LatitudeBand> parse_mask(KvReader& r, std::string_view key)
{
    std::vector<LatitudeBand> bands;
    for (const auto& item : r.list_or(key, {})) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) r.fail(key, "band '" + item + "' must be min:max");
        LatitudeBand b;
        try {
            b.min_deg = parse_double(std::string_view(item).substr(0, colon));
            b.max_deg = parse_double(std::string_view(item).substr(colon + 1));
        } catch (const ConfigError& e) {
            r.fail(key, e.what());
        }
        bands.push_back(b);
    }
    return bands;
}

int as_int(KvReader& r, std::string_view key, long long v)
{
    if (v < 0 || v > 1'000'000) r.fail(key, "out of range");
    return static_cast<int>(v);
}

[[noreturn]] void invariant(const std::string& owner, const std::string& field, const std::string& what)
{
    throw InvariantError(owner + ": field '" + field + "': " + what);
}

}  // namespace

std::string to_string(OrbitClass c)
{
    switch (c) {
    case OrbitClass::LEO: return "LEO";
    case OrbitClass::MEO: return "MEO";
    case OrbitClass::HEO: return "HEO";
    case OrbitClass::Geosync: return "GEOSYNC";
    case OrbitClass::GSO: return "GSO";
    }
    return "?";
}

OrbitClass parse_orbit_class(std::string_view s)
{
    for (auto c : {OrbitClass::LEO, OrbitClass::MEO, OrbitClass::HEO, OrbitClass::Geosync, OrbitClass::GSO})
        if (same_name(s, to_string(c))) return c;
    throw ConfigError("unknown orbit class '" + std::string(s) + "'");
}

std::string to_string(Variant v) { return v == Variant::Original ? "original" : "tuned"; }

Variant parse_variant(std::string_view s)
{
    if (same_name(s, "original")) return Variant::Original;
    if (same_name(s, "tuned")) return Variant::Tuned;
    throw ConfigError("unknown transceiver variant '" + std::string(s) + "' (expected original|tuned)");
}

bool ConstellationSpec::covers_latitude(double lat_deg) const
{
    if (coverage_mask.empty()) return true;
    return std::any_of(coverage_mask.begin(), coverage_mask.end(),
                       [&](const LatitudeBand& b) { return b.contains(lat_deg); });
}

double ConstellationSpec::perigee_radius_km() const
{
    if (const auto* c = std::get_if<CircularOrbit>(&shape)) return constants::earth_radius_km + c->altitude_km;
    return constants::earth_radius_km + std::get<EllipticalOrbit>(shape).perigee_km;
}

double ConstellationSpec::apogee_radius_km() const
{
    if (const auto* c = std::get_if<CircularOrbit>(&shape)) return constants::earth_radius_km + c->altitude_km;
    return constants::earth_radius_km + std::get<EllipticalOrbit>(shape).apogee_km;
}

double ConstellationSpec::semi_major_axis_km() const { return 0.5 * (perigee_radius_km() + apogee_radius_km()); }

double ConstellationSpec::eccentricity() const
{
    const double ra = apogee_radius_km(), rp = perigee_radius_km();
    return (ra - rp) / (ra + rp);
}

double ConstellationSpec::period_s() const
{
    const double a = semi_major_axis_km();
    return constants::two_pi * std::sqrt(a * a * a / constants::mu_km3_s2);
}

int ConstellationSpec::planes() const
{
    int n = 0;
    for (const auto& s : shells) n += s.planes;
    return n;
}

int ConstellationSpec::sats_per_plane() const { return shells.empty() ? 0 : shells.front().sats_per_plane; }

double ConstellationSpec::inclination_deg() const { return shells.empty() ? 0.0 : shells.front().inclination_deg; }

void ConstellationSpec::validate() const
{
    const std::string owner = "constellation " + name;
    if (name.empty()) throw InvariantError("constellation with empty name");
    if (orbit_class == OrbitClass::GSO) invariant(owner, "orbit_class", "GSO satellites belong in [gso]");
    if (const auto* c = std::get_if<CircularOrbit>(&shape)) {
        if (!(c->altitude_km > 0.0)) invariant(owner, "altitude_km", "must be > 0");
    } else {
        const auto& e = std::get<EllipticalOrbit>(shape);
        if (!(e.perigee_km > 0.0)) invariant(owner, "perigee_km", "must be > 0");
        if (!(e.apogee_km >= e.perigee_km)) invariant(owner, "apogee_km", "must be >= perigee_km");
        if (!(eccentricity() <= 0.95)) invariant(owner, "apogee_km", "eccentricity above 0.95");
        if (ground_track_repeat_periods < 1) invariant(owner, "ground_track_repeat_periods", "must be >= 1");
    }
    if (shells.empty()) invariant(owner, "shells", "at least one [shell] is required");
    int sum = 0;
    for (const auto& s : shells) {
        if (s.planes < 1) invariant(owner, "planes", "must be >= 1");
        if (s.sats_per_plane < 1) invariant(owner, "sats_per_plane", "must be >= 1");
        sum += s.size();
    }
    if (sum != total_satellites)
        invariant(owner, "total_satellites",
                  std::to_string(total_satellites) + " != sum of planes x sats_per_plane (" + std::to_string(sum) + ")");
    if (!(min_elevation_deg >= 0.0)) invariant(owner, "min_elevation_deg", "must be >= 0");
    if (!(preferred_elevation_deg >= min_elevation_deg))
        invariant(owner, "preferred_elevation_deg", "must be >= min_elevation_deg");
    if (!(preferred_elevation_deg < 90.0)) invariant(owner, "preferred_elevation_deg", "must be < 90");
    for (const auto& b : coverage_mask)
        if (!(b.min_deg <= b.max_deg) || b.min_deg < -90.0 || b.max_deg > 90.0)
            invariant(owner, "coverage_mask", "bands must satisfy -90 <= min <= max <= 90");
}

double GsoTerminal::noise_temp_K() const { return std::pow(10.0, (rx_peak_gain_dBi - g_over_t_dB_per_K) / 10.0); }

const GsoSatellite* GsoConfiguration::find_satellite(std::string_view n) const
{
    for (const auto& s : satellites)
        if (same_name(s.name, n)) return &s;
    return nullptr;
}

const GsoTerminal& GsoConfiguration::terminal(std::string_view n) const
{
    for (const auto& t : terminals)
        if (same_name(t.name, n)) return t;
    throw ConfigError("unknown GSO terminal '" + std::string(n) + "'");
}

void GsoConfiguration::validate() const
{
    if (!(separation_deg > 0.0)) invariant("gso", "separation_deg", "must be > 0");
    std::vector<double> lons;
    for (const auto& s : satellites) lons.push_back(s.longitude_deg);
    std::sort(lons.begin(), lons.end());
    for (std::size_t i = 1; i < lons.size(); ++i)
        if (std::abs(lons[i] - lons[i - 1] - separation_deg) > 0.5 * separation_deg)
            invariant("gso", "longitude_deg", "adjacent satellites are not ~separation_deg apart");
    for (const auto& t : terminals) {
        const double g = peak_gain_from_diameter(t.dish_diameter_m, constants::downlink_frequency_hz,
                                                 constants::aperture_efficiency);
        if (std::abs(g - t.rx_peak_gain_dBi) > 0.1)
            invariant("gso_terminal " + t.name, "rx_peak_gain_dBi", "inconsistent with dish diameter");
    }
}

const ConstellationSpec* Catalog::find_constellation(std::string_view n) const
{
    for (const auto& c : constellations)
        if (same_name(c.name, n)) return &c;
    return nullptr;
}

const ConstellationSpec& Catalog::constellation(std::string_view n) const
{
    if (const auto* c = find_constellation(n)) return *c;
    throw ConfigError("unknown constellation '" + std::string(n) + "'");
}

const TransceiverSet& Catalog::transceiver(std::string_view n, Variant variant) const
{
    const std::string& canonical = constellation(n).name;
    if (variant == Variant::Tuned)
        if (auto it = tuned.find(canonical); it != tuned.end()) return it->second;
    if (auto it = original.find(canonical); it != original.end()) return it->second;
    throw ConfigError("no transceiver parameters for '" + canonical + "'");
}

const SiteEntry* Catalog::find_site(std::string_view n) const
{
    for (const auto& s : sites)
        if (same_name(s.site.name, n)) return &s;
    return nullptr;
}

const GroundSite& Catalog::site(std::string_view n) const
{
    if (const auto* s = find_site(n)) return s->site;
    throw ConfigError("unknown site '" + std::string(n) + "'");
}

void Catalog::validate() const
{
    for (const auto& c : constellations) {
        c.validate();
        for (const auto& other : constellations)
            if (&other != &c && same_name(other.name, c.name))
                throw InvariantError("duplicate constellation '" + c.name + "'");
        if (!original.count(c.name))
            throw InvariantError("constellation " + c.name + ": missing [transceiver " + c.name + " original]");
    }
    auto check_set = [&](const std::string& sys, const TransceiverSet& t) {
        const std::string owner = "transceiver " + sys + " " + to_string(t.variant);
        if (!find_constellation(sys)) throw InvariantError(owner + ": unknown constellation");
        if (!(t.gs_noise_temp_K > 0.0)) invariant(owner, "gs_noise_temp_K", "must be > 0");
        if (!(t.gs_rx_beamwidth_3dB_deg > 0.0)) invariant(owner, "gs_rx_beamwidth_3dB_deg", "must be > 0");
        const double g = peak_gain_from_diameter(t.gs_dish_diameter_m, constants::downlink_frequency_hz,
                                                 constants::aperture_efficiency);
        if (std::abs(g - t.gs_rx_peak_gain_dBi) > 0.1)
            invariant(owner, "gs_rx_peak_gain_dBi", "differs from the aperture gain of the dish by more than 0.1 dB");
    };
    for (const auto& [sys, t] : original) check_set(sys, t);
    for (const auto& [sys, t] : tuned) {
        check_set(sys, t);
        if (constellation(sys).is_elliptical())
            throw InvariantError("transceiver " + sys + " tuned: elliptical constellations use the original set");
    }
    gso.validate();
    for (const auto& s : sites) s.site.validate();
}

namespace {

TransceiverSet read_transceiver(KvReader& r, Variant v)
{
    TransceiverSet t;
    t.variant = v;
    t.sat_tx_peak_gain_dBi = r.number("sat_tx_peak_gain_dBi");
    t.sat_eirpd_dBW_per_Hz = r.number("sat_eirpd_dBW_per_Hz");
    t.gs_dish_diameter_m = r.number("gs_dish_diameter_m");
    t.gs_rx_peak_gain_dBi = r.number("gs_rx_peak_gain_dBi");
    t.gs_rx_beamwidth_3dB_deg = r.number("gs_rx_beamwidth_3dB_deg");
    t.gs_noise_temp_K = r.number_or("gs_noise_temp_K", constants::ngso_noise_temp_k);
    t.gs_g_over_t_dB_per_K = r.optional_number("gs_g_over_t_dB_per_K");
    t.gs_tx_eirpd_note = r.string_or("gs_tx_eirpd", "");
    return t;
}

}  // namespace

Catalog load_catalog(std::string_view text, const std::string& source_name)
{
    const KvDocument doc = parse_kv(text, source_name);
    Catalog cat;
    {
        KvReader g(doc, doc.globals);
        cat.schema = g.string("schema");
        if (cat.schema != kCatalogSchema)
            g.fail("schema", "unsupported schema '" + cat.schema + "' (expected " + std::string(kCatalogSchema) + ")");
        g.finish();
    }

    for (const auto& s : doc.sections) {
        KvReader r(doc, s);
        if (s.kind == "site") {
            SiteEntry e;
            e.site.name = section_name(r, s);
            e.site.lat_deg = r.number("lat_deg");
            e.site.lon_deg = r.number("lon_deg");
            e.attenuation_anchor_dB = r.optional_number("attenuation_anchor_dB");
            cat.sites.push_back(e);
        } else if (s.kind == "constellation") {
            ConstellationSpec c;
            c.name = section_name(r, s);
            try {
                c.orbit_class = parse_orbit_class(r.string("orbit_class"));
            } catch (const ParseError&) {
                throw;
            } catch (const ConfigError& e) {
                r.fail("orbit_class", e.what());
            }
            if (r.has("altitude_km")) {
                c.shape = CircularOrbit{r.number("altitude_km")};
            } else {
                c.shape = EllipticalOrbit{r.number("apogee_km"), r.number("perigee_km")};
            }
            c.total_satellites = as_int(r, "total_satellites", r.integer("total_satellites"));
            c.min_elevation_deg = r.number("min_elevation_deg");
            c.preferred_elevation_deg = r.number("preferred_elevation_deg");
            c.coverage_mask = parse_mask(r, "coverage_mask");
            c.ground_track_repeat_periods =
                as_int(r, "ground_track_repeat_periods", r.integer_or("ground_track_repeat_periods", 1));
            c.theta0_deg = r.number_or("theta0_deg", 0.0);
            cat.constellations.push_back(std::move(c));
        } else if (s.kind == "shell") {
            const std::string owner = section_name(r, s);
            auto it = std::find_if(cat.constellations.begin(), cat.constellations.end(),
                                   [&](const auto& c) { return c.name == owner; });
            if (it == cat.constellations.end())
                r.fail_section("shell must follow its [constellation " + owner + "]");
            OrbitalShell sh;
            sh.planes = as_int(r, "planes", r.integer("planes"));
            sh.sats_per_plane = as_int(r, "sats_per_plane", r.integer("sats_per_plane"));
            sh.inclination_deg = r.number("inclination_deg");
            sh.phasing_offset_deg = r.number_or("phasing_offset_deg", 0.0);
            sh.raan_spread_deg = r.number_or("raan_spread_deg", 360.0);
            sh.raan_offset_deg = r.number_or("raan_offset_deg", 0.0);
            sh.argp_deg = r.number_or("argp_deg", 0.0);
            sh.mean_anomaly_offset_deg = r.number_or("mean_anomaly_offset_deg", 0.0);
            it->shells.push_back(sh);
        } else if (s.kind == "transceiver") {
            if (s.args.size() != 2) r.fail_section("expected [transceiver <system> original|tuned]");
            Variant v{};
            try {
                v = parse_variant(s.args[1]);
            } catch (const ConfigError& e) {
                r.fail_section(e.what());
            }
            auto& dest = v == Variant::Original ? cat.original : cat.tuned;
            if (dest.count(s.args[0])) r.fail_section("duplicate transceiver set");
            dest[s.args[0]] = read_transceiver(r, v);
        } else if (s.kind == "gso") {
            cat.gso.separation_deg = r.number_or("separation_deg", 6.0);
            cat.gso.sat_tx_peak_gain_dBi = r.number("sat_tx_peak_gain_dBi");
            cat.gso.sat_eirpd_dBW_per_Hz = r.number("sat_eirpd_dBW_per_Hz");
        } else if (s.kind == "gso_satellite") {
            cat.gso.satellites.push_back({section_name(r, s), r.number("longitude_deg")});
        } else if (s.kind == "gso_terminal") {
            GsoTerminal t;
            t.name = section_name(r, s);
            t.dish_diameter_m = r.number("dish_diameter_m");
            t.rx_peak_gain_dBi = r.number("rx_peak_gain_dBi");
            t.rx_beamwidth_3dB_deg = r.number("rx_beamwidth_3dB_deg");
            t.g_over_t_dB_per_K = r.number("g_over_t_dB_per_K");
            cat.gso.terminals.push_back(t);
        } else {
            r.fail_section("unknown section kind");
        }
        r.finish();
    }
    cat.validate();
    return cat;
}

Catalog load_catalog_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open catalog file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str(), path);
}

Catalog builtin_catalog()
{
    static const Catalog cat = load_catalog(embedded::catalog_text(), "<builtin catalog>");
    return cat;
}

Catalog default_catalog()
{
    if (const char* path = std::getenv(kCatalogEnvVar); path && *path) return load_catalog_file(path);
    return builtin_catalog();
}

std::string serialize_catalog(const Catalog& cat)
{
    std::ostringstream o;
    auto num = [](double v) { return format_exact(v); };
    o << "schema = " << cat.schema << "\n";
    for (const auto& s : cat.sites) {
        o << "\n[site " << s.site.name << "]\n";
        o << "lat_deg = " << num(s.site.lat_deg) << "\nlon_deg = " << num(s.site.lon_deg) << "\n";
        if (s.attenuation_anchor_dB) o << "attenuation_anchor_dB = " << num(*s.attenuation_anchor_dB) << "\n";
    }
    for (const auto& c : cat.constellations) {
        o << "\n[constellation " << c.name << "]\n";
        o << "orbit_class = " << to_string(c.orbit_class) << "\n";
        if (const auto* circ = std::get_if<CircularOrbit>(&c.shape)) {
            o << "altitude_km = " << num(circ->altitude_km) << "\n";
        } else {
            const auto& e = std::get<EllipticalOrbit>(c.shape);
            o << "apogee_km = " << num(e.apogee_km) << "\nperigee_km = " << num(e.perigee_km) << "\n";
        }
        o << "total_satellites = " << c.total_satellites << "\n";
        o << "min_elevation_deg = " << num(c.min_elevation_deg) << "\n";
        o << "preferred_elevation_deg = " << num(c.preferred_elevation_deg) << "\n";
        if (!c.coverage_mask.empty()) {
            o << "coverage_mask = ";
            for (std::size_t i = 0; i < c.coverage_mask.size(); ++i)
                o << (i ? ", " : "") << num(c.coverage_mask[i].min_deg) << ":" << num(c.coverage_mask[i].max_deg);
            o << "\n";
        }
        o << "ground_track_repeat_periods = " << c.ground_track_repeat_periods << "\n";
        o << "theta0_deg = " << num(c.theta0_deg) << "\n";
        for (const auto& sh : c.shells) {
            o << "\n[shell " << c.name << "]\n";
            o << "planes = " << sh.planes << "\nsats_per_plane = " << sh.sats_per_plane << "\n";
            o << "inclination_deg = " << num(sh.inclination_deg) << "\n";
            o << "phasing_offset_deg = " << num(sh.phasing_offset_deg) << "\n";
            o << "raan_spread_deg = " << num(sh.raan_spread_deg) << "\n";
            o << "raan_offset_deg = " << num(sh.raan_offset_deg) << "\n";
            o << "argp_deg = " << num(sh.argp_deg) << "\n";
            o << "mean_anomaly_offset_deg = " << num(sh.mean_anomaly_offset_deg) << "\n";
        }
    }
    auto write_sets = [&](const std::map<std::string, TransceiverSet>& sets) {
        for (const auto& [sys, t] : sets) {
            o << "\n[transceiver " << sys << " " << to_string(t.variant) << "]\n";
            o << "sat_tx_peak_gain_dBi = " << num(t.sat_tx_peak_gain_dBi) << "\n";
            o << "sat_eirpd_dBW_per_Hz = " << num(t.sat_eirpd_dBW_per_Hz) << "\n";
            o << "gs_dish_diameter_m = " << num(t.gs_dish_diameter_m) << "\n";
            o << "gs_rx_peak_gain_dBi = " << num(t.gs_rx_peak_gain_dBi) << "\n";
            o << "gs_rx_beamwidth_3dB_deg = " << num(t.gs_rx_beamwidth_3dB_deg) << "\n";
            o << "gs_noise_temp_K = " << num(t.gs_noise_temp_K) << "\n";
            if (t.gs_g_over_t_dB_per_K) o << "gs_g_over_t_dB_per_K = " << num(*t.gs_g_over_t_dB_per_K) << "\n";
            if (!t.gs_tx_eirpd_note.empty()) o << "gs_tx_eirpd = \"" << t.gs_tx_eirpd_note << "\"\n";
        }
    };
    write_sets(cat.original);
    write_sets(cat.tuned);
    o << "\n[gso]\nseparation_deg = " << num(cat.gso.separation_deg) << "\n";
    o << "sat_tx_peak_gain_dBi = " << num(cat.gso.sat_tx_peak_gain_dBi) << "\n";
    o << "sat_eirpd_dBW_per_Hz = " << num(cat.gso.sat_eirpd_dBW_per_Hz) << "\n";
    for (const auto& s : cat.gso.satellites)
        o << "\n[gso_satellite " << s.name << "]\nlongitude_deg = " << num(s.longitude_deg) << "\n";
    for (const auto& t : cat.gso.terminals) {
        o << "\n[gso_terminal " << t.name << "]\n";
        o << "dish_diameter_m = " << num(t.dish_diameter_m) << "\n";
        o << "rx_peak_gain_dBi = " << num(t.rx_peak_gain_dBi) << "\n";
        o << "rx_beamwidth_3dB_deg = " << num(t.rx_beamwidth_3dB_deg) << "\n";
        o << "g_over_t_dB_per_K = " << num(t.g_over_t_dB_per_K) << "\n";
    }
    return o.str();
}

std::vector<OrbitalElements> build_constellation(const ConstellationSpec& spec)
{
    std::vector<OrbitalElements> out;
    out.reserve(static_cast<std::size_t>(spec.total_satellites));
    const double a = spec.semi_major_axis_km();
    const double e = spec.eccentricity();
    auto wrap360 = [](double d) {
        double w = std::fmod(d, 360.0);
        return w < 0.0 ? w + 360.0 : w;
    };
    for (const auto& sh : spec.shells) {
        for (int p = 0; p < sh.planes; ++p) {
            const double raan = wrap360(sh.raan_offset_deg + sh.raan_spread_deg * p / sh.planes);
            for (int s = 0; s < sh.sats_per_plane; ++s) {
                OrbitalElements el;
                el.a_km = a;
                el.e = e;
                el.inc_deg = sh.inclination_deg;
                el.raan_deg = raan;
                el.argp_deg = sh.argp_deg;
                el.mean_anomaly_epoch_deg =
                    wrap360(sh.mean_anomaly_offset_deg + 360.0 * s / sh.sats_per_plane + sh.phasing_offset_deg * p);
                out.push_back(el);
            }
        }
    }
    return out;
}

}  // namespace ngsocx
