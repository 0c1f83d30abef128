#include "ngsocx/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "ngsocx/catalog.hpp"
#include "ngsocx/constants.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/kv_format.hpp"

namespace ngsocx {

double free_space_path_loss(double distance_km, double frequency_Hz)
{
    if (!(distance_km > 0.0) || !(frequency_Hz > 0.0))
        throw ConfigError("free_space_path_loss: distance and frequency must be > 0");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_km * 1000.0 * frequency_Hz /
                             constants::speed_of_light_m_s);
}

double ExceedanceModel::evaluate(double anchor_dB, double elevation_deg, double probability) const
{
    const double at_anchor_elevation =
        std::max(anchor_dB * std::pow(probability / anchor_probability, exponent), floor_dB);
    return at_anchor_elevation * std::sin(anchor_elevation_deg * constants::deg) /
           std::sin(elevation_deg * constants::deg);
}

namespace {

double csc_deg(double el) { return 1.0 / std::sin(el * constants::deg); }

/// Index i with axis[i] <= x <= axis[i+1], clamped to the end segments.
std::size_t segment(const std::vector<double>& axis, double x)
{
    const auto it = std::upper_bound(axis.begin(), axis.end(), x);
    std::size_t i = it == axis.begin() ? 0 : static_cast<std::size_t>(it - axis.begin()) - 1;
    return std::min(i, axis.size() - 2);
}

void check_grid(const std::string& site, const AttenuationTable::Grid& g)
{
    auto strictly_ascending = [](const std::vector<double>& v) {
        return std::adjacent_find(v.begin(), v.end(), [](double a, double b) { return !(a < b); }) == v.end();
    };
    if (g.elevations_deg.size() < 2 || g.probabilities.size() < 2)
        throw InvariantError("attenuation table: site " + site + " needs at least two elevations and probabilities");
    if (!strictly_ascending(g.elevations_deg) || !strictly_ascending(g.probabilities))
        throw InvariantError("attenuation table: site " + site + " axes must be strictly ascending");
    if (g.elevations_deg.front() <= 0.0 || g.elevations_deg.back() > 90.0)
        throw InvariantError("attenuation table: site " + site + " elevations must lie in (0, 90]");
    if (g.probabilities.front() <= 0.0 || g.probabilities.back() >= 1.0)
        throw InvariantError("attenuation table: site " + site + " probabilities must lie in (0, 1)");
    if (g.values_dB.size() != g.elevations_deg.size() * g.probabilities.size())
        throw InvariantError("attenuation table: site " + site + " grid is incomplete");
    const std::size_t np = g.probabilities.size();
    for (std::size_t e = 0; e < g.elevations_deg.size(); ++e)
        for (std::size_t p = 0; p < np; ++p) {
            const double v = g.values_dB[e * np + p];
            if (!(v >= 0.0)) throw InvariantError("attenuation table: site " + site + " has negative attenuation");
            if (p > 0 && v > g.values_dB[e * np + p - 1])
                throw InvariantError("attenuation table: site " + site + " increases with probability");
            if (e > 0 && v > g.values_dB[(e - 1) * np + p])
                throw InvariantError("attenuation table: site " + site + " increases with elevation");
        }
}

}  // namespace

void AttenuationTable::add_site(const std::string& site, Grid grid)
{
    check_grid(site, grid);
    grids_[site] = std::move(grid);
}

const AttenuationTable::Grid* AttenuationTable::find(std::string_view site) const
{
    if (auto it = grids_.find(std::string(site)); it != grids_.end()) return &it->second;
    const std::string key = normalize_name(site);
    for (const auto& [name, g] : grids_)
        if (normalize_name(name) == key) return &g;
    return nullptr;
}

bool AttenuationTable::has_site(std::string_view site) const { return find(site) != nullptr; }

const AttenuationTable::Grid& AttenuationTable::grid(std::string_view site) const
{
    if (const Grid* g = find(site)) return *g;
    throw ConfigError("no atmospheric attenuation data for site '" + std::string(site) + "'");
}

std::vector<std::string> AttenuationTable::sites() const
{
    std::vector<std::string> out;
    for (const auto& [name, g] : grids_) out.push_back(name);
    return out;
}

double AttenuationTable::attenuation(std::string_view site, double elevation_deg, double probability) const
{
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0))
        throw ConfigError("atmospheric attenuation: elevation must lie in (0, 90]");
    if (!(probability > 0.0 && probability < 1.0))
        throw ConfigError("atmospheric attenuation: unavailability must lie in (0, 1)");
    const Grid& g = grid(site);
    const std::size_t np = g.probabilities.size();

    const double pc = std::clamp(probability, g.probabilities.front(), g.probabilities.back());
    const double lp = std::log10(pc);
    const std::size_t pi = segment(g.probabilities, pc);
    const double lp0 = std::log10(g.probabilities[pi]), lp1 = std::log10(g.probabilities[pi + 1]);
    const double wp = (lp - lp0) / (lp1 - lp0);

    const std::size_t ei = segment(g.elevations_deg, elevation_deg);
    const double c0 = csc_deg(g.elevations_deg[ei]), c1 = csc_deg(g.elevations_deg[ei + 1]);
    const double we = (csc_deg(elevation_deg) - c0) / (c1 - c0);

    auto at = [&](std::size_t e, std::size_t p) { return g.values_dB[e * np + p]; };
    auto along_p = [&](std::size_t e) {
        if (wp == 0.0) return at(e, pi);
        if (wp == 1.0) return at(e, pi + 1);
        return at(e, pi) + wp * (at(e, pi + 1) - at(e, pi));
    };
    const double a0 = along_p(ei), a1 = along_p(ei + 1);
    if (we == 0.0) return a0;
    if (we == 1.0) return a1;
    return std::max(0.0, a0 + we * (a1 - a0));
}

const std::vector<double>& AttenuationTable::default_elevations_deg()
{
    static const std::vector<double> v{5, 10, 15, 20, 25, 30, 40, 50, 60, 70, 80, 90};
    return v;
}

const std::vector<double>& AttenuationTable::default_probabilities()
{
    static const std::vector<double> v{1e-5, 2e-5, 5e-5, 1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 0.01, 0.02,
                                       0.05, 0.1,  0.2,  0.3,  0.5,  0.7,  0.9,  0.99, 0.999, 0.99999};
    return v;
}

AttenuationTable AttenuationTable::from_catalog(const Catalog& catalog, const ExceedanceModel& model)
{
    AttenuationTable t;
    for (const auto& s : catalog.sites) {
        if (!s.attenuation_anchor_dB) continue;
        Grid g;
        g.elevations_deg = default_elevations_deg();
        g.probabilities = default_probabilities();
        for (double el : g.elevations_deg)
            for (double p : g.probabilities)
                g.values_dB.push_back(el == model.anchor_elevation_deg && p == model.anchor_probability
                                          ? *s.attenuation_anchor_dB
                                          : model.evaluate(*s.attenuation_anchor_dB, el, p));
        t.add_site(s.site.name, std::move(g));
    }
    return t;
}

AttenuationTable AttenuationTable::parse(std::string_view text, const std::string& source_name)
{
    struct Acc {
        std::set<double> els, ps;
        std::map<std::pair<double, double>, double> v;
    };
    std::map<std::string, Acc> acc;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (t.rfind("site", 0) == 0) continue;
        }
        const auto f = split_list(t, ',');
        if (f.size() != 4) throw ParseError(source_name, lineno, "expected site,elevation_deg,probability,attenuation_dB");
        double el = 0, p = 0, a = 0;
        try {
            el = parse_double(f[1]);
            p = parse_double(f[2]);
            a = parse_double(f[3]);
        } catch (const ConfigError& e) {
            throw ParseError(source_name, lineno, e.what());
        }
        auto& s = acc[f[0]];
        if (!s.v.emplace(std::make_pair(el, p), a).second)
            throw ParseError(source_name, lineno, "duplicate grid point");
        s.els.insert(el);
        s.ps.insert(p);
    }
    AttenuationTable t;
    for (auto& [site, s] : acc) {
        Grid g;
        g.elevations_deg.assign(s.els.begin(), s.els.end());
        g.probabilities.assign(s.ps.begin(), s.ps.end());
        for (double el : g.elevations_deg)
            for (double p : g.probabilities) {
                auto it = s.v.find({el, p});
                if (it == s.v.end())
                    throw InvariantError(source_name + ": site " + site + " is missing grid point (" + format_exact(el) +
                                         ", " + format_exact(p) + ")");
                g.values_dB.push_back(it->second);
            }
        t.add_site(site, std::move(g));
    }
    return t;
}

AttenuationTable AttenuationTable::load_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open attenuation table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::string AttenuationTable::serialize() const
{
    std::ostringstream o;
    o << "site,elevation_deg,probability,attenuation_dB\n";
    for (const auto& [site, g] : grids_) {
        const std::size_t np = g.probabilities.size();
        for (std::size_t e = 0; e < g.elevations_deg.size(); ++e)
            for (std::size_t p = 0; p < np; ++p)
                o << site << ',' << format_exact(g.elevations_deg[e]) << ',' << format_exact(g.probabilities[p]) << ','
                  << format_exact(g.values_dB[e * np + p]) << '\n';
    }
    return o.str();
}

double atmospheric_attenuation(const AttenuationTable& table, std::string_view site, double elevation_deg,
                               double unavailability, double frequency_Hz)
{
    if (std::abs(frequency_Hz - constants::downlink_frequency_hz) > 1.0)
        throw ConfigError("atmospheric attenuation data is tabulated at 12 GHz only");
    return table.attenuation(site, elevation_deg, unavailability);
}

}  // namespace ngsocx
