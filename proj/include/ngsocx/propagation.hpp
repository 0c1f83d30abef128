#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ngsocx {

struct Catalog;

/// Free-space path loss for a distance in km, dB.
double free_space_path_loss(double distance_km, double frequency_Hz);

/// Exceedance model used to synthesize grids from a single site anchor.
struct ExceedanceModel {
    double anchor_elevation_deg = 50.0;
    double anchor_probability = 0.001;
    double exponent = -0.3;
    double floor_dB = 0.1;

    /// A(p, el) = max(A0 (p/p0)^exponent, floor) * csc(el) / csc(el0).
    double evaluate(double anchor_dB, double elevation_deg, double probability) const;
};

/// Attenuation over (elevation, unavailability) per site. Interpolation is
/// linear in csc(elevation) and linear in log10(probability); outside the
/// grid the elevation axis extrapolates and the probability axis clamps.
class AttenuationTable {
public:
    struct Grid {
        std::vector<double> elevations_deg;  // ascending
        std::vector<double> probabilities;   // ascending
        std::vector<double> values_dB;       // [elevation][probability]
    };

    void add_site(const std::string& site, Grid grid);
    bool has_site(std::string_view site) const;
    const Grid& grid(std::string_view site) const;
    std::vector<std::string> sites() const;

    double attenuation(std::string_view site, double elevation_deg, double probability) const;

    /// Rows "site,elevation_deg,probability,attenuation_dB" with a header line.
    /// Every site must form a complete rectangular grid.
    static AttenuationTable parse(std::string_view text, const std::string& source_name);
    static AttenuationTable load_file(const std::string& path);
    std::string serialize() const;

    /// Grid synthesized from each catalog site's anchor with `model`.
    static AttenuationTable from_catalog(const Catalog& catalog, const ExceedanceModel& model = {});

    static const std::vector<double>& default_elevations_deg();
    static const std::vector<double>& default_probabilities();

private:
    const Grid* find(std::string_view site) const;

    std::map<std::string, Grid> grids_;
};

/// Attenuation on a link at `elevation_deg` exceeded with probability
/// `unavailability`. The frequency is fixed by the table (12 GHz).
double atmospheric_attenuation(const AttenuationTable& table, std::string_view site, double elevation_deg,
                               double unavailability, double frequency_Hz);

}  // namespace ngsocx
