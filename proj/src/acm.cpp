#include "ngsocx/acm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ngsocx/errors.hpp"
#include "ngsocx/kv_format.hpp"

namespace ngsocx {

namespace embedded {
std::string_view modcod_text();
}

ModcodTable::ModcodTable(std::vector<Modcod> rows, double margin_dB) : rows_(std::move(rows)), margin_dB_(margin_dB)
{
    if (rows_.empty()) throw InvariantError("modcod table is empty");
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (!(rows_[i].threshold_dB > rows_[i - 1].threshold_dB))
            throw InvariantError("modcod table: thresholds must be strictly increasing at '" + rows_[i].name + "'");
        if (!(rows_[i].spectral_efficiency > rows_[i - 1].spectral_efficiency))
            throw InvariantError("modcod table: efficiencies must be strictly increasing at '" + rows_[i].name + "'");
    }
    if (rows_.front().spectral_efficiency <= 0.0) throw InvariantError("modcod table: efficiencies must be > 0");
    if (rows_.back().spectral_efficiency != kReferenceSpectralEfficiency)
        throw InvariantError("modcod table: maximum efficiency must be 5.90");
    if (!std::isfinite(margin_dB)) throw ConfigError("modcod margin must be finite");
}

ModcodTable ModcodTable::parse(std::string_view text, const std::string& source_name, double margin_dB)
{
    std::vector<Modcod> rows;
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
            if (t.rfind("modcod", 0) == 0) continue;
        }
        const auto f = split_list(t, ',');
        if (f.size() != 3) throw ParseError(source_name, lineno, "expected modcod,threshold_dB,spectral_efficiency");
        try {
            rows.push_back({f[0], parse_double(f[1]), parse_double(f[2])});
        } catch (const ConfigError& e) {
            throw ParseError(source_name, lineno, e.what());
        }
    }
    return ModcodTable(std::move(rows), margin_dB);
}

ModcodTable ModcodTable::load_file(const std::string& path, double margin_dB)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open modcod table '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path, margin_dB);
}

const ModcodTable& ModcodTable::builtin()
{
    static const ModcodTable table = parse(embedded::modcod_text(), "<builtin modcod table>");
    return table;
}

double ModcodTable::spectral_efficiency(double cinr_dB) const
{
    const double x = cinr_dB - margin_dB_;
    if (std::isnan(x)) return 0.0;
    auto it = std::upper_bound(rows_.begin(), rows_.end(), x,
                               [](double v, const Modcod& m) { return v < m.threshold_dB; });
    if (it == rows_.begin()) return 0.0;
    return std::prev(it)->spectral_efficiency;
}

double throughput_degradation(double se_act, double bw_fraction)
{
    if (!(se_act >= 0.0 && se_act <= kReferenceSpectralEfficiency))
        throw ConfigError("throughput_degradation: se_act must lie in [0, 5.90]");
    if (!(bw_fraction > 0.0 && bw_fraction <= 1.0))
        throw ConfigError("throughput_degradation: bw_fraction must lie in (0, 1]");
    return 1.0 - bw_fraction * se_act / kReferenceSpectralEfficiency;
}

}  // namespace ngsocx
