#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ngsocx {

inline constexpr double kReferenceSpectralEfficiency = 5.90;

struct Modcod {
    std::string name;
    double threshold_dB = 0.0;
    double spectral_efficiency = 0.0;
    bool operator==(const Modcod&) const = default;
};

class ModcodTable {
public:
    ModcodTable() = default;
    /// Rows must have strictly increasing thresholds and efficiencies, ending at 5.90.
    explicit ModcodTable(std::vector<Modcod> rows, double margin_dB = 0.0);

    /// CSV "modcod,threshold_dB,spectral_efficiency" with '#' comments.
    static ModcodTable parse(std::string_view text, const std::string& source_name, double margin_dB = 0.0);
    static ModcodTable load_file(const std::string& path, double margin_dB = 0.0);
    static const ModcodTable& builtin();

    const std::vector<Modcod>& rows() const { return rows_; }
    /// Implementation margin added to every threshold.
    double margin_dB() const { return margin_dB_; }
    ModcodTable with_margin(double margin_dB) const { return ModcodTable(rows_, margin_dB); }

    /// Efficiency of the highest row whose threshold (plus margin) is <= cinr; 0 below all.
    double spectral_efficiency(double cinr_dB) const;

private:
    std::vector<Modcod> rows_;
    double margin_dB_ = 0.0;
};

struct ThroughputRecord {
    double bw_fraction = 1.0;
    double se_act = 0.0;
    double delta_r = 1.0;
};

/// 1 - bw_fraction * se_act / 5.90.
double throughput_degradation(double se_act, double bw_fraction);

}  // namespace ngsocx
