#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ngsocx {

struct CampaignResult;
struct Summary;

/// Round-trip through "%.6g": the value a CSV cell holds.
double quantize_sig6(double v);
std::string format_sig6(double v);

struct Ccdf {
    /// Distinct sample values, ascending.
    std::vector<double> values;
    /// P(X > values[i]).
    std::vector<double> exceedance;

    bool operator==(const Ccdf&) const = default;
    /// P(X > x) of the step function.
    double probability_above(double x) const;
};

Ccdf ccdf(std::span<const double> samples);
/// Nearest-rank percentiles (rank = ceil(p n / 100)), maximum and mean.
Summary summarize(std::span<const double> samples);
/// Nearest-rank percentile of unsorted samples.
double percentile(std::span<const double> samples, double p);

struct CsvPaths {
    std::string iterations;
    std::string ccdf;
};

/// Writes <dir>/iterations.csv and <dir>/ccdf.csv; creates the directory.
CsvPaths write_csv(const CampaignResult& campaign, const std::string& out_dir);
std::string iterations_csv(const CampaignResult& campaign);
std::string ccdf_csv(const CampaignResult& campaign);

/// Parses the CCDF rows of a ccdf.csv document.
Ccdf parse_ccdf_csv(std::string_view text);
/// delta_r column of an iterations.csv document.
std::vector<double> parse_iterations_delta_r(std::string_view text);

void print_summary(std::ostream& os, const CampaignResult& campaign);

}  // namespace ngsocx
