#include "ngsocx/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ngsocx/errors.hpp"
#include "ngsocx/kv_format.hpp"
#include "ngsocx/montecarlo.hpp"

namespace ngsocx {

std::string format_sig6(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double quantize_sig6(double v) { return std::isfinite(v) ? std::strtod(format_sig6(v).c_str(), nullptr) : v; }

double Ccdf::probability_above(double x) const
{
    auto it = std::upper_bound(values.begin(), values.end(), x);
    if (it == values.begin()) return 1.0;
    return exceedance[static_cast<std::size_t>(it - values.begin()) - 1];
}

Ccdf ccdf(std::span<const double> samples)
{
    if (samples.empty()) throw ConfigError("ccdf: no samples");
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    Ccdf c;
    const double n = static_cast<double>(s.size());
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        c.values.push_back(s[i]);
        c.exceedance.push_back(static_cast<double>(s.size() - j) / n);
        i = j;
    }
    return c;
}

double percentile(std::span<const double> samples, double p)
{
    if (samples.empty()) throw ConfigError("percentile: no samples");
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    const auto n = static_cast<double>(s.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * n / 100.0));
    rank = std::clamp<std::size_t>(rank, 1, s.size());
    return s[rank - 1];
}

Summary summarize(std::span<const double> samples)
{
    if (samples.empty()) throw ConfigError("summarize: no samples");
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    auto nearest = [&](double p) {
        auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(s.size()) / 100.0));
        return s[std::clamp<std::size_t>(rank, 1, s.size()) - 1];
    };
    Summary out;
    out.defined = true;
    out.p50 = nearest(50);
    out.p90 = nearest(90);
    out.p99 = nearest(99);
    out.max = s.back();
    double sum = 0.0;
    for (double v : s) sum += v;
    out.mean = sum / static_cast<double>(s.size());
    return out;
}

namespace {

std::string header(const CampaignResult& c)
{
    return "# ngsocx scenario_hash=" + scenario_hash_hex(c.scenario) + " seed=" + std::to_string(c.seed) + "\n";
}

}  // namespace

std::string iterations_csv(const CampaignResult& c)
{
    std::ostringstream o;
    o << header(c);
    o << "index,victim_elevation_deg,cn_dB,cinr_dB,se,bw_fraction,delta_r,outage,n_interferers\n";
    for (const auto& r : c.results) {
        o << r.iteration_index << ',' << format_sig6(r.victim_elevation_deg) << ',' << format_sig6(r.cinr.cn_dB) << ','
          << format_sig6(r.cinr.cinr_dB) << ',' << format_sig6(r.se_act) << ',' << format_sig6(r.bw_fraction) << ','
          << format_sig6(r.delta_r) << ',' << (r.outage ? 1 : 0) << ',' << r.interferers.size() << '\n';
    }
    return o.str();
}

std::string ccdf_csv(const CampaignResult& c)
{
    std::ostringstream o;
    o << header(c);
    o << "delta_r,exceedance_probability\n";
    if (c.results.empty()) return o.str();
    std::vector<double> samples;
    for (const auto& r : c.results) samples.push_back(quantize_sig6(r.delta_r));
    const Ccdf cc = ccdf(samples);
    for (std::size_t i = 0; i < cc.values.size(); ++i)
        o << format_exact(cc.values[i]) << ',' << format_exact(cc.exceedance[i]) << '\n';
    return o.str();
}

CsvPaths write_csv(const CampaignResult& c, const std::string& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
    CsvPaths paths{(std::filesystem::path(out_dir) / "iterations.csv").string(),
                   (std::filesystem::path(out_dir) / "ccdf.csv").string()};
    auto write = [](const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write '" + path + "'");
        f << text;
        if (!f) throw IoError("error writing '" + path + "'");
    };
    write(paths.iterations, iterations_csv(c));
    write(paths.ccdf, ccdf_csv(c));
    return paths;
}

namespace {

std::vector<std::vector<std::string>> csv_rows(std::string_view text, std::string_view expected_header)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != expected_header) throw ConfigError("unexpected CSV header '" + line + "'");
            header_seen = true;
            continue;
        }
        rows.push_back(split_list(line, ','));
    }
    if (!header_seen) throw ConfigError("CSV header missing");
    return rows;
}

}  // namespace

Ccdf parse_ccdf_csv(std::string_view text)
{
    Ccdf c;
    for (const auto& row : csv_rows(text, "delta_r,exceedance_probability")) {
        if (row.size() != 2) throw ConfigError("ccdf row must have 2 columns");
        c.values.push_back(parse_double(row[0]));
        c.exceedance.push_back(parse_double(row[1]));
    }
    return c;
}

std::vector<double> parse_iterations_delta_r(std::string_view text)
{
    std::vector<double> out;
    for (const auto& row :
         csv_rows(text, "index,victim_elevation_deg,cn_dB,cinr_dB,se,bw_fraction,delta_r,outage,n_interferers")) {
        if (row.size() != 9) throw ConfigError("iterations row must have 9 columns");
        out.push_back(parse_double(row[6]));
    }
    return out;
}

void print_summary(std::ostream& os, const CampaignResult& c)
{
    std::size_t outages = 0;
    for (const auto& r : c.results) outages += r.outage ? 1 : 0;
    os << "scenario " << scenario_hash_hex(c.scenario) << "  victim " << c.scenario.victim << "  site "
       << c.scenario.site << "  policy " << to_string(c.scenario.policy) << "  variant " << to_string(c.scenario.variant)
       << "\n";
    os << "iterations " << c.results.size() << "  seed " << c.seed << "  outages " << outages << "\n";
    if (!c.summary.defined) {
        os << "delta_r summary undefined (no iterations)\n";
        return;
    }
    os << "delta_r  p50 " << format_sig6(c.summary.p50) << "  p90 " << format_sig6(c.summary.p90) << "  p99 "
       << format_sig6(c.summary.p99) << "  max " << format_sig6(c.summary.max) << "  mean "
       << format_sig6(c.summary.mean) << "\n";
}

}  // namespace ngsocx
