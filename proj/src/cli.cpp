#include "ngsocx/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ngsocx/catalog.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/geometry.hpp"
#include "ngsocx/kernels.hpp"
#include "ngsocx/kv_format.hpp"
#include "ngsocx/montecarlo.hpp"
#include "ngsocx/orbits.hpp"
#include "ngsocx/reporting.hpp"
#include "ngsocx/scenario.hpp"

namespace ngsocx {

namespace {

struct RunOptions {
    std::string scenario_path;
    std::optional<std::uint64_t> iterations;
    std::optional<std::uint64_t> seed;
    std::string policy;
    std::string variant;
    std::string site;
    std::string victim;
    std::optional<std::vector<std::string>> interferers;
    std::string out_dir = "ngsocx-out";
    unsigned workers = 0;
    std::string axis;
};

Scenario build_scenario(const RunOptions& o)
{
    Scenario s;
    if (!o.scenario_path.empty()) {
        s = load_scenario_file(o.scenario_path);
    } else if (o.victim.empty() || o.site.empty()) {
        throw ConfigError("either --scenario or both --victim and --site are required");
    }
    if (o.iterations) s.iterations = *o.iterations;
    if (o.seed) s.seed = *o.seed;
    if (!o.policy.empty()) s.policy = parse_policy(o.policy);
    if (!o.variant.empty()) s.variant = parse_variant(o.variant);
    if (!o.site.empty()) {
        s.site = o.site;
        s.site_lat_deg.reset();
        s.site_lon_deg.reset();
    }
    if (!o.victim.empty()) s.victim = o.victim;
    if (o.interferers) {
        s.interferers.clear();
        for (const auto& item : *o.interferers)
            for (const auto& name : split_list(item, ',')) s.interferers.push_back(name);
    }
    return s;
}

void write_text(const std::string& path, const std::string& text)
{
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
        if (ec) throw IoError("cannot create directory '" + parent.string() + "': " + ec.message());
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << text;
    if (!f) throw IoError("error writing '" + path + "'");
}

CampaignResult run_one(const Scenario& s, const Catalog& cat, unsigned workers, const std::string& out_dir,
                       std::ostream& out, std::ostream& err)
{
    const Simulation sim(s, cat);
    for (const auto& w : sim.resolved().warnings) err << "warning: " << w << "\n";
    CampaignResult result = run_campaign(sim, CampaignOptions{workers});
    const CsvPaths paths = write_csv(result, out_dir);
    print_summary(out, result);
    out << "wrote " << paths.iterations << " and " << paths.ccdf << "\n";
    return result;
}

int cmd_run(const RunOptions& o, const Catalog& cat, std::ostream& out, std::ostream& err)
{
    run_one(build_scenario(o), cat, o.workers, o.out_dir, out, err);
    return kExitOk;
}

int cmd_sweep(const RunOptions& o, const Catalog& cat, std::ostream& out, std::ostream& err)
{
    const Scenario base = build_scenario(o);
    std::vector<std::pair<std::string, Scenario>> runs;
    if (o.axis == "policy") {
        for (const auto& p : {MitigationPolicy::none(), MitigationPolicy::look_aside(), MitigationPolicy::gso_protection(),
                              MitigationPolicy::band_splitting()}) {
            Scenario s = base;
            s.policy = p;
            runs.emplace_back(to_string(p), s);
        }
    } else if (o.axis == "variant") {
        for (auto v : {Variant::Original, Variant::Tuned}) {
            Scenario s = base;
            s.variant = v;
            runs.emplace_back(to_string(v), s);
        }
    } else if (o.axis == "pairs") {
        Scenario baseline = base;
        baseline.interferers.clear();
        runs.emplace_back("baseline", baseline);
        for (const auto& name : base.interferers) {
            Scenario s = base;
            s.interferers = {name};
            runs.emplace_back("pair-" + name, s);
        }
        runs.emplace_back("all", base);
    } else {
        throw ConfigError("unknown sweep axis '" + o.axis + "' (expected policy|variant|pairs)");
    }
    // Resolve everything before writing anything.
    for (const auto& [label, s] : runs) resolve_scenario(s, cat);

    std::ostringstream index;
    index << "label,scenario_hash,p50,p90,p99,max,mean\n";
    for (const auto& [label, s] : runs) {
        out << "== " << label << "\n";
        const auto dir = (std::filesystem::path(o.out_dir) / label).string();
        const CampaignResult r = run_one(s, cat, o.workers, dir, out, err);
        index << label << ',' << scenario_hash_hex(s);
        for (double v : {r.summary.p50, r.summary.p90, r.summary.p99, r.summary.max, r.summary.mean})
            index << ',' << (r.summary.defined ? format_sig6(v) : std::string("nan"));
        index << '\n';
    }
    write_text((std::filesystem::path(o.out_dir) / "sweep.csv").string(), index.str());
    return kExitOk;
}

void print_constellation(std::ostream& out, const Catalog& cat, const ConstellationSpec& c)
{
    out << c.name << "  " << to_string(c.orbit_class) << "  " << c.total_satellites << " satellites\n";
    if (const auto* circ = std::get_if<CircularOrbit>(&c.shape)) {
        out << "  circular, altitude " << format_exact(circ->altitude_km) << " km\n";
    } else {
        const auto& e = std::get<EllipticalOrbit>(c.shape);
        out << "  elliptical, apogee " << format_exact(e.apogee_km) << " km, perigee " << format_exact(e.perigee_km)
            << " km, e " << format_sig6(c.eccentricity()) << ", repeat " << c.ground_track_repeat_periods << " periods\n";
    }
    out << "  period " << format_sig6(c.period_s()) << " s, elevation min " << format_exact(c.min_elevation_deg)
        << " preferred " << format_exact(c.preferred_elevation_deg) << " deg\n";
    for (const auto& sh : c.shells)
        out << "  shell " << sh.planes << " x " << sh.sats_per_plane << " @ " << format_exact(sh.inclination_deg)
            << " deg\n";
    for (auto v : {Variant::Original, Variant::Tuned}) {
        const auto& sets = v == Variant::Original ? cat.original : cat.tuned;
        auto it = sets.find(c.name);
        if (it == sets.end()) continue;
        const auto& t = it->second;
        out << "  " << to_string(v) << ": sat G " << format_exact(t.sat_tx_peak_gain_dBi) << " dBi, EIRPD "
            << format_exact(t.sat_eirpd_dBW_per_Hz) << " dBW/Hz; ground " << format_exact(t.gs_dish_diameter_m)
            << " m, G " << format_exact(t.gs_rx_peak_gain_dBi) << " dBi, psi " << format_exact(t.gs_rx_beamwidth_3dB_deg)
            << " deg\n";
    }
}

int cmd_catalog(const std::string& action, const std::string& name, const Catalog& cat, std::ostream& out)
{
    if (action == "list") {
        for (const auto& c : cat.constellations)
            out << c.name << "\t" << to_string(c.orbit_class) << "\t" << c.total_satellites << "\n";
        out << "GSO\tGSO\t" << cat.gso.satellites.size() << "\n";
        return kExitOk;
    }
    if (action == "show") {
        if (name.empty()) throw ConfigError("catalog show needs a system name");
        if (normalize_name(name) == normalize_name(kGsoSystem)) {
            out << "GSO configuration, separation " << format_exact(cat.gso.separation_deg) << " deg, sat G "
                << format_exact(cat.gso.sat_tx_peak_gain_dBi) << " dBi, EIRPD " << format_exact(cat.gso.sat_eirpd_dBW_per_Hz)
                << " dBW/Hz\n";
            for (const auto& s : cat.gso.satellites) out << "  " << s.name << " " << format_exact(s.longitude_deg) << "\n";
            for (const auto& t : cat.gso.terminals)
                out << "  terminal " << t.name << ": " << format_exact(t.dish_diameter_m) << " m, G "
                    << format_exact(t.rx_peak_gain_dBi) << " dBi, G/T " << format_exact(t.g_over_t_dB_per_K)
                    << " dB/K, T " << format_sig6(t.noise_temp_K()) << " K\n";
            return kExitOk;
        }
        print_constellation(out, cat, cat.constellation(name));
        return kExitOk;
    }
    if (action == "dump") {
        out << serialize_catalog(cat);
        return kExitOk;
    }
    throw ConfigError("unknown catalog action '" + action + "' (expected list|show|dump)");
}

int cmd_ground_track(const std::string& system, std::size_t sat, double duration, double step, const std::string& path,
                     const Catalog& cat, std::ostream& out)
{
    const ConstellationSpec& spec = cat.constellation(system);
    if (sat >= static_cast<std::size_t>(spec.total_satellites)) throw ConfigError("--sat out of range");
    if (!(duration > 0.0)) duration = spec.ground_track_repeat_periods * spec.period_s();
    if (!(step > 0.0)) throw ConfigError("--step must be > 0");
    std::ostringstream csv;
    csv << "t_s,lat_deg,lon_deg,active\n";
    for (const auto& p : ground_track(spec, sat, duration, step))
        csv << format_sig6(p.t_s) << ',' << format_sig6(p.lat_deg) << ',' << format_sig6(p.lon_deg) << ','
            << (p.active ? 1 : 0) << '\n';
    if (path.empty() || path == "-") {
        out << csv.str();
    } else {
        write_text(path, csv.str());
        out << "wrote " << path << "\n";
    }
    return kExitOk;
}

int cmd_visibility(const std::vector<std::string>& systems, const std::vector<std::string>& sites, std::size_t samples,
                   std::uint64_t seed, const std::string& path, const Catalog& cat, std::ostream& out)
{
    std::vector<std::string> sys = systems;
    if (sys.empty())
        for (const auto& c : cat.constellations) sys.push_back(c.name);
    std::vector<std::string> locs = sites;
    if (locs.empty())
        for (const auto& s : cat.sites) locs.push_back(s.site.name);
    std::ostringstream csv;
    csv << "system,site,samples,mean_visible\n";
    for (const auto& name : sys) {
        const ConstellationModel model(cat.constellation(name));
        for (const auto& site_name : locs) {
            const GroundSite& site = cat.site(site_name);
            const double mean = visibility_statistics(model, site, samples, seed);
            csv << model.spec().name << ',' << site.name << ',' << samples << ',' << format_sig6(mean) << '\n';
        }
    }
    if (path.empty() || path == "-") {
        out << csv.str();
    } else {
        write_text(path, csv.str());
        out << "wrote " << path << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"NGSO/GSO downlink interference Monte Carlo simulator"};
    app.require_subcommand(1);
    std::string catalog_path, kernel = "auto";
    app.add_option("--catalog", catalog_path, "Catalog file (default: $NGSOCX_CATALOG or built-in)");
    app.add_option("--kernel", kernel, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    RunOptions ro;
    auto add_run_flags = [&](CLI::App* c) {
        c->add_option("--scenario", ro.scenario_path, "Scenario file");
        c->add_option("--iterations", ro.iterations, "Monte Carlo iterations");
        c->add_option("--seed", ro.seed, "Base seed");
        c->add_option("--policy", ro.policy, "none|lookaside|gso-protect|bandsplit");
        c->add_option("--variant", ro.variant, "original|tuned");
        c->add_option("--site", ro.site, "Ground site");
        c->add_option("--victim", ro.victim, "Victim system");
        c->add_option("--interferers", ro.interferers, "Interfering systems (comma separated)");
        c->add_option("--out", ro.out_dir, "Output directory");
        c->add_option("--workers", ro.workers, "Worker threads (0 = all cores)");
    };
    auto* run = app.add_subcommand("run", "Run one campaign");
    add_run_flags(run);
    auto* sweep = app.add_subcommand("sweep", "Run a battery of campaigns along one axis");
    add_run_flags(sweep);
    sweep->add_option("--axis", ro.axis, "policy|variant|pairs")->required();

    std::string action, show_name;
    auto* catalog = app.add_subcommand("catalog", "Inspect the catalog");
    catalog->add_option("action", action, "list|show|dump")->required();
    catalog->add_option("name", show_name, "System for 'show'");

    std::string gt_system, gt_out;
    std::size_t gt_sat = 0;
    double gt_duration = 0.0, gt_step = 60.0;
    auto* gt = app.add_subcommand("ground-track", "Export one satellite's ground track as CSV");
    gt->add_option("--system", gt_system, "Constellation")->required();
    gt->add_option("--sat", gt_sat, "Satellite index");
    gt->add_option("--duration", gt_duration, "Seconds (default: ground-track repeat interval)");
    gt->add_option("--step", gt_step, "Sample step, seconds");
    gt->add_option("--out", gt_out, "CSV path (default: stdout)");

    std::vector<std::string> vis_systems, vis_sites;
    std::size_t vis_samples = 2000;
    std::uint64_t vis_seed = 1;
    std::string vis_out;
    auto* vis = app.add_subcommand("visibility", "Mean number of available satellites");
    vis->add_option("--system", vis_systems, "Constellations (default: all)")->delimiter(',');
    vis->add_option("--site", vis_sites, "Sites (default: all)")->delimiter(',');
    vis->add_option("--samples", vis_samples, "Sampled epochs");
    vis->add_option("--seed", vis_seed, "Seed");
    vis->add_option("--out", vis_out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (e.get_name() == "ValidationError" || e.get_name() == "ConversionError")
            return kExitConfig;
        return kExitUsage;
    }

    try {
        if (kernel == "scalar") kernels::select(kernels::Isa::Scalar);
        if (kernel == "avx2") kernels::select(kernels::Isa::Avx2);
        const Catalog cat = catalog_path.empty() ? default_catalog() : load_catalog_file(catalog_path);
        if (*run) return cmd_run(ro, cat, out, err);
        if (*sweep) return cmd_sweep(ro, cat, out, err);
        if (*catalog) return cmd_catalog(action, show_name, cat, out);
        if (*gt) return cmd_ground_track(gt_system, gt_sat, gt_duration, gt_step, gt_out, cat, out);
        if (*vis) return cmd_visibility(vis_systems, vis_sites, vis_samples, vis_seed, vis_out, cat, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace ngsocx
