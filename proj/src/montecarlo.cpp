#include "ngsocx/montecarlo.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "ngsocx/errors.hpp"
#include "ngsocx/reporting.hpp"
#include "ngsocx/rng.hpp"

namespace ngsocx {

std::size_t select_active_interferer(std::span<const LinkGeometry> available, const Vec3& victim_direction,
                                     RngStream& rng)
{
    const std::size_t n = available.size();
    if (n == 0) throw ConfigError("select_active_interferer: no available satellites");
    const std::size_t k = std::min<std::size_t>(3, n);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.uniform_index(n - i)]);
    std::size_t best = idx[0];
    double best_sep = angular_separation(victim_direction, available[best].direction);
    for (std::size_t i = 1; i < k; ++i) {
        const double s = angular_separation(victim_direction, available[idx[i]].direction);
        if (s < best_sep) {
            best_sep = s;
            best = idx[i];
        }
    }
    return best;
}

AttenuationTable attenuation_for(const ResolvedScenario& r, const Catalog& catalog)
{
    (void)catalog;
    if (!r.scenario.attenuation_table.empty()) {
        AttenuationTable t = AttenuationTable::load_file(r.scenario.attenuation_table);
        if (!t.has_site(r.site.name))
            throw ConfigError("attenuation table '" + r.scenario.attenuation_table + "' has no rows for site '" +
                              r.site.name + "'");
        return t;
    }
    if (!r.attenuation_anchor_dB)
        throw ConfigError("no atmospheric attenuation data for site '" + r.site.name + "'");
    Catalog one;
    one.sites.push_back({r.site, r.attenuation_anchor_dB});
    return AttenuationTable::from_catalog(one);
}

ModcodTable modcod_for(const Scenario& s)
{
    if (!s.modcod_table.empty()) return ModcodTable::load_file(s.modcod_table, s.modcod_margin_dB);
    return ModcodTable::builtin().with_margin(s.modcod_margin_dB);
}

Simulation::Simulation(const Scenario& scenario, const Catalog& catalog)
    : resolved_(resolve_scenario(scenario, catalog))
{
    attenuation_ = attenuation_for(resolved_, catalog);
    modcod_ = modcod_for(scenario);
    init(catalog);
}

Simulation::Simulation(const Scenario& scenario, const Catalog& catalog, AttenuationTable attenuation,
                       ModcodTable modcod)
    : resolved_(resolve_scenario(scenario, catalog)), attenuation_(std::move(attenuation)), modcod_(std::move(modcod))
{
    if (!attenuation_.has_site(resolved_.site.name))
        throw ConfigError("no atmospheric attenuation data for site '" + resolved_.site.name + "'");
    init(catalog);
}

void Simulation::init(const Catalog& catalog)
{
    const Variant variant = resolved_.scenario.variant;
    auto add_system = [&](const std::string& name) {
        NgsoSystem s;
        s.name = name;
        s.stream_id = stream_id_for(name);
        s.model = std::make_shared<const ConstellationModel>(catalog.constellation(name));
        s.tx = catalog.transceiver(name, variant);
        s.rx.peak_gain_dBi = s.tx.gs_rx_peak_gain_dBi;
        s.rx.beamwidth_3dB_deg = s.tx.gs_rx_beamwidth_3dB_deg;
        s.rx.diameter_m = s.tx.gs_dish_diameter_m;
        systems_.push_back(std::move(s));
    };
    victim_ngso_ = !resolved_.victim_is_gso;
    if (victim_ngso_) add_system(resolved_.victim);
    for (const auto& name : resolved_.ngso_interferers) add_system(name);

    const SystemState gso = gso_state(catalog.gso);
    bool victim_found = false;
    for (std::size_t i = 0; i < gso.size(); ++i) {
        const LinkGeometry link = make_link(resolved_.site, i, gso.position(i));
        if (!(link.elevation_deg > 0.0)) continue;
        const std::string& name = catalog.gso.satellites[i].name;
        if (resolved_.victim_is_gso && name == resolved_.victim) {
            gso_victim_ = gso_links_.size();
            victim_found = true;
        }
        gso_links_.push_back({name, stream_id_for(name), link});
        gso_directions_.push_back(link.direction);
    }
    if (resolved_.victim_is_gso && !victim_found)
        throw ConfigError("scenario: GSO victim " + resolved_.victim + " is below the horizon at " +
                          resolved_.site.name);
    gso_eirpd_ = catalog.gso.sat_eirpd_dBW_per_Hz;
    if (resolved_.gso_interferes) {
        const GsoTerminal& t = catalog.gso.terminal(resolved_.scenario.gso_terminal);
        gso_rx_.peak_gain_dBi = t.rx_peak_gain_dBi;
        gso_rx_.beamwidth_3dB_deg = t.rx_beamwidth_3dB_deg;
        gso_rx_.diameter_m = t.dish_diameter_m;
        gso_noise_K_ = t.noise_temp_K();
    }
}

double Simulation::attenuation(const LinkGeometry& link, double unavailability) const
{
    return attenuation_.attenuation(resolved_.site.name, std::min(link.elevation_deg, 90.0), unavailability);
}

LinkBudget Simulation::budget(double eirpd, const LinkGeometry& link, double atmos_dB, double rx_gain,
                              double noise_K) const
{
    LinkBudget b;
    b.eirpd_dBW_per_Hz = eirpd;
    b.path_loss_dB = free_space_path_loss(link.slant_range_km, constants::downlink_frequency_hz);
    b.atmos_dB = atmos_dB;
    b.rx_gain_dBi = rx_gain;
    b.noise_temp_K = noise_K;
    return b;
}

IterationResult Simulation::run_iteration(std::uint64_t k) const
{
    const Scenario& sc = resolved_.scenario;
    const MitigationPolicy& policy = sc.policy;
    const bool protect = policy.kind == MitigationPolicy::Kind::GsoProtection;
    IterationResult res;
    res.iteration_index = k;

    std::vector<std::vector<LinkGeometry>> pools(systems_.size());
    for (std::size_t i = 0; i < systems_.size(); ++i) {
        RngStream rng(sc.seed, k, systems_[i].stream_id, DrawPurpose::Epoch);
        const SystemState state = systems_[i].model->sample_epoch(rng);
        pools[i] = visible_satellites(resolved_.site, state, systems_[i].model->spec());
    }
    // Interfering NGSO systems respect the GSO arc as well.
    if (protect && !gso_directions_.empty()) {
        for (std::size_t i = victim_ngso_ ? 1 : 0; i < pools.size(); ++i) {
            const auto sep = min_separations(pools[i], gso_directions_, policy.min_sep_deg);
            std::vector<LinkGeometry> kept;
            for (std::size_t j = 0; j < sep.size(); ++j)
                if (sep[j] >= policy.min_sep_deg) kept.push_back(pools[i][j]);
            pools[i] = std::move(kept);
        }
    }

    // Victim link.
    LinkGeometry victim;
    double victim_eirpd = 0.0, victim_gain = 0.0, victim_noise = 0.0;
    const AntennaModel* victim_rx = nullptr;
    std::uint32_t victim_stream = 0;
    if (victim_ngso_) {
        std::vector<Vec3> constraints;
        if (policy.kind == MitigationPolicy::Kind::LookAside) {
            for (std::size_t i = 1; i < pools.size(); ++i)
                for (const auto& l : pools[i]) constraints.push_back(l.direction);
            if (resolved_.gso_interferes) constraints.insert(constraints.end(), gso_directions_.begin(), gso_directions_.end());
        } else if (protect) {
            constraints = gso_directions_;
        }
        RngStream rng(sc.seed, k, systems_[0].stream_id, DrawPurpose::VictimSelection);
        const VictimSelection sel = select_victim_link(pools[0], constraints, policy, rng);
        res.selection = sel.outcome;
        res.victim_min_separation_deg = sel.min_separation_deg;
        if (!sel.link) {
            res.outage = true;
            res.cinr.cn_dB = res.cinr.cinr_dB = std::numeric_limits<double>::quiet_NaN();
            res.victim_elevation_deg = std::numeric_limits<double>::quiet_NaN();
            res.delta_r = 1.0;
            return res;
        }
        victim = *sel.link;
        victim_eirpd = systems_[0].tx.sat_eirpd_dBW_per_Hz;
        victim_gain = systems_[0].rx.peak_gain_dBi;
        victim_noise = systems_[0].tx.gs_noise_temp_K;
        victim_rx = &systems_[0].rx;
        victim_stream = systems_[0].stream_id;
    } else {
        victim = gso_links_[gso_victim_].link;
        victim_eirpd = gso_eirpd_;
        victim_gain = gso_rx_.peak_gain_dBi;
        victim_noise = gso_noise_K_;
        victim_rx = &gso_rx_;
        victim_stream = gso_links_[gso_victim_].stream_id;
    }
    res.victim_elevation_deg = victim.elevation_deg;

    const double victim_atmos =
        attenuation(victim, RngStream(sc.seed, k, victim_stream, DrawPurpose::Unavailability).uniform_open());
    const LinkBudget vb = budget(victim_eirpd, victim, victim_atmos, victim_gain, victim_noise);
    const double cn = carrier_to_noise_density_ratio(vb);

    std::vector<double> ci;
    std::vector<InterferenceToNoise> in_pairs;
    for (std::size_t i = victim_ngso_ ? 1 : 0; i < systems_.size(); ++i) {
        if (pools[i].empty()) continue;
        const NgsoSystem& sys = systems_[i];
        RngStream pick(sc.seed, k, sys.stream_id, DrawPurpose::InterfererSelection);
        const LinkGeometry& link = pools[i][select_active_interferer(pools[i], victim.direction, pick)];
        const double phi = angular_separation(victim.direction, link.direction);
        const double atmos =
            attenuation(link, RngStream(sc.seed, k, sys.stream_id, DrawPurpose::Unavailability).uniform_open());
        const LinkBudget ib =
            budget(sys.tx.sat_eirpd_dBW_per_Hz, link, atmos, off_axis_gain(*victim_rx, phi), victim_noise);
        InterfererRecord rec;
        rec.system = sys.name;
        rec.sat_index = link.sat_index;
        rec.separation_deg = phi;
        rec.elevation_deg = link.elevation_deg;
        rec.ci_dB = carrier_to_interference_ratio(vb, ib);
        if (policy.kind == MitigationPolicy::Kind::BandSplitting) {
            // Victim satellite seen by the interferer's co-located receiver.
            const LinkBudget reverse = budget(victim_eirpd, victim, victim_atmos, off_axis_gain(sys.rx, phi),
                                              sys.tx.gs_noise_temp_K);
            InterferenceToNoise pair{cn - rec.ci_dB, carrier_to_noise_density_ratio(reverse)};
            rec.band_split_triggered = band_split_triggered(pair);
            in_pairs.push_back(pair);
        }
        ci.push_back(rec.ci_dB);
        res.interferers.push_back(std::move(rec));
    }
    if (resolved_.gso_interferes) {
        for (std::size_t g = 0; g < gso_links_.size(); ++g) {
            if (!victim_ngso_ && g == gso_victim_) continue;
            const GsoLink& gl = gso_links_[g];
            const double phi = angular_separation(victim.direction, gl.link.direction);
            const double atmos =
                attenuation(gl.link, RngStream(sc.seed, k, gl.stream_id, DrawPurpose::Unavailability).uniform_open());
            const LinkBudget ib = budget(gso_eirpd_, gl.link, atmos, off_axis_gain(*victim_rx, phi), victim_noise);
            InterfererRecord rec;
            rec.system = gl.name;
            rec.sat_index = gl.link.sat_index;
            rec.separation_deg = phi;
            rec.elevation_deg = gl.link.elevation_deg;
            rec.ci_dB = carrier_to_interference_ratio(vb, ib);
            rec.ngso = false;
            ci.push_back(rec.ci_dB);
            res.interferers.push_back(std::move(rec));
        }
    }

    res.cinr = make_breakdown(cn, std::move(ci));
    res.bw_fraction = policy.kind == MitigationPolicy::Kind::BandSplitting ? band_split_fraction(in_pairs) : 1.0;
    res.se_act = modcod_.spectral_efficiency(res.cinr.cinr_dB);
    res.delta_r = quantize_sig6(throughput_degradation(res.se_act, res.bw_fraction));
    return res;
}

CampaignResult run_campaign(const Simulation& sim, const CampaignOptions& options)
{
    CampaignResult out;
    out.scenario = sim.scenario();
    out.seed = out.scenario.seed;
    const std::uint64_t n = out.scenario.iterations;
    out.results.resize(n);

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t i = w; i < n; i += workers) out.results[i] = sim.run_iteration(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<double> samples;
    samples.reserve(n);
    for (const auto& r : out.results) samples.push_back(r.delta_r);
    if (!samples.empty()) out.summary = summarize(samples);
    return out;
}

CampaignResult run_campaign(const Scenario& scenario, const Catalog& catalog, const CampaignOptions& options)
{
    return run_campaign(Simulation(scenario, catalog), options);
}

}  // namespace ngsocx
