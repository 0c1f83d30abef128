#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ngsocx/acm.hpp"
#include "ngsocx/antenna.hpp"
#include "ngsocx/catalog.hpp"
#include "ngsocx/geometry.hpp"
#include "ngsocx/linkbudget.hpp"
#include "ngsocx/mitigation.hpp"
#include "ngsocx/orbits.hpp"
#include "ngsocx/propagation.hpp"
#include "ngsocx/scenario.hpp"

namespace ngsocx {

class RngStream;

struct InterfererRecord {
    /// Constellation or GSO satellite name.
    std::string system;
    std::size_t sat_index = 0;
    double separation_deg = 0.0;
    double elevation_deg = 0.0;
    double ci_dB = 0.0;
    bool ngso = true;
    bool band_split_triggered = false;
};

struct IterationResult {
    std::uint64_t iteration_index = 0;
    bool outage = false;
    SelectionOutcome selection = SelectionOutcome::Selected;
    double victim_elevation_deg = 0.0;
    /// Smallest separation of the victim link to the policy's constraints.
    double victim_min_separation_deg = 180.0;
    CinrBreakdown cinr;
    double bw_fraction = 1.0;
    double se_act = 0.0;
    double delta_r = 1.0;
    std::vector<InterfererRecord> interferers;
};

struct Summary {
    bool defined = false;
    double p50 = 0.0;
    double p90 = 0.0;
    double p99 = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

struct CampaignResult {
    Scenario scenario;
    std::uint64_t seed = 0;
    std::vector<IterationResult> results;
    Summary summary;
};

/// Closest-to-victim satellite among min(3, n) drawn without replacement.
/// Returns the index into `available`; `available` must be non-empty.
std::size_t select_active_interferer(std::span<const LinkGeometry> available, const Vec3& victim_direction,
                                     RngStream& rng);

/// Everything an iteration needs, prepared once per campaign and shared
/// read-only between workers.
class Simulation {
public:
    Simulation(const Scenario& scenario, const Catalog& catalog);
    Simulation(const Scenario& scenario, const Catalog& catalog, AttenuationTable attenuation, ModcodTable modcod);

    const ResolvedScenario& resolved() const { return resolved_; }
    const Scenario& scenario() const { return resolved_.scenario; }

    IterationResult run_iteration(std::uint64_t iteration_index) const;

private:
    struct NgsoSystem {
        std::string name;
        std::uint32_t stream_id = 0;
        std::shared_ptr<const ConstellationModel> model;
        TransceiverSet tx;
        AntennaModel rx;
    };
    struct GsoLink {
        std::string name;
        std::uint32_t stream_id = 0;
        LinkGeometry link;
    };

    void init(const Catalog& catalog);
    LinkBudget budget(double eirpd, const LinkGeometry& link, double atmos_dB, double rx_gain, double noise_K) const;
    double attenuation(const LinkGeometry& link, double unavailability) const;

    ResolvedScenario resolved_;
    AttenuationTable attenuation_;
    ModcodTable modcod_;
    std::vector<NgsoSystem> systems_;  // victim first when NGSO, then interferers
    bool victim_ngso_ = false;
    std::vector<GsoLink> gso_links_;    // GSO satellites above the horizon
    std::size_t gso_victim_ = 0;        // index into gso_links_ when the victim is GSO
    std::vector<Vec3> gso_directions_;
    double gso_eirpd_ = 0.0;
    AntennaModel gso_rx_;
    double gso_noise_K_ = 0.0;
};

struct CampaignOptions {
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned workers = 0;
};

CampaignResult run_campaign(const Simulation& simulation, const CampaignOptions& options = {});
CampaignResult run_campaign(const Scenario& scenario, const Catalog& catalog, const CampaignOptions& options = {});

/// Data files named by the scenario, or the built-in ones.
AttenuationTable attenuation_for(const ResolvedScenario& resolved, const Catalog& catalog);
ModcodTable modcod_for(const Scenario& scenario);

}  // namespace ngsocx
