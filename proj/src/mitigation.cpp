#include "ngsocx/mitigation.hpp"

#include <algorithm>
#include <cmath>

#include "ngsocx/constants.hpp"
#include "ngsocx/errors.hpp"
#include "ngsocx/kernels.hpp"
#include "ngsocx/rng.hpp"

namespace ngsocx {

void MitigationPolicy::validate() const
{
    if (uses_separation() && !(min_sep_deg > 0.0)) throw InvariantError("policy: min_sep_deg must be > 0");
}

std::string to_string(const MitigationPolicy& p)
{
    switch (p.kind) {
    case MitigationPolicy::Kind::NoMitigation: return "none";
    case MitigationPolicy::Kind::LookAside: return "lookaside";
    case MitigationPolicy::Kind::GsoProtection: return "gso-protect";
    case MitigationPolicy::Kind::BandSplitting: return "bandsplit";
    }
    return "?";
}

MitigationPolicy parse_policy(std::string_view t)
{
    if (t == "none") return MitigationPolicy::none();
    if (t == "lookaside" || t == "look-aside") return MitigationPolicy::look_aside();
    if (t == "gso-protect" || t == "gso-protection") return MitigationPolicy::gso_protection();
    if (t == "bandsplit" || t == "band-splitting") return MitigationPolicy::band_splitting();
    throw ConfigError("unknown policy '" + std::string(t) + "' (expected none|lookaside|gso-protect|bandsplit)");
}

std::vector<double> min_separations(std::span<const LinkGeometry> candidates, std::span<const Vec3> constraints,
                                    double threshold_deg)
{
    const std::size_t n = candidates.size(), m = constraints.size();
    std::vector<double> out(n, 180.0);
    if (n == 0 || m == 0) return out;

    thread_local std::vector<double> ux, uy, uz, cx, cy, cz, maxcos;
    ux.resize(n), uy.resize(n), uz.resize(n), maxcos.resize(n);
    cx.resize(m), cy.resize(m), cz.resize(m);
    for (std::size_t i = 0; i < n; ++i) {
        ux[i] = candidates[i].direction.x;
        uy[i] = candidates[i].direction.y;
        uz[i] = candidates[i].direction.z;
    }
    for (std::size_t j = 0; j < m; ++j) {
        cx[j] = constraints[j].x;
        cy[j] = constraints[j].y;
        cz[j] = constraints[j].z;
    }
    kernels::active().max_cosine({ux.data(), uy.data(), uz.data(), n, cx.data(), cy.data(), cz.data(), m,
                                  maxcos.data()});
    const double cos_thr = std::cos(threshold_deg * constants::deg);
    for (std::size_t i = 0; i < n; ++i) {
        if (maxcos[i] < cos_thr - 1e-9) {
            out[i] = std::acos(std::clamp(maxcos[i], -1.0, 1.0)) / constants::deg;
            continue;
        }
        double best = 180.0;
        for (const Vec3& c : constraints) best = std::min(best, angular_separation(candidates[i].direction, c));
        out[i] = best;
    }
    return out;
}

VictimSelection select_victim_link(std::span<const LinkGeometry> available, std::span<const Vec3> constraints,
                                   const MitigationPolicy& policy, RngStream& rng)
{
    VictimSelection sel;
    if (available.empty()) return sel;

    if (!policy.uses_separation() || constraints.empty()) {
        const auto k = rng.uniform_index(available.size());
        sel.outcome = SelectionOutcome::Selected;
        sel.link = available[k];
        if (!constraints.empty())
            sel.min_separation_deg = min_separations(available.subspan(k, 1), constraints, 180.0).front();
        return sel;
    }

    const auto sep = min_separations(available, constraints, policy.min_sep_deg);
    std::vector<std::size_t> feasible;
    for (std::size_t i = 0; i < sep.size(); ++i)
        if (sep[i] >= policy.min_sep_deg) feasible.push_back(i);

    if (!feasible.empty()) {
        const std::size_t k = feasible[rng.uniform_index(feasible.size())];
        sel.outcome = SelectionOutcome::Selected;
        sel.link = available[k];
        sel.min_separation_deg = sep[k];
        return sel;
    }
    if (policy.kind == MitigationPolicy::Kind::GsoProtection) {
        sel.outcome = SelectionOutcome::ProtectionOutage;
        return sel;
    }
    const auto k = static_cast<std::size_t>(std::max_element(sep.begin(), sep.end()) - sep.begin());
    sel.outcome = SelectionOutcome::Fallback;
    sel.link = available[k];
    sel.min_separation_deg = sep[k];
    return sel;
}

double band_split_threshold_dB() { return 10.0 * std::log10(0.06); }

bool band_split_triggered(const InterferenceToNoise& p)
{
    return std::max(p.at_victim_dB, p.at_interferer_dB) >= band_split_threshold_dB();
}

double band_split_fraction(std::span<const InterferenceToNoise> pairs)
{
    const auto n = std::count_if(pairs.begin(), pairs.end(), band_split_triggered);
    return 1.0 / (1.0 + static_cast<double>(n));
}

}  // namespace ngsocx
