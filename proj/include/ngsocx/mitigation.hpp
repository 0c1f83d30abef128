#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngsocx/geometry.hpp"
#include "ngsocx/vec3.hpp"

namespace ngsocx {

class RngStream;

struct MitigationPolicy {
    enum class Kind { NoMitigation, LookAside, GsoProtection, BandSplitting };

    Kind kind = Kind::NoMitigation;
    /// Minimum separation for LookAside / GsoProtection, degrees.
    double min_sep_deg = 0.0;

    bool operator==(const MitigationPolicy&) const = default;

    static MitigationPolicy none() { return {Kind::NoMitigation, 0.0}; }
    static MitigationPolicy look_aside(double min_sep_deg = 5.0) { return {Kind::LookAside, min_sep_deg}; }
    static MitigationPolicy gso_protection(double min_sep_deg = 30.0) { return {Kind::GsoProtection, min_sep_deg}; }
    static MitigationPolicy band_splitting() { return {Kind::BandSplitting, 0.0}; }

    bool uses_separation() const { return kind == Kind::LookAside || kind == Kind::GsoProtection; }
    void validate() const;
};

/// "none", "lookaside", "gso-protect", "bandsplit".
std::string to_string(const MitigationPolicy& policy);
MitigationPolicy parse_policy(std::string_view text);

enum class SelectionOutcome {
    Selected,
    /// LookAside had no qualifying satellite; the best-separated one was used.
    Fallback,
    /// No satellite is available at all.
    NoCoverage,
    /// GsoProtection left no feasible satellite.
    ProtectionOutage,
};

struct VictimSelection {
    SelectionOutcome outcome = SelectionOutcome::NoCoverage;
    std::optional<LinkGeometry> link;
    /// Smallest separation of the chosen link to any constraint, degrees
    /// (180 when there are no constraints).
    double min_separation_deg = 180.0;
};

/// Smallest angular separation of each candidate direction to the
/// constraint directions, degrees. Exact (atan2-based) wherever the result
/// is within reach of `threshold_deg`; values far above it are reported as
/// computed from the vectorized cosine bound.
std::vector<double> min_separations(std::span<const LinkGeometry> candidates, std::span<const Vec3> constraints,
                                    double threshold_deg);

/// Picks the victim satellite under `policy`. `constraints` are the
/// interfering satellites' directions (LookAside) or the GSO satellites'
/// directions (GsoProtection); ignored by the other policies.
VictimSelection select_victim_link(std::span<const LinkGeometry> available, std::span<const Vec3> constraints,
                                   const MitigationPolicy& policy, RngStream& rng);

/// 10 log10(0.06): interference raising the noise temperature by 6 %.
double band_split_threshold_dB();

struct InterferenceToNoise {
    /// I/N at the victim receiver, dB.
    double at_victim_dB = -300.0;
    /// I/N the victim satellite causes at the interferer's receiver, dB.
    double at_interferer_dB = -300.0;
};

bool band_split_triggered(const InterferenceToNoise& pair);
/// 1 / (1 + number of triggered interfering systems).
double band_split_fraction(std::span<const InterferenceToNoise> pairs);

}  // namespace ngsocx
