#include "ngsocx/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ngsocx/errors.hpp"
#include "ngsocx/kv_format.hpp"
#include "ngsocx/rng.hpp"

namespace ngsocx {

namespace {

std::uint64_t to_u64(KvReader& r, std::string_view key, long long v)
{
    if (v < 0) r.fail(key, "must be >= 0");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t parse_seed(KvReader& r, std::string_view key)
{
    const std::string s = r.string(key);
    std::uint64_t v = 0;
    const int base = s.rfind("0x", 0) == 0 ? 16 : 10;
    const char* first = s.data() + (base == 16 ? 2 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v, base);
    if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
        r.fail(key, "expected an unsigned 64-bit integer");
    return v;
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& source_name)
{
    const KvDocument doc = parse_kv(text, source_name);
    if (!doc.sections.empty())
        throw ParseError(source_name, doc.sections.front().line, "scenario files have no sections");
    KvReader r(doc, doc.globals);
    Scenario s;
    s.schema = r.string("schema");
    if (s.schema != kScenarioSchema)
        r.fail("schema", "unsupported schema '" + s.schema + "' (expected " + std::string(kScenarioSchema) + ")");
    s.site = r.string("site");
    s.site_lat_deg = r.optional_number("site_lat_deg");
    s.site_lon_deg = r.optional_number("site_lon_deg");
    s.site_attenuation_anchor_dB = r.optional_number("site_attenuation_anchor_dB");
    if (s.site_lat_deg.has_value() != s.site_lon_deg.has_value())
        r.fail("site_lat_deg", "site_lat_deg and site_lon_deg go together");
    s.victim = r.string("victim");
    s.interferers = r.list_or("interferers", {});
    try {
        s.policy = parse_policy(r.string_or("policy", "none"));
        if (s.policy.uses_separation()) s.policy.min_sep_deg = r.number_or("min_separation_deg", s.policy.min_sep_deg);
        s.policy.validate();
        s.variant = parse_variant(r.string_or("variant", "original"));
    } catch (const ParseError&) {
        throw;
    } catch (const ConfigError& e) {
        r.fail("policy", e.what());
    }
    s.iterations = to_u64(r, "iterations", r.integer_or("iterations", 60000));
    if (r.has("seed")) s.seed = parse_seed(r, "seed");
    s.unavailability_sampling = r.string_or("unavailability_sampling", "uniform");
    if (s.unavailability_sampling != "uniform") r.fail("unavailability_sampling", "only 'uniform' is supported");
    s.gso_terminal = r.string_or("gso_terminal", "user");
    s.modcod_margin_dB = r.number_or("modcod_margin_dB", 0.0);
    s.attenuation_table = r.string_or("attenuation_table", "");
    s.modcod_table = r.string_or("modcod_table", "");
    r.finish();
    return s;
}

Scenario load_scenario_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), path);
}

std::string serialize_scenario(const Scenario& s)
{
    std::ostringstream o;
    auto quoted = [](const std::string& v) { return "\"" + v + "\""; };
    o << "schema = " << s.schema << "\n";
    o << "site = " << quoted(s.site) << "\n";
    if (s.site_lat_deg) o << "site_lat_deg = " << format_exact(*s.site_lat_deg) << "\n";
    if (s.site_lon_deg) o << "site_lon_deg = " << format_exact(*s.site_lon_deg) << "\n";
    if (s.site_attenuation_anchor_dB)
        o << "site_attenuation_anchor_dB = " << format_exact(*s.site_attenuation_anchor_dB) << "\n";
    o << "victim = " << quoted(s.victim) << "\n";
    o << "interferers = ";
    for (std::size_t i = 0; i < s.interferers.size(); ++i) o << (i ? ", " : "") << s.interferers[i];
    o << "\n";
    o << "policy = " << to_string(s.policy) << "\n";
    if (s.policy.uses_separation()) o << "min_separation_deg = " << format_exact(s.policy.min_sep_deg) << "\n";
    o << "variant = " << to_string(s.variant) << "\n";
    o << "iterations = " << s.iterations << "\n";
    o << "seed = " << s.seed << "\n";
    o << "unavailability_sampling = " << s.unavailability_sampling << "\n";
    o << "gso_terminal = " << quoted(s.gso_terminal) << "\n";
    o << "modcod_margin_dB = " << format_exact(s.modcod_margin_dB) << "\n";
    o << "attenuation_table = " << quoted(s.attenuation_table) << "\n";
    o << "modcod_table = " << quoted(s.modcod_table) << "\n";
    return o.str();
}

std::uint64_t scenario_hash(const Scenario& s) { return fnv1a64(serialize_scenario(s)); }

std::string scenario_hash_hex(const Scenario& s)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(scenario_hash(s)));
    return buf;
}

ResolvedScenario resolve_scenario(const Scenario& s, const Catalog& cat)
{
    ResolvedScenario out;
    out.scenario = s;

    if (s.site_lat_deg) {
        out.site = {s.site, *s.site_lat_deg, *s.site_lon_deg};
        out.attenuation_anchor_dB = s.site_attenuation_anchor_dB;
        if (const auto* known = cat.find_site(s.site); known && !out.attenuation_anchor_dB)
            out.attenuation_anchor_dB = known->attenuation_anchor_dB;
    } else {
        const SiteEntry* e = cat.find_site(s.site);
        if (!e) throw ConfigError("scenario: unknown site '" + s.site + "'");
        out.site = e->site;
        out.attenuation_anchor_dB = s.site_attenuation_anchor_dB ? s.site_attenuation_anchor_dB : e->attenuation_anchor_dB;
    }
    out.site.validate();

    if (const auto* c = cat.find_constellation(s.victim)) {
        out.victim = c->name;
        if (!c->covers_latitude(out.site.lat_deg))
            throw InvariantError("scenario: victim " + c->name + " does not cover site " + out.site.name);
    } else if (const auto* g = cat.gso.find_satellite(s.victim)) {
        out.victim = g->name;
        out.victim_is_gso = true;
        out.gso_interferes = true;
        cat.gso.terminal(s.gso_terminal);
    } else if (normalize_name(s.victim) == normalize_name(kGsoSystem)) {
        throw ConfigError("scenario: a GSO victim must name one GSO satellite");
    } else {
        throw ConfigError("scenario: unknown victim '" + s.victim + "'");
    }

    std::vector<std::string> seen;
    for (const auto& name : s.interferers) {
        const std::string key = normalize_name(name);
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw InvariantError("scenario: interferer '" + name + "' listed twice");
        seen.push_back(key);
        if (key == normalize_name(out.victim) || (out.victim_is_gso && key == normalize_name(kGsoSystem)))
            throw InvariantError("scenario: victim '" + out.victim + "' is also listed as an interferer");
        if (key == normalize_name(kGsoSystem)) {
            out.gso_interferes = true;
            cat.gso.terminal(s.gso_terminal);
            continue;
        }
        const auto* c = cat.find_constellation(name);
        if (!c) throw ConfigError("scenario: unknown interferer '" + name + "'");
        if (!c->covers_latitude(out.site.lat_deg)) {
            out.excluded.push_back(c->name);
            out.warnings.push_back(c->name + " does not cover " + out.site.name + "; excluded from the interferers");
            continue;
        }
        out.ngso_interferers.push_back(c->name);
    }
    return out;
}

}  // namespace ngsocx
