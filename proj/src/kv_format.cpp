#include "ngsocx/kv_format.hpp"

#include <charconv>
#include <cstdio>

#include "ngsocx/errors.hpp"

namespace ngsocx {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

namespace {

std::string strip_comment(std::string_view line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return std::string(line.substr(0, i));
    }
    return std::string(line);
}

std::string unquote(const std::string& v)
{
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
    return v;
}

}  // namespace

const KvEntry* KvSection::find(std::string_view key) const
{
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

KvDocument parse_kv(std::string_view text, const std::string& source_name)
{
    KvDocument doc;
    doc.source = source_name;
    doc.globals.kind = "";
    KvSection* current = &doc.globals;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(source_name, line_no, "unterminated section header");
            const auto tokens = split_list(line.substr(1, line.size() - 2), ' ');
            if (tokens.empty()) throw ParseError(source_name, line_no, "empty section header");
            KvSection s;
            s.kind = tokens.front();
            s.args.assign(tokens.begin() + 1, tokens.end());
            s.line = line_no;
            doc.sections.push_back(std::move(s));
            current = &doc.sections.back();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(source_name, line_no, "expected 'key = value'");
        KvEntry e;
        e.key = trim(std::string_view(line).substr(0, eq));
        e.value = unquote(trim(std::string_view(line).substr(eq + 1)));
        e.line = line_no;
        if (e.key.empty()) throw ParseError(source_name, line_no, "missing key");
        if (current->find(e.key)) throw ParseError(source_name, line_no, "duplicate key '" + e.key + "'");
        current->entries.push_back(std::move(e));
    }
    return doc;
}

std::vector<std::string> split_list(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(sep, pos);
        if (next == std::string_view::npos) next = text.size();
        auto item = trim(text.substr(pos, next - pos));
        if (!item.empty()) out.push_back(std::move(item));
        pos = next + 1;
    }
    return out;
}

double parse_double(std::string_view text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw ConfigError("not a number: '" + t + "'");
    return v;
}

std::string format_exact(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

KvReader::KvReader(const KvDocument& doc, const KvSection& section)
    : doc_(doc), section_(section), used_(section.entries.size(), false)
{
}

const KvEntry* KvReader::lookup(std::string_view key)
{
    for (std::size_t i = 0; i < section_.entries.size(); ++i) {
        if (section_.entries[i].key == key) {
            used_[i] = true;
            return &section_.entries[i];
        }
    }
    return nullptr;
}

const KvEntry& KvReader::require(std::string_view key)
{
    const KvEntry* e = lookup(key);
    if (!e) fail_section("missing mandatory field '" + std::string(key) + "'");
    return *e;
}

bool KvReader::has(std::string_view key) const { return section_.find(key) != nullptr; }

std::string KvReader::string(std::string_view key) { return require(key).value; }

std::string KvReader::string_or(std::string_view key, std::string fallback)
{
    const KvEntry* e = lookup(key);
    return e ? e->value : std::move(fallback);
}

double KvReader::number(std::string_view key)
{
    const KvEntry& e = require(key);
    try {
        return parse_double(e.value);
    } catch (const ConfigError& err) {
        throw ParseError(doc_.source, e.line, "field '" + e.key + "': " + err.what());
    }
}

double KvReader::number_or(std::string_view key, double fallback)
{
    return has(key) ? number(key) : fallback;
}

std::optional<double> KvReader::optional_number(std::string_view key)
{
    if (!has(key)) return std::nullopt;
    return number(key);
}

long long KvReader::integer(std::string_view key)
{
    const KvEntry& e = require(key);
    const std::string t = trim(e.value);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw ParseError(doc_.source, e.line, "field '" + e.key + "': not an integer: '" + t + "'");
    return v;
}

long long KvReader::integer_or(std::string_view key, long long fallback)
{
    return has(key) ? integer(key) : fallback;
}

std::vector<std::string> KvReader::list(std::string_view key) { return split_list(require(key).value); }

std::vector<std::string> KvReader::list_or(std::string_view key, std::vector<std::string> fallback)
{
    const KvEntry* e = lookup(key);
    return e ? split_list(e->value) : std::move(fallback);
}

void KvReader::fail(std::string_view key, const std::string& what) const
{
    const KvEntry* e = section_.find(key);
    const int line = e ? e->line : section_.line;
    throw ParseError(doc_.source, line, "field '" + std::string(key) + "': " + what);
}

void KvReader::fail_section(const std::string& what) const
{
    std::string where = section_.kind.empty() ? std::string("document") : "[" + section_.kind;
    for (const auto& a : section_.args) where += " " + a;
    if (!section_.kind.empty()) where += "]";
    throw ParseError(doc_.source, section_.line, where + ": " + what);
}

void KvReader::finish() const
{
    for (std::size_t i = 0; i < used_.size(); ++i)
        if (!used_[i])
            throw ParseError(doc_.source, section_.entries[i].line,
                             "unknown field '" + section_.entries[i].key + "'");
}

}  // namespace ngsocx
