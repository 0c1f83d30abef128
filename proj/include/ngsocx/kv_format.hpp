#pragma once

// Line-oriented key/value text format shared by catalog and scenario files.
//
//   # comment
//   schema = ngsocx-catalog/1
//   [kind arg1 arg2]
//   key = value
//   list_key = a, b, c
//
// Keys before the first header are document globals. Section headers may
// repeat; each occurrence is a separate section. Values may be wrapped in
// double quotes to keep leading/trailing blanks or a '#'.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ngsocx {

struct KvEntry {
    std::string key;
    std::string value;
    int line = 0;
};

class KvSection {
public:
    std::string kind;
    std::vector<std::string> args;
    int line = 0;
    std::vector<KvEntry> entries;

    const KvEntry* find(std::string_view key) const;
};

struct KvDocument {
    std::string source;
    KvSection globals;
    std::vector<KvSection> sections;
};

KvDocument parse_kv(std::string_view text, const std::string& source_name);

/// Typed, consumption-tracking view over one section. `finish()` rejects keys
/// that were never read, so typos surface as errors instead of defaults.
class KvReader {
public:
    KvReader(const KvDocument& doc, const KvSection& section);

    bool has(std::string_view key) const;
    std::string string(std::string_view key);
    std::string string_or(std::string_view key, std::string fallback);
    double number(std::string_view key);
    double number_or(std::string_view key, double fallback);
    std::optional<double> optional_number(std::string_view key);
    long long integer(std::string_view key);
    long long integer_or(std::string_view key, long long fallback);
    std::vector<std::string> list(std::string_view key);
    std::vector<std::string> list_or(std::string_view key, std::vector<std::string> fallback);

    [[noreturn]] void fail(std::string_view key, const std::string& what) const;
    [[noreturn]] void fail_section(const std::string& what) const;
    void finish() const;

private:
    const KvEntry& require(std::string_view key);
    const KvEntry* lookup(std::string_view key);

    const KvDocument& doc_;
    const KvSection& section_;
    std::vector<bool> used_;
};

double parse_double(std::string_view text);
std::vector<std::string> split_list(std::string_view text, char sep = ',');
std::string trim(std::string_view s);

/// Shortest decimal form that parses back to exactly `v`.
std::string format_exact(double v);

}  // namespace ngsocx
