// config.cpp - Parser for run configuration files

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ness::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    const auto end = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return begin < end ? std::string(begin, end) : std::string();
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) parts.push_back(trim(item));
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

double to_double(const std::string& text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw UsageError("not a finite number: '" + text + "'");
    }
    return v;
}

bool valid_key(const std::string& key)
{
    return !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

void ConfigFile::set(const std::string& key, const std::string& value)
{
    base[key] = value;
    for (auto& s : series) s.values.erase(key);
}

void ConfigFile::apply_override(const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw UsageError("override must look like key=value: '" + assignment + "'");
    }
    const std::string key = trim(assignment.substr(0, eq));
    if (!valid_key(key)) {
        throw UsageError("invalid key in override: '" + assignment + "'");
    }
    set(key, trim(assignment.substr(eq + 1)));
}

ConfigFile parse_config(std::istream& in, const std::string& source)
{
    ConfigFile config;
    KeyValues* current = &config.base;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << source << ":" << lineno << ": " << why;
        throw UsageError(os.str());
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            const auto words = split(trim(line.substr(1, line.size() - 2)), ' ');
            std::vector<std::string> tokens;
            std::copy_if(words.begin(), words.end(), std::back_inserter(tokens),
                         [](const std::string& w) { return !w.empty(); });
            if (tokens.size() != 2 || tokens[0] != "series" || !valid_key(tokens[1])) {
                fail("expected [series NAME]");
            }
            for (const auto& s : config.series) {
                if (s.name == tokens[1]) fail("duplicate series '" + tokens[1] + "'");
            }
            config.series.push_back({tokens[1], {}});
            current = &config.series.back().values;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key)) fail("invalid key '" + key + "'");
        if (value.empty()) fail("empty value for '" + key + "'");
        if (current->count(key)) fail("duplicate key '" + key + "'");
        (*current)[key] = value;
    }
    return config;
}

ConfigFile load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    return parse_config(in, path);
}

std::vector<double> parse_values(const std::string& text)
{
    const std::string t = trim(text);
    if (t.empty()) {
        throw UsageError("empty value list");
    }
    if (t.find(':') != std::string::npos) {
        const auto parts = split(t, ':');
        if (parts.size() != 3) {
            throw UsageError("grid must be start:stop:count, got '" + text + "'");
        }
        const double start = to_double(parts[0]);
        const double stop = to_double(parts[1]);
        const double count = to_double(parts[2]);
        if (count < 1.0 || count != std::floor(count) || count > 1e8) {
            throw UsageError("grid count must be a positive integer, got '" + parts[2] + "'");
        }
        const auto n = static_cast<std::size_t>(count);
        if (n == 1) return {start};
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
        }
        out.back() = stop;
        return out;
    }
    std::vector<double> out;
    for (const auto& item : split(t, ',')) out.push_back(to_double(item));
    return out;
}

Range parse_range(const std::string& text)
{
    const auto parts = split(trim(text), ':');
    if (parts.size() == 1) {
        const double v = to_double(parts[0]);
        return {v, v};
    }
    if (parts.size() != 2) {
        throw UsageError("range must be lo:hi, got '" + text + "'");
    }
    return {to_double(parts[0]), to_double(parts[1])};
}

Settings::Settings(std::string series, KeyValues values)
    : series_(std::move(series)), values_(std::move(values))
{
}

bool Settings::has(const std::string& key) const
{
    return values_.count(key) > 0;
}

const std::string& Settings::raw(const std::string& key) const
{
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw UsageError("missing required key '" + key + "'");
    }
    return it->second;
}

std::vector<double> Settings::values(const std::string& key, double fallback) const
{
    return has(key) ? values(key) : std::vector<double>{fallback};
}

std::vector<double> Settings::values(const std::string& key) const
{
    try {
        return parse_values(raw(key));
    }
    catch (const UsageError& e) {
        throw UsageError("key '" + key + "': " + e.what());
    }
}

double Settings::scalar(const std::string& key, double fallback) const
{
    if (!has(key)) return fallback;
    const auto v = values(key);
    if (v.size() != 1) {
        throw UsageError("key '" + key + "' must be a single value");
    }
    return v.front();
}

std::string Settings::text(const std::string& key, const std::string& fallback) const
{
    return has(key) ? raw(key) : fallback;
}

std::uint64_t Settings::unsigned_integer(const std::string& key, std::uint64_t fallback) const
{
    if (!has(key)) return fallback;
    const std::string& t = raw(key);
    std::uint64_t v = 0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (t.empty() || ec != std::errc() || ptr != end) {
        throw UsageError("key '" + key + "' must be a non-negative integer, got '" + t + "'");
    }
    return v;
}

Range Settings::range(const std::string& key, Range fallback) const
{
    if (!has(key)) return fallback;
    try {
        return parse_range(raw(key));
    }
    catch (const UsageError& e) {
        throw UsageError("key '" + key + "': " + e.what());
    }
}

void Settings::require_known(const std::set<std::string>& allowed) const
{
    for (const auto& [key, value] : values_) {
        if (!allowed.count(key)) {
            throw UsageError("unknown key '" + key + "'");
        }
    }
}

std::vector<Settings> expand_series(const ConfigFile& config)
{
    std::vector<Settings> out;
    if (config.series.empty()) {
        out.emplace_back("default", config.base);
        return out;
    }
    for (const auto& s : config.series) {
        KeyValues merged = config.base;
        for (const auto& [k, v] : s.values) merged[k] = v;
        out.emplace_back(s.name, std::move(merged));
    }
    return out;
}

} // namespace ness::cli
