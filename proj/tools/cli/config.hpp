// config.hpp - Declarative key-value run configuration
//
//   # comment
//   command = sweep
//   omega_a = 0:3:301          start:stop:count, inclusive
//   G       = 0.1
//   N_b     = 0, 100           explicit list
//   [series weak]              keys below override the top-level ones for this series
//   kappa_b = 0.5

#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <ness/sampler.hpp>

namespace ness::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string>;

struct SeriesBlock {
    std::string name;
    KeyValues values;
};

struct ConfigFile {
    KeyValues base;
    std::vector<SeriesBlock> series;

    // "key=value" applied to the top level and to every series, so it wins everywhere.
    void apply_override(const std::string& assignment);
    void set(const std::string& key, const std::string& value);
};

ConfigFile parse_config(std::istream& in, const std::string& source = "<config>");
ConfigFile load_config(const std::string& path);

// Scalar, comma list or start:stop:count.
std::vector<double> parse_values(const std::string& text);

// lo:hi
Range parse_range(const std::string& text);

// Merged view of the top level and one series.
class Settings {
public:
    Settings(std::string series, KeyValues values);

    const std::string& series() const { return series_; }
    bool has(const std::string& key) const;

    std::vector<double> values(const std::string& key, double fallback) const;
    std::vector<double> values(const std::string& key) const;
    double scalar(const std::string& key, double fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const;
    Range range(const std::string& key, Range fallback) const;

    // Throws UsageError naming the first key outside `allowed`.
    void require_known(const std::set<std::string>& allowed) const;

private:
    const std::string& raw(const std::string& key) const;

    std::string series_;
    KeyValues values_;
};

// One Settings per series in file order, or a single "default" one.
std::vector<Settings> expand_series(const ConfigFile& config);

} // namespace ness::cli
