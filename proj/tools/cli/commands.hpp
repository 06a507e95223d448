// commands.hpp - The four batch subcommands

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "table.hpp"

namespace ness::cli {

enum class Command { sweep, random, optomech, trajectory };

Command parse_command(const std::string& name);
std::string to_string(Command command);

struct RunOptions {
    std::size_t workers{0};  // 0 selects the hardware concurrency
    std::string source;      // config path recorded in the metadata
};

struct RunResult {
    Metadata metadata;
    Table table;
    // Secondary table (bound curves of `random`), written next to the main output.
    std::optional<Table> extra;
    std::string extra_suffix;
};

RunResult run_sweep(const ConfigFile& config, const RunOptions& options);
RunResult run_random(const ConfigFile& config, const RunOptions& options);
RunResult run_optomech(const ConfigFile& config, const RunOptions& options);
RunResult run_trajectory(const ConfigFile& config, const RunOptions& options);

RunResult run_command(Command command, const ConfigFile& config, const RunOptions& options);

std::vector<Column> schema(Command command);
// Columns of the bound-curve table written by `random`.
std::vector<Column> bounds_schema();

} // namespace ness::cli
