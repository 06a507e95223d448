// app.cpp - Argument handling for the ness tool

#include "app.hpp"

#include <filesystem>
#include <fstream>

#include <CLI11.hpp>
#include <ness/types.hpp>

#include "commands.hpp"

namespace ness::cli {

namespace {

// fig6a.csv -> fig6a.bounds.csv
std::string sibling_path(const std::string& path, const std::string& suffix)
{
    std::filesystem::path p(path);
    const std::string ext = p.extension().string();
    p.replace_extension();
    return p.string() + "." + suffix + ext;
}

void write_file(const std::string& path, Format format, const Metadata& metadata, const Table& table)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    write_table(file, format, metadata, table);
    file.flush();
    if (!file) throw IoError("failed writing output file '" + path + "'");
}

int execute(const std::vector<std::string>& args, std::ostream& out)
{
    CLI::App app{"Entropy production and correlations of two coupled damped oscillators", "ness"};
    std::string command_name;
    std::string config_path;
    std::string out_path;
    std::string format_name;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::vector<std::string> overrides;
    bool show_schema = false;

    app.add_option("command", command_name, "sweep | random | optomech | trajectory (default: 'command' key of the config)");
    app.add_option("--config,-c", config_path, "key-value config file");
    app.add_option("--out,-o", out_path, "output file (default: standard output)");
    app.add_option("--format,-f", format_name, "csv or json (default: from --out extension, else csv)");
    auto* seed_opt = app.add_option("--seed", seed, "random seed, overrides the config");
    app.add_option("--workers,-j", workers, "worker threads (default: hardware concurrency)");
    app.add_option("--set,-s", overrides, "override a config key, KEY=VALUE (repeatable)");
    app.add_flag("--schema", show_schema, "print the output columns of the command and exit");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    ConfigFile config;
    if (!config_path.empty()) config = load_config(config_path);

    const auto file_command = config.base.find("command");
    if (command_name.empty()) {
        if (file_command == config.base.end()) {
            throw UsageError("no command given (sweep, random, optomech or trajectory)");
        }
        command_name = file_command->second;
    }
    else if (file_command != config.base.end() && file_command->second != command_name) {
        throw UsageError("command '" + command_name + "' does not match config command '" +
                         file_command->second + "'");
    }
    const Command command = parse_command(command_name);

    if (show_schema) {
        write_schema(out, schema(command));
        if (command == Command::random) {
            out << "\n# bound curves (" << "<out>.bounds.<ext>)\n";
            write_schema(out, bounds_schema());
        }
        return kExitOk;
    }

    if (*seed_opt) config.set("seed", std::to_string(seed));
    for (const auto& o : overrides) config.apply_override(o);

    const bool to_stdout = out_path.empty() || out_path == "-";
    Format format = Format::csv;
    if (!format_name.empty()) {
        format = parse_format(format_name);
    }
    else if (!to_stdout && std::filesystem::path(out_path).extension() == ".json") {
        format = Format::json;
    }

    RunOptions options;
    options.workers = workers;
    options.source = config_path;
    const RunResult result = run_command(command, config, options);

    if (to_stdout) {
        write_table(out, format, result.metadata, result.table);
        if (result.extra) {
            out << '\n';
            write_table(out, format, {{"table", result.extra_suffix}}, *result.extra);
        }
        out.flush();
        if (!out) throw IoError("failed writing to standard output");
    }
    else {
        write_file(out_path, format, result.metadata, result.table);
        if (result.extra) {
            Metadata extra_meta = result.metadata;
            extra_meta.emplace_back("table", result.extra_suffix);
            write_file(sibling_path(out_path, result.extra_suffix), format, extra_meta, *result.extra);
        }
    }
    return kExitOk;
}

} // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return execute(args, out);
    }
    catch (const UsageError& e) {
        err << "ness: usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const IoError& e) {
        err << "ness: I/O error: " << e.what() << '\n';
        return kExitIo;
    }
    catch (const std::logic_error& e) {
        // invalid_argument / domain_error from parameter validation
        err << "ness: invalid input: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception& e) {
        err << "ness: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace ness::cli
