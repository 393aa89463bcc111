// Batch front end: run simulations, fit decay laws, run refinement sweeps,
// and inspect the named presets.

#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "timobeam/commands.hpp"
#include "timobeam/errors.hpp"
#include "timobeam/trace_io.hpp"

namespace {

using namespace timobeam;

RunConfig build_config(const std::vector<std::string>& tokens,
                       const std::optional<std::string>& config_file,
                       const std::optional<std::string>& preset, bool literal_paper,
                       const std::optional<double>& window_fraction) {
    RunConfig base = preset ? preset_config(*preset) : RunConfig();
    if (literal_paper) base.literal_mode = true;
    if (window_fraction) base.window_fraction = *window_fraction;
    return parse_config(tokens, config_file, base);
}

EnergyColumn parse_column(const std::string& name) {
    if (name == "paper") return EnergyColumn::diagonal;
    if (name == "phys") return EnergyColumn::physical;
    throw ConfigError("column: expected paper|phys, got '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D Timoshenko beam energy-decay simulator"};
    app.require_subcommand(1);

    std::vector<std::string> tokens;
    std::optional<std::string> config_file;
    std::optional<std::string> preset;
    std::optional<double> window_fraction;
    std::string out_dir = "out";
    std::string column_name = "paper";
    bool literal_paper = false;
    int levels = 3;
    double floor_factor = 1e3;
    std::string trace_path;
    std::string preset_name;

    CLI::App* run = app.add_subcommand("run", "run one simulation and write its outputs");
    run->add_option("settings", tokens, "key=value overrides");
    run->add_option("--config", config_file, "key=value configuration file");
    run->add_option("--preset", preset, "start from a named preset (see `preset`)");
    run->add_option("--out", out_dir, "output directory")->capture_default_str();
    run->add_option("--window-fraction", window_fraction, "fraction of samples to skip before fitting");
    run->add_flag("--literal-paper", literal_paper, "use the scheme-literal damping modes");
    run->add_option("--column", column_name, "energy column to fit: paper|phys")
        ->capture_default_str();

    CLI::App* fit = app.add_subcommand("fit", "classify the decay law of a trace CSV");
    fit->add_option("trace", trace_path, "trace CSV produced by `run`")->required();
    fit->add_option("--window-fraction", window_fraction, "fraction of samples to skip");
    fit->add_option("--floor-factor", floor_factor,
                    "drop samples below floor-factor * eps * E(0)")
        ->capture_default_str();
    fit->add_option("--column", column_name, "energy column to fit: paper|phys")
        ->capture_default_str();
    fit->add_option("--out", out_dir, "directory for fit_report.txt (default: print only)");

    CLI::App* sweep = app.add_subcommand("sweep", "refinement study: dt, dt/2, dt/4, ...");
    sweep->add_option("settings", tokens, "key=value overrides");
    sweep->add_option("--config", config_file, "key=value configuration file");
    sweep->add_option("--preset", preset, "start from a named preset");
    sweep->add_option("--levels", levels, "number of refinement levels (>= 2)")
        ->capture_default_str();
    sweep->add_option("--out", out_dir, "output directory")->capture_default_str();
    sweep->add_flag("--literal-paper", literal_paper, "use the scheme-literal damping modes");

    CLI::App* preset_cmd = app.add_subcommand("preset", "list presets or show one as key=value");
    preset_cmd->add_option("name", preset_name, "preset to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*run) {
            const RunConfig config =
                build_config(tokens, config_file, preset, literal_paper, window_fraction);
            run_command(config, out_dir, parse_column(column_name));
            std::cout << "wrote " << (std::filesystem::path(out_dir) / "trace.csv").string()
                      << " (" << config.steps() + 1 << " levels, fingerprint "
                      << config.fingerprint() << ")\n";
        } else if (*fit) {
            const EnergyTrace trace = read_trace_csv(trace_path);
            const FitReport report =
                classify_decay(trace, window_fraction.value_or(0.1), floor_factor,
                               parse_column(column_name));
            for (const std::string& line : report.summary_lines()) std::cout << line << '\n';
            if (fit->count("--out")) {
                std::filesystem::create_directories(out_dir);
                write_fit_report(std::filesystem::path(out_dir) / "fit_report.txt", report);
            }
        } else if (*sweep) {
            const RunConfig config =
                build_config(tokens, config_file, preset, literal_paper, window_fraction);
            const SweepResult result = refinement_sweep(config, levels);
            std::filesystem::create_directories(out_dir);
            write_sweep_csv(std::filesystem::path(out_dir) / "sweep.csv", result);
            for (const std::string& line : sweep_table_lines(result)) std::cout << line << '\n';
        } else if (*preset_cmd) {
            if (preset_name.empty()) {
                for (const std::string& name : preset_names())
                    std::cout << name << "\t" << preset_summary(name) << '\n';
            } else {
                std::cout << preset_config(preset_name).canonical();
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
