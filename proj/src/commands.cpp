#include "timobeam/commands.hpp"

#include <cmath>
#include <fstream>

#include "timobeam/errors.hpp"
#include "timobeam/trace_io.hpp"

namespace timobeam {

SimulationResult run_command(const RunConfig& config, const std::filesystem::path& out_dir,
                             EnergyColumn fit_column) {
    std::filesystem::create_directories(out_dir);

    SimulationResult result = run_simulation(config);
    write_trace_csv(out_dir / "trace.csv", result.trace);

    if (!config.snapshot_times.empty()) {
        // Re-run and capture the requested levels. Snapshots snap to the
        // nearest recorded level; file names carry the level index.
        const Mesh mesh = config.mesh();
        const BeamOperators ops = BeamOperators::build(mesh, config.materials);
        const DampingModel damping = config.damping_model();
        const double dt = config.dt();
        const long n_steps = config.steps();

        std::vector<long> wanted;
        for (double t : config.snapshot_times)
            wanted.push_back(std::min(n_steps, std::max(0L, std::lround(t / dt))));

        BeamState state(mesh.n_interior, dt);
        state.curr =
            initial_conditions(config.ic, mesh, config.amplitude, config.mode_number);
        auto emit = [&](long level) {
            for (std::size_t k = 0; k < wanted.size(); ++k)
                if (wanted[k] == level)
                    write_snapshot_csv(out_dir / ("snapshot_" + std::to_string(level) + ".csv"),
                                       mesh, state.curr);
        };
        emit(0);
        startup_step(state, ops, damping, startup_substeps(ops, dt));
        emit(1);
        for (long n = 1; n < n_steps; ++n) {
            leapfrog_step(state, ops, damping);
            emit(n + 1);
        }
    }

    std::error_code ignored;
    std::filesystem::remove(out_dir / "fit_report.txt", ignored);
    try {
        FitReport report = classify_decay(result.trace, config.window_fraction,
                                          config.energy_floor_factor, fit_column);
        write_fit_report(out_dir / "fit_report.txt", report);
        write_plot_data(out_dir, result.trace, config.window_fraction,
                        config.energy_floor_factor, fit_column);
    } catch (const ConfigError& e) {
        // A short or flat trace is not a run failure; record why no fit exists.
        std::ofstream out(out_dir / "fit_report.txt", std::ios::binary);
        out << "fingerprint: " << result.trace.fingerprint << '\n'
            << "selected: none (" << e.what() << ")\n";
    }
    return result;
}

double max_relative_drift(const EnergyTrace& trace) {
    const double e0 = trace.samples.front().e_physical;
    double drift = 0.0;
    for (const EnergySample& s : trace.samples)
        drift = std::max(drift, std::abs(s.e_physical - e0));
    return e0 > 0.0 ? drift / e0 : drift;
}

double max_identity_residual(const EnergyTrace& trace) {
    double worst = 0.0;
    if (trace.samples.size() < 3) return worst;
    for (std::size_t i = 1; i + 1 < trace.samples.size(); ++i)
        worst = std::max(worst, std::abs(trace.samples[i].identity_residual));
    return worst;
}

SweepResult refinement_sweep(const RunConfig& base, int levels) {
    if (levels < 2) throw ConfigError("sweep: need at least 2 refinement levels");

    const bool damped = base.damping_tag != DampingModel::Tag::undamped;
    SweepResult sweep;
    sweep.metric_name = damped ? "max_identity_residual" : "max_relative_drift";

    for (int k = 0; k < levels; ++k) {
        RunConfig config = base;
        config.courant = base.courant / static_cast<double>(1L << k);
        config.validate();
        const SimulationResult result = run_simulation(config);
        SweepLevel level;
        level.dt = config.dt();
        level.steps = config.steps();
        level.metric = damped ? max_identity_residual(result.trace)
                              : max_relative_drift(result.trace);
        sweep.levels.push_back(level);
    }
    for (std::size_t k = 0; k + 1 < sweep.levels.size(); ++k)
        sweep.observed_orders.push_back(
            std::log2(sweep.levels[k].metric / sweep.levels[k + 1].metric));
    return sweep;
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    const int digits = output_precision();
    out << "level,dt,steps," << sweep.metric_name << ",observed_order\n";
    for (std::size_t k = 0; k < sweep.levels.size(); ++k) {
        const SweepLevel& level = sweep.levels[k];
        out << k << ',' << render_real(level.dt, digits) << ',' << level.steps << ','
            << render_real(level.metric, digits) << ',';
        if (k > 0) out << render_real(sweep.observed_orders[k - 1], digits);
        out << '\n';
    }
}

std::vector<std::string> sweep_table_lines(const SweepResult& sweep) {
    std::vector<std::string> lines;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-6s %-14s %-8s %-22s %s", "level", "dt", "steps",
                  sweep.metric_name.c_str(), "observed_order");
    lines.emplace_back(buf);
    for (std::size_t k = 0; k < sweep.levels.size(); ++k) {
        const SweepLevel& level = sweep.levels[k];
        if (k > 0)
            std::snprintf(buf, sizeof(buf), "%-6zu %-14.6g %-8ld %-22.12g %.3f", k, level.dt,
                          level.steps, level.metric, sweep.observed_orders[k - 1]);
        else
            std::snprintf(buf, sizeof(buf), "%-6zu %-14.6g %-8ld %-22.12g -", k, level.dt,
                          level.steps, level.metric);
        lines.emplace_back(buf);
    }
    return lines;
}

}  // namespace timobeam
